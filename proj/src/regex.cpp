#include "cospanlim/regex.hpp"

#include <bit>
#include <utility>

#include "cospanlim/errors.hpp"

namespace cospanlim {

RegexPtr rx_empty() {
  static const RegexPtr e = std::make_shared<Regex>(Regex{RegexKind::Empty, "", nullptr, nullptr});
  return e;
}

RegexPtr rx_epsilon() {
  static const RegexPtr e =
      std::make_shared<Regex>(Regex{RegexKind::Epsilon, "", nullptr, nullptr});
  return e;
}

RegexPtr rx_letter(std::string a) {
  return std::make_shared<Regex>(Regex{RegexKind::Letter, std::move(a), nullptr, nullptr});
}

RegexPtr rx_union(RegexPtr a, RegexPtr b) {
  return std::make_shared<Regex>(Regex{RegexKind::Union, "", std::move(a), std::move(b)});
}

RegexPtr rx_concat(RegexPtr a, RegexPtr b) {
  return std::make_shared<Regex>(Regex{RegexKind::Concat, "", std::move(a), std::move(b)});
}

RegexPtr rx_star(RegexPtr a) {
  return std::make_shared<Regex>(Regex{RegexKind::Star, "", std::move(a), nullptr});
}

bool rx_equal(const RegexPtr& a, const RegexPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
      return true;
    case RegexKind::Letter:
      return a->letter == b->letter;
    case RegexKind::Union:
    case RegexKind::Concat:
      return rx_equal(a->l, b->l) && rx_equal(a->r, b->r);
    case RegexKind::Star:
      return rx_equal(a->l, b->l);
  }
  return false;
}

int rx_size(const RegexPtr& r) {
  if (!r) return 0;
  switch (r->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Letter:
      return 1;
    case RegexKind::Union:
    case RegexKind::Concat:
      return 1 + rx_size(r->l) + rx_size(r->r);
    case RegexKind::Star:
      return 1 + rx_size(r->l);
  }
  return 0;
}

std::string to_text(const RegexPtr& r) {
  switch (r->kind) {
    case RegexKind::Empty:
      return "0";
    case RegexKind::Epsilon:
      return "e";
    case RegexKind::Letter:
      return r->letter;
    case RegexKind::Union:
      return "(" + to_text(r->l) + "+" + to_text(r->r) + ")";
    case RegexKind::Concat:
      return "(" + to_text(r->l) + "." + to_text(r->r) + ")";
    case RegexKind::Star:
      return "(" + to_text(r->l) + ")*";
  }
  return "";
}

namespace {

bool is_kind(const RegexPtr& r, RegexKind k) { return r && r->kind == k; }

// r.r* or r*.r for some r; returns that r or null.
RegexPtr star_chain_body(const RegexPtr& c) {
  if (!is_kind(c, RegexKind::Concat)) return nullptr;
  if (is_kind(c->r, RegexKind::Star) && rx_equal(c->l, c->r->l)) return c->l;
  if (is_kind(c->l, RegexKind::Star) && rx_equal(c->r, c->l->l)) return c->r;
  return nullptr;
}

}  // namespace

RegexPtr rx_simplified_union(const RegexPtr& a, const RegexPtr& b) {
  if (a->kind == RegexKind::Empty) return b;
  if (b->kind == RegexKind::Empty) return a;
  if (a->kind == RegexKind::Epsilon) {
    if (RegexPtr body = star_chain_body(b)) return rx_star(body);
  }
  if (b->kind == RegexKind::Epsilon) {
    if (RegexPtr body = star_chain_body(a)) return rx_star(body);
  }
  return rx_union(a, b);
}

RegexPtr rx_simplified_concat(const RegexPtr& a, const RegexPtr& b) {
  if (a->kind == RegexKind::Empty || b->kind == RegexKind::Empty) return rx_empty();
  if (a->kind == RegexKind::Epsilon) return b;
  if (b->kind == RegexKind::Epsilon) return a;
  return rx_concat(a, b);
}

RegexPtr rx_simplified_star(const RegexPtr& a) {
  if (a->kind == RegexKind::Empty) return rx_epsilon();
  return rx_star(a);
}

namespace {

RegexPtr simplify_rec(const RegexPtr& r, std::unordered_map<const Regex*, RegexPtr>& memo) {
  auto it = memo.find(r.get());
  if (it != memo.end()) return it->second;
  RegexPtr out;
  switch (r->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Letter:
      out = r;
      break;
    case RegexKind::Union:
      out = rx_simplified_union(simplify_rec(r->l, memo), simplify_rec(r->r, memo));
      break;
    case RegexKind::Concat:
      out = rx_simplified_concat(simplify_rec(r->l, memo), simplify_rec(r->r, memo));
      break;
    case RegexKind::Star:
      out = rx_simplified_star(simplify_rec(r->l, memo));
      break;
  }
  memo.emplace(r.get(), out);
  return out;
}

}  // namespace

RegexPtr simplify(const RegexPtr& r) {
  std::unordered_map<const Regex*, RegexPtr> memo;
  return simplify_rec(r, memo);
}

namespace {

// End-position sets as bitmasks over positions 0..n; words longer than 63
// letters would overflow the mask.
struct MatchCtx {
  const std::vector<std::string>& w;
  std::unordered_map<const Regex*, std::vector<std::uint64_t>> val;
  std::unordered_map<const Regex*, std::vector<char>> done;

  std::uint64_t ends(const RegexPtr& r, int i) {
    auto& flags = done[r.get()];
    auto& vals = val[r.get()];
    if (flags.empty()) {
      flags.assign(w.size() + 1, 0);
      vals.assign(w.size() + 1, 0);
    }
    if (flags[i]) return vals[i];
    std::uint64_t out = 0;
    switch (r->kind) {
      case RegexKind::Empty:
        break;
      case RegexKind::Epsilon:
        out = std::uint64_t{1} << i;
        break;
      case RegexKind::Letter:
        if (i < static_cast<int>(w.size()) && w[i] == r->letter)
          out = std::uint64_t{1} << (i + 1);
        break;
      case RegexKind::Union:
        out = ends(r->l, i) | ends(r->r, i);
        break;
      case RegexKind::Concat: {
        std::uint64_t mid = ends(r->l, i);
        while (mid) {
          int j = std::countr_zero(mid);
          mid &= mid - 1;
          out |= ends(r->r, j);
        }
        break;
      }
      case RegexKind::Star: {
        out = std::uint64_t{1} << i;
        std::uint64_t frontier = out;
        while (frontier) {
          int j = std::countr_zero(frontier);
          frontier &= frontier - 1;
          std::uint64_t grown = ends(r->l, j) & ~out;
          out |= grown;
          frontier |= grown;
        }
        break;
      }
    }
    // Re-resolve: recursion may have rehashed the maps.
    done[r.get()][i] = 1;
    val[r.get()][i] = out;
    return out;
  }
};

}  // namespace

bool regex_matches(const RegexPtr& r, const std::vector<std::string>& word) {
  if (word.size() > 63) throw type_error("regex_matches supports words of length <= 63");
  MatchCtx ctx{word, {}, {}};
  int n = static_cast<int>(word.size());
  return (ctx.ends(r, 0) >> n) & 1;
}

bool WordSet::test(int len, long long word) const {
  return (bits[len][word >> 6] >> (word & 63)) & 1;
}

void WordSet::set_word(int len, long long word) {
  bits[len][word >> 6] |= std::uint64_t{1} << (word & 63);
}

namespace {

constexpr long long kMaxTotalWords = 1 << 22;

std::vector<long long> word_counts(int alphabet_size, int max_len) {
  std::vector<long long> p(max_len + 1);
  p[0] = 1;
  long long total = 1;
  for (int l = 1; l <= max_len; ++l) {
    p[l] = p[l - 1] * alphabet_size;
    total += p[l];
    if (total > kMaxTotalWords)
      throw type_error("bounded word set too large (alphabet " +
                       std::to_string(alphabet_size) + ", max length " +
                       std::to_string(max_len) + ")");
  }
  return p;
}

// dst |= src shifted left by `shift` bit positions.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                long long shift) {
  std::size_t wordi = static_cast<std::size_t>(shift >> 6);
  int off = static_cast<int>(shift & 63);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!src[i]) continue;
    dst[wordi + i] |= src[i] << off;
    if (off && wordi + i + 1 < dst.size()) dst[wordi + i + 1] |= src[i] >> (64 - off);
  }
}

void or_into(WordSet& dst, const WordSet& src) {
  for (int l = 0; l <= dst.max_len; ++l)
    for (std::size_t i = 0; i < dst.bits[l].size(); ++i) dst.bits[l][i] |= src.bits[l][i];
}

WordSet concat_sets(const WordSet& a, const WordSet& b, const std::vector<long long>& p) {
  WordSet out = empty_word_set(a.alphabet_size, a.max_len);
  for (int l1 = 0; l1 <= a.max_len; ++l1) {
    for (std::size_t wi = 0; wi < a.bits[l1].size(); ++wi) {
      std::uint64_t bitsw = a.bits[l1][wi];
      while (bitsw) {
        long long v1 = static_cast<long long>(wi) * 64 + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        for (int l2 = 0; l1 + l2 <= a.max_len; ++l2)
          or_shifted(out.bits[l1 + l2], b.bits[l2], v1 * p[l2]);
      }
    }
  }
  return out;
}

WordSet star_set(const WordSet& a, const std::vector<long long>& p) {
  WordSet acc = empty_word_set(a.alphabet_size, a.max_len);
  acc.set_word(0, 0);
  for (int iter = 0; iter < a.max_len; ++iter) {
    WordSet next = concat_sets(acc, a, p);
    or_into(next, acc);
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

WordSet bounded_rec(const RegexPtr& r, const std::vector<std::string>& alphabet,
                    int max_len, const std::vector<long long>& p, WordMemo& memo) {
  auto it = memo.find(r);
  if (it != memo.end()) return it->second;
  WordSet out = empty_word_set(static_cast<int>(alphabet.size()), max_len);
  switch (r->kind) {
    case RegexKind::Empty:
      break;
    case RegexKind::Epsilon:
      out.set_word(0, 0);
      break;
    case RegexKind::Letter: {
      long long idx = -1;
      for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == r->letter) idx = static_cast<long long>(i);
      if (idx < 0) throw type_error("letter '" + r->letter + "' is not in the alphabet");
      if (max_len >= 1) out.set_word(1, idx);
      break;
    }
    case RegexKind::Union:
      out = bounded_rec(r->l, alphabet, max_len, p, memo);
      or_into(out, bounded_rec(r->r, alphabet, max_len, p, memo));
      break;
    case RegexKind::Concat:
      out = concat_sets(bounded_rec(r->l, alphabet, max_len, p, memo),
                        bounded_rec(r->r, alphabet, max_len, p, memo), p);
      break;
    case RegexKind::Star:
      out = star_set(bounded_rec(r->l, alphabet, max_len, p, memo), p);
      break;
  }
  memo.emplace(r, out);
  return out;
}

}  // namespace

WordSet empty_word_set(int alphabet_size, int max_len) {
  auto p = word_counts(alphabet_size, max_len);
  WordSet out;
  out.alphabet_size = alphabet_size;
  out.max_len = max_len;
  out.bits.resize(max_len + 1);
  for (int l = 0; l <= max_len; ++l)
    out.bits[l].assign(static_cast<std::size_t>((p[l] + 63) / 64), 0);
  return out;
}

WordSet bounded_words(const RegexPtr& r, const std::vector<std::string>& alphabet,
                      int max_len, WordMemo* memo) {
  auto p = word_counts(static_cast<int>(alphabet.size()), max_len);
  WordMemo local;
  return bounded_rec(r, alphabet, max_len, p, memo ? *memo : local);
}

bool word_subset(const WordSet& a, const WordSet& b) {
  for (int l = 0; l <= a.max_len; ++l)
    for (std::size_t i = 0; i < a.bits[l].size(); ++i)
      if (a.bits[l][i] & ~b.bits[l][i]) return false;
  return true;
}

bool bounded_equal(const RegexPtr& a, const RegexPtr& b,
                   const std::vector<std::string>& alphabet, int max_len) {
  WordMemo memo;
  return bounded_words(a, alphabet, max_len, &memo) ==
         bounded_words(b, alphabet, max_len, &memo);
}

}  // namespace cospanlim
