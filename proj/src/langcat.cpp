#include "cospanlim/langcat.hpp"

#include <algorithm>
#include <utility>

#include "cospanlim/errors.hpp"

namespace cospanlim {

void validate(const LangCat& x) {
  std::size_t n = x.objects.size();
  if (x.hom.size() != n) throw type_error("hom matrix row count differs from object count");
  for (const auto& row : x.hom) {
    if (row.size() != n) throw type_error("hom matrix is not square");
    for (const auto& e : row)
      if (!e) throw type_error("hom matrix has a missing entry");
  }
}

void validate(const LangCospan& c) {
  validate(c.center);
  int n = static_cast<int>(c.center.objects.size());
  for (int v : c.left)
    if (v < 0 || v >= n) throw type_error("left foot entry out of range");
  for (int v : c.right)
    if (v < 0 || v >= n) throw type_error("right foot entry out of range");
}

RegexMatrix matrix_star(RegexMatrix m) {
  int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw type_error("matrix_star needs a square matrix");
    for (const auto& e : row)
      if (!e) throw type_error("matrix_star entry is missing");
  }
  for (int k = 0; k < n; ++k) {
    RegexPtr s = rx_simplified_star(m[k][k]);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        RegexPtr through =
            rx_simplified_concat(rx_simplified_concat(m[i][k], s), m[k][j]);
        m[i][j] = rx_simplified_union(m[i][j], through);
      }
    }
    for (int j = 0; j < n; ++j)
      if (j != k) m[k][j] = rx_simplified_concat(s, m[k][j]);
    for (int i = 0; i < n; ++i)
      if (i != k) m[i][k] = rx_simplified_concat(m[i][k], s);
    m[k][k] = s;
  }
  return m;
}

RegexGraph phi1(const Nfa& g) {
  validate(g);
  RegexGraph out;
  out.states = g.states;
  out.initial = g.initial;
  out.final_states = g.final_states;
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges)
    out.edges.push_back(
        {e.src, e.label < 0 ? rx_epsilon() : rx_letter(g.alphabet[e.label]), e.tgt});
  return out;
}

LangCospan phi2(const RegexGraph& g) {
  int n = static_cast<int>(g.states.size());
  RegexMatrix m(n, std::vector<RegexPtr>(n, rx_empty()));
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.src >= n || e.tgt < 0 || e.tgt >= n)
      throw type_error("edge endpoint out of range");
    if (!e.label) throw type_error("edge label is missing");
    m[e.src][e.tgt] = rx_simplified_union(m[e.src][e.tgt], simplify(e.label));
  }
  LangCospan out;
  out.center.objects = g.states;
  out.center.hom = matrix_star(std::move(m));
  out.left = g.initial;
  out.right = g.final_states;
  validate(out);
  return out;
}

namespace {

// Union of hom entries over two endpoint classes, folded in row-major order.
RegexPtr class_hom(const LangCat& x, const std::vector<int>& from, const std::vector<int>& to) {
  RegexPtr out = rx_empty();
  for (int s : from)
    for (int t : to) out = rx_simplified_union(out, x.hom[s][t]);
  return out;
}

}  // namespace

LangCat identify_objects(const LangCat& x, int a, int b, bool* noop, std::vector<int>* remap) {
  validate(x);
  int n = static_cast<int>(x.objects.size());
  if (a < 0 || a >= n || b < 0 || b >= n) throw type_error("identify_objects index out of range");
  if (noop) *noop = (a == b);
  if (a == b) {
    if (remap) {
      remap->resize(n);
      for (int i = 0; i < n; ++i) (*remap)[i] = i;
    }
    return x;
  }
  std::vector<int> survivors;
  std::vector<int> to_new(n, -1);
  for (int i = 0; i < n; ++i)
    if (i != b) {
      to_new[i] = static_cast<int>(survivors.size());
      survivors.push_back(i);
    }
  to_new[b] = to_new[a];
  if (remap) *remap = to_new;

  const std::vector<int> merged = {a, b};
  auto class_of = [&](int old) { return old == a ? merged : std::vector<int>{old}; };
  RegexPtr k_loop = class_hom(x, merged, merged);
  RegexPtr k_star = rx_simplified_star(k_loop);

  LangCat out;
  out.objects.reserve(survivors.size());
  for (int s : survivors) out.objects.push_back(x.objects[s]);
  out.hom.assign(survivors.size(), std::vector<RegexPtr>(survivors.size()));
  for (std::size_t p = 0; p < survivors.size(); ++p)
    for (std::size_t q = 0; q < survivors.size(); ++q) {
      std::vector<int> ps = class_of(survivors[p]);
      std::vector<int> qs = class_of(survivors[q]);
      RegexPtr through = rx_simplified_concat(
          rx_simplified_concat(class_hom(x, ps, merged), k_star), class_hom(x, merged, qs));
      out.hom[p][q] = rx_simplified_union(class_hom(x, ps, qs), through);
    }
  return out;
}

LangCospan lang_compose(const LangCospan& a, const LangCospan& b) {
  validate(a);
  validate(b);
  if (a.right.size() != b.left.size())
    throw type_error("cannot compose: right foot has " + std::to_string(a.right.size()) +
                     " entries, left foot has " + std::to_string(b.left.size()));
  int na = static_cast<int>(a.center.objects.size());
  int nb = static_cast<int>(b.center.objects.size());

  LangCat cat;
  cat.objects = a.center.objects;
  cat.objects.insert(cat.objects.end(), b.center.objects.begin(), b.center.objects.end());
  cat.hom.assign(na + nb, std::vector<RegexPtr>(na + nb, rx_empty()));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) cat.hom[i][j] = a.center.hom[i][j];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) cat.hom[na + i][na + j] = b.center.hom[i][j];

  std::vector<int> cur(na + nb);
  for (int i = 0; i < na + nb; ++i) cur[i] = i;
  for (std::size_t k = 0; k < a.right.size(); ++k) {
    int p = cur[a.right[k]];
    int q = cur[na + b.left[k]];
    if (p == q) continue;
    std::vector<int> step;
    cat = identify_objects(cat, p, q, nullptr, &step);
    for (int& v : cur) v = step[v];
  }

  LangCospan out;
  out.center = std::move(cat);
  out.left.reserve(a.left.size());
  for (int v : a.left) out.left.push_back(cur[v]);
  out.right.reserve(b.right.size());
  for (int v : b.right) out.right.push_back(cur[na + v]);
  return out;
}

LangCospan phi3(const LangCospan& c) {
  validate(c);
  int nl = static_cast<int>(c.left.size());
  int nr = static_cast<int>(c.right.size());
  auto src = [&](int p) { return p < nl ? c.left[p] : c.right[p - nl]; };
  LangCospan out;
  out.center.objects.resize(nl + nr);
  out.center.hom.assign(nl + nr, std::vector<RegexPtr>(nl + nr));
  for (int p = 0; p < nl + nr; ++p) {
    out.center.objects[p] = c.center.objects[src(p)];
    for (int q = 0; q < nl + nr; ++q) out.center.hom[p][q] = c.center.hom[src(p)][src(q)];
  }
  out.left.resize(nl);
  for (int p = 0; p < nl; ++p) out.left[p] = p;
  out.right.resize(nr);
  for (int p = 0; p < nr; ++p) out.right[p] = nl + p;
  return out;
}

RegexMatrix kleene_pipeline(const Nfa& g) {
  LangCospan cor = phi3(phi2(phi1(g)));
  int ni = static_cast<int>(g.initial.size());
  int nf = static_cast<int>(g.final_states.size());
  RegexMatrix out(ni, std::vector<RegexPtr>(nf));
  for (int i = 0; i < ni; ++i)
    for (int f = 0; f < nf; ++f) out[i][f] = cor.center.hom[i][ni + f];
  return out;
}

bool bounded_equiv(const RegexPtr& r, const Nfa& g, int max_len, WordMemo* memo) {
  validate(g);
  return bounded_words(r, g.alphabet, max_len, memo) == nfa_words(g, max_len);
}

bool kleene_ops_only(const RegexPtr& r, const std::vector<std::string>& alphabet) {
  if (!r) return false;
  switch (r->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
      return true;
    case RegexKind::Letter:
      return std::find(alphabet.begin(), alphabet.end(), r->letter) != alphabet.end();
    case RegexKind::Union:
    case RegexKind::Concat:
      return kleene_ops_only(r->l, alphabet) && kleene_ops_only(r->r, alphabet);
    case RegexKind::Star:
      return kleene_ops_only(r->l, alphabet);
  }
  return false;
}

bool lang_star_closed_bounded(const LangCat& x, const std::vector<std::string>& alphabet,
                              int max_len) {
  validate(x);
  int n = static_cast<int>(x.objects.size());
  WordMemo memo;
  std::vector<std::vector<WordSet>> ws(n, std::vector<WordSet>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ws[i][j] = bounded_words(x.hom[i][j], alphabet, max_len, &memo);
  for (int i = 0; i < n; ++i)
    if (!ws[i][i].test(0, 0)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        WordSet prod =
            bounded_words(rx_concat(x.hom[i][j], x.hom[j][k]), alphabet, max_len, &memo);
        if (!word_subset(prod, ws[i][k])) return false;
      }
  return true;
}

}  // namespace cospanlim
