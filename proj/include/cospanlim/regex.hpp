#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cospanlim {

// Regular expressions over a finite alphabet of named letters.
enum class RegexKind { Empty, Epsilon, Letter, Union, Concat, Star };

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
  RegexKind kind;
  std::string letter;  // Letter only
  RegexPtr l, r;       // Union/Concat: both; Star: l only
};

RegexPtr rx_empty();
RegexPtr rx_epsilon();
RegexPtr rx_letter(std::string a);
RegexPtr rx_union(RegexPtr a, RegexPtr b);
RegexPtr rx_concat(RegexPtr a, RegexPtr b);
RegexPtr rx_star(RegexPtr a);

// Structural equality (letters by name).
bool rx_equal(const RegexPtr& a, const RegexPtr& b);

// Node count; every rewrite rule strictly decreases it.
int rx_size(const RegexPtr& r);

// Canonical fully parenthesized text: `0`, `e`, letters verbatim,
// `(l+r)`, `(l.r)`, `(x)*`.
std::string to_text(const RegexPtr& r);

// Smart constructors over operands already in simplified form; they apply
// the top-level rewrite rules (unit/zero laws, 0* = e, e + r.r* = r* and
// its mirror images) so the result is simplified again.
RegexPtr rx_simplified_union(const RegexPtr& a, const RegexPtr& b);
RegexPtr rx_simplified_concat(const RegexPtr& a, const RegexPtr& b);
RegexPtr rx_simplified_star(const RegexPtr& a);

// Bottom-up rewriting to fixpoint; shared subtrees are simplified once.
RegexPtr simplify(const RegexPtr& r);

// Membership of one word (a sequence of letters); star unrolling is bounded
// by the word length and memoized per (node, position).
bool regex_matches(const RegexPtr& r, const std::vector<std::string>& word);

// The language restricted to words of length <= max_len, stored per length
// as bitsets indexed by base-|alphabet| word value, first letter most
// significant.
struct WordSet {
  int alphabet_size = 0;
  int max_len = 0;
  std::vector<std::vector<std::uint64_t>> bits;  // [len][word / 64]

  bool test(int len, long long word) const;
  void set_word(int len, long long word);
  bool operator==(const WordSet&) const = default;
};

WordSet empty_word_set(int alphabet_size, int max_len);

// Cache for bounded_words across calls that share alphabet and max_len;
// keys are alive as long as the caller keeps the regexes alive.
// Keyed by the owning pointer so memoized nodes stay alive: a freed node's
// address could otherwise be reused and hit a stale entry. Only valid for a
// fixed alphabet and max_len.
using WordMemo = std::unordered_map<RegexPtr, WordSet>;

WordSet bounded_words(const RegexPtr& r, const std::vector<std::string>& alphabet,
                      int max_len, WordMemo* memo = nullptr);

bool word_subset(const WordSet& a, const WordSet& b);

bool bounded_equal(const RegexPtr& a, const RegexPtr& b,
                   const std::vector<std::string>& alphabet, int max_len);

}  // namespace cospanlim
