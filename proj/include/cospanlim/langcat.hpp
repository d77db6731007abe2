#pragma once

#include <string>
#include <vector>

#include "cospanlim/automaton.hpp"
#include "cospanlim/regex.hpp"

namespace cospanlim {

// A labelled graph whose edges carry whole regular expressions.
struct RegexGraph {
  struct Edge {
    int src = 0;
    RegexPtr label;
    int tgt = 0;
  };
  std::vector<std::string> states;
  std::vector<Edge> edges;
  std::vector<int> initial;
  std::vector<int> final_states;
};

// A category enriched in languages: named objects and a star-closed square
// matrix of regular expressions (hom[i][j] reads i -> j).
struct LangCat {
  std::vector<std::string> objects;
  std::vector<std::vector<RegexPtr>> hom;
};

void validate(const LangCat& x);

// A cospan of language categories with discrete feet: foot entries name
// center objects.  A corelation is the special case where the feet jointly
// enumerate the center objects bijectively.
struct LangCospan {
  LangCat center;
  std::vector<int> left;
  std::vector<int> right;
};

void validate(const LangCospan& c);

using RegexMatrix = std::vector<std::vector<RegexPtr>>;

// Reflexive-transitive closure over the Kleene algebra: pivot on each state
// in order, growing every entry by the paths through the pivot; entries are
// simplified as they are built.
RegexMatrix matrix_star(RegexMatrix m);

// Each letter label becomes the singleton regex, epsilon moves become the
// epsilon regex; the graph shape is untouched.
RegexGraph phi1(const Nfa& g);

// The free language category the graph presents: hom = matrix_star of the
// edge-label matrix (parallel edges union their labels); feet carried along.
LangCospan phi2(const RegexGraph& g);

// Merge object y into object x (the merged object keeps x's name); every hom
// is rebuilt by the two-object identification formula
//   X'(z,w) = X(z,w) + X(z,{x,y}) . K* . X({x,y},w),  K = X({x,y},{x,y})
// where a merged endpoint stands for both x and y.  x == y returns the input
// unchanged and flags *noop.  When remap is given, remap[old] = new index.
LangCat identify_objects(const LangCat& x, int a, int b, bool* noop = nullptr,
                         std::vector<int>* remap = nullptr);

// Block disjoint union of the centers, then one identification per middle
// foot position, processed in foot order.
LangCospan lang_compose(const LangCospan& a, const LangCospan& b);

// The corelation: one center object per foot entry, homs restricted from the
// star-closed center.
LangCospan phi3(const LangCospan& c);

// The initial x final block of phi3(phi2(phi1(g))): entry [i][f] is the
// regular expression of g read from initial[i] to final_states[f].
RegexMatrix kleene_pipeline(const Nfa& g);

// True when r and g accept exactly the same words of length <= max_len over
// g's alphabet.  An optional memo shares per-node word sets across calls
// with the same alphabet and max_len.
bool bounded_equiv(const RegexPtr& r, const Nfa& g, int max_len, WordMemo* memo = nullptr);

// Structural check: r is built from Empty, Epsilon, letters of the given
// alphabet, Union, Concat and Star only.
bool kleene_ops_only(const RegexPtr& r, const std::vector<std::string>& alphabet);

// Bounded check of the LangCat invariant: epsilon on diagonals and
// hom[x][y].hom[y][z] inside hom[x][z], on words of length <= max_len.
bool lang_star_closed_bounded(const LangCat& x, const std::vector<std::string>& alphabet,
                              int max_len);

}  // namespace cospanlim
