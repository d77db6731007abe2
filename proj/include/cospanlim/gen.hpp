#pragma once

#include <cstdint>
#include <utility>

#include "cospanlim/automaton.hpp"
#include "cospanlim/dcospan.hpp"
#include "cospanlim/langcat.hpp"
#include "cospanlim/monoidal.hpp"
#include "cospanlim/nested.hpp"

namespace cospanlim {

// SplitMix64: deterministic across platforms and standard-library versions,
// which the seeded check suites and the CLI determinism contract rely on.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  int below(int n);            // uniform in [0, n)
  int range(int lo, int hi);   // uniform in [lo, hi]
  bool chance(int num, int den);
};

// Any total function; cod must be nonempty unless dom is empty.
FinFn random_fn(Rng& rng, FinSet dom, FinSet cod);

// How random_dcospan picks its feet.
enum class FeetStyle { Random, Closed, AllVertices };

DiagramCospan random_dcospan(Rng& rng, int max_vertices, int max_size,
                             FeetStyle style = FeetStyle::Random);

// A pair with b's left feet matching a's right feet.
std::pair<DiagramCospan, DiagramCospan> random_composable(Rng& rng, int max_vertices,
                                                          int max_size);

// Arrows are built constructively (extensions and object-preserving vertex
// merges), so every instance validates; total vertex size stays <= budget.
DiagramOfDiagrams random_nested(Rng& rng, int size_budget);

MonoidalDiagram random_monoidal(Rng& rng, int max_vertices, int total_size_budget);

// Alphabet fixed to {a, b}; epsilon edges allowed.
Nfa random_nfa(Rng& rng, int max_states, int max_edges);

RegexPtr random_regex(Rng& rng, const std::vector<std::string>& alphabet, int depth);

// Star-closed by construction: random entries closed with matrix_star.
LangCat random_langcat(Rng& rng, const std::vector<std::string>& alphabet, int max_objects);

LangCospan random_langcospan(Rng& rng, const std::vector<std::string>& alphabet,
                             int left_size, int right_size);

}  // namespace cospanlim
