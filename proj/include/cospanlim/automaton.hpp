#pragma once

#include <string>
#include <vector>

#include "cospanlim/regex.hpp"

namespace cospanlim {

// A labelled graph with input and output states: states named, edges
// labelled by an alphabet index or -1 for an epsilon move.
struct NfaEdge {
  int src = 0;
  int label = -1;  // index into alphabet; -1 = epsilon
  int tgt = 0;
};

struct Nfa {
  std::vector<std::string> alphabet;  // "eps" is reserved and never a letter
  std::vector<std::string> states;
  std::vector<NfaEdge> edges;
  std::vector<int> initial;
  std::vector<int> final_states;

  int state_index(const std::string& name) const;  // -1 when absent
};

void validate(const Nfa& g);

// Same graph with a single initial and a single final state.
Nfa restrict_nfa(const Nfa& g, int initial, int final_state);

// States reachable from `from` by epsilon moves alone; sorted, deduplicated.
std::vector<int> eps_closure(const Nfa& g, const std::vector<int>& from);

// Subset simulation from the initial states; word entries are alphabet
// indices.
bool nfa_accepts(const Nfa& g, const std::vector<int>& word);

// Every accepted word of length <= max_len.
WordSet nfa_words(const Nfa& g, int max_len);

}  // namespace cospanlim
