#include "cospanlim/automaton.hpp"

#include <algorithm>
#include <set>

#include "cospanlim/errors.hpp"

namespace cospanlim {

int Nfa::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

void validate(const Nfa& g) {
  std::set<std::string> seen;
  for (const auto& a : g.alphabet) {
    if (a.empty()) throw type_error("alphabet letters must be nonempty");
    if (a == "eps") throw type_error("the letter name 'eps' is reserved for epsilon moves");
    if (!seen.insert(a).second) throw type_error("duplicate alphabet letter '" + a + "'");
  }
  seen.clear();
  for (const auto& s : g.states) {
    if (s.empty()) throw type_error("state names must be nonempty");
    if (!seen.insert(s).second) throw type_error("duplicate state name '" + s + "'");
  }
  int n = static_cast<int>(g.states.size());
  int k = static_cast<int>(g.alphabet.size());
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.src >= n || e.tgt < 0 || e.tgt >= n)
      throw type_error("edge endpoint out of range");
    if (e.label < -1 || e.label >= k) throw type_error("edge label out of range");
  }
  for (int s : g.initial)
    if (s < 0 || s >= n) throw type_error("initial state out of range");
  for (int s : g.final_states)
    if (s < 0 || s >= n) throw type_error("final state out of range");
}

Nfa restrict_nfa(const Nfa& g, int initial, int final_state) {
  Nfa out = g;
  out.initial = {initial};
  out.final_states = {final_state};
  return out;
}

namespace {

void close_mask(const Nfa& g, std::vector<char>& mask) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : g.edges)
      if (e.label == -1 && mask[e.src] && !mask[e.tgt]) {
        mask[e.tgt] = 1;
        changed = true;
      }
  }
}

std::vector<char> step_mask(const Nfa& g, const std::vector<char>& mask, int letter) {
  std::vector<char> out(g.states.size(), 0);
  for (const auto& e : g.edges)
    if (e.label == letter && mask[e.src]) out[e.tgt] = 1;
  close_mask(g, out);
  return out;
}

std::vector<char> start_mask(const Nfa& g) {
  std::vector<char> mask(g.states.size(), 0);
  for (int s : g.initial) mask[s] = 1;
  close_mask(g, mask);
  return mask;
}

bool accepts_mask(const Nfa& g, const std::vector<char>& mask) {
  for (int s : g.final_states)
    if (mask[s]) return true;
  return false;
}

}  // namespace

std::vector<int> eps_closure(const Nfa& g, const std::vector<int>& from) {
  std::vector<char> mask(g.states.size(), 0);
  for (int s : from) mask[s] = 1;
  close_mask(g, mask);
  std::vector<int> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool nfa_accepts(const Nfa& g, const std::vector<int>& word) {
  std::vector<char> mask = start_mask(g);
  for (int letter : word) mask = step_mask(g, mask, letter);
  return accepts_mask(g, mask);
}

WordSet nfa_words(const Nfa& g, int max_len) {
  int k = static_cast<int>(g.alphabet.size());
  WordSet out = empty_word_set(k, max_len);
  std::vector<std::vector<char>> cur = {start_mask(g)};
  if (accepts_mask(g, cur[0])) out.set_word(0, 0);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<char>> next;
    next.reserve(cur.size() * k);
    for (std::size_t v = 0; v < cur.size(); ++v)
      for (int a = 0; a < k; ++a) {
        std::vector<char> mask = step_mask(g, cur[v], a);
        if (accepts_mask(g, mask))
          out.set_word(len, static_cast<long long>(v) * k + a);
        next.push_back(std::move(mask));
      }
    cur = std::move(next);
  }
  return out;
}

}  // namespace cospanlim
