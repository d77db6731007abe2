#pragma once

#include <string>
#include <vector>

#include "cospanlim/cospan.hpp"
#include "cospanlim/diagram.hpp"

namespace cospanlim {

// Arc of a monoidal graph: source and target are words of vertices and the
// map runs between the sums of their objects.
struct MonArc {
  std::string name;
  std::vector<int> src;  // vertex indices
  std::vector<int> tgt;
  FinFn map;  // sum of src objects -> sum of tgt objects
};

struct MonoidalDiagram {
  std::vector<DiagramVertex> vertices;
  std::vector<MonArc> arcs;

  int vertex_index(const std::string& name) const;
};

void validate(const MonoidalDiagram& d);

// Word boundary as an object list.
ObjList word_objs(const MonoidalDiagram& d, const std::vector<int>& word);

// Colimit of a monoidal diagram: quotient of the sum of all vertex objects
// by x ~ f(x) for every arc, classes numbered by least member.
Cocone mon_colimit(const MonoidalDiagram& d);

// Monoidal cocone condition: for each arc, cotupling the legs over the
// target word after the arc map equals cotupling over the source word.
bool is_mon_cocone(const MonoidalDiagram& d, const Cocone& c);

// Couniversality of c among monoidal cocones with apex size <= bound.
bool mon_universal_cocone_oracle(const MonoidalDiagram& d, const Cocone& c, int bound);

struct MonoidalDiagramCospan {
  MonoidalDiagram center;
  std::vector<int> left;   // vertex indices
  std::vector<int> right;
};

void validate(const MonoidalDiagramCospan& c);

Cospan colimit(const MonoidalDiagramCospan& c);

// The feedback interface of f: A+C -> B+C: the orbit quotient of A+B+C
// under x ~ f(x), classes numbered by least member. Iso-equal to evaluating
// (id(A) * eta(C)) ; (gen(f) * id(C)) ; (id(B) * eps(C)).
Cospan feedback_cospan(FinSet a, FinSet b, FinSet c, const FinFn& f);

// Partial function A -> B obtained by iterating f through the fed-back C
// channel; -1 marks divergence on a C-cycle.
struct PartialFn {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;  // value in [0, cod.size) or -1

  bool defined(int x) const { return table[x] >= 0; }
};

PartialFn trace_partial_fn(FinSet a, FinSet b, FinSet c, const FinFn& f);

}  // namespace cospanlim
