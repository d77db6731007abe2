#pragma once

#include <string>
#include <vector>

#include "cospanlim/finset.hpp"

namespace cospanlim {

struct DiagramVertex {
  std::string name;
  FinSet obj;
};

struct DiagramEdge {
  std::string name;
  int src = 0;  // vertex index
  int tgt = 0;
  FinFn map;  // obj(src) -> obj(tgt)
};

// Finite diagram of finite sets: a graph whose vertices carry sets and whose
// edges carry functions. Vertex and edge names are unique.
struct LabeledDiagram {
  std::vector<DiagramVertex> vertices;
  std::vector<DiagramEdge> edges;

  int vertex_index(const std::string& name) const;  // -1 when absent
};

// Throws type_error on duplicate names or edge boundary mismatches.
void validate(const LabeledDiagram& d);

struct Cocone {
  FinSet apex;
  std::vector<FinFn> legs;  // legs[v]: obj(v) -> apex
};

struct Cone {
  FinSet apex;
  std::vector<FinFn> legs;  // legs[v]: apex -> obj(v)
};

bool is_cocone(const LabeledDiagram& d, const Cocone& c);
bool is_cone(const LabeledDiagram& d, const Cone& c);

// Colimit as the coequalizer of the two evident maps
// sum over edges of dom(e)  =>  sum over vertices, quotient classes numbered
// by least member. Deterministic: rerunning gives an identical cocone.
Cocone colimit(const LabeledDiagram& d);

// Limit as the set of matching tuples in the product of all vertex sets,
// enumerated in row-major order, with projection legs.
Cone limit(const LabeledDiagram& d);

// Brute-force couniversality check: for every cocone on d with apex size
// <= bound there is exactly one factorization through c.
bool universal_cocone_oracle(const LabeledDiagram& d, const Cocone& c, int bound);

// Dual check for limits: every cone with apex size <= bound factors uniquely.
bool universal_cone_oracle(const LabeledDiagram& d, const Cone& c, int bound);

}  // namespace cospanlim
