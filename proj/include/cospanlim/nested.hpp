#pragma once

#include <string>
#include <vector>

#include "cospanlim/diagram.hpp"

namespace cospanlim {

// Strict morphism of labeled diagrams: a graph morphism that preserves
// vertex objects (sizes) and edge maps (tables) on the nose.
struct DiagramMorphism {
  std::vector<int> vmap;  // vertex of src -> vertex of tgt
  std::vector<int> emap;  // edge of src -> edge of tgt
};

struct DiagramOfDiagrams {
  struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
    DiagramMorphism m;
  };
  std::vector<LabeledDiagram> nodes;
  std::vector<Arrow> arrows;
};

void validate(const DiagramOfDiagrams& d);

struct NestedCheckResult {
  bool ok = false;
  int flat_size = 0;     // colimit of the flattened diagram
  int stage_size = 0;    // colimit of the diagram of node colimits
  FinFn witness;         // flat -> stage comparison map when ok
  std::string detail;    // first failure, empty when ok
};

// Computes the colimit two ways and builds the canonical comparison map:
// once by flattening the diagram of diagrams into one labeled diagram, once
// by taking node colimits first and then the colimit of the induced diagram.
// ok means the comparison map is a well-defined bijection.
NestedCheckResult nested_colim_check(const DiagramOfDiagrams& d);

}  // namespace cospanlim
