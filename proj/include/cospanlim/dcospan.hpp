#pragma once

#include <string>
#include <vector>

#include "cospanlim/cospan.hpp"
#include "cospanlim/diagram.hpp"

namespace cospanlim {

// A diagram with an interface: a labeled diagram together with two ordered
// lists of feet, each foot naming a center vertex. The foot object is the
// object of that vertex.
struct DiagramCospan {
  LabeledDiagram center;
  std::vector<int> left;   // vertex indices
  std::vector<int> right;

  ObjList left_objs() const;
  ObjList right_objs() const;
};

void validate(const DiagramCospan& c);

// Identity interface on a list of objects: a discrete center, both feet
// listing its vertices in order.
DiagramCospan didentity(const ObjList& objs);

// Vertex-level constants: the center carries one vertex per object and the
// feet repeat or drop them following the shape of the constant.
DiagramCospan dconstant(StructKind k, const ObjList& a, const ObjList& b = {});

// Glues b onto a along the shared feet; merged vertices keep the a-side
// name, remaining clashes get a numeric suffix.
DiagramCospan dcompose(const DiagramCospan& a, const DiagramCospan& b);

DiagramCospan dtensor(const DiagramCospan& a, const DiagramCospan& b);

// Structural isomorphism: a vertex/edge bijection respecting objects, maps
// and both foot lists. Names are ignored.
bool diso_eq(const DiagramCospan& a, const DiagramCospan& b);

// Colimit of the center with feet injected through the colimit legs.
Cospan colimit(const DiagramCospan& c);

// Limit of the center with feet projected through the limit legs.
Span limit(const DiagramCospan& c);

}  // namespace cospanlim
