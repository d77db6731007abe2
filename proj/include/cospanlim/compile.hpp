#pragma once

#include "cospanlim/dcospan.hpp"
#include "cospanlim/expr.hpp"

namespace cospanlim {

// Compiles a diagram with interfaces into an expression over the structural
// constants and the diagram's edges as generators. Evaluating the result in
// cospan mode gives the colimit cospan; in span mode, the limit span.
//
// Closed diagrams use the three-factor shape
//   eta(doms) ; ((edges ; i_cod) * i_dom) ; eps(objs)
// and diagrams with feet the conjugated shape
//   l ; comult(objs) ; (w * id(objs)) ; mult(objs) ; r
// where w routes every edge through the object row and l, r are the foot
// bookkeeping maps.
ExprPtr compile(const DiagramCospan& c);

// Evaluation one level up: interprets the expression in diagram cospans, so
// gen(f) becomes a single-edge diagram. compile then deval returns the input
// up to diso_eq.
DiagramCospan deval(const ExprPtr& e);

// Rewrites every disc node into a word of symmetries, (co)multiplications
// and (co)units: adjacent-swap sorting of the feet followed by a fold per
// middle object. Evaluates iso-equal to the original in both modes.
ExprPtr expand_disc(const ExprPtr& e);

// Formal reverse: flips Seq order, swaps each constant for its mirror and
// each disc for its transpose. Defined only for expressions without gen
// nodes, which have no reverse in the grammar.
ExprPtr reverse_expr(const ExprPtr& e);

}  // namespace cospanlim
