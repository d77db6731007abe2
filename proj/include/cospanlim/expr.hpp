#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cospanlim/cospan.hpp"

namespace cospanlim {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ExprConst {
  StructKind kind;
  ObjList a;
  ObjList b;  // second list of Sym, empty otherwise
};

struct ExprGen {
  std::string name;
  FinFn fn;
};

// Interface bookkeeping map kept primitive: both feet inject into a middle
// object list, left[i] matching mid[phi[i]] and right[i] matching mid[psi[i]].
struct ExprDisc {
  ObjList left;
  ObjList mid;
  ObjList right;
  std::vector<int> phi;
  std::vector<int> psi;
};

struct ExprSeq {
  ExprPtr a, b;
};

struct ExprTen {
  ExprPtr a, b;
};

struct Expr {
  std::variant<ExprConst, ExprGen, ExprDisc, ExprSeq, ExprTen> node;
};

ExprPtr econst(StructKind k, ObjList a, ObjList b = {});
ExprPtr egen(std::string name, FinFn fn);
ExprPtr edisc(ObjList left, ObjList mid, ObjList right, std::vector<int> phi,
              std::vector<int> psi);
ExprPtr eseq(ExprPtr a, ExprPtr b);
ExprPtr eten(ExprPtr a, ExprPtr b);

struct Boundary {
  ObjList left;
  ObjList right;
};

// Computes the boundary object lists and fully type checks the expression.
// Composition matches boundaries on their flattened size in the given mode;
// mismatches report both object lists.
Boundary boundary(const ExprPtr& e, Mode mode);

// Evaluation in the chosen algebra. Results are canonical.
Cospan eval_cospan(const ExprPtr& e);
Span eval_span(const ExprPtr& e);

Cospan disc_cospan(const ExprDisc& d);
Span disc_span(const ExprDisc& d);

// Text language. A file is a preamble of object and generator declarations
// followed by one expression:
//
//   obj A = 2
//   gen f : A -> B = [0,1]
//   comult(A) ; (gen(f) * gen(f)) ; mult(B)
//
// `;` composes left to right, `*` tensors and binds tighter, `#` starts a
// comment. Constants take `+`-joined object names, e.g. id(A+B); sym takes
// two such lists. Disc spells out its feet and maps:
//   disc([A,A] -> [A] <- [A]; [0,0]; [0])
ExprPtr parse_expr(const std::string& text);

std::string print_expr(const ExprPtr& e);  // expression only, for messages

// Preamble plus expression; parse_expr(print_expr_file(e)) rebuilds e up to
// deterministic renaming of unnamed objects.
std::string print_expr_file(const ExprPtr& e);

}  // namespace cospanlim
