#pragma once

#include <string>
#include <vector>

#include "cospanlim/finset.hpp"

namespace cospanlim {

// Evaluation mode for the structural algebra: cospans of finite sets
// (tensor = disjoint union) or spans (tensor = cartesian product).
enum class Mode { Cospan, Span };

// The separable-algebra constants together with identities and symmetries.
enum class StructKind { Id, Sym, Mult, Unit, Comult, Counit, Eta, Eps };

std::string to_text(StructKind k);

// Cospan left -> apex <- right. Composition glues along the shared foot by
// pushout; tensor is disjoint union.
struct Cospan {
  FinSet left;
  FinSet right;
  FinSet apex;
  FinFn legL;  // left -> apex
  FinFn legR;  // right -> apex
};

// Span left <- apex -> right. Composition is pullback; tensor is product.
struct Span {
  FinSet left;
  FinSet right;
  FinSet apex;
  FinFn legL;  // apex -> left
  FinFn legR;  // apex -> right
};

using ObjList = std::vector<FinSet>;

int flat_size(const ObjList& objs, Mode mode);  // sum in cospan mode, product in span mode
std::string list_text(const ObjList& objs);

Cospan cospan_identity(FinSet a);
Span span_identity(FinSet a);

// Constants over an object list; the list is flattened per mode before the
// shape is built. `b` is used by Sym only and must be empty otherwise.
Cospan cospan_constant(StructKind k, const ObjList& a, const ObjList& b = {});
Span span_constant(StructKind k, const ObjList& a, const ObjList& b = {});

// Graph-style embeddings of a function: forward uses f as a leg against an
// identity, backward is the reverse.
Cospan cospan_of_fn(const FinFn& f);           // dom -f-> cod <-id- cod
Cospan cospan_of_fn_rev(const FinFn& f);       // cod -id-> cod <-f- dom
Span span_of_fn(const FinFn& f);               // dom <-id- dom -f-> cod
Span span_of_fn_rev(const FinFn& f);           // cod <-f- dom -id-> dom

Cospan compose(const Cospan& a, const Cospan& b);
Cospan tensor(const Cospan& a, const Cospan& b);
Span compose(const Span& a, const Span& b);
Span tensor(const Span& a, const Span& b);

// Canonical representative of the isomorphism class: apex elements sorted by
// their leg signature, elements missed by both legs last. Two cospans are
// isomorphic exactly when their canonical forms are equal.
Cospan canonical(Cospan c);
Span canonical(Span s);

bool iso_eq(const Cospan& a, const Cospan& b);
bool iso_eq(const Span& a, const Span& b);

std::string to_text(const Cospan& c);  // "<left> -[legL]-> <apex> <-[legR]- <right>"
std::string to_text(const Span& s);    // "<left> <-[legL]- <apex> -[legR]-> <right>"

}  // namespace cospanlim
