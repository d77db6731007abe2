#pragma once

#include <string>
#include <vector>

namespace cospanlim {

// Finite set presented as the ordinal {0, ..., size-1}. The name is display
// metadata only; all structural comparisons go through size.
struct FinSet {
  int size = 0;
  std::string name;
};

// Total function between finite sets, stored as its value table.
// Invariant: table.size() == dom.size and every entry lies in [0, cod.size).
struct FinFn {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;

  int operator()(int x) const { return table[x]; }
};

bool same_fn(const FinFn& f, const FinFn& g);  // boundary sizes and table equal

FinFn make_fn(FinSet dom, FinSet cod, std::vector<int> table);  // validates the table
FinFn identity(FinSet a);
FinFn constant_fn(FinSet dom, FinSet cod, int value);
FinFn empty_fn(FinSet cod);  // the unique map 0 -> cod

// Debug form "[t0,t1,...]:[n]->[m]".
std::string to_text(const FinFn& f);

// g after f in diagrammatic order: compose(f, g) = x |-> g(f(x)).
FinFn compose(const FinFn& f, const FinFn& g);

struct Coproduct {
  FinSet obj;
  FinFn in1;
  FinFn in2;
};
Coproduct coproduct(FinSet a, FinSet b);

// Copairing [q1, q2]: A+B -> X of maps with a common codomain.
FinFn cotuple(const FinFn& q1, const FinFn& q2);

// Blockwise sum f+g: A+B -> C+D.
FinFn sum_fn(const FinFn& f, const FinFn& g);

// Codiagonal A+A -> A.
FinFn codiagonal(FinSet a);

struct Product {
  FinSet obj;  // pairs encoded row major: (x, y) |-> x * b.size + y
  FinFn pr1;
  FinFn pr2;
};
Product product(FinSet a, FinSet b);

// Pairing <f, g>: X -> A x B.
FinFn pair_fn(const FinFn& f, const FinFn& g);

// Pointwise product f x g: A x B -> C x D.
FinFn product_fn(const FinFn& f, const FinFn& g);

// Diagonal A -> A x A.
FinFn diagonal(FinSet a);

// Offsets of each summand inside a finite sum of sets.
struct SumDecomp {
  int total = 0;
  std::vector<int> offset;  // offset[i] = start of block i; offset.size() == #blocks
};
SumDecomp sum_of(const std::vector<int>& sizes);

// Strides for row-major tuple encoding of a finite product.
// Factor i ranges over sizes[i]; tuple value = sum_i t[i] * stride[i].
struct ProdDecomp {
  long long total = 1;  // may overflow int for large inputs; callers cap it
  std::vector<long long> stride;
};
ProdDecomp prod_of(const std::vector<int>& sizes);

// Canonical coequalizer of f, g: A -> B. Returns q: B -> Q where classes are
// numbered by order of least member, so the output is unique, not merely
// unique up to isomorphism.
FinFn coequalizer(const FinFn& f, const FinFn& g);

struct PushoutResult {
  FinFn p1;  // B -> P
  FinFn p2;  // C -> P
};
// Pushout of the span B <-f- A -g-> C.
PushoutResult pushout(const FinFn& f, const FinFn& g);

// Equalizer inclusion E -> A of f, g: A -> B, with E listed in element order.
FinFn equalizer(const FinFn& f, const FinFn& g);

struct PullbackResult {
  FinFn p1;  // P -> B
  FinFn p2;  // P -> C
};
// Pullback of the cospan B -f-> A <-g- C. P enumerates matching pairs (b, c)
// in lexicographic order.
PullbackResult pullback(const FinFn& f, const FinFn& g);

}  // namespace cospanlim
