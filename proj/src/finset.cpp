#include "cospanlim/finset.hpp"

#include <numeric>
#include <sstream>

#include "cospanlim/errors.hpp"

namespace cospanlim {

namespace {

// Union-find over {0..n-1} with path compression.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

bool same_fn(const FinFn& f, const FinFn& g) {
  return f.dom.size == g.dom.size && f.cod.size == g.cod.size && f.table == g.table;
}

FinFn make_fn(FinSet dom, FinSet cod, std::vector<int> table) {
  if (static_cast<int>(table.size()) != dom.size)
    throw type_error("function table has " + std::to_string(table.size()) +
                     " entries for a domain of size " + std::to_string(dom.size));
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw type_error("function value " + std::to_string(v) + " outside codomain of size " +
                       std::to_string(cod.size));
  return FinFn{std::move(dom), std::move(cod), std::move(table)};
}

FinFn identity(FinSet a) {
  std::vector<int> t(a.size);
  std::iota(t.begin(), t.end(), 0);
  return FinFn{a, a, std::move(t)};
}

FinFn constant_fn(FinSet dom, FinSet cod, int value) {
  return make_fn(std::move(dom), std::move(cod), std::vector<int>(dom.size, value));
}

FinFn empty_fn(FinSet cod) { return FinFn{FinSet{0, ""}, std::move(cod), {}}; }

std::string to_text(const FinFn& f) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (i) os << ',';
    os << f.table[i];
  }
  os << "]:[" << f.dom.size << "]->[" << f.cod.size << ']';
  return os.str();
}

FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod.size != g.dom.size)
    throw type_error("compose boundary mismatch: " + to_text(f) + " then " + to_text(g));
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinFn{f.dom, g.cod, std::move(t)};
}

Coproduct coproduct(FinSet a, FinSet b) {
  FinSet obj{a.size + b.size, ""};
  std::vector<int> t1(a.size), t2(b.size);
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), a.size);
  return Coproduct{obj, FinFn{a, obj, std::move(t1)}, FinFn{b, obj, std::move(t2)}};
}

FinFn cotuple(const FinFn& q1, const FinFn& q2) {
  if (q1.cod.size != q2.cod.size)
    throw type_error("cotuple codomain mismatch: " + to_text(q1) + " vs " + to_text(q2));
  std::vector<int> t = q1.table;
  t.insert(t.end(), q2.table.begin(), q2.table.end());
  return FinFn{FinSet{q1.dom.size + q2.dom.size, ""}, q1.cod, std::move(t)};
}

FinFn sum_fn(const FinFn& f, const FinFn& g) {
  std::vector<int> t;
  t.reserve(f.table.size() + g.table.size());
  for (int v : f.table) t.push_back(v);
  for (int v : g.table) t.push_back(f.cod.size + v);
  return FinFn{FinSet{f.dom.size + g.dom.size, ""}, FinSet{f.cod.size + g.cod.size, ""},
               std::move(t)};
}

FinFn codiagonal(FinSet a) {
  std::vector<int> t(2 * a.size);
  for (int i = 0; i < a.size; ++i) {
    t[i] = i;
    t[a.size + i] = i;
  }
  return FinFn{FinSet{2 * a.size, ""}, a, std::move(t)};
}

Product product(FinSet a, FinSet b) {
  FinSet obj{a.size * b.size, ""};
  std::vector<int> t1(obj.size), t2(obj.size);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) {
      t1[x * b.size + y] = x;
      t2[x * b.size + y] = y;
    }
  return Product{obj, FinFn{obj, a, std::move(t1)}, FinFn{obj, b, std::move(t2)}};
}

FinFn pair_fn(const FinFn& f, const FinFn& g) {
  if (f.dom.size != g.dom.size)
    throw type_error("pairing domain mismatch: " + to_text(f) + " vs " + to_text(g));
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = f.table[i] * g.cod.size + g.table[i];
  return FinFn{f.dom, FinSet{f.cod.size * g.cod.size, ""}, std::move(t)};
}

FinFn product_fn(const FinFn& f, const FinFn& g) {
  FinSet dom{f.dom.size * g.dom.size, ""};
  FinSet cod{f.cod.size * g.cod.size, ""};
  std::vector<int> t(dom.size);
  for (int x = 0; x < f.dom.size; ++x)
    for (int y = 0; y < g.dom.size; ++y)
      t[x * g.dom.size + y] = f.table[x] * g.cod.size + g.table[y];
  return FinFn{dom, cod, std::move(t)};
}

FinFn diagonal(FinSet a) {
  std::vector<int> t(a.size);
  for (int i = 0; i < a.size; ++i) t[i] = i * a.size + i;
  return FinFn{a, FinSet{a.size * a.size, ""}, std::move(t)};
}

SumDecomp sum_of(const std::vector<int>& sizes) {
  SumDecomp d;
  d.offset.reserve(sizes.size());
  for (int s : sizes) {
    d.offset.push_back(d.total);
    d.total += s;
  }
  return d;
}

ProdDecomp prod_of(const std::vector<int>& sizes) {
  // Row major: last factor varies fastest.
  ProdDecomp d;
  d.stride.assign(sizes.size(), 1);
  long long acc = 1;
  for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
    d.stride[i] = acc;
    acc *= sizes[i];
  }
  d.total = acc;
  return d;
}

FinFn coequalizer(const FinFn& f, const FinFn& g) {
  if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
    throw type_error("coequalizer needs a parallel pair: " + to_text(f) + " vs " + to_text(g));
  const int n = f.cod.size;
  UnionFind uf(n);
  for (int i = 0; i < f.dom.size; ++i) uf.unite(f.table[i], g.table[i]);
  std::vector<int> cls(n, -1);
  std::vector<int> q(n);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (cls[r] < 0) cls[r] = next++;
    q[x] = cls[r];
  }
  return FinFn{f.cod, FinSet{next, ""}, std::move(q)};
}

PushoutResult pushout(const FinFn& f, const FinFn& g) {
  if (f.dom.size != g.dom.size)
    throw type_error("pushout needs a span: " + to_text(f) + " vs " + to_text(g));
  Coproduct c = coproduct(f.cod, g.cod);
  FinFn q = coequalizer(compose(f, c.in1), compose(g, c.in2));
  return PushoutResult{compose(c.in1, q), compose(c.in2, q)};
}

FinFn equalizer(const FinFn& f, const FinFn& g) {
  if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
    throw type_error("equalizer needs a parallel pair: " + to_text(f) + " vs " + to_text(g));
  std::vector<int> t;
  for (int x = 0; x < f.dom.size; ++x)
    if (f.table[x] == g.table[x]) t.push_back(x);
  FinSet e{static_cast<int>(t.size()), ""};
  return FinFn{e, f.dom, std::move(t)};
}

PullbackResult pullback(const FinFn& f, const FinFn& g) {
  if (f.cod.size != g.cod.size)
    throw type_error("pullback needs a cospan: " + to_text(f) + " vs " + to_text(g));
  std::vector<int> t1, t2;
  for (int b = 0; b < f.dom.size; ++b)
    for (int c = 0; c < g.dom.size; ++c)
      if (f.table[b] == g.table[c]) {
        t1.push_back(b);
        t2.push_back(c);
      }
  FinSet p{static_cast<int>(t1.size()), ""};
  return PullbackResult{FinFn{p, f.dom, std::move(t1)}, FinFn{p, g.dom, std::move(t2)}};
}

}  // namespace cospanlim
