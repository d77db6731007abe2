#include "cospanlim/cospan.hpp"

#include <algorithm>
#include <utility>

#include "cospanlim/errors.hpp"

namespace cospanlim {

namespace {

// Span-mode flattening multiplies sizes; keep results well inside int range.
constexpr long long kMaxFlatSize = 1 << 24;

FinSet flat_obj(const ObjList& objs, Mode mode) {
  return FinSet{flat_size(objs, mode), ""};
}

FinFn terminal_fn(FinSet a) { return constant_fn(a, FinSet{1, ""}, 0); }

FinFn swap_sum(FinSet a, FinSet b) {
  // B+A -> A+B moving each block to its slot on the other side.
  std::vector<int> t(a.size + b.size);
  for (int i = 0; i < b.size; ++i) t[i] = a.size + i;
  for (int j = 0; j < a.size; ++j) t[b.size + j] = j;
  return FinFn{FinSet{a.size + b.size, ""}, FinSet{a.size + b.size, ""}, std::move(t)};
}

FinFn swap_prod(FinSet a, FinSet b) {
  // A*B -> B*A, (x, y) |-> (y, x) in row-major encoding.
  std::vector<int> t(a.size * b.size);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) t[x * b.size + y] = y * a.size + x;
  return FinFn{FinSet{a.size * b.size, ""}, FinSet{a.size * b.size, ""}, std::move(t)};
}

}  // namespace

std::string to_text(StructKind k) {
  switch (k) {
    case StructKind::Id: return "id";
    case StructKind::Sym: return "sym";
    case StructKind::Mult: return "mult";
    case StructKind::Unit: return "unit";
    case StructKind::Comult: return "comult";
    case StructKind::Counit: return "counit";
    case StructKind::Eta: return "eta";
    case StructKind::Eps: return "eps";
  }
  return "?";
}

int flat_size(const ObjList& objs, Mode mode) {
  long long n = mode == Mode::Cospan ? 0 : 1;
  for (const auto& o : objs) {
    if (mode == Mode::Cospan)
      n += o.size;
    else
      n *= o.size;
    if (n > kMaxFlatSize) throw type_error("object list " + list_text(objs) + " is too large");
  }
  return static_cast<int>(n);
}

std::string list_text(const ObjList& objs) {
  std::string s = "[";
  for (size_t i = 0; i < objs.size(); ++i) {
    if (i) s += ",";
    s += objs[i].name.empty() ? std::to_string(objs[i].size) : objs[i].name;
  }
  return s + "]";
}

Cospan cospan_identity(FinSet a) { return Cospan{a, a, a, identity(a), identity(a)}; }

Span span_identity(FinSet a) { return Span{a, a, a, identity(a), identity(a)}; }

Cospan cospan_constant(StructKind k, const ObjList& a, const ObjList& b) {
  if (k != StructKind::Sym && !b.empty())
    throw type_error(to_text(k) + " takes a single object list");
  FinSet x = flat_obj(a, Mode::Cospan);
  FinSet xx{2 * x.size, ""};
  FinSet zero{0, ""};
  switch (k) {
    case StructKind::Id: return cospan_identity(x);
    case StructKind::Sym: {
      FinSet y = flat_obj(b, Mode::Cospan);
      FinSet s{x.size + y.size, ""};
      return Cospan{s, s, s, identity(s), swap_sum(x, y)};
    }
    case StructKind::Mult: return Cospan{xx, x, x, codiagonal(x), identity(x)};
    case StructKind::Unit: return Cospan{zero, x, x, empty_fn(x), identity(x)};
    case StructKind::Comult: return Cospan{x, xx, x, identity(x), codiagonal(x)};
    case StructKind::Counit: return Cospan{x, zero, x, identity(x), empty_fn(x)};
    case StructKind::Eta: return Cospan{zero, xx, x, empty_fn(x), codiagonal(x)};
    case StructKind::Eps: return Cospan{xx, zero, x, codiagonal(x), empty_fn(x)};
  }
  throw type_error("unknown constant");
}

Span span_constant(StructKind k, const ObjList& a, const ObjList& b) {
  if (k != StructKind::Sym && !b.empty())
    throw type_error(to_text(k) + " takes a single object list");
  FinSet x = flat_obj(a, Mode::Span);
  FinSet xx{x.size * x.size, ""};
  FinSet one{1, ""};
  switch (k) {
    case StructKind::Id: return span_identity(x);
    case StructKind::Sym: {
      FinSet y = flat_obj(b, Mode::Span);
      FinSet s{x.size * y.size, ""};
      return Span{s, s, s, identity(s), swap_prod(x, y)};
    }
    case StructKind::Mult: return Span{xx, x, x, diagonal(x), identity(x)};
    case StructKind::Unit: return Span{one, x, x, terminal_fn(x), identity(x)};
    case StructKind::Comult: return Span{x, xx, x, identity(x), diagonal(x)};
    case StructKind::Counit: return Span{x, one, x, identity(x), terminal_fn(x)};
    case StructKind::Eta: return Span{one, xx, x, terminal_fn(x), diagonal(x)};
    case StructKind::Eps: return Span{xx, one, x, diagonal(x), terminal_fn(x)};
  }
  throw type_error("unknown constant");
}

Cospan cospan_of_fn(const FinFn& f) { return Cospan{f.dom, f.cod, f.cod, f, identity(f.cod)}; }

Cospan cospan_of_fn_rev(const FinFn& f) {
  return Cospan{f.cod, f.dom, f.cod, identity(f.cod), f};
}

Span span_of_fn(const FinFn& f) { return Span{f.dom, f.cod, f.dom, identity(f.dom), f}; }

Span span_of_fn_rev(const FinFn& f) { return Span{f.cod, f.dom, f.dom, f, identity(f.dom)}; }

Cospan compose(const Cospan& a, const Cospan& b) {
  if (a.right.size != b.left.size)
    throw type_error("cospan compose boundary mismatch: right foot [" +
                     std::to_string(a.right.size) + "] vs left foot [" +
                     std::to_string(b.left.size) + "]");
  // Glue apexes along the shared foot.
  PushoutResult p = pushout(a.legR, b.legL);
  return canonical(Cospan{a.left, b.right, p.p1.cod, compose(a.legL, p.p1), compose(b.legR, p.p2)});
}

Cospan tensor(const Cospan& a, const Cospan& b) {
  return canonical(Cospan{FinSet{a.left.size + b.left.size, ""},
                          FinSet{a.right.size + b.right.size, ""},
                          FinSet{a.apex.size + b.apex.size, ""}, sum_fn(a.legL, b.legL),
                          sum_fn(a.legR, b.legR)});
}

Span compose(const Span& a, const Span& b) {
  if (a.right.size != b.left.size)
    throw type_error("span compose boundary mismatch: right foot [" +
                     std::to_string(a.right.size) + "] vs left foot [" +
                     std::to_string(b.left.size) + "]");
  PullbackResult p = pullback(a.legR, b.legL);
  return canonical(Span{a.left, b.right, p.p1.dom, compose(p.p1, a.legL), compose(p.p2, b.legR)});
}

Span tensor(const Span& a, const Span& b) {
  return canonical(Span{FinSet{a.left.size * b.left.size, ""},
                        FinSet{a.right.size * b.right.size, ""},
                        FinSet{a.apex.size * b.apex.size, ""}, product_fn(a.legL, b.legL),
                        product_fn(a.legR, b.legR)});
}

Cospan canonical(Cospan c) {
  const int n = c.apex.size;
  // Signature of an apex element: its leg preimages. Distinct touched
  // elements always have distinct signatures because preimages partition
  // the feet, so sorting by signature is a true canonical form.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> sig(n);
  for (int x = 0; x < c.left.size; ++x) sig[c.legL.table[x]].first.push_back(x);
  for (int x = 0; x < c.right.size; ++x) sig[c.legR.table[x]].second.push_back(x);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    bool ti = !sig[i].first.empty() || !sig[i].second.empty();
    bool tj = !sig[j].first.empty() || !sig[j].second.empty();
    if (ti != tj) return ti;  // untouched elements go last
    return sig[i] < sig[j];
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[idx[i]] = i;
  for (int& v : c.legL.table) v = pos[v];
  for (int& v : c.legR.table) v = pos[v];
  c.apex.name.clear();
  return c;
}

Span canonical(Span s) {
  const int n = s.apex.size;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return std::pair(s.legL.table[i], s.legR.table[i]) <
           std::pair(s.legL.table[j], s.legR.table[j]);
  });
  FinFn l = s.legL, r = s.legR;
  for (int i = 0; i < n; ++i) {
    l.table[i] = s.legL.table[idx[i]];
    r.table[i] = s.legR.table[idx[i]];
  }
  s.legL = std::move(l);
  s.legR = std::move(r);
  s.apex.name.clear();
  return s;
}

bool iso_eq(const Cospan& a, const Cospan& b) {
  if (a.left.size != b.left.size || a.right.size != b.right.size ||
      a.apex.size != b.apex.size)
    return false;
  Cospan ca = canonical(a), cb = canonical(b);
  return ca.legL.table == cb.legL.table && ca.legR.table == cb.legR.table;
}

bool iso_eq(const Span& a, const Span& b) {
  if (a.left.size != b.left.size || a.right.size != b.right.size ||
      a.apex.size != b.apex.size)
    return false;
  Span ca = canonical(a), cb = canonical(b);
  return ca.legL.table == cb.legL.table && ca.legR.table == cb.legR.table;
}

std::string to_text(const Cospan& c) {
  return std::to_string(c.left.size) + " -[" + to_text(c.legL) + "]-> " +
         std::to_string(c.apex.size) + " <-[" + to_text(c.legR) + "]- " +
         std::to_string(c.right.size);
}

std::string to_text(const Span& s) {
  return std::to_string(s.left.size) + " <-[" + to_text(s.legL) + "]- " +
         std::to_string(s.apex.size) + " -[" + to_text(s.legR) + "]-> " +
         std::to_string(s.right.size);
}

}  // namespace cospanlim
