#include "cospanlim/dcospan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cospanlim/errors.hpp"

namespace cospanlim {

namespace {

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
  std::string name = base.empty() ? "x" : base;
  if (used.insert(name).second) return name;
  for (int k = 2;; ++k) {
    std::string alt = name + "_" + std::to_string(k);
    if (used.insert(alt).second) return alt;
  }
}

std::vector<DiagramVertex> vertices_for(const ObjList& objs) {
  std::vector<DiagramVertex> vs;
  std::set<std::string> used;
  for (size_t i = 0; i < objs.size(); ++i)
    vs.push_back({fresh_name(objs[i].name, used), objs[i]});
  return vs;
}

std::vector<int> iota_feet(size_t n, int start = 0) {
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), start);
  return f;
}

}  // namespace

ObjList DiagramCospan::left_objs() const {
  ObjList o;
  for (int v : left) o.push_back(center.vertices[v].obj);
  return o;
}

ObjList DiagramCospan::right_objs() const {
  ObjList o;
  for (int v : right) o.push_back(center.vertices[v].obj);
  return o;
}

void validate(const DiagramCospan& c) {
  validate(c.center);
  const int nv = static_cast<int>(c.center.vertices.size());
  for (int v : c.left)
    if (v < 0 || v >= nv) throw type_error("left foot references a missing vertex");
  for (int v : c.right)
    if (v < 0 || v >= nv) throw type_error("right foot references a missing vertex");
}

DiagramCospan didentity(const ObjList& objs) { return dconstant(StructKind::Id, objs); }

DiagramCospan dconstant(StructKind k, const ObjList& a, const ObjList& b) {
  if (k != StructKind::Sym && !b.empty())
    throw type_error(to_text(k) + " takes a single object list");
  DiagramCospan c;
  const size_t n = a.size();
  std::vector<int> ia = iota_feet(n);
  switch (k) {
    case StructKind::Id:
      c.center.vertices = vertices_for(a);
      c.left = ia;
      c.right = ia;
      break;
    case StructKind::Sym: {
      ObjList all = a;
      all.insert(all.end(), b.begin(), b.end());
      c.center.vertices = vertices_for(all);
      c.left = iota_feet(all.size());
      c.right = iota_feet(b.size(), static_cast<int>(n));
      std::vector<int> tail = ia;
      c.right.insert(c.right.end(), tail.begin(), tail.end());
      break;
    }
    case StructKind::Mult:
      c.center.vertices = vertices_for(a);
      c.left = ia;
      c.left.insert(c.left.end(), ia.begin(), ia.end());
      c.right = ia;
      break;
    case StructKind::Unit:
      c.center.vertices = vertices_for(a);
      c.right = ia;
      break;
    case StructKind::Comult:
      c.center.vertices = vertices_for(a);
      c.left = ia;
      c.right = ia;
      c.right.insert(c.right.end(), ia.begin(), ia.end());
      break;
    case StructKind::Counit:
      c.center.vertices = vertices_for(a);
      c.left = ia;
      break;
    case StructKind::Eta:
      c.center.vertices = vertices_for(a);
      c.right = ia;
      c.right.insert(c.right.end(), ia.begin(), ia.end());
      break;
    case StructKind::Eps:
      c.center.vertices = vertices_for(a);
      c.left = ia;
      c.left.insert(c.left.end(), ia.begin(), ia.end());
      break;
  }
  return c;
}

namespace {

struct Merge {
  std::vector<int> parent;

  explicit Merge(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;  // keep the smallest index as representative
  }
};

DiagramCospan glue(const DiagramCospan& a, const DiagramCospan& b, bool identify_feet) {
  const int na = static_cast<int>(a.center.vertices.size());
  const int nb = static_cast<int>(b.center.vertices.size());
  Merge uf(na + nb);
  if (identify_feet) {
    if (a.right.size() != b.left.size())
      throw type_error("interface mismatch: right foot " + list_text(a.right_objs()) +
                       " vs left foot " + list_text(b.left_objs()));
    for (size_t i = 0; i < a.right.size(); ++i) {
      const FinSet& oa = a.center.vertices[a.right[i]].obj;
      const FinSet& ob = b.center.vertices[b.left[i]].obj;
      if (oa.size != ob.size)
        throw type_error("interface mismatch at foot " + std::to_string(i) + ": " +
                         list_text(a.right_objs()) + " vs " + list_text(b.left_objs()));
      uf.unite(a.right[i], na + b.left[i]);
    }
  }

  // Classes in order of least member; a-side vertices come first so merged
  // vertices keep the a-side name.
  std::vector<int> cls(na + nb, -1);
  DiagramCospan out;
  std::set<std::string> vnames;
  for (int v = 0; v < na + nb; ++v) {
    int r = uf.find(v);
    if (cls[r] < 0) {
      const DiagramVertex& src =
          r < na ? a.center.vertices[r] : b.center.vertices[r - na];
      cls[r] = static_cast<int>(out.center.vertices.size());
      out.center.vertices.push_back({fresh_name(src.name, vnames), src.obj});
    }
    cls[v] = cls[r];
  }

  std::set<std::string> enames;
  for (const auto& e : a.center.edges)
    out.center.edges.push_back({fresh_name(e.name, enames), cls[e.src], cls[e.tgt], e.map});
  for (const auto& e : b.center.edges)
    out.center.edges.push_back(
        {fresh_name(e.name, enames), cls[na + e.src], cls[na + e.tgt], e.map});

  for (int v : a.left) out.left.push_back(cls[v]);
  if (identify_feet) {
    for (int v : b.right) out.right.push_back(cls[na + v]);
  } else {
    for (int v : a.right) out.right.push_back(cls[v]);
    for (int v : b.left) out.left.push_back(cls[na + v]);
    for (int v : b.right) out.right.push_back(cls[na + v]);
  }
  return out;
}

}  // namespace

DiagramCospan dcompose(const DiagramCospan& a, const DiagramCospan& b) {
  return glue(a, b, true);
}

DiagramCospan dtensor(const DiagramCospan& a, const DiagramCospan& b) {
  return glue(a, b, false);
}

bool diso_eq(const DiagramCospan& a, const DiagramCospan& b) {
  const int n = static_cast<int>(a.center.vertices.size());
  if (n != static_cast<int>(b.center.vertices.size())) return false;
  if (a.center.edges.size() != b.center.edges.size()) return false;
  if (a.left.size() != b.left.size() || a.right.size() != b.right.size()) return false;

  std::vector<int> beta(n, -1), used(n, 0);
  auto assign = [&](int va, int vb) {
    if (a.center.vertices[va].obj.size != b.center.vertices[vb].obj.size) return false;
    if (beta[va] >= 0) return beta[va] == vb;
    if (used[vb]) return false;
    beta[va] = vb;
    used[vb] = 1;
    return true;
  };
  // Feet force part of the bijection.
  std::vector<std::pair<int, int>> forced;
  for (size_t i = 0; i < a.left.size(); ++i) forced.push_back({a.left[i], b.left[i]});
  for (size_t i = 0; i < a.right.size(); ++i) forced.push_back({a.right[i], b.right[i]});
  for (auto [va, vb] : forced)
    if (!assign(va, vb)) return false;

  auto edges_match = [&]() {
    std::multiset<std::tuple<int, int, std::vector<int>>> ma, mb;
    for (const auto& e : a.center.edges) ma.insert({beta[e.src], beta[e.tgt], e.map.table});
    for (const auto& e : b.center.edges) mb.insert({e.src, e.tgt, e.map.table});
    return ma == mb;
  };

  auto search = [&](auto&& self, int va) -> bool {
    while (va < n && beta[va] >= 0) ++va;
    if (va == n) return edges_match();
    for (int vb = 0; vb < n; ++vb) {
      if (used[vb] || a.center.vertices[va].obj.size != b.center.vertices[vb].obj.size)
        continue;
      beta[va] = vb;
      used[vb] = 1;
      if (self(self, va + 1)) return true;
      beta[va] = -1;
      used[vb] = 0;
    }
    return false;
  };
  return search(search, 0);
}

Cospan colimit(const DiagramCospan& c) {
  Cocone cc = colimit(c.center);
  auto block_leg = [&](const std::vector<int>& feet) {
    std::vector<int> t;
    for (int v : feet)
      t.insert(t.end(), cc.legs[v].table.begin(), cc.legs[v].table.end());
    return FinFn{FinSet{static_cast<int>(t.size()), ""}, cc.apex, std::move(t)};
  };
  return canonical(Cospan{FinSet{flat_size(c.left_objs(), Mode::Cospan), ""},
                          FinSet{flat_size(c.right_objs(), Mode::Cospan), ""}, cc.apex,
                          block_leg(c.left), block_leg(c.right)});
}

Span limit(const DiagramCospan& c) {
  Cone cn = limit(c.center);
  auto tuple_leg = [&](const std::vector<int>& feet, const ObjList& objs) {
    std::vector<int> sizes;
    for (const auto& o : objs) sizes.push_back(o.size);
    ProdDecomp pd = prod_of(sizes);
    FinSet cod{flat_size(objs, Mode::Span), ""};
    std::vector<int> t(cn.apex.size);
    for (int x = 0; x < cn.apex.size; ++x) {
      long long enc = 0;
      for (size_t i = 0; i < feet.size(); ++i) enc += cn.legs[feet[i]].table[x] * pd.stride[i];
      t[x] = static_cast<int>(enc);
    }
    return FinFn{cn.apex, cod, std::move(t)};
  };
  return canonical(Span{FinSet{flat_size(c.left_objs(), Mode::Span), ""},
                        FinSet{flat_size(c.right_objs(), Mode::Span), ""}, cn.apex,
                        tuple_leg(c.left, c.left_objs()), tuple_leg(c.right, c.right_objs())});
}

}  // namespace cospanlim
