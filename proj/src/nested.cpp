#include "cospanlim/nested.hpp"

#include <numeric>

#include "cospanlim/errors.hpp"

namespace cospanlim {

void validate(const DiagramOfDiagrams& d) {
  for (const auto& n : d.nodes) validate(n);
  const int nn = static_cast<int>(d.nodes.size());
  for (const auto& a : d.arrows) {
    if (a.src < 0 || a.src >= nn || a.tgt < 0 || a.tgt >= nn)
      throw type_error("arrow " + a.name + " references a missing node");
    const LabeledDiagram& s = d.nodes[a.src];
    const LabeledDiagram& t = d.nodes[a.tgt];
    if (a.m.vmap.size() != s.vertices.size() || a.m.emap.size() != s.edges.size())
      throw type_error("arrow " + a.name + " has the wrong shape");
    for (size_t v = 0; v < s.vertices.size(); ++v) {
      int w = a.m.vmap[v];
      if (w < 0 || w >= static_cast<int>(t.vertices.size()))
        throw type_error("arrow " + a.name + " maps a vertex out of range");
      if (s.vertices[v].obj.size != t.vertices[w].obj.size)
        throw type_error("arrow " + a.name + " does not preserve the object at vertex " +
                         s.vertices[v].name);
    }
    for (size_t e = 0; e < s.edges.size(); ++e) {
      int f = a.m.emap[e];
      if (f < 0 || f >= static_cast<int>(t.edges.size()))
        throw type_error("arrow " + a.name + " maps an edge out of range");
      const DiagramEdge& se = s.edges[e];
      const DiagramEdge& te = t.edges[f];
      if (te.src != a.m.vmap[se.src] || te.tgt != a.m.vmap[se.tgt] ||
          te.map.table != se.map.table)
        throw type_error("arrow " + a.name + " does not preserve edge " + se.name);
    }
  }
}

namespace {

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
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }

  // Class indices in order of least member.
  std::vector<int> classes(int& count) {
    std::vector<int> cls(parent.size(), -1);
    count = 0;
    for (size_t x = 0; x < parent.size(); ++x) {
      int r = find(static_cast<int>(x));
      if (cls[r] < 0) cls[r] = count++;
      cls[x] = cls[r];
    }
    return cls;
  }
};

}  // namespace

NestedCheckResult nested_colim_check(const DiagramOfDiagrams& d) {
  validate(d);
  NestedCheckResult res;
  const int nn = static_cast<int>(d.nodes.size());

  std::vector<int> voff(nn, 0), eoff(nn, 0);
  int nv = 0, ne = 0;
  for (int i = 0; i < nn; ++i) {
    voff[i] = nv;
    eoff[i] = ne;
    nv += static_cast<int>(d.nodes[i].vertices.size());
    ne += static_cast<int>(d.nodes[i].edges.size());
  }

  // Route one: the colimit in diagrams is computed componentwise, gluing
  // vertices and edges along the arrows, then one colimit of the result.
  UnionFind vuf(nv), euf(ne);
  for (const auto& a : d.arrows) {
    for (size_t v = 0; v < d.nodes[a.src].vertices.size(); ++v)
      vuf.unite(voff[a.src] + static_cast<int>(v), voff[a.tgt] + a.m.vmap[v]);
    for (size_t e = 0; e < d.nodes[a.src].edges.size(); ++e)
      euf.unite(eoff[a.src] + static_cast<int>(e), eoff[a.tgt] + a.m.emap[e]);
  }
  int nvc = 0, nec = 0;
  std::vector<int> vcls = vuf.classes(nvc);
  std::vector<int> ecls = euf.classes(nec);

  LabeledDiagram flat;
  flat.vertices.assign(nvc, DiagramVertex{});
  std::vector<bool> vseen(nvc, false);
  for (int i = 0; i < nn; ++i)
    for (size_t v = 0; v < d.nodes[i].vertices.size(); ++v) {
      int c = vcls[voff[i] + static_cast<int>(v)];
      const DiagramVertex& dv = d.nodes[i].vertices[v];
      if (!vseen[c]) {
        flat.vertices[c] = {"c" + std::to_string(c), dv.obj};
        vseen[c] = true;
      } else if (flat.vertices[c].obj.size != dv.obj.size) {
        res.detail = "glued vertices carry different objects";
        return res;
      }
    }
  flat.edges.assign(nec, DiagramEdge{});
  std::vector<bool> eseen(nec, false);
  for (int i = 0; i < nn; ++i)
    for (size_t e = 0; e < d.nodes[i].edges.size(); ++e) {
      int c = ecls[eoff[i] + static_cast<int>(e)];
      const DiagramEdge& de = d.nodes[i].edges[e];
      DiagramEdge glued{"e" + std::to_string(c), vcls[voff[i] + de.src],
                        vcls[voff[i] + de.tgt], de.map};
      if (!eseen[c]) {
        flat.edges[c] = glued;
        eseen[c] = true;
      } else if (flat.edges[c].src != glued.src || flat.edges[c].tgt != glued.tgt ||
                 flat.edges[c].map.table != glued.map.table) {
        res.detail = "glued edges disagree";
        return res;
      }
    }
  Cocone flatC = colimit(flat);
  res.flat_size = flatC.apex.size;

  // Route two: node colimits first, then the colimit of the induced diagram
  // of apexes.
  std::vector<Cocone> stage;
  for (const auto& n : d.nodes) stage.push_back(colimit(n));

  LabeledDiagram outer;
  for (int i = 0; i < nn; ++i)
    outer.vertices.push_back({"n" + std::to_string(i), stage[i].apex});
  for (size_t ai = 0; ai < d.arrows.size(); ++ai) {
    const auto& a = d.arrows[ai];
    std::vector<int> table(stage[a.src].apex.size, -1);
    for (size_t v = 0; v < d.nodes[a.src].vertices.size(); ++v)
      for (int x = 0; x < d.nodes[a.src].vertices[v].obj.size; ++x) {
        int from = stage[a.src].legs[v].table[x];
        int to = stage[a.tgt].legs[a.m.vmap[v]].table[x];
        if (table[from] >= 0 && table[from] != to) {
          res.detail = "induced map on node colimits is not well defined";
          return res;
        }
        table[from] = to;
      }
    for (int x : table)
      if (x < 0) {
        res.detail = "induced map on node colimits is partial";
        return res;
      }
    outer.edges.push_back({"a" + std::to_string(ai), a.src, a.tgt,
                           FinFn{stage[a.src].apex, stage[a.tgt].apex, table}});
  }
  Cocone outerC = colimit(outer);
  res.stage_size = outerC.apex.size;

  // Comparison map between the two results, checked to be a bijection.
  std::vector<int> w(res.flat_size, -1);
  for (int i = 0; i < nn; ++i)
    for (size_t v = 0; v < d.nodes[i].vertices.size(); ++v)
      for (int x = 0; x < d.nodes[i].vertices[v].obj.size; ++x) {
        int from = flatC.legs[vcls[voff[i] + static_cast<int>(v)]].table[x];
        int to = outerC.legs[i].table[stage[i].legs[v].table[x]];
        if (w[from] >= 0 && w[from] != to) {
          res.detail = "comparison map is not well defined";
          return res;
        }
        w[from] = to;
      }
  if (res.flat_size != res.stage_size) {
    res.detail = "colimit sizes differ";
    return res;
  }
  std::vector<bool> hit(res.stage_size, false);
  for (int x : w) {
    if (x < 0) {
      res.detail = "comparison map is partial";
      return res;
    }
    if (hit[x]) {
      res.detail = "comparison map is not injective";
      return res;
    }
    hit[x] = true;
  }
  res.witness = FinFn{flatC.apex, outerC.apex, std::move(w)};
  res.ok = true;
  return res;
}

}  // namespace cospanlim
