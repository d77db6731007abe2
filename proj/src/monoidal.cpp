#include "cospanlim/monoidal.hpp"

#include <set>

#include "cospanlim/errors.hpp"

namespace cospanlim {

int MonoidalDiagram::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<int> word_sizes(const MonoidalDiagram& d, const std::vector<int>& word) {
  std::vector<int> s;
  for (int v : word) s.push_back(d.vertices[v].obj.size);
  return s;
}

// Leg of a cocone along a word: the cotupling of the vertex legs.
int word_leg(const MonoidalDiagram& d, const std::vector<std::vector<int>>& legs,
             const std::vector<int>& word, int x) {
  for (int v : word) {
    int s = d.vertices[v].obj.size;
    if (x < s) return legs[v][x];
    x -= s;
  }
  throw type_error("word element out of range");
}

}  // namespace

void validate(const MonoidalDiagram& d) {
  std::set<std::string> vnames, anames;
  for (const auto& v : d.vertices) {
    if (v.obj.size < 0) throw type_error("vertex " + v.name + " has negative size");
    if (!vnames.insert(v.name).second) throw type_error("duplicate vertex name " + v.name);
  }
  const int nv = static_cast<int>(d.vertices.size());
  for (const auto& a : d.arcs) {
    if (!anames.insert(a.name).second) throw type_error("duplicate arc name " + a.name);
    for (int v : a.src)
      if (v < 0 || v >= nv) throw type_error("arc " + a.name + " references a missing vertex");
    for (int v : a.tgt)
      if (v < 0 || v >= nv) throw type_error("arc " + a.name + " references a missing vertex");
    int ds = sum_of(word_sizes(d, a.src)).total;
    int cs = sum_of(word_sizes(d, a.tgt)).total;
    if (a.map.dom.size != ds || a.map.cod.size != cs ||
        static_cast<int>(a.map.table.size()) != ds)
      throw type_error("arc " + a.name + " map " + to_text(a.map) +
                       " does not match its words [" + std::to_string(ds) + "]->[" +
                       std::to_string(cs) + "]");
    for (int v : a.map.table)
      if (v < 0 || v >= cs)
        throw type_error("arc " + a.name + " map has a value outside its codomain");
  }
}

ObjList word_objs(const MonoidalDiagram& d, const std::vector<int>& word) {
  ObjList o;
  for (int v : word) o.push_back(d.vertices[v].obj);
  return o;
}

Cocone mon_colimit(const MonoidalDiagram& d) {
  std::vector<int> vsizes;
  for (const auto& v : d.vertices) vsizes.push_back(v.obj.size);
  SumDecomp sv = sum_of(vsizes);

  // Element of a word sum -> element of the vertex sum.
  auto embed = [&](const std::vector<int>& word, int x) {
    for (int v : word) {
      int s = d.vertices[v].obj.size;
      if (x < s) return sv.offset[v] + x;
      x -= s;
    }
    throw type_error("word element out of range");
  };

  std::vector<int> u, w;
  for (const auto& a : d.arcs)
    for (int x = 0; x < a.map.dom.size; ++x) {
      u.push_back(embed(a.src, x));
      w.push_back(embed(a.tgt, a.map.table[x]));
    }
  FinSet total{sv.total, ""};
  FinSet doms{static_cast<int>(u.size()), ""};
  FinFn q = coequalizer(FinFn{doms, total, std::move(u)}, FinFn{doms, total, std::move(w)});

  Cocone c;
  c.apex = q.cod;
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    std::vector<int> t(d.vertices[v].obj.size);
    for (int x = 0; x < d.vertices[v].obj.size; ++x) t[x] = q.table[sv.offset[v] + x];
    c.legs.push_back(FinFn{d.vertices[v].obj, c.apex, std::move(t)});
  }
  return c;
}

bool is_mon_cocone(const MonoidalDiagram& d, const Cocone& c) {
  if (c.legs.size() != d.vertices.size()) return false;
  std::vector<std::vector<int>> legs;
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    if (c.legs[v].dom.size != d.vertices[v].obj.size || c.legs[v].cod.size != c.apex.size)
      return false;
    legs.push_back(c.legs[v].table);
  }
  for (const auto& a : d.arcs)
    for (int x = 0; x < a.map.dom.size; ++x)
      if (word_leg(d, legs, a.tgt, a.map.table[x]) != word_leg(d, legs, a.src, x))
        return false;
  return true;
}

bool mon_universal_cocone_oracle(const MonoidalDiagram& d, const Cocone& c, int bound) {
  if (!is_mon_cocone(d, c)) return false;
  const int nv = static_cast<int>(d.vertices.size());

  for (int s = 0; s <= bound; ++s) {
    std::vector<std::vector<int>> q(nv);
    bool impossible = false;
    for (int v = 0; v < nv; ++v) {
      q[v].assign(d.vertices[v].obj.size, 0);
      if (s == 0 && d.vertices[v].obj.size > 0) impossible = true;
    }
    if (impossible) continue;

    auto run = [&](auto&& self, int v) -> bool {
      if (v == nv) {
        for (const auto& a : d.arcs)
          for (int x = 0; x < a.map.dom.size; ++x)
            if (word_leg(d, q, a.tgt, a.map.table[x]) != word_leg(d, q, a.src, x))
              return true;  // not a monoidal cocone; skip
        std::vector<int> want(c.apex.size, -1);
        for (int i = 0; i < nv; ++i)
          for (int x = 0; x < d.vertices[i].obj.size; ++x) {
            int a = c.legs[i].table[x];
            if (want[a] >= 0 && want[a] != q[i][x]) return false;
            want[a] = q[i][x];
          }
        long long count = 1;
        for (int a = 0; a < c.apex.size; ++a)
          if (want[a] < 0) count *= s;
        return count == 1;
      }
      if (d.vertices[v].obj.size == 0 || s == 0) return self(self, v + 1);
      std::vector<int>& t = q[v];
      std::fill(t.begin(), t.end(), 0);
      while (true) {
        if (!self(self, v + 1)) return false;
        int i = d.vertices[v].obj.size - 1;
        while (i >= 0 && ++t[i] == s) t[i--] = 0;
        if (i < 0) return true;
      }
    };
    if (!run(run, 0)) return false;
  }
  return true;
}

void validate(const MonoidalDiagramCospan& c) {
  validate(c.center);
  const int nv = static_cast<int>(c.center.vertices.size());
  for (int v : c.left)
    if (v < 0 || v >= nv) throw type_error("left foot references a missing vertex");
  for (int v : c.right)
    if (v < 0 || v >= nv) throw type_error("right foot references a missing vertex");
}

Cospan colimit(const MonoidalDiagramCospan& c) {
  Cocone cc = mon_colimit(c.center);
  auto block_leg = [&](const std::vector<int>& feet) {
    std::vector<int> t;
    for (int v : feet)
      t.insert(t.end(), cc.legs[v].table.begin(), cc.legs[v].table.end());
    return FinFn{FinSet{static_cast<int>(t.size()), ""}, cc.apex, std::move(t)};
  };
  FinFn l = block_leg(c.left), r = block_leg(c.right);
  return canonical(Cospan{l.dom, r.dom, cc.apex, l, r});
}

Cospan feedback_cospan(FinSet a, FinSet b, FinSet c, const FinFn& f) {
  if (f.dom.size != a.size + c.size || f.cod.size != b.size + c.size)
    throw type_error("feedback map " + to_text(f) + " does not fit boundary [" +
                     std::to_string(a.size) + "+" + std::to_string(c.size) + "]->[" +
                     std::to_string(b.size) + "+" + std::to_string(c.size) + "]");
  // Orbit quotient of A+B+C under x ~ f(x); classes numbered by least
  // member, so the output is deterministic rather than canonical-sorted.
  int total = a.size + b.size + c.size;
  std::vector<int> parent(total);
  for (int v = 0; v < total; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < a.size + c.size; ++x) {
    int gx = x < a.size ? x : a.size + b.size + (x - a.size);
    int y = f.table[x];
    int gy = y < b.size ? a.size + y : a.size + b.size + (y - b.size);
    parent[find(gx)] = find(gy);
  }
  std::vector<int> cls(total, -1);
  int orbits = 0;
  for (int v = 0; v < total; ++v)
    if (cls[find(v)] < 0) cls[find(v)] = orbits++;
  FinSet q{orbits, ""};
  std::vector<int> la(a.size), lb(b.size);
  for (int v = 0; v < a.size; ++v) la[v] = cls[find(v)];
  for (int v = 0; v < b.size; ++v) lb[v] = cls[find(a.size + v)];
  return Cospan{a, b, q, make_fn(a, q, std::move(la)), make_fn(b, q, std::move(lb))};
}

PartialFn trace_partial_fn(FinSet a, FinSet b, FinSet c, const FinFn& f) {
  if (f.dom.size != a.size + c.size || f.cod.size != b.size + c.size)
    throw type_error("feedback map " + to_text(f) + " does not fit boundary [" +
                     std::to_string(a.size) + "+" + std::to_string(c.size) + "]->[" +
                     std::to_string(b.size) + "+" + std::to_string(c.size) + "]");
  PartialFn p{a, b, std::vector<int>(a.size, -1)};
  for (int x = 0; x < a.size; ++x) {
    std::vector<bool> visited(c.size, false);
    int y = f.table[x];
    while (y >= b.size) {
      int ch = y - b.size;
      if (visited[ch]) {
        y = -1;  // trapped on a C-cycle
        break;
      }
      visited[ch] = true;
      y = f.table[a.size + ch];
    }
    p.table[x] = y;
  }
  return p;
}

}  // namespace cospanlim
