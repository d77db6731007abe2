#include "cospanlim/diagram.hpp"

#include <algorithm>
#include <set>

#include "cospanlim/errors.hpp"

namespace cospanlim {

int LabeledDiagram::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  return -1;
}

void validate(const LabeledDiagram& d) {
  std::set<std::string> vnames, enames;
  for (const auto& v : d.vertices) {
    if (v.obj.size < 0) throw type_error("vertex " + v.name + " has negative size");
    if (!vnames.insert(v.name).second) throw type_error("duplicate vertex name " + v.name);
  }
  const int nv = static_cast<int>(d.vertices.size());
  for (const auto& e : d.edges) {
    if (!enames.insert(e.name).second) throw type_error("duplicate edge name " + e.name);
    if (e.src < 0 || e.src >= nv || e.tgt < 0 || e.tgt >= nv)
      throw type_error("edge " + e.name + " references a missing vertex");
    if (e.map.dom.size != d.vertices[e.src].obj.size ||
        e.map.cod.size != d.vertices[e.tgt].obj.size)
      throw type_error("edge " + e.name + " map " + to_text(e.map) +
                       " does not match its endpoints [" +
                       std::to_string(d.vertices[e.src].obj.size) + "]->[" +
                       std::to_string(d.vertices[e.tgt].obj.size) + "]");
    for (int v : e.map.table)
      if (v < 0 || v >= e.map.cod.size)
        throw type_error("edge " + e.name + " map has a value outside its codomain");
    if (static_cast<int>(e.map.table.size()) != e.map.dom.size)
      throw type_error("edge " + e.name + " map table length mismatch");
  }
}

bool is_cocone(const LabeledDiagram& d, const Cocone& c) {
  if (c.legs.size() != d.vertices.size()) return false;
  for (size_t v = 0; v < d.vertices.size(); ++v)
    if (c.legs[v].dom.size != d.vertices[v].obj.size || c.legs[v].cod.size != c.apex.size)
      return false;
  for (const auto& e : d.edges)
    if (!same_fn(compose(e.map, c.legs[e.tgt]), c.legs[e.src])) return false;
  return true;
}

bool is_cone(const LabeledDiagram& d, const Cone& c) {
  if (c.legs.size() != d.vertices.size()) return false;
  for (size_t v = 0; v < d.vertices.size(); ++v)
    if (c.legs[v].dom.size != c.apex.size || c.legs[v].cod.size != d.vertices[v].obj.size)
      return false;
  for (const auto& e : d.edges)
    if (!same_fn(compose(c.legs[e.src], e.map), c.legs[e.tgt])) return false;
  return true;
}

Cocone colimit(const LabeledDiagram& d) {
  std::vector<int> vsizes, dsizes;
  for (const auto& v : d.vertices) vsizes.push_back(v.obj.size);
  for (const auto& e : d.edges) dsizes.push_back(e.map.dom.size);
  SumDecomp sv = sum_of(vsizes);
  SumDecomp sd = sum_of(dsizes);

  std::vector<int> u(sd.total), w(sd.total);
  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    const auto& e = d.edges[ei];
    for (int x = 0; x < e.map.dom.size; ++x) {
      u[sd.offset[ei] + x] = sv.offset[e.src] + x;
      w[sd.offset[ei] + x] = sv.offset[e.tgt] + e.map.table[x];
    }
  }
  FinSet total{sv.total, ""};
  FinSet doms{sd.total, ""};
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

Cone limit(const LabeledDiagram& d) {
  const int nv = static_cast<int>(d.vertices.size());
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(nv, 0);
  bool any = true;
  for (const auto& v : d.vertices)
    if (v.obj.size == 0) any = false;
  if (any || nv == 0) {
    // Row-major odometer over the full product; vertex 0 most significant.
    while (true) {
      bool ok = true;
      for (const auto& e : d.edges)
        if (e.map.table[cur[e.src]] != cur[e.tgt]) {
          ok = false;
          break;
        }
      if (ok) tuples.push_back(cur);
      int i = nv - 1;
      while (i >= 0 && ++cur[i] == d.vertices[i].obj.size) cur[i--] = 0;
      if (i < 0) break;
    }
  }
  Cone c;
  c.apex = FinSet{static_cast<int>(tuples.size()), ""};
  for (int v = 0; v < nv; ++v) {
    std::vector<int> t(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) t[i] = tuples[i][v];
    c.legs.push_back(FinFn{c.apex, d.vertices[v].obj, std::move(t)});
  }
  return c;
}

namespace {

// Assignment order for enumerating (co)cones: a vertex whose leg is
// determined by an already assigned neighbour is filled in for free, the
// rest are enumerated. `forward` picks the forcing direction: cocone legs
// are forced along outgoing edges, cone legs along incoming ones.
struct Step {
  int vertex;
  int edge;  // forcing edge index, -1 when enumerated
};

std::vector<Step> plan_order(const LabeledDiagram& d, bool cocone) {
  const int nv = static_cast<int>(d.vertices.size());
  std::vector<bool> assigned(nv, false);
  std::vector<Step> order;
  while (static_cast<int>(order.size()) < nv) {
    bool found = false;
    for (size_t ei = 0; ei < d.edges.size() && !found; ++ei) {
      const auto& e = d.edges[ei];
      int from = cocone ? e.src : e.tgt;  // vertex that gets forced
      int known = cocone ? e.tgt : e.src;
      if (!assigned[from] && assigned[known]) {
        order.push_back({from, static_cast<int>(ei)});
        assigned[from] = true;
        found = true;
      }
    }
    if (!found)
      for (int v = 0; v < nv; ++v)
        if (!assigned[v]) {
          order.push_back({v, -1});
          assigned[v] = true;
          break;
        }
  }
  return order;
}

}  // namespace

bool universal_cocone_oracle(const LabeledDiagram& d, const Cocone& c, int bound) {
  if (!is_cocone(d, c)) return false;
  const int nv = static_cast<int>(d.vertices.size());
  std::vector<Step> order = plan_order(d, true);

  for (int s = 0; s <= bound; ++s) {
    std::vector<std::vector<int>> q(nv);
    for (int v = 0; v < nv; ++v) q[v].assign(d.vertices[v].obj.size, 0);

    // Walks every candidate assignment of the enumerated vertices.
    auto run = [&](auto&& self, size_t step) -> bool {
      if (step == order.size()) {
        for (const auto& e : d.edges)
          for (int x = 0; x < e.map.dom.size; ++x)
            if (q[e.src][x] != q[e.tgt][e.map.table[x]]) return true;  // not a cocone; skip
        // Count factorizations h with h . leg_v = q_v.
        std::vector<int> want(c.apex.size, -1);
        for (int v = 0; v < nv; ++v)
          for (int x = 0; x < d.vertices[v].obj.size; ++x) {
            int a = c.legs[v].table[x];
            if (want[a] >= 0 && want[a] != q[v][x]) return false;  // no factorization
            want[a] = q[v][x];
          }
        long long count = 1;
        for (int a = 0; a < c.apex.size; ++a)
          if (want[a] < 0) count *= s;
        return count == 1;
      }
      const Step st = order[step];
      const int size = d.vertices[st.vertex].obj.size;
      if (st.edge >= 0) {
        // Forced along an outgoing edge: q_src = q_tgt after the edge map.
        const auto& e = d.edges[st.edge];
        for (int x = 0; x < size; ++x) q[st.vertex][x] = q[e.tgt][e.map.table[x]];
        return self(self, step + 1);
      }
      if (size == 0) return self(self, step + 1);
      if (s == 0) return true;  // no maps into the empty set; no cocone with this apex
      std::vector<int>& t = q[st.vertex];
      std::fill(t.begin(), t.end(), 0);
      while (true) {
        if (!self(self, step + 1)) return false;
        int i = size - 1;
        while (i >= 0 && ++t[i] == s) t[i--] = 0;
        if (i < 0) return true;
      }
    };
    if (!run(run, 0)) return false;
  }
  return true;
}

bool universal_cone_oracle(const LabeledDiagram& d, const Cone& c, int bound) {
  if (!is_cone(d, c)) return false;
  const int nv = static_cast<int>(d.vertices.size());
  std::vector<Step> order = plan_order(d, false);

  for (int s = 0; s <= bound; ++s) {
    std::vector<std::vector<int>> p(nv);
    for (int v = 0; v < nv; ++v) p[v].assign(s, 0);

    auto run = [&](auto&& self, size_t step) -> bool {
      if (step == order.size()) {
        for (const auto& e : d.edges)
          for (int x = 0; x < s; ++x)
            if (e.map.table[p[e.src][x]] != p[e.tgt][x]) return true;  // not a cone; skip
        long long count = 1;
        for (int x = 0; x < s && count <= 1; ++x) {
          int candidates = 0;
          for (int a = 0; a < c.apex.size; ++a) {
            bool match = true;
            for (int v = 0; v < nv && match; ++v)
              if (c.legs[v].table[a] != p[v][x]) match = false;
            if (match) ++candidates;
          }
          count *= candidates;
        }
        return count == 1;
      }
      const Step st = order[step];
      const int size = d.vertices[st.vertex].obj.size;
      if (st.edge >= 0) {
        const auto& e = d.edges[st.edge];
        for (int x = 0; x < s; ++x) p[st.vertex][x] = e.map.table[p[e.src][x]];
        return self(self, step + 1);
      }
      if (s == 0) return self(self, step + 1);
      if (size == 0) return true;  // no maps from a nonempty apex into an empty vertex
      std::vector<int>& t = p[st.vertex];
      std::fill(t.begin(), t.end(), 0);
      while (true) {
        if (!self(self, step + 1)) return false;
        int i = s - 1;
        while (i >= 0 && ++t[i] == size) t[i--] = 0;
        if (i < 0) return true;
      }
    };
    if (!run(run, 0)) return false;
  }
  return true;
}

}  // namespace cospanlim
