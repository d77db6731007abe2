#include "cospanlim/gen.hpp"

#include <algorithm>
#include <string>

namespace cospanlim {

std::uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

int Rng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

bool Rng::chance(int num, int den) { return below(den) < num; }

FinFn random_fn(Rng& rng, FinSet dom, FinSet cod) {
  std::vector<int> table(dom.size);
  for (int i = 0; i < dom.size; ++i) table[i] = rng.below(cod.size);
  return make_fn(dom, cod, table);
}

namespace {

LabeledDiagram random_center(Rng& rng, int max_vertices, int max_size, const std::string& prefix) {
  LabeledDiagram d;
  int nv = rng.below(max_vertices + 1);
  for (int i = 0; i < nv; ++i) {
    std::string name = prefix + "v" + std::to_string(i);
    d.vertices.push_back({name, FinSet{rng.below(max_size + 1), name}});
  }
  if (nv == 0) return d;
  int ne = rng.below(2 * nv + 1);
  for (int k = 0; k < ne; ++k) {
    for (int attempt = 0; attempt < 10; ++attempt) {
      int src = rng.below(nv), tgt = rng.below(nv);
      if (d.vertices[tgt].obj.size == 0 && d.vertices[src].obj.size > 0) continue;
      d.edges.push_back({prefix + "e" + std::to_string(k), src, tgt,
                         random_fn(rng, d.vertices[src].obj, d.vertices[tgt].obj)});
      break;
    }
  }
  return d;
}

std::vector<int> random_foot(Rng& rng, int nv) {
  std::vector<int> out;
  if (nv == 0) return out;
  int len = rng.below(4);
  for (int i = 0; i < len; ++i) out.push_back(rng.below(nv));
  return out;
}

}  // namespace

DiagramCospan random_dcospan(Rng& rng, int max_vertices, int max_size, FeetStyle style) {
  DiagramCospan out;
  out.center = random_center(rng, max_vertices, max_size, "");
  int nv = static_cast<int>(out.center.vertices.size());
  switch (style) {
    case FeetStyle::Closed:
      break;
    case FeetStyle::AllVertices:
      for (int v = 0; v < nv; ++v) {
        out.left.push_back(v);
        out.right.push_back(v);
      }
      break;
    case FeetStyle::Random:
      out.left = random_foot(rng, nv);
      out.right = random_foot(rng, nv);
      break;
  }
  return out;
}

std::pair<DiagramCospan, DiagramCospan> random_composable(Rng& rng, int max_vertices,
                                                          int max_size) {
  DiagramCospan a = random_dcospan(rng, max_vertices, max_size);
  DiagramCospan b;
  int k = static_cast<int>(a.right.size());
  for (int i = 0; i < k; ++i) {
    std::string name = "w" + std::to_string(i);
    b.center.vertices.push_back({name, FinSet{a.center.vertices[a.right[i]].obj.size, name}});
    b.left.push_back(i);
  }
  int extra = rng.below(std::max(1, max_vertices - k + 1));
  for (int i = 0; i < extra; ++i) {
    std::string name = "u" + std::to_string(i);
    b.center.vertices.push_back({name, FinSet{rng.below(max_size + 1), name}});
  }
  int nv = static_cast<int>(b.center.vertices.size());
  if (nv > 0) {
    int ne = rng.below(2 * nv + 1);
    for (int e = 0; e < ne; ++e) {
      for (int attempt = 0; attempt < 10; ++attempt) {
        int src = rng.below(nv), tgt = rng.below(nv);
        if (b.center.vertices[tgt].obj.size == 0 && b.center.vertices[src].obj.size > 0) continue;
        b.center.edges.push_back({"f" + std::to_string(e), src, tgt,
                                  random_fn(rng, b.center.vertices[src].obj,
                                            b.center.vertices[tgt].obj)});
        break;
      }
    }
    b.right = random_foot(rng, nv);
  }
  return {a, b};
}

namespace {

int diagram_size(const LabeledDiagram& d) {
  int total = 0;
  for (const auto& v : d.vertices) total += v.obj.size;
  return total;
}

// Child = parent with vertex v merged into vertex u (equal objects).
void merge_child(const LabeledDiagram& p, int u, int v, LabeledDiagram& child,
                 DiagramMorphism& m) {
  int nv = static_cast<int>(p.vertices.size());
  m.vmap.assign(nv, -1);
  for (int i = 0; i < nv; ++i) {
    if (i == v) continue;
    m.vmap[i] = static_cast<int>(child.vertices.size());
    child.vertices.push_back(p.vertices[i]);
  }
  m.vmap[v] = m.vmap[u];
  m.emap.resize(p.edges.size());
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    m.emap[e] = static_cast<int>(child.edges.size());
    child.edges.push_back(
        {p.edges[e].name, m.vmap[p.edges[e].src], m.vmap[p.edges[e].tgt], p.edges[e].map});
  }
}

}  // namespace

DiagramOfDiagrams random_nested(Rng& rng, int size_budget) {
  DiagramOfDiagrams d;
  LabeledDiagram base = random_center(rng, 2, 2, "n0_");
  if (base.vertices.empty()) {
    base.vertices.push_back({"n0_v0", FinSet{1, "n0_v0"}});
  }
  int used = diagram_size(base);
  d.nodes.push_back(base);

  int extra = rng.below(3);
  for (int k = 1; k <= extra; ++k) {
    std::string prefix = "n" + std::to_string(k) + "_";
    int mode = rng.below(4);
    if (mode == 3) {
      // Fresh disjoint node, no arrow.
      LabeledDiagram fresh = random_center(rng, 2, 2, prefix);
      if (used + diagram_size(fresh) > size_budget) break;
      used += diagram_size(fresh);
      d.nodes.push_back(fresh);
      continue;
    }
    int parent = rng.below(static_cast<int>(d.nodes.size()));
    const LabeledDiagram& p = d.nodes[parent];
    LabeledDiagram child;
    DiagramMorphism m;
    if (mode == 1) {
      // Merge two vertices with equal objects when possible.
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
          if (p.vertices[i].obj.size == p.vertices[j].obj.size)
            pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      if (!pairs.empty()) {
        auto [u, v] = pairs[rng.below(static_cast<int>(pairs.size()))];
        merge_child(p, u, v, child, m);
      } else {
        mode = 0;
      }
    }
    if (mode == 0 || mode == 2) {
      // Copy, optionally extended by a vertex and an edge into it.
      child = p;
      int nv = static_cast<int>(p.vertices.size());
      m.vmap.resize(nv);
      for (int i = 0; i < nv; ++i) m.vmap[i] = i;
      m.emap.resize(p.edges.size());
      for (std::size_t e = 0; e < p.edges.size(); ++e) m.emap[e] = static_cast<int>(e);
      if (mode == 0) {
        std::string name = prefix + "v";
        child.vertices.push_back({name, FinSet{rng.range(1, 2), name}});
        int w = static_cast<int>(child.vertices.size()) - 1;
        if (nv > 0 && rng.chance(1, 2)) {
          int src = rng.below(nv);
          child.edges.push_back({prefix + "e", src, w,
                                 random_fn(rng, child.vertices[src].obj, child.vertices[w].obj)});
        }
      }
    }
    if (used + diagram_size(child) > size_budget) break;
    used += diagram_size(child);
    int tgt = static_cast<int>(d.nodes.size());
    d.nodes.push_back(child);
    d.arrows.push_back({"m" + std::to_string(k), parent, tgt, m});
  }
  return d;
}

MonoidalDiagram random_monoidal(Rng& rng, int max_vertices, int total_size_budget) {
  MonoidalDiagram d;
  int nv = rng.range(1, max_vertices);
  int remaining = total_size_budget;
  for (int i = 0; i < nv; ++i) {
    int size = rng.below(std::min(3, remaining) + 1);
    remaining -= size;
    std::string name = "v" + std::to_string(i);
    d.vertices.push_back({name, FinSet{size, name}});
  }
  int na = rng.below(3);
  for (int k = 0; k < na; ++k) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      MonArc arc;
      arc.name = "a" + std::to_string(k);
      int ls = rng.below(3), lt = rng.below(3);
      for (int i = 0; i < ls; ++i) arc.src.push_back(rng.below(nv));
      for (int i = 0; i < lt; ++i) arc.tgt.push_back(rng.below(nv));
      int sdom = 0, scod = 0;
      for (int v : arc.src) sdom += d.vertices[v].obj.size;
      for (int v : arc.tgt) scod += d.vertices[v].obj.size;
      if (scod == 0 && sdom > 0) continue;
      arc.map = random_fn(rng, FinSet{sdom, ""}, FinSet{scod, ""});
      d.arcs.push_back(arc);
      break;
    }
  }
  return d;
}

Nfa random_nfa(Rng& rng, int max_states, int max_edges) {
  Nfa g;
  g.alphabet = {"a", "b"};
  int n = rng.range(1, max_states);
  for (int i = 0; i < n; ++i) g.states.push_back("q" + std::to_string(i));
  int m = rng.below(max_edges + 1);
  for (int e = 0; e < m; ++e) {
    int label = rng.chance(1, 5) ? -1 : rng.below(2);
    g.edges.push_back({rng.below(n), label, rng.below(n)});
  }
  for (int s = 0; s < n; ++s) {
    if (rng.chance(1, 3)) g.initial.push_back(s);
    if (rng.chance(1, 3)) g.final_states.push_back(s);
  }
  if (g.initial.empty()) g.initial.push_back(rng.below(n));
  if (g.final_states.empty()) g.final_states.push_back(rng.below(n));
  return g;
}

RegexPtr random_regex(Rng& rng, const std::vector<std::string>& alphabet, int depth) {
  if (depth <= 0 || rng.chance(3, 10)) {
    int pick = rng.below(6);
    if (pick == 0) return rx_empty();
    if (pick <= 2) return rx_epsilon();
    return rx_letter(alphabet[rng.below(static_cast<int>(alphabet.size()))]);
  }
  switch (rng.below(3)) {
    case 0:
      return rx_union(random_regex(rng, alphabet, depth - 1),
                      random_regex(rng, alphabet, depth - 1));
    case 1:
      return rx_concat(random_regex(rng, alphabet, depth - 1),
                       random_regex(rng, alphabet, depth - 1));
    default:
      return rx_star(random_regex(rng, alphabet, depth - 1));
  }
}

LangCat random_langcat(Rng& rng, const std::vector<std::string>& alphabet, int max_objects) {
  int n = rng.range(1, max_objects);
  RegexMatrix m(n, std::vector<RegexPtr>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = rng.chance(1, 2) ? rx_empty() : simplify(random_regex(rng, alphabet, 2));
  LangCat out;
  for (int i = 0; i < n; ++i) out.objects.push_back("x" + std::to_string(i));
  out.hom = matrix_star(std::move(m));
  return out;
}

LangCospan random_langcospan(Rng& rng, const std::vector<std::string>& alphabet,
                             int left_size, int right_size) {
  LangCospan out;
  out.center = random_langcat(rng, alphabet, 3);
  int n = static_cast<int>(out.center.objects.size());
  for (int i = 0; i < left_size; ++i) out.left.push_back(rng.below(n));
  for (int i = 0; i < right_size; ++i) out.right.push_back(rng.below(n));
  return out;
}

}  // namespace cospanlim
