#include "cospanlim/check.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "json.hpp"

#include "cospanlim/compile.hpp"
#include "cospanlim/dcospan.hpp"
#include "cospanlim/errors.hpp"
#include "cospanlim/expr.hpp"
#include "cospanlim/gen.hpp"
#include "cospanlim/io.hpp"
#include "cospanlim/langcat.hpp"
#include "cospanlim/monoidal.hpp"
#include "cospanlim/nested.hpp"

namespace cospanlim {

namespace {

using json = nlohmann::ordered_json;

void record(CheckResult& r, const CheckConfig& cfg, bool ok, const char* prop, int case_idx,
            json extra = json::object()) {
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (!r.first_counterexample.empty()) return;
  json cex;
  cex["suite"] = r.suite;
  cex["property"] = prop;
  cex["case"] = case_idx;
  cex["seed"] = cfg.seed;
  cex["sizes"] = cfg.sizes;
  cex["count"] = cfg.count;
  cex["maxLen"] = cfg.max_len;
  for (auto& [k, v] : extra.items()) cex[k] = v;
  r.first_counterexample = cex.dump();
}

// Runs body() and treats exceptions as failures with the message attached.
void guarded(CheckResult& r, const CheckConfig& cfg, const char* prop, int case_idx,
             const std::function<bool(json&)>& body) {
  json extra = json::object();
  bool ok = false;
  try {
    ok = body(extra);
  } catch (const std::exception& e) {
    extra["error"] = e.what();
  }
  record(r, cfg, ok, prop, case_idx, extra);
}

// ---------------------------------------------------------------- separable

struct CospanOps {
  static constexpr const char* mode = "cospan";
  using Arrow = Cospan;
  static Cospan k(StructKind kk, const ObjList& a, const ObjList& b = {}) {
    return cospan_constant(kk, a, b);
  }
  static Cospan id(const FinSet& x) { return cospan_identity(x); }
  static Cospan seq(const Cospan& a, const Cospan& b) { return compose(a, b); }
  static Cospan ten(const Cospan& a, const Cospan& b) { return tensor(a, b); }
};

struct SpanOps {
  static constexpr const char* mode = "span";
  using Arrow = Span;
  static Span k(StructKind kk, const ObjList& a, const ObjList& b = {}) {
    return span_constant(kk, a, b);
  }
  static Span id(const FinSet& x) { return span_identity(x); }
  static Span seq(const Span& a, const Span& b) { return compose(a, b); }
  static Span ten(const Span& a, const Span& b) { return tensor(a, b); }
};

template <class Ops>
void separable_mode(CheckResult& r, const CheckConfig& cfg) {
  for (int n = 0; n <= cfg.sizes; ++n) {
    FinSet x{n, "A"};
    ObjList a{x};
    auto idx = Ops::id(x);
    auto mult = Ops::k(StructKind::Mult, a);
    auto unit = Ops::k(StructKind::Unit, a);
    auto comult = Ops::k(StructKind::Comult, a);
    auto counit = Ops::k(StructKind::Counit, a);
    auto eta = Ops::k(StructKind::Eta, a);
    auto eps = Ops::k(StructKind::Eps, a);
    auto sym = Ops::k(StructKind::Sym, a, a);
    auto chk = [&](const char* prop, const typename Ops::Arrow& lhs,
                   const typename Ops::Arrow& rhs) {
      record(r, cfg, iso_eq(lhs, rhs), prop, n, json{{"mode", Ops::mode}, {"size", n}});
    };
    chk("mult-assoc", Ops::seq(Ops::ten(mult, idx), mult), Ops::seq(Ops::ten(idx, mult), mult));
    chk("mult-unit-left", Ops::seq(Ops::ten(unit, idx), mult), idx);
    chk("mult-unit-right", Ops::seq(Ops::ten(idx, unit), mult), idx);
    chk("mult-comm", Ops::seq(sym, mult), mult);
    chk("comult-assoc", Ops::seq(comult, Ops::ten(comult, idx)),
        Ops::seq(comult, Ops::ten(idx, comult)));
    chk("comult-unit-left", Ops::seq(comult, Ops::ten(counit, idx)), idx);
    chk("comult-unit-right", Ops::seq(comult, Ops::ten(idx, counit)), idx);
    chk("comult-comm", Ops::seq(comult, sym), comult);
    chk("separability", Ops::seq(comult, mult), idx);
    auto nabla_delta = Ops::seq(mult, comult);
    chk("frobenius-left", Ops::seq(Ops::ten(comult, idx), Ops::ten(idx, mult)), nabla_delta);
    chk("frobenius-right", Ops::seq(Ops::ten(idx, comult), Ops::ten(mult, idx)), nabla_delta);
    chk("snake-left", Ops::seq(Ops::ten(eta, idx), Ops::ten(idx, eps)), idx);
    chk("snake-right", Ops::seq(Ops::ten(idx, eta), Ops::ten(eps, idx)), idx);
  }
  for (int n = 0; n <= cfg.sizes; ++n)
    for (int m = 0; m <= cfg.sizes; ++m) {
      FinSet x{n, "A"}, y{m, "B"};
      auto lhs = Ops::seq(Ops::k(StructKind::Sym, {x}, {y}), Ops::k(StructKind::Sym, {y}, {x}));
      auto rhs = Ops::ten(Ops::id(x), Ops::id(y));
      record(r, cfg, iso_eq(lhs, rhs), "sym-involution", n * (cfg.sizes + 1) + m,
             json{{"mode", Ops::mode}, {"sizeA", n}, {"sizeB", m}});
    }
}

void run_separable(CheckResult& r, const CheckConfig& cfg) {
  separable_mode<CospanOps>(r, cfg);
  separable_mode<SpanOps>(r, cfg);
}

// --------------------------------------------------------------- functorial

DiagramCospan edge_dcospan(const FinFn& f) {
  DiagramCospan c;
  c.center.vertices = {{"A", FinSet{f.dom.size, "A"}}, {"B", FinSet{f.cod.size, "B"}}};
  c.center.edges = {{"f", 0, 1, make_fn(c.center.vertices[0].obj, c.center.vertices[1].obj, f.table)}};
  c.left = {0};
  c.right = {1};
  return c;
}

void run_functorial(CheckResult& r, const CheckConfig& cfg) {
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    guarded(r, cfg, "compose", i, [&](json& extra) {
      auto [a, b] = random_composable(rng, 4, cfg.sizes);
      bool ok = iso_eq(colimit(dcompose(a, b)), compose(colimit(a), colimit(b)));
      if (!ok) {
        extra["a"] = json::parse(diagram_to_json(a));
        extra["b"] = json::parse(diagram_to_json(b));
      }
      return ok;
    });
  }
  for (int i = 0; i < cfg.count / 2 + 1; ++i) {
    guarded(r, cfg, "tensor", i, [&](json& extra) {
      DiagramCospan a = random_dcospan(rng, 3, cfg.sizes);
      DiagramCospan b = random_dcospan(rng, 3, cfg.sizes);
      bool ok = iso_eq(colimit(dtensor(a, b)), tensor(colimit(a), colimit(b)));
      if (!ok) {
        extra["a"] = json::parse(diagram_to_json(a));
        extra["b"] = json::parse(diagram_to_json(b));
      }
      return ok;
    });
  }
  const StructKind kinds[] = {StructKind::Id,      StructKind::Mult, StructKind::Unit,
                              StructKind::Comult,  StructKind::Counit, StructKind::Eta,
                              StructKind::Eps};
  int case_idx = 0;
  for (StructKind k : kinds)
    for (int n = 0; n <= cfg.sizes; ++n)
      for (int m = -1; m <= cfg.sizes; ++m) {
        ObjList a;
        a.push_back(FinSet{n, "A"});
        if (m >= 0) a.push_back(FinSet{m, "B"});
        guarded(r, cfg, "constant-colim", case_idx, [&](json& extra) {
          extra["kind"] = to_text(k);
          extra["objects"] = list_text(a);
          return iso_eq(colimit(dconstant(k, a)), cospan_constant(k, a));
        });
        guarded(r, cfg, "constant-limit", case_idx, [&](json& extra) {
          extra["kind"] = to_text(k);
          extra["objects"] = list_text(a);
          return iso_eq(limit(dconstant(k, a)), span_constant(k, a));
        });
        ++case_idx;
      }
  for (int n = 0; n <= cfg.sizes; ++n)
    for (int m = 0; m <= cfg.sizes; ++m) {
      ObjList a{FinSet{n, "A"}}, b{FinSet{m, "B"}};
      guarded(r, cfg, "constant-sym", n * (cfg.sizes + 1) + m, [&](json& extra) {
        extra["sizeA"] = n;
        extra["sizeB"] = m;
        return iso_eq(colimit(dconstant(StructKind::Sym, a, b)),
                      cospan_constant(StructKind::Sym, a, b)) &&
               iso_eq(limit(dconstant(StructKind::Sym, a, b)),
                      span_constant(StructKind::Sym, a, b));
      });
    }
  for (int i = 0; i < cfg.count / 4 + 1; ++i) {
    guarded(r, cfg, "lift", i, [&](json& extra) {
      FinSet dom{rng.below(cfg.sizes + 1), "A"};
      FinSet cod{rng.range(1, cfg.sizes + 1), "B"};
      FinFn f = random_fn(rng, dom, cod);
      extra["f"] = to_text(f);
      return iso_eq(colimit(edge_dcospan(f)), cospan_of_fn(f));
    });
  }
}

// ----------------------------------------------------------------- compiler

ExprPtr reassociate(const ExprPtr& e, Rng& rng);

void flatten_chain(const ExprPtr& e, bool seq, std::vector<ExprPtr>& out, Rng& rng) {
  bool matches = seq ? std::holds_alternative<ExprSeq>(e->node)
                     : std::holds_alternative<ExprTen>(e->node);
  if (matches) {
    if (seq) {
      const auto& s = std::get<ExprSeq>(e->node);
      flatten_chain(s.a, seq, out, rng);
      flatten_chain(s.b, seq, out, rng);
    } else {
      const auto& t = std::get<ExprTen>(e->node);
      flatten_chain(t.a, seq, out, rng);
      flatten_chain(t.b, seq, out, rng);
    }
  } else {
    out.push_back(reassociate(e, rng));
  }
}

ExprPtr rebuild_chain(const std::vector<ExprPtr>& parts, int lo, int hi, bool seq, Rng& rng) {
  if (hi - lo == 1) return parts[lo];
  int cut = rng.range(lo + 1, hi - 1);
  ExprPtr a = rebuild_chain(parts, lo, cut, seq, rng);
  ExprPtr b = rebuild_chain(parts, cut, hi, seq, rng);
  return seq ? eseq(a, b) : eten(a, b);
}

// Randomly re-associates every Seq and Ten chain, preserving factor order.
ExprPtr reassociate(const ExprPtr& e, Rng& rng) {
  bool is_seq = std::holds_alternative<ExprSeq>(e->node);
  bool is_ten = std::holds_alternative<ExprTen>(e->node);
  if (!is_seq && !is_ten) return e;
  std::vector<ExprPtr> parts;
  flatten_chain(e, is_seq, parts, rng);
  return rebuild_chain(parts, 0, static_cast<int>(parts.size()), is_seq, rng);
}

void run_compiler(CheckResult& r, const CheckConfig& cfg) {
  Rng rng(cfg.seed);
  const FeetStyle styles[] = {FeetStyle::Random, FeetStyle::Closed, FeetStyle::AllVertices};
  for (int i = 0; i < cfg.count; ++i) {
    DiagramCospan c = random_dcospan(rng, 4, cfg.sizes, styles[i % 3]);
    guarded(r, cfg, "eval-compile-colim", i, [&](json& extra) {
      ExprPtr e = compile(c);
      bool ok = iso_eq(eval_cospan(e), colimit(c));
      if (!ok) {
        extra["diagram"] = json::parse(diagram_to_json(c));
        extra["expr"] = print_expr(e);
      }
      return ok;
    });
    guarded(r, cfg, "deval-compile", i, [&](json& extra) {
      bool ok = diso_eq(deval(compile(c)), c);
      if (!ok) extra["diagram"] = json::parse(diagram_to_json(c));
      return ok;
    });
  }
  for (int i = 0; i < cfg.count; ++i) {
    // Span mode stays small: flat boundaries multiply vertex sizes.
    DiagramCospan c = random_dcospan(rng, 3, 2, styles[i % 3]);
    guarded(r, cfg, "eval-compile-limit", i, [&](json& extra) {
      ExprPtr e = compile(c);
      bool ok = iso_eq(eval_span(e), limit(c));
      if (!ok) {
        extra["diagram"] = json::parse(diagram_to_json(c));
        extra["expr"] = print_expr(e);
      }
      return ok;
    });
  }
  for (int i = 0; i < cfg.count / 4 + 1; ++i) {
    guarded(r, cfg, "reassociation", i, [&](json& extra) {
      DiagramCospan c = random_dcospan(rng, 4, cfg.sizes);
      ExprPtr e = compile(c);
      ExprPtr e2 = reassociate(e, rng);
      bool ok = iso_eq(eval_cospan(e2), eval_cospan(e));
      if (!ok) extra["diagram"] = json::parse(diagram_to_json(c));
      return ok;
    });
  }
  for (int i = 0; i < cfg.count / 4 + 1; ++i) {
    guarded(r, cfg, "expand-disc", i, [&](json& extra) {
      DiagramCospan c = random_dcospan(rng, 3, 2, styles[i % 3]);
      ExprPtr e = compile(c);
      ExprPtr x = expand_disc(e);
      bool ok = iso_eq(eval_cospan(x), eval_cospan(e)) && iso_eq(eval_span(x), eval_span(e));
      if (!ok) extra["diagram"] = json::parse(diagram_to_json(c));
      return ok;
    });
  }
  for (int i = 0; i < cfg.count / 4 + 1; ++i) {
    guarded(r, cfg, "print-parse-roundtrip", i, [&](json& extra) {
      DiagramCospan c = random_dcospan(rng, 3, cfg.sizes);
      ExprPtr e = compile(c);
      std::string text = print_expr_file(e);
      ExprPtr e2 = parse_expr(text);
      bool ok = iso_eq(eval_cospan(e2), eval_cospan(e)) && print_expr_file(e2) == text;
      if (!ok) extra["text"] = text;
      return ok;
    });
  }
}

// ------------------------------------------------------------------- limits

DiagramCospan parallel_pair(const FinFn& f, const FinFn& g) {
  DiagramCospan c;
  c.center.vertices = {{"A", FinSet{f.dom.size, "A"}}, {"B", FinSet{f.cod.size, "B"}}};
  c.center.edges = {{"f", 0, 1, make_fn(c.center.vertices[0].obj, c.center.vertices[1].obj, f.table)},
                    {"g", 0, 1, make_fn(c.center.vertices[0].obj, c.center.vertices[1].obj, g.table)}};
  c.left = {0};
  c.right = {1};
  return c;
}

// Equalizer of f,g by pointwise scan; returns the span A <- E -> B with the
// inclusion and f restricted to it.
Span equalizer_span(const FinFn& f, const FinFn& g) {
  std::vector<int> incl;
  for (int x = 0; x < f.dom.size; ++x)
    if (f.table[x] == g.table[x]) incl.push_back(x);
  FinSet e{static_cast<int>(incl.size()), ""};
  std::vector<int> via_f(incl.size());
  for (std::size_t i = 0; i < incl.size(); ++i) via_f[i] = f.table[incl[i]];
  Span s;
  s.left = f.dom;
  s.right = f.cod;
  s.apex = e;
  s.legL = make_fn(e, f.dom, incl);
  s.legR = make_fn(e, f.cod, via_f);
  return canonical(s);
}

// Coequalizer classes by breadth-first components, independent of the
// union-find in the library.
Cospan coequalizer_cospan(const FinFn& f, const FinFn& g) {
  int nb = f.cod.size;
  std::vector<std::vector<int>> adj(nb);
  for (int x = 0; x < f.dom.size; ++x) {
    adj[f.table[x]].push_back(g.table[x]);
    adj[g.table[x]].push_back(f.table[x]);
  }
  std::vector<int> cls(nb, -1);
  int classes = 0;
  for (int start = 0; start < nb; ++start) {
    if (cls[start] >= 0) continue;
    std::vector<int> queue = {start};
    cls[start] = classes;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (int next : adj[queue[qi]])
        if (cls[next] < 0) {
          cls[next] = classes;
          queue.push_back(next);
        }
    ++classes;
  }
  FinSet q{classes, ""};
  std::vector<int> through_f(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x) through_f[x] = cls[f.table[x]];
  Cospan c;
  c.left = f.dom;
  c.right = f.cod;
  c.apex = q;
  c.legL = make_fn(f.dom, q, through_f);
  c.legR = make_fn(f.cod, q, cls);
  return canonical(c);
}

void run_limits(CheckResult& r, const CheckConfig& cfg) {
  int cap = std::min(cfg.sizes, 4);
  int case_idx = 0;
  for (int na = 0; na <= cap; ++na)
    for (int nb = 0; nb <= cap; ++nb) {
      if (nb == 0 && na > 0) continue;
      FinSet a{na, "A"}, b{nb, "B"};
      long long total = 1;
      for (int i = 0; i < na; ++i) total *= nb;
      for (long long fi = 0; fi < total; ++fi)
        for (long long gi = 0; gi < total; ++gi) {
          std::vector<int> ft(na), gt(na);
          long long fv = fi, gv = gi;
          for (int i = 0; i < na; ++i) {
            ft[i] = static_cast<int>(fv % nb);
            fv /= nb;
            gt[i] = static_cast<int>(gv % nb);
            gv /= nb;
          }
          FinFn f = make_fn(a, b, ft), g = make_fn(a, b, gt);
          ExprPtr e = compile(parallel_pair(f, g));
          Span got = eval_span(e);
          Span want = equalizer_span(f, g);
          bool ok = same_fn(got.legL, want.legL) && same_fn(got.legR, want.legR) &&
                    got.apex.size == want.apex.size;
          if (!ok || case_idx % 16 == 0) {
            // The cospan direction, sampled to keep the suite quick.
            Cospan cgot = eval_cospan(e);
            ok = ok && iso_eq(cgot, coequalizer_cospan(f, g));
          }
          record(r, cfg, ok, "parallel-pair-duality", case_idx,
                 ok ? json::object() : json{{"f", to_text(f)}, {"g", to_text(g)}});
          ++case_idx;
        }
    }
  Rng rng(cfg.seed);
  for (int i = 0; i < std::min(cfg.count, 20); ++i) {
    guarded(r, cfg, "universal-cocone", i, [&](json& extra) {
      DiagramCospan c = random_dcospan(rng, 3, 2);
      Cocone co = colimit(c.center);
      bool ok = is_cocone(c.center, co) && universal_cocone_oracle(c.center, co, 3);
      if (!ok) extra["diagram"] = json::parse(diagram_to_json(c));
      return ok;
    });
    guarded(r, cfg, "universal-cone", i, [&](json& extra) {
      DiagramCospan c = random_dcospan(rng, 3, 2);
      Cone co = limit(c.center);
      bool ok = is_cone(c.center, co) && universal_cone_oracle(c.center, co, 3);
      if (!ok) extra["diagram"] = json::parse(diagram_to_json(c));
      return ok;
    });
  }
}

// ------------------------------------------------------------------- nested

void run_nested(CheckResult& r, const CheckConfig& cfg) {
  Rng rng(cfg.seed);
  for (int i = 0; i < 10; ++i) {
    guarded(r, cfg, "triple-sum", i, [&](json& extra) {
      int sa = rng.below(cfg.sizes + 1), sb = rng.below(cfg.sizes + 1),
          sc = rng.below(cfg.sizes + 1);
      DiagramOfDiagrams d;
      LabeledDiagram one, two;
      one.vertices = {{"A", FinSet{sa, "A"}}};
      two.vertices = {{"B", FinSet{sb, "B"}}, {"C", FinSet{sc, "C"}}};
      d.nodes = {one, two};
      NestedCheckResult res = nested_colim_check(d);
      extra["A"] = sa;
      extra["B"] = sb;
      extra["C"] = sc;
      if (!res.ok) extra["detail"] = res.detail;
      return res.ok && res.flat_size == sa + sb + sc && res.stage_size == sa + sb + sc;
    });
  }
  for (int i = 0; i < cfg.count; ++i) {
    guarded(r, cfg, "nested-colim", i, [&](json& extra) {
      DiagramOfDiagrams d = random_nested(rng, 8);
      NestedCheckResult res = nested_colim_check(d);
      if (!res.ok) {
        extra["detail"] = res.detail;
        extra["nodes"] = static_cast<int>(d.nodes.size());
        extra["arrows"] = static_cast<int>(d.arrows.size());
      }
      return res.ok;
    });
  }
}

// ----------------------------------------------------------------- feedback

void run_feedback(CheckResult& r, const CheckConfig& cfg) {
  Rng rng(cfg.seed);
  int cap = std::min(cfg.sizes, 3);
  for (int i = 0; i < cfg.count; ++i) {
    int sa = rng.below(cap + 1), sb = rng.below(cap + 1), sc = rng.below(cap + 1);
    if (sb + sc == 0 && sa + sc > 0) sb = 1;
    FinSet a{sa, "A"}, b{sb, "B"}, c{sc, "C"};
    FinFn f = random_fn(rng, FinSet{sa + sc, ""}, FinSet{sb + sc, ""});
    guarded(r, cfg, "feedback-orbits", i, [&](json& extra) {
      extra["A"] = sa;
      extra["B"] = sb;
      extra["C"] = sc;
      extra["f"] = to_text(f);
      Cospan fb = feedback_cospan(a, b, c, f);
      // Orbits of A+B+C under x ~ f(x), with A at 0, B at sa, C at sa+sb.
      int total = sa + sb + sc;
      std::vector<int> parent(total);
      for (int v = 0; v < total; ++v) parent[v] = v;
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      auto into_global = [&](int y) { return y < sb ? sa + y : sa + sb + (y - sb); };
      for (int x = 0; x < sa + sc; ++x) {
        int gx = x < sa ? x : sa + sb + (x - sa);
        int gy = into_global(f.table[x]);
        parent[find(gx)] = find(gy);
      }
      int orbits = 0;
      for (int v = 0; v < total; ++v)
        if (find(v) == v) ++orbits;
      if (fb.apex.size != orbits) return false;
      // Same quotient as a cospan, for the full comparison.
      std::vector<int> cls(total, -1);
      int next_cls = 0;
      for (int v = 0; v < total; ++v)
        if (cls[find(v)] < 0) cls[find(v)] = next_cls++;
      std::vector<int> la(sa), lb(sb);
      for (int v = 0; v < sa; ++v) la[v] = cls[find(v)];
      for (int v = 0; v < sb; ++v) lb[v] = cls[find(sa + v)];
      FinSet q{orbits, ""};
      if (!same_fn(fb.legL, make_fn(a, q, la)) || !same_fn(fb.legR, make_fn(b, q, lb)))
        return false;
      // The quotient is what the algebra computes for the feedback shape.
      Cospan ev = compose(
          compose(tensor(cospan_identity(a), cospan_constant(StructKind::Eta, {c})),
                  tensor(cospan_of_fn(f), cospan_identity(c))),
          tensor(cospan_identity(b), cospan_constant(StructKind::Eps, {c})));
      return iso_eq(fb, ev);
    });
    guarded(r, cfg, "feedback-trace", i, [&](json& extra) {
      extra["f"] = to_text(f);
      Cospan fb = feedback_cospan(a, b, c, f);
      PullbackResult pb = pullback(fb.legL, fb.legR);
      std::vector<std::pair<int, int>> got;
      for (int k = 0; k < pb.p1.dom.size; ++k) got.push_back({pb.p1.table[k], pb.p2.table[k]});
      PartialFn t = trace_partial_fn(a, b, c, f);
      std::vector<std::pair<int, int>> want;
      for (int x = 0; x < sa; ++x)
        if (t.defined(x)) want.push_back({x, t.table[x]});
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      return got == want;
    });
  }
  for (int i = 0; i < cfg.count / 2 + 1; ++i) {
    guarded(r, cfg, "mon-universal", i, [&](json& extra) {
      MonoidalDiagram d = random_monoidal(rng, 3, 6);
      Cocone co = mon_colimit(d);
      bool ok = is_mon_cocone(d, co) && mon_universal_cocone_oracle(d, co, 3);
      if (!ok) extra["vertices"] = static_cast<int>(d.vertices.size());
      return ok;
    });
  }
  for (int i = 0; i < cfg.count / 2 + 1; ++i) {
    guarded(r, cfg, "mon-degenerate", i, [&](json& extra) {
      DiagramCospan base = random_dcospan(rng, 3, cfg.sizes);
      MonoidalDiagram d;
      d.vertices = base.center.vertices;
      for (const auto& e : base.center.edges)
        d.arcs.push_back({e.name, {e.src}, {e.tgt}, e.map});
      Cocone mon = mon_colimit(d);
      Cocone classical = colimit(base.center);
      if (mon.apex.size != classical.apex.size) return false;
      for (std::size_t v = 0; v < d.vertices.size(); ++v)
        if (!same_fn(mon.legs[v], classical.legs[v])) return false;
      return true;
    });
  }
}

// ------------------------------------------------------------------- kleene

const std::vector<std::string> kAB = {"a", "b"};

void run_kleene(CheckResult& r, const CheckConfig& cfg) {
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    guarded(r, cfg, "kleene-soundness", i, [&](json& extra) {
      Nfa g = random_nfa(rng, 5, 8);
      RegexMatrix m = kleene_pipeline(g);
      WordMemo memo;
      for (std::size_t ii = 0; ii < g.initial.size(); ++ii)
        for (std::size_t ff = 0; ff < g.final_states.size(); ++ff) {
          if (!kleene_ops_only(m[ii][ff], g.alphabet) ||
              !bounded_equiv(m[ii][ff], restrict_nfa(g, g.initial[ii], g.final_states[ff]),
                             cfg.max_len, &memo)) {
            extra["automaton"] = json::parse(automaton_to_json(g));
            extra["regex"] = to_text(m[ii][ff]);
            extra["initial"] = g.states[g.initial[ii]];
            extra["final"] = g.states[g.final_states[ff]];
            return false;
          }
        }
      return true;
    });
  }
  for (int i = 0; i < cfg.count / 2 + 1; ++i) {
    guarded(r, cfg, "identify-order", i, [&](json& extra) {
      LangCat x = random_langcat(rng, kAB, 4);
      int n = static_cast<int>(x.objects.size());
      if (n < 2) return true;
      int x1 = rng.below(n), y1 = rng.below(n), x2 = rng.below(n), y2 = rng.below(n);
      if (x1 == y1) y1 = (y1 + 1) % n;
      if (x2 == y2) y2 = (y2 + 1) % n;
      extra["pairs"] = json::array({x1, y1, x2, y2});
      std::vector<int> m1, m2;
      LangCat a1 = identify_objects(x, x1, y1, nullptr, &m1);
      LangCat a2 = identify_objects(a1, m1[x2], m1[y2], nullptr, &m2);
      std::vector<int> s1, s2;
      LangCat b1 = identify_objects(x, x2, y2, nullptr, &s1);
      LangCat b2 = identify_objects(b1, s1[x1], s1[y1], nullptr, &s2);
      if (a2.objects.size() != b2.objects.size()) return false;
      int len = std::min(cfg.max_len, 6);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (!bounded_equal(a2.hom[m2[m1[p]]][m2[m1[q]]], b2.hom[s2[s1[p]]][s2[s1[q]]], kAB,
                             len))
            return false;
      return true;
    });
  }
  for (int i = 0; i < cfg.count / 2 + 1; ++i) {
    guarded(r, cfg, "compose-assoc", i, [&](json& extra) {
      int m1 = rng.below(3), m2 = rng.below(3);
      LangCospan a = random_langcospan(rng, kAB, rng.below(3), m1);
      LangCospan b = random_langcospan(rng, kAB, m1, m2);
      LangCospan c = random_langcospan(rng, kAB, m2, rng.below(3));
      extra["feet"] = json::array({m1, m2});
      LangCospan lhs = lang_compose(lang_compose(a, b), c);
      LangCospan rhs = lang_compose(a, lang_compose(b, c));
      int len = std::min(cfg.max_len, 6);
      auto foot_obj = [](const LangCospan& s, int p) {
        int nl = static_cast<int>(s.left.size());
        return p < nl ? s.left[p] : s.right[p - nl];
      };
      int feet = static_cast<int>(lhs.left.size() + lhs.right.size());
      for (int p = 0; p < feet; ++p)
        for (int q = 0; q < feet; ++q)
          if (!bounded_equal(lhs.center.hom[foot_obj(lhs, p)][foot_obj(lhs, q)],
                             rhs.center.hom[foot_obj(rhs, p)][foot_obj(rhs, q)], kAB, len))
            return false;
      return true;
    });
  }
  for (int i = 0; i < cfg.count; ++i) {
    guarded(r, cfg, "simplifier-soundness", i, [&](json& extra) {
      RegexPtr x = random_regex(rng, kAB, 5);
      extra["regex"] = to_text(x);
      return bounded_equal(x, simplify(x), kAB, cfg.max_len);
    });
  }
  for (int i = 0; i < cfg.count / 4 + 1; ++i) {
    guarded(r, cfg, "identify-star-closed", i, [&](json& extra) {
      LangCat x = random_langcat(rng, kAB, 3);
      int n = static_cast<int>(x.objects.size());
      if (n < 2) return true;
      int p = rng.below(n), q = rng.below(n);
      if (p == q) q = (q + 1) % n;
      extra["pair"] = json::array({p, q});
      return lang_star_closed_bounded(identify_objects(x, p, q), kAB, std::min(cfg.max_len, 5));
    });
  }
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"separable", "functorial", "compiler", "limits",
                                                 "nested",    "feedback",   "kleene"};
  return names;
}

CheckResult run_check(const std::string& suite, const CheckConfig& cfg) {
  CheckResult r;
  r.suite = suite;
  if (suite == "separable")
    run_separable(r, cfg);
  else if (suite == "functorial")
    run_functorial(r, cfg);
  else if (suite == "compiler")
    run_compiler(r, cfg);
  else if (suite == "limits")
    run_limits(r, cfg);
  else if (suite == "nested")
    run_nested(r, cfg);
  else if (suite == "feedback")
    run_feedback(r, cfg);
  else if (suite == "kleene")
    run_kleene(r, cfg);
  else
    throw type_error("unknown check suite '" + suite + "'");
  return r;
}

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto& name : check_suite_names()) out.push_back(run_check(name, cfg));
  return out;
}

std::string check_report(const CheckResult& r) {
  std::string out = "suite=" + r.suite + " cases=" + std::to_string(r.cases) +
                    " failures=" + std::to_string(r.failures) +
                    " status=" + (r.failures == 0 ? "pass" : "fail") + "\n";
  if (!r.first_counterexample.empty()) out += "counterexample: " + r.first_counterexample + "\n";
  return out;
}

}  // namespace cospanlim
