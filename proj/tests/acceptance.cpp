// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cospanlim/check.hpp"
#include "cospanlim/compile.hpp"
#include "cospanlim/dcospan.hpp"
#include "cospanlim/gen.hpp"
#include "cospanlim/io.hpp"
#include "cospanlim/langcat.hpp"
#include "cospanlim/monoidal.hpp"
#include "cospanlim/nested.hpp"

using namespace cospanlim;

namespace {

FinSet S(int n) { return FinSet{n, ""}; }

std::string data_path(const std::string& name) {
  return std::string(COSPANLIM_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Criterion 1: every separable-algebra axiom, exhaustively for sizes <= 4 in
// both modes (snake equations included); the axiom suite reports exact
// cospan/span isomorphism per instance.
bool separable_axioms() {
  CheckConfig cfg;
  cfg.seed = 1;
  cfg.sizes = 4;
  CheckResult r = run_check("separable", cfg);
  return r.failures == 0 && r.cases > 0;
}

// Criterion 2: colim is functorial on >= 200 random composable pairs, on
// tensors, and on every structural constant.
bool colimit_functoriality() {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    auto [a, b] = random_composable(rng, 4, 4);
    if (!iso_eq(colimit(dcompose(a, b)), compose(colimit(a), colimit(b)))) return false;
  }
  for (int i = 0; i < 200; ++i) {
    DiagramCospan a = random_dcospan(rng, 4, 4);
    DiagramCospan b = random_dcospan(rng, 4, 4);
    if (!iso_eq(colimit(dtensor(a, b)), tensor(colimit(a), colimit(b)))) return false;
  }
  std::vector<ObjList> lists = {{}};
  for (int n = 0; n <= 4; ++n) lists.push_back({S(n)});
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) lists.push_back({S(n), S(m)});
  for (StructKind k : {StructKind::Id, StructKind::Mult, StructKind::Unit, StructKind::Comult,
                       StructKind::Counit, StructKind::Eta, StructKind::Eps})
    for (const ObjList& objs : lists)
      if (!iso_eq(colimit(dconstant(k, objs)), cospan_constant(k, objs))) return false;
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      if (!iso_eq(colimit(dconstant(StructKind::Sym, {S(n)}, {S(m)})),
                  cospan_constant(StructKind::Sym, {S(n)}, {S(m)})))
        return false;
  return true;
}

// Criterion 3: compiled expressions evaluate to the direct colimit on >= 200
// random diagrams (closed and all-boundary included), and the two worked
// expressions, entered right-to-left, match their diagrams.
bool compiler_soundness() {
  Rng rng(103);
  const FeetStyle styles[] = {FeetStyle::Random, FeetStyle::Closed, FeetStyle::AllVertices};
  for (int i = 0; i < 210; ++i) {
    DiagramCospan c = random_dcospan(rng, 4, 4, styles[i % 3]);
    if (!iso_eq(eval_cospan(compile(c)), colimit(c))) return false;
  }

  DiagramFile pp = parse_diagram_json(slurp(data_path("parallel_pair.json")));
  ExprPtr hand = parse_expr(slurp(data_path("parallel_pair.expr")));
  if (!iso_eq(eval_cospan(hand), colimit(pp.dia))) return false;
  if (!iso_eq(eval_cospan(compile(pp.dia)), colimit(pp.dia))) return false;

  DiagramFile ce = parse_diagram_json(slurp(data_path("compeqn.json")));
  const DiagramCospan& d = ce.dia;
  FinSet a = d.center.vertices[0].obj, b = d.center.vertices[1].obj,
         c = d.center.vertices[2].obj;
  FinFn f = d.center.edges[0].map, g = d.center.edges[1].map, h = d.center.edges[2].map,
        k = d.center.edges[3].map;
  ExprPtr e = eseq(
      eseq(eseq(eseq(eseq(eseq(eseq(econst(StructKind::Comult, {a}),
                                    eten(eten(econst(StructKind::Id, {a}),
                                              econst(StructKind::Eta, {b})),
                                         econst(StructKind::Id, {a}))),
                          eten(eten(eten(egen("f", f), econst(StructKind::Id, {b})),
                                    egen("g", g)),
                               econst(StructKind::Id, {a}))),
                     eten(econst(StructKind::Mult, {b}), econst(StructKind::Eps, {a}))),
                econst(StructKind::Comult, {b})),
           eten(econst(StructKind::Comult, {b}), econst(StructKind::Id, {b}))),
      eten(eten(egen("h", h), econst(StructKind::Id, {b})), egen("k", k))),
      eten(econst(StructKind::Eps, {b}), econst(StructKind::Id, {c})));
  Cospan direct = colimit(d);
  return iso_eq(eval_cospan(e), direct) && iso_eq(eval_cospan(compile(d)), direct);
}

// Criterion 4: for every f, g: A -> B with sizes <= 4, the coequalizer
// expression evaluated in span mode is the equalizer inclusion.
bool limits_duality() {
  for (int na = 0; na <= 4; ++na)
    for (int nb = (na == 0 ? 0 : 1); nb <= 4; ++nb) {
      FinSet A = S(na), B = S(nb);
      std::vector<int> ft(na, 0), gt(na, 0);
      auto advance = [&](std::vector<int>& t) {
        for (int i = 0; i < na; ++i) {
          if (++t[i] < nb) return true;
          t[i] = 0;
        }
        return false;
      };
      do {
        // advance() leaves gt back at all zeros, restarting the inner scan.
        do {
          FinFn f = make_fn(A, B, ft), g = make_fn(A, B, gt);
          ExprPtr e = eseq(eseq(econst(StructKind::Comult, {A}),
                                eten(egen("f", f), egen("g", g))),
                           econst(StructKind::Mult, {B}));
          Span s = eval_span(e);
          std::vector<int> keep, vals;
          for (int x = 0; x < na; ++x)
            if (ft[x] == gt[x]) {
              keep.push_back(x);
              vals.push_back(ft[x]);
            }
          if (s.apex.size != static_cast<int>(keep.size())) return false;
          if (s.legL.table != keep || s.legR.table != vals) return false;
        } while (advance(gt));
      } while (advance(ft));
    }
  return true;
}

// Criterion 5: {{A},{B,C}} flattens and stages to |A|+|B|+|C|, and >= 100
// random diagram-of-diagram instances pass the comparison check.
bool nested_colimits() {
  for (int sa = 1; sa <= 3; ++sa)
    for (int sb = 1; sb <= 3; ++sb)
      for (int sc = 1; sc <= 3; ++sc) {
        DiagramOfDiagrams d;
        LabeledDiagram one, two;
        one.vertices = {{"A", S(sa)}};
        two.vertices = {{"B", S(sb)}, {"C", S(sc)}};
        d.nodes = {one, two};
        NestedCheckResult r = nested_colim_check(d);
        if (!r.ok || r.flat_size != sa + sb + sc || r.stage_size != sa + sb + sc) return false;
      }
  Rng rng(105);
  for (int i = 0; i < 100; ++i)
    if (!nested_colim_check(random_nested(rng, 8)).ok) return false;
  return true;
}

// Criterion 6: feedback apex counts the orbits of x ~ f(x), and the pullback
// of the feedback cospan is the graph of the iterated trace.
bool feedback_trace() {
  Rng rng(106);
  int sampled = 0;
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for (int nc = 0; nc <= 3; ++nc) {
        if (na + nc > 0 && nb + nc == 0) continue;  // no map into the empty set
        for (int it = 0; it < 10; ++it) {
          FinFn f = random_fn(rng, S(na + nc), S(nb + nc));
          ++sampled;
          Cospan c = feedback_cospan(S(na), S(nb), S(nc), f);

          // Orbits of x ~ f(x) inside A+B+C, A first, then B, then C.
          int total = na + nb + nc;
          std::vector<int> parent(total);
          for (int i = 0; i < total; ++i) parent[i] = i;
          auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
          };
          auto join = [&](int x, int y) { parent[find(x)] = find(y); };
          auto dom_elt = [&](int p) { return p < na ? p : na + nb + (p - na); };
          auto cod_elt = [&](int q) { return na + q; };
          for (int p = 0; p < na + nc; ++p) join(dom_elt(p), cod_elt(f.table[p]));
          int orbits = 0;
          for (int i = 0; i < total; ++i)
            if (find(i) == i) ++orbits;
          if (c.apex.size != orbits) return false;

          PullbackResult pb = pullback(c.legL, c.legR);
          std::vector<std::pair<int, int>> got;
          for (int i = 0; i < pb.p1.dom.size; ++i)
            got.emplace_back(pb.p1.table[i], pb.p2.table[i]);
          PartialFn t = trace_partial_fn(S(na), S(nb), S(nc), f);
          std::vector<std::pair<int, int>> want;
          for (int x = 0; x < na; ++x)
            if (t.defined(x)) want.emplace_back(x, t.table[x]);
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          if (got != want) return false;
        }
      }
  return sampled >= 500;
}

// Criterion 7: pipeline output agrees with NFA acceptance on words of length
// <= 8 for every initial/final pair, using Kleene operations only.
bool kleene_pipeline_sound() {
  Rng rng(107);
  for (int it = 0; it < 100; ++it) {
    Nfa g = random_nfa(rng, 5, 8);
    RegexMatrix k = kleene_pipeline(g);
    WordMemo memo;
    for (std::size_t i = 0; i < g.initial.size(); ++i)
      for (std::size_t f = 0; f < g.final_states.size(); ++f) {
        if (!kleene_ops_only(k[i][f], g.alphabet)) return false;
        Nfa part = restrict_nfa(g, g.initial[i], g.final_states[f]);
        if (!bounded_equiv(k[i][f], part, 8, &memo)) return false;
      }
  }
  return true;
}

// Criterion 8: every CLI command, run twice, produces identical bytes and
// exit codes.
struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(COSPANLIM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

bool cli_determinism() {
  auto q = [](const std::string& name) { return "'" + data_path(name) + "'"; };
  std::vector<std::string> commands = {
      "colim " + q("parallel_pair.json"),
      "colim " + q("parallel_pair.json") + " --format json",
      "colim " + q("parallel_pair.json") + " --format dot",
      "colim " + q("parallel_pair.json") + " --mode span",
      "colim " + q("feedback.json"),
      "limit " + q("parallel_pair.json") + " --format json",
      "compile " + q("compeqn.json"),
      "eval " + q("parallel_pair.expr"),
      "eval " + q("parallel_pair.expr") + " --mode span --format json",
      "kleene " + q("nfa_astarb.json"),
      "kleene " + q("nfa_eps.json") + " --format json",
      "check separable --seed 5 --sizes 2 --count 10",
      "check kleene --seed 9 --count 20 --max-len 6",
      "check --seed 3 --sizes 2 --count 15",
  };
  for (const std::string& cmd : commands) {
    RunResult r1 = run_cli(cmd);
    RunResult r2 = run_cli(cmd);
    if (r1.code != 0 || r2.code != 0) {
      std::cerr << "  command failed: " << cmd << " (exit " << r1.code << ")\n" << r1.output;
      return false;
    }
    if (r1.output != r2.output) {
      std::cerr << "  command not deterministic: " << cmd << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    bool (*body)();
  };
  const Criterion criteria[] = {
      {1, "separable-axioms", separable_axioms},
      {2, "colimit-functoriality", colimit_functoriality},
      {3, "compiler-soundness", compiler_soundness},
      {4, "limits-duality", limits_duality},
      {5, "nested-colimits", nested_colimits},
      {6, "feedback-trace", feedback_trace},
      {7, "kleene-pipeline", kleene_pipeline_sound},
      {8, "cli-determinism", cli_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << "\n";
    }
    std::cout << "ACCEPTANCE " << c.number << " " << c.name << ": " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
