#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cospanlim/compile.hpp"
#include "cospanlim/dcospan.hpp"
#include "cospanlim/errors.hpp"
#include "cospanlim/expr.hpp"
#include "cospanlim/gen.hpp"
#include "cospanlim/io.hpp"
#include "cospanlim/monoidal.hpp"
#include "cospanlim/nested.hpp"

using namespace cospanlim;

namespace {

FinSet S(int n) { return FinSet{n, ""}; }

FinFn fn(int n, int m, std::vector<int> t) { return make_fn(S(n), S(m), std::move(t)); }

std::string data_path(const std::string& name) {
  return std::string(COSPANLIM_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DiagramCospan edge_diagram(const FinFn& f) {
  DiagramCospan c;
  c.center.vertices = {{"A", f.dom}, {"B", f.cod}};
  c.center.edges = {{"f", 0, 1, f}};
  c.left = {0};
  c.right = {1};
  return c;
}

}  // namespace

TEST_CASE("diagram validation") {
  LabeledDiagram d;
  d.vertices = {{"A", S(2)}, {"B", S(2)}};
  d.edges = {{"f", 0, 1, fn(2, 2, {0, 1})}};
  CHECK_NOTHROW(validate(d));

  LabeledDiagram dup = d;
  dup.vertices[1].name = "A";
  CHECK_THROWS_AS(validate(dup), type_error);

  LabeledDiagram bad = d;
  bad.edges[0].map = fn(2, 3, {0, 1});
  CHECK_THROWS_AS(validate(bad), type_error);
}

TEST_CASE("dcompose glues along shared feet") {
  FinFn f = fn(2, 3, {0, 1}), g = fn(3, 2, {0, 0, 1});
  DiagramCospan a = edge_diagram(f), b = edge_diagram(g);

  DiagramCospan path = dcompose(a, b);
  CHECK(path.center.vertices.size() == 3);
  CHECK(path.center.edges.size() == 2);
  CHECK(path.left.size() == 1);
  CHECK(path.right.size() == 1);
  // The glued diagram is the two-edge path A -f-> B -g-> C.
  DiagramCospan expected;
  expected.center.vertices = {{"A", S(2)}, {"B", S(3)}, {"C", S(2)}};
  expected.center.edges = {{"f", 0, 1, f}, {"g", 1, 2, g}};
  expected.left = {0};
  expected.right = {2};
  CHECK(diso_eq(path, expected));

  CHECK(diso_eq(dcompose(a, didentity({S(3)})), a));
  CHECK(diso_eq(dcompose(didentity({S(2)}), a), a));

  DiagramCospan clash = edge_diagram(fn(2, 2, {0, 1}));
  CHECK_THROWS_AS(dcompose(a, clash), type_error);  // foot objects differ
}

TEST_CASE("the three-factor composite yields the parallel pair") {
  FinSet a = S(2), b = S(3);
  FinFn f = fn(2, 3, {0, 1}), g = fn(2, 3, {1, 2});
  DiagramCospan middle = dtensor(edge_diagram(f), edge_diagram(g));
  DiagramCospan composite = dcompose(
      dcompose(dconstant(StructKind::Comult, {a}), middle), dconstant(StructKind::Mult, {b}));

  DiagramCospan pp;
  pp.center.vertices = {{"A", a}, {"B", b}};
  pp.center.edges = {{"f", 0, 1, f}, {"g", 0, 1, g}};
  pp.left = {0};
  pp.right = {1};
  CHECK(diso_eq(composite, pp));
}

TEST_CASE("diagram constants and tensor") {
  DiagramCospan mult = dconstant(StructKind::Mult, {S(2)});
  CHECK(mult.center.vertices.size() == 1);
  CHECK(mult.left == std::vector<int>{0, 0});
  CHECK(mult.right == std::vector<int>{0});

  DiagramCospan eta = dconstant(StructKind::Eta, {S(2)});
  CHECK(eta.left.empty());
  CHECK(eta.right == std::vector<int>{0, 0});

  DiagramCospan e = edge_diagram(fn(2, 3, {0, 1}));
  CHECK(diso_eq(dtensor(e, didentity({})), e));
}

TEST_CASE("colimit functor on basic shapes") {
  CHECK(iso_eq(colimit(dconstant(StructKind::Mult, {S(2)})),
               cospan_constant(StructKind::Mult, {S(2)})));

  FinFn f = fn(2, 3, {0, 2});
  CHECK(iso_eq(colimit(edge_diagram(f)), cospan_of_fn(f)));

  DiagramFile closed = parse_diagram_json(slurp(data_path("closed_pair.json")));
  REQUIRE_FALSE(closed.monoidal);
  Cospan c = colimit(closed.dia);
  CHECK(c.left.size == 0);
  CHECK(c.right.size == 0);
  CHECK(c.apex.size == 1);

  DiagramFile empty = parse_diagram_json(slurp(data_path("empty.json")));
  CHECK(colimit(empty.dia).apex.size == 0);
}

TEST_CASE("disc nodes evaluate to block maps") {
  ObjList a{S(2)};
  ExprPtr idd = edisc(a, a, a, {0}, {0});
  CHECK(iso_eq(eval_cospan(idd), cospan_identity(S(2))));

  ExprPtr codiag = edisc({S(2), S(2)}, a, a, {0, 0}, {0});
  CHECK(iso_eq(eval_cospan(codiag), cospan_constant(StructKind::Mult, {S(2)})));

  // Block identity between two-object feet.
  ObjList two{S(1), S(2)};
  ExprPtr block = edisc(two, two, two, {0, 1}, {0, 1});
  Cospan c = eval_cospan(block);
  CHECK(c.apex.size == 3);
  CHECK(same_fn(c.legL, identity(S(3))));
  CHECK(same_fn(c.legR, identity(S(3))));

  // Mismatched foot objects surface at type checking.
  CHECK_THROWS_AS(boundary(edisc(two, a, a, {0, 0}, {0}), Mode::Cospan), type_error);
}

TEST_CASE("compile matches the hand-written parallel-pair expression") {
  DiagramFile pp = parse_diagram_json(slurp(data_path("parallel_pair.json")));
  ExprPtr compiled = compile(pp.dia);
  ExprPtr hand = parse_expr(slurp(data_path("parallel_pair.expr")));
  CHECK(iso_eq(eval_cospan(compiled), eval_cospan(hand)));
  CHECK(iso_eq(eval_span(compiled), eval_span(hand)));
  CHECK(iso_eq(eval_cospan(hand), colimit(pp.dia)));
  CHECK(iso_eq(eval_span(hand), limit(pp.dia)));
}

TEST_CASE("the four-edge worked example matches its paper expression") {
  DiagramFile file = parse_diagram_json(slurp(data_path("compeqn.json")));
  const DiagramCospan& d = file.dia;
  FinSet a = d.center.vertices[0].obj, b = d.center.vertices[1].obj,
         c = d.center.vertices[2].obj;
  FinFn f = d.center.edges[0].map, g = d.center.edges[1].map, h = d.center.edges[2].map,
        k = d.center.edges[3].map;

  // (eps_B + C) (h + B + k) (Delta + B) Delta (nabla + eps_A) (f + B + g + A)
  // (A + eta_B + A) Delta, read right-to-left into diagrammatic order.
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
  CHECK(iso_eq(eval_cospan(e), direct));
  CHECK(iso_eq(eval_cospan(compile(d)), direct));
}

TEST_CASE("compile handles closed and all-boundary diagrams") {
  Rng rng(21);
  for (auto style : {FeetStyle::Closed, FeetStyle::AllVertices, FeetStyle::Random}) {
    for (int i = 0; i < 20; ++i) {
      DiagramCospan c = random_dcospan(rng, 4, 3, style);
      CHECK(iso_eq(eval_cospan(compile(c)), colimit(c)));
    }
  }
}

TEST_CASE("deval rebuilds the compiled diagram") {
  Rng rng(22);
  for (int i = 0; i < 25; ++i) {
    DiagramCospan c = random_dcospan(rng, 4, 3);
    CHECK(diso_eq(deval(compile(c)), c));
  }
}

TEST_CASE("expand_disc removes disc nodes without changing value") {
  Rng rng(23);
  for (int i = 0; i < 15; ++i) {
    DiagramCospan c = random_dcospan(rng, 3, 2);
    ExprPtr e = compile(c);
    ExprPtr x = expand_disc(e);
    CHECK(iso_eq(eval_cospan(x), eval_cospan(e)));
    CHECK(iso_eq(eval_span(x), eval_span(e)));
  }
}

TEST_CASE("nested colimits agree stagewise and flat") {
  DiagramOfDiagrams d;
  LabeledDiagram one, two;
  one.vertices = {{"A", S(2)}};
  two.vertices = {{"B", S(1)}, {"C", S(3)}};
  d.nodes = {one, two};
  NestedCheckResult r = nested_colim_check(d);
  CHECK(r.ok);
  CHECK(r.flat_size == 6);
  CHECK(r.stage_size == 6);

  DiagramOfDiagrams single;
  LabeledDiagram pp;
  pp.vertices = {{"A", S(2)}, {"B", S(3)}};
  pp.edges = {{"f", 0, 1, fn(2, 3, {0, 1})}, {"g", 0, 1, fn(2, 3, {1, 2})}};
  single.nodes = {pp};
  NestedCheckResult rs = nested_colim_check(single);
  CHECK(rs.ok);
  CHECK(rs.flat_size == colimit(pp).apex.size);

  Rng rng(31);
  for (int i = 0; i < 30; ++i) CHECK(nested_colim_check(random_nested(rng, 8)).ok);
}

TEST_CASE("nested validation rejects non-commuting morphisms") {
  LabeledDiagram a, b;
  a.vertices = {{"A", S(2)}};
  b.vertices = {{"B", S(3)}};
  DiagramOfDiagrams d;
  d.nodes = {a, b};
  d.arrows = {{"m", 0, 1, {{0}, {}}}};
  CHECK_THROWS_AS(validate(d), type_error);  // object sizes differ under vmap
}

TEST_CASE("monoidal colimits") {
  // One arc A+C -> B+C sending a to c and c to b: a single orbit.
  MonoidalDiagram d;
  d.vertices = {{"A", S(1)}, {"B", S(1)}, {"C", S(1)}};
  d.arcs = {{"f", {0, 2}, {1, 2}, fn(2, 2, {1, 0})}};
  Cocone c = mon_colimit(d);
  CHECK(c.apex.size == 1);
  CHECK(is_mon_cocone(d, c));
  CHECK(mon_universal_cocone_oracle(d, c, 3));

  MonoidalDiagram no_arcs;
  no_arcs.vertices = {{"A", S(2)}, {"B", S(3)}};
  CHECK(mon_colimit(no_arcs).apex.size == 5);

  // Length-1 words agree with the classical colimit.
  MonoidalDiagram deg;
  deg.vertices = {{"A", S(2)}, {"B", S(3)}};
  deg.arcs = {{"f", {0}, {1}, fn(2, 3, {0, 1})}, {"g", {0}, {1}, fn(2, 3, {1, 2})}};
  LabeledDiagram classical;
  classical.vertices = deg.vertices;
  classical.edges = {{"f", 0, 1, fn(2, 3, {0, 1})}, {"g", 0, 1, fn(2, 3, {1, 2})}};
  Cocone m = mon_colimit(deg), cl = colimit(classical);
  CHECK(m.apex.size == cl.apex.size);
  for (std::size_t v = 0; v < deg.vertices.size(); ++v) CHECK(same_fn(m.legs[v], cl.legs[v]));

  // Empty words denote the monoidal unit.
  MonoidalDiagram empty_word;
  empty_word.vertices = {{"A", S(2)}};
  empty_word.arcs = {{"f", {}, {0}, empty_fn(S(2))}};
  CHECK(mon_colimit(empty_word).apex.size == 2);
}

namespace {

// The algebra's reading of the feedback interface.
Cospan feedback_eval(FinSet a, FinSet b, FinSet c, const FinFn& f) {
  return compose(compose(tensor(cospan_identity(a), cospan_constant(StructKind::Eta, {c})),
                         tensor(cospan_of_fn(f), cospan_identity(c))),
                 tensor(cospan_identity(b), cospan_constant(StructKind::Eps, {c})));
}

}  // namespace

TEST_CASE("feedback cospan computes orbits") {
  // f(a) = c, f(c) = b: everything collapses to one orbit.
  Cospan fb = feedback_cospan(S(1), S(1), S(1), fn(2, 2, {1, 0}));
  CHECK(fb.apex.size == 1);
  CHECK(fb.legL.table == std::vector<int>{0});
  CHECK(fb.legR.table == std::vector<int>{0});
  CHECK(iso_eq(fb, feedback_eval(S(1), S(1), S(1), fn(2, 2, {1, 0}))));

  // f(a) = c, f(c) = c: a trapped cycle; b stays separate.
  Cospan trapped = feedback_cospan(S(1), S(1), S(1), fn(2, 2, {1, 1}));
  CHECK(trapped.apex.size == 2);
  CHECK(trapped.legL.table == std::vector<int>{0});
  CHECK(trapped.legR.table == std::vector<int>{1});
  CHECK(iso_eq(trapped, feedback_eval(S(1), S(1), S(1), fn(2, 2, {1, 1}))));

  // No feedback wire: the lift of f.
  FinFn f = fn(2, 2, {1, 0});
  CHECK(iso_eq(feedback_cospan(S(2), S(2), S(0), f), cospan_of_fn(f)));
  CHECK(iso_eq(feedback_cospan(S(2), S(2), S(0), f), feedback_eval(S(2), S(2), S(0), f)));
}

TEST_CASE("trace iterates through the feedback channel") {
  PartialFn t1 = trace_partial_fn(S(1), S(1), S(1), fn(2, 2, {1, 0}));
  CHECK(t1.defined(0));
  CHECK(t1.table[0] == 0);

  PartialFn t2 = trace_partial_fn(S(1), S(1), S(1), fn(2, 2, {1, 1}));
  CHECK_FALSE(t2.defined(0));

  FinFn f = fn(2, 2, {1, 0});
  PartialFn t3 = trace_partial_fn(S(2), S(2), S(0), f);
  CHECK(t3.table == f.table);
}

TEST_CASE("diagram json round-trips") {
  std::string text = slurp(data_path("parallel_pair.json"));
  DiagramFile file = parse_diagram_json(text);
  REQUIRE_FALSE(file.monoidal);
  DiagramFile again = parse_diagram_json(diagram_to_json(file.dia));
  CHECK(diso_eq(again.dia, file.dia));

  DiagramFile mon = parse_diagram_json(slurp(data_path("feedback.json")));
  REQUIRE(mon.monoidal);
  DiagramFile mon2 = parse_diagram_json(monoidal_to_json(mon.mon));
  REQUIRE(mon2.monoidal);
  CHECK(colimit(mon2.mon).apex.size == colimit(mon.mon).apex.size);
  CHECK(colimit(mon.mon).apex.size == 1);
}

TEST_CASE("diagram json errors") {
  CHECK_THROWS_AS(parse_diagram_json("{"), parse_error);
  try {
    parse_diagram_json("{\n  \"vertices\": [,]\n}");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  // Well-formed JSON with a bad reference is a type error.
  CHECK_THROWS_AS(
      parse_diagram_json(R"({"vertices":[{"name":"A","size":1}],
        "edges":[{"name":"f","src":"A","tgt":"Z","map":[0]}],"left":[],"right":[]})"),
      type_error);
  CHECK_THROWS_AS(
      parse_diagram_json(R"({"vertices":[{"name":"bad name","size":1}],
        "edges":[],"left":[],"right":[]})"),
      type_error);
  CHECK_THROWS_AS(
      parse_diagram_json(R"({"vertices":[{"name":"A","size":1}],
        "edges":[],"left":["Z"],"right":[]})"),
      type_error);
}

TEST_CASE("arrow json round-trips") {
  DiagramFile pp = parse_diagram_json(slurp(data_path("parallel_pair.json")));
  Cospan c = colimit(pp.dia);
  Cospan c2 = cospan_from_json(to_json(c));
  CHECK(iso_eq(c, c2));
  CHECK(same_fn(c.legL, c2.legL));

  Span s = limit(pp.dia);
  Span s2 = span_from_json(to_json(s));
  CHECK(iso_eq(s, s2));
  CHECK_THROWS_AS(cospan_from_json(to_json(s)), type_error);  // kind mismatch
}

TEST_CASE("dot export names the center") {
  DiagramFile pp = parse_diagram_json(slurp(data_path("parallel_pair.json")));
  std::string dot = to_dot(pp.dia);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"A\"") != std::string::npos);
  CHECK(dot.find("f") != std::string::npos);

  DiagramFile mon = parse_diagram_json(slurp(data_path("feedback.json")));
  std::string mdot = to_dot(mon.mon);
  CHECK(mdot.find("arc_f") != std::string::npos);
}
