#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "cospanlim.h"

namespace {

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

// Takes ownership of a library-allocated string.
std::string owned(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  csl_string_free(s);
  return out;
}

struct DiagramHandle {
  csl_diagram* d = nullptr;
  ~DiagramHandle() { csl_diagram_free(d); }
};

DiagramHandle load(const std::string& name) {
  DiagramHandle h;
  REQUIRE(csl_diagram_parse_json(slurp(data_path(name)).c_str(), &h.d) == CSL_OK);
  return h;
}

}  // namespace

TEST_CASE("version and error channel") {
  const char* v = csl_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v).find('.') != std::string::npos);

  csl_diagram* d = nullptr;
  CHECK(csl_diagram_parse_json("{", &d) == CSL_ERR_PARSE);
  CHECK(d == nullptr);
  CHECK(std::string(csl_last_error()).find("parse") != std::string::npos);
}

TEST_CASE("null arguments are invalid") {
  CHECK(csl_diagram_parse_json(nullptr, nullptr) == CSL_ERR_INVALID);
  CHECK(csl_diagram_colimit(nullptr, nullptr) == CSL_ERR_INVALID);
  CHECK(csl_expr_parse(nullptr, nullptr) == CSL_ERR_INVALID);
  CHECK(csl_arrow_apex_size(nullptr, nullptr) == CSL_ERR_INVALID);
  CHECK(std::string(csl_last_error()).size() > 0);
  csl_diagram_free(nullptr);
  csl_expr_free(nullptr);
  csl_arrow_free(nullptr);
  csl_automaton_free(nullptr);
  csl_string_free(nullptr);
}

TEST_CASE("parse errors carry codes") {
  csl_diagram* d = nullptr;
  CHECK(csl_diagram_parse_json("not json", &d) == CSL_ERR_PARSE);
  CHECK(csl_diagram_parse_json(
            R"({"vertices":[{"name":"A","size":1}],
                "edges":[{"name":"f","src":"A","tgt":"Z","map":[0]}],
                "left":[],"right":[]})",
            &d) == CSL_ERR_TYPE);
  CHECK(std::string(csl_last_error()).find("type error") != std::string::npos);
}

TEST_CASE("colimit and limit through the api") {
  DiagramHandle h = load("parallel_pair.json");
  int mono = -1;
  REQUIRE(csl_diagram_is_monoidal(h.d, &mono) == CSL_OK);
  CHECK(mono == 0);

  csl_arrow* co = nullptr;
  REQUIRE(csl_diagram_colimit(h.d, &co) == CSL_OK);
  int is_span = -1, apex = -1;
  CHECK(csl_arrow_is_span(co, &is_span) == CSL_OK);
  CHECK(is_span == 0);
  CHECK(csl_arrow_apex_size(co, &apex) == CSL_OK);
  CHECK(apex == 1);
  char* text = nullptr;
  REQUIRE(csl_arrow_to_text(co, &text) == CSL_OK);
  CHECK(owned(text).find("->") != std::string::npos);
  char* js = nullptr;
  REQUIRE(csl_arrow_to_json(co, &js) == CSL_OK);
  CHECK(owned(js).find("cospan") != std::string::npos);
  csl_arrow_free(co);

  csl_arrow* lim = nullptr;
  REQUIRE(csl_diagram_limit(h.d, &lim) == CSL_OK);
  CHECK(csl_arrow_is_span(lim, &is_span) == CSL_OK);
  CHECK(is_span == 1);
  CHECK(csl_arrow_apex_size(lim, &apex) == CSL_OK);
  CHECK(apex == 0);  // f and g never agree
  csl_arrow_free(lim);
}

TEST_CASE("monoidal diagrams reject limit and compile") {
  DiagramHandle h = load("feedback.json");
  int mono = -1;
  REQUIRE(csl_diagram_is_monoidal(h.d, &mono) == CSL_OK);
  CHECK(mono == 1);

  csl_arrow* co = nullptr;
  REQUIRE(csl_diagram_colimit(h.d, &co) == CSL_OK);
  int apex = -1;
  CHECK(csl_arrow_apex_size(co, &apex) == CSL_OK);
  CHECK(apex == 1);
  csl_arrow_free(co);

  csl_arrow* lim = nullptr;
  CHECK(csl_diagram_limit(h.d, &lim) == CSL_ERR_TYPE);
  CHECK(lim == nullptr);
  CHECK(std::string(csl_last_error()).find("monoidal") != std::string::npos);
  csl_expr* e = nullptr;
  CHECK(csl_diagram_compile(h.d, &e) == CSL_ERR_TYPE);
}

TEST_CASE("compile, print, eval round trip") {
  DiagramHandle h = load("parallel_pair.json");
  csl_expr* e = nullptr;
  REQUIRE(csl_diagram_compile(h.d, &e) == CSL_OK);

  char* printed = nullptr;
  REQUIRE(csl_expr_print(e, &printed) == CSL_OK);
  std::string text = owned(printed);
  CHECK(text.find("gen(f)") != std::string::npos);

  csl_expr* e2 = nullptr;
  REQUIRE(csl_expr_parse(text.c_str(), &e2) == CSL_OK);

  for (csl_expr* x : {e, e2}) {
    csl_arrow* co = nullptr;
    REQUIRE(csl_expr_eval(x, 0, &co) == CSL_OK);
    int apex = -1;
    CHECK(csl_arrow_apex_size(co, &apex) == CSL_OK);
    CHECK(apex == 1);
    csl_arrow_free(co);

    csl_arrow* sp = nullptr;
    REQUIRE(csl_expr_eval(x, 1, &sp) == CSL_OK);
    int is_span = -1;
    CHECK(csl_arrow_is_span(sp, &is_span) == CSL_OK);
    CHECK(is_span == 1);
    csl_arrow_free(sp);
  }
  csl_expr_free(e2);
  csl_expr_free(e);

  csl_expr* bad = nullptr;
  CHECK(csl_expr_parse("id(", &bad) == CSL_ERR_PARSE);
}

TEST_CASE("diagram serialization round trips") {
  DiagramHandle h = load("compeqn.json");
  char* js = nullptr;
  REQUIRE(csl_diagram_to_json(h.d, &js) == CSL_OK);
  std::string text = owned(js);

  csl_diagram* again = nullptr;
  REQUIRE(csl_diagram_parse_json(text.c_str(), &again) == CSL_OK);
  csl_arrow* a1 = nullptr;
  csl_arrow* a2 = nullptr;
  REQUIRE(csl_diagram_colimit(h.d, &a1) == CSL_OK);
  REQUIRE(csl_diagram_colimit(again, &a2) == CSL_OK);
  char* t1 = nullptr;
  char* t2 = nullptr;
  REQUIRE(csl_arrow_to_text(a1, &t1) == CSL_OK);
  REQUIRE(csl_arrow_to_text(a2, &t2) == CSL_OK);
  CHECK(owned(t1) == owned(t2));
  csl_arrow_free(a1);
  csl_arrow_free(a2);
  csl_diagram_free(again);

  char* dot = nullptr;
  REQUIRE(csl_diagram_to_dot(h.d, &dot) == CSL_OK);
  CHECK(owned(dot).find("digraph") != std::string::npos);
}

TEST_CASE("kleene through the api") {
  csl_automaton* g = nullptr;
  REQUIRE(csl_automaton_parse_json(slurp(data_path("nfa_astarb.json")).c_str(), &g) == CSL_OK);

  char* text = nullptr;
  REQUIRE(csl_kleene_text(g, &text) == CSL_OK);
  CHECK(owned(text) == "q0 -> q1: ((a)*.b)\n");

  char* js = nullptr;
  REQUIRE(csl_kleene_json(g, &js) == CSL_OK);
  CHECK(owned(js).find("\"regex\": \"((a)*.b)\"") != std::string::npos);
  csl_automaton_free(g);

  csl_automaton* bad = nullptr;
  CHECK(csl_automaton_parse_json("{\"alphabet\":[\"eps\"]}", &bad) != CSL_OK);
}

TEST_CASE("check suites run through the api") {
  char* report = nullptr;
  REQUIRE(csl_check_run("separable", 1, 2, 10, 4, &report) == CSL_OK);
  std::string text = owned(report);
  CHECK(text.find("suite=separable") != std::string::npos);
  CHECK(text.find("status=pass") != std::string::npos);

  char* bad = nullptr;
  CHECK(csl_check_run("no-such-suite", 1, 2, 10, 4, &bad) == CSL_ERR_TYPE);
  CHECK(bad == nullptr);

  char* invalid = nullptr;
  CHECK(csl_check_run("separable", 1, -1, 10, 4, &invalid) == CSL_ERR_INVALID);
}
