#include "cospanlim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cospanlim/check.hpp"
#include "cospanlim/compile.hpp"
#include "cospanlim/errors.hpp"
#include "cospanlim/expr.hpp"
#include "cospanlim/io.hpp"
#include "cospanlim/langcat.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, mapping exceptions to status codes and g_last_error.
template <class Body>
int guard(Body&& body) {
  try {
    body();
    return CSL_OK;
  } catch (const cospanlim::parse_error& e) {
    g_last_error = e.what();
    return CSL_ERR_PARSE;
  } catch (const cospanlim::type_error& e) {
    g_last_error = e.what();
    return CSL_ERR_TYPE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CSL_ERR_INVALID;
  }
}

int invalid_arg(const char* msg) {
  g_last_error = msg;
  return CSL_ERR_INVALID;
}

}  // namespace

struct csl_diagram {
  cospanlim::DiagramFile file;
};

struct csl_expr {
  cospanlim::ExprPtr e;
};

struct csl_arrow {
  bool is_span = false;
  cospanlim::Cospan c;
  cospanlim::Span s;
};

struct csl_automaton {
  cospanlim::Nfa g;
};

extern "C" {

const char* csl_version(void) { return "1.0.0"; }

const char* csl_last_error(void) { return g_last_error.c_str(); }

void csl_string_free(char* s) { std::free(s); }

int csl_diagram_parse_json(const char* text, csl_diagram** out) {
  if (!text || !out) return invalid_arg("null argument");
  return guard([&] { *out = new csl_diagram{cospanlim::parse_diagram_json(text)}; });
}

void csl_diagram_free(csl_diagram* d) { delete d; }

int csl_diagram_is_monoidal(const csl_diagram* d, int* out) {
  if (!d || !out) return invalid_arg("null argument");
  *out = d->file.monoidal ? 1 : 0;
  return CSL_OK;
}

int csl_diagram_colimit(const csl_diagram* d, csl_arrow** out) {
  if (!d || !out) return invalid_arg("null argument");
  return guard([&] {
    auto* a = new csl_arrow;
    a->c = d->file.monoidal ? cospanlim::colimit(d->file.mon) : cospanlim::colimit(d->file.dia);
    *out = a;
  });
}

int csl_diagram_limit(const csl_diagram* d, csl_arrow** out) {
  if (!d || !out) return invalid_arg("null argument");
  return guard([&] {
    if (d->file.monoidal)
      throw cospanlim::type_error("limits are not defined for monoidal diagrams");
    auto* a = new csl_arrow;
    a->is_span = true;
    a->s = cospanlim::limit(d->file.dia);
    *out = a;
  });
}

int csl_diagram_compile(const csl_diagram* d, csl_expr** out) {
  if (!d || !out) return invalid_arg("null argument");
  return guard([&] {
    if (d->file.monoidal)
      throw cospanlim::type_error("monoidal diagrams cannot be compiled to expressions");
    *out = new csl_expr{cospanlim::compile(d->file.dia)};
  });
}

int csl_diagram_to_json(const csl_diagram* d, char** out) {
  if (!d || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(d->file.monoidal ? cospanlim::monoidal_to_json(d->file.mon)
                                       : cospanlim::diagram_to_json(d->file.dia));
  });
}

int csl_diagram_to_dot(const csl_diagram* d, char** out) {
  if (!d || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(d->file.monoidal ? cospanlim::to_dot(d->file.mon)
                                       : cospanlim::to_dot(d->file.dia));
  });
}

int csl_expr_parse(const char* text, csl_expr** out) {
  if (!text || !out) return invalid_arg("null argument");
  return guard([&] { *out = new csl_expr{cospanlim::parse_expr(text)}; });
}

void csl_expr_free(csl_expr* e) { delete e; }

int csl_expr_print(const csl_expr* e, char** out) {
  if (!e || !out) return invalid_arg("null argument");
  return guard([&] { *out = dup_string(cospanlim::print_expr_file(e->e)); });
}

int csl_expr_eval(const csl_expr* e, int span_mode, csl_arrow** out) {
  if (!e || !out) return invalid_arg("null argument");
  return guard([&] {
    auto* a = new csl_arrow;
    if (span_mode) {
      a->is_span = true;
      a->s = cospanlim::eval_span(e->e);
    } else {
      a->c = cospanlim::eval_cospan(e->e);
    }
    *out = a;
  });
}

void csl_arrow_free(csl_arrow* a) { delete a; }

int csl_arrow_is_span(const csl_arrow* a, int* out) {
  if (!a || !out) return invalid_arg("null argument");
  *out = a->is_span ? 1 : 0;
  return CSL_OK;
}

int csl_arrow_apex_size(const csl_arrow* a, int* out) {
  if (!a || !out) return invalid_arg("null argument");
  *out = a->is_span ? a->s.apex.size : a->c.apex.size;
  return CSL_OK;
}

int csl_arrow_to_text(const csl_arrow* a, char** out) {
  if (!a || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(a->is_span ? cospanlim::to_text(a->s) : cospanlim::to_text(a->c));
  });
}

int csl_arrow_to_json(const csl_arrow* a, char** out) {
  if (!a || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(a->is_span ? cospanlim::to_json(a->s) : cospanlim::to_json(a->c));
  });
}

int csl_automaton_parse_json(const char* text, csl_automaton** out) {
  if (!text || !out) return invalid_arg("null argument");
  return guard([&] { *out = new csl_automaton{cospanlim::parse_automaton_json(text)}; });
}

void csl_automaton_free(csl_automaton* a) { delete a; }

int csl_kleene_text(const csl_automaton* a, char** out) {
  if (!a || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(cospanlim::kleene_table_text(a->g, cospanlim::kleene_pipeline(a->g)));
  });
}

int csl_kleene_json(const csl_automaton* a, char** out) {
  if (!a || !out) return invalid_arg("null argument");
  return guard([&] {
    *out = dup_string(cospanlim::kleene_table_json(a->g, cospanlim::kleene_pipeline(a->g)));
  });
}

int csl_check_run(const char* suite, uint64_t seed, int sizes, int count, int max_len,
                  char** report) {
  if (!report) return invalid_arg("null argument");
  cospanlim::CheckConfig cfg;
  cfg.seed = seed;
  cfg.sizes = sizes;
  cfg.count = count;
  cfg.max_len = max_len;
  if (cfg.sizes < 0 || cfg.count <= 0 || cfg.max_len <= 0)
    return invalid_arg("check bounds must be positive");
  std::string text;
  int failures = 0;
  int code = guard([&] {
    std::vector<cospanlim::CheckResult> results;
    if (!suite || !*suite)
      results = cospanlim::run_all_checks(cfg);
    else
      results.push_back(cospanlim::run_check(suite, cfg));
    for (const auto& r : results) {
      text += cospanlim::check_report(r);
      failures += r.failures;
    }
  });
  if (code != CSL_OK) return code;
  *report = dup_string(text);
  if (failures > 0) {
    g_last_error = "property failure: " + std::to_string(failures) + " failing case(s)";
    return CSL_ERR_PROPERTY;
  }
  return CSL_OK;
}

}  // extern "C"
