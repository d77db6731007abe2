#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cospanlim.h"

namespace {

// Exit codes: 0 ok, 1 I/O or internal, 2 parse, 3 type, 4 property failure.

int fail(int code) {
  std::cerr << csl_last_error() << "\n";
  return code;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int io_error(const std::string& path) {
  std::cerr << "cannot read file '" << path << "'\n";
  return 1;
}

// Takes ownership of the C string and prints it with a trailing newline.
void print_owned(char* s) {
  std::string text(s);
  csl_string_free(s);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << "\n";
}

int print_arrow(csl_arrow* arrow, const std::string& format) {
  char* text = nullptr;
  int rc;
  if (format == "json") {
    rc = csl_arrow_to_json(arrow, &text);
  } else {
    rc = csl_arrow_to_text(arrow, &text);
  }
  if (rc != CSL_OK) {
    csl_arrow_free(arrow);
    return fail(rc);
  }
  print_owned(text);
  if (format == "text") {
    int apex = 0;
    csl_arrow_apex_size(arrow, &apex);
    std::cout << "apex size: " << apex << "\n";
  }
  csl_arrow_free(arrow);
  return 0;
}

int unsupported_format(const std::string& format, const std::string& command) {
  std::cerr << "type error: format '" << format << "' is not supported by " << command << "\n";
  return 3;
}

int run_colim(const std::string& path, const std::string& mode, const std::string& format) {
  std::string text;
  if (!read_file(path, text)) return io_error(path);
  csl_diagram* d = nullptr;
  int rc = csl_diagram_parse_json(text.c_str(), &d);
  if (rc != CSL_OK) return fail(rc);
  if (format == "dot") {
    char* dot = nullptr;
    rc = csl_diagram_to_dot(d, &dot);
    csl_diagram_free(d);
    if (rc != CSL_OK) return fail(rc);
    print_owned(dot);
    return 0;
  }
  csl_arrow* arrow = nullptr;
  if (mode == "span") {
    // Limit through the algebra: compile, then evaluate in spans.
    csl_expr* e = nullptr;
    rc = csl_diagram_compile(d, &e);
    csl_diagram_free(d);
    if (rc != CSL_OK) return fail(rc);
    rc = csl_expr_eval(e, 1, &arrow);
    csl_expr_free(e);
  } else {
    rc = csl_diagram_colimit(d, &arrow);
    csl_diagram_free(d);
  }
  if (rc != CSL_OK) return fail(rc);
  return print_arrow(arrow, format);
}

int run_limit(const std::string& path, const std::string& format) {
  if (format == "dot") return unsupported_format(format, "limit");
  std::string text;
  if (!read_file(path, text)) return io_error(path);
  csl_diagram* d = nullptr;
  int rc = csl_diagram_parse_json(text.c_str(), &d);
  if (rc != CSL_OK) return fail(rc);
  csl_arrow* arrow = nullptr;
  rc = csl_diagram_limit(d, &arrow);
  csl_diagram_free(d);
  if (rc != CSL_OK) return fail(rc);
  return print_arrow(arrow, format);
}

int run_compile(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return io_error(path);
  csl_diagram* d = nullptr;
  int rc = csl_diagram_parse_json(text.c_str(), &d);
  if (rc != CSL_OK) return fail(rc);
  csl_expr* e = nullptr;
  rc = csl_diagram_compile(d, &e);
  csl_diagram_free(d);
  if (rc != CSL_OK) return fail(rc);
  char* printed = nullptr;
  rc = csl_expr_print(e, &printed);
  csl_expr_free(e);
  if (rc != CSL_OK) return fail(rc);
  print_owned(printed);
  return 0;
}

int run_eval(const std::string& path, const std::string& mode, const std::string& format) {
  if (format == "dot") return unsupported_format(format, "eval");
  std::string text;
  if (!read_file(path, text)) return io_error(path);
  csl_expr* e = nullptr;
  int rc = csl_expr_parse(text.c_str(), &e);
  if (rc != CSL_OK) return fail(rc);
  csl_arrow* arrow = nullptr;
  rc = csl_expr_eval(e, mode == "span" ? 1 : 0, &arrow);
  csl_expr_free(e);
  if (rc != CSL_OK) return fail(rc);
  return print_arrow(arrow, format);
}

int run_kleene(const std::string& path, const std::string& format) {
  if (format == "dot") return unsupported_format(format, "kleene");
  std::string text;
  if (!read_file(path, text)) return io_error(path);
  csl_automaton* a = nullptr;
  int rc = csl_automaton_parse_json(text.c_str(), &a);
  if (rc != CSL_OK) return fail(rc);
  char* table = nullptr;
  rc = format == "json" ? csl_kleene_json(a, &table) : csl_kleene_text(a, &table);
  csl_automaton_free(a);
  if (rc != CSL_OK) return fail(rc);
  print_owned(table);
  return 0;
}

int run_check(const std::string& suite, std::uint64_t seed, int sizes, int count, int max_len) {
  char* report = nullptr;
  int rc = csl_check_run(suite.c_str(), seed, sizes, count, max_len, &report);
  if (rc != CSL_OK && rc != CSL_ERR_PROPERTY) return fail(rc);
  print_owned(report);
  return rc == CSL_OK ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite (co)limits of diagrams of finite sets via the cospan/span algebra"};
  app.require_subcommand(1);

  std::string path, mode = "cospan", format = "text", suite;
  std::uint64_t seed = 1;
  int sizes = 3, count = 50, max_len = 8;

  auto* colim = app.add_subcommand("colim", "colimit of a diagram file");
  colim->add_option("file", path, "diagram JSON file")->required();
  colim->add_option("--mode", mode, "cospan (colimit) or span (limit)")
      ->check(CLI::IsMember({"cospan", "span"}));
  colim->add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* limit = app.add_subcommand("limit", "limit of a diagram file");
  limit->add_option("file", path, "diagram JSON file")->required();
  limit->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* compile = app.add_subcommand("compile", "compile a diagram file to an expression");
  compile->add_option("file", path, "diagram JSON file")->required();

  auto* eval = app.add_subcommand("eval", "evaluate an expression file");
  eval->add_option("file", path, "expression file")->required();
  eval->add_option("--mode", mode, "cospan or span")->check(CLI::IsMember({"cospan", "span"}));
  eval->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* kleene = app.add_subcommand("kleene", "regular expressions from an automaton file");
  kleene->add_option("file", path, "automaton JSON file")->required();
  kleene->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("suite", suite, "suite name; omit to run all");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--sizes", sizes, "object size bound")->check(CLI::NonNegativeNumber);
  check->add_option("--count", count, "random cases per property")->check(CLI::PositiveNumber);
  check->add_option("--max-len", max_len, "word-length bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (colim->parsed()) return run_colim(path, mode, format);
  if (limit->parsed()) return run_limit(path, format);
  if (compile->parsed()) return run_compile(path);
  if (eval->parsed()) return run_eval(path, mode, format);
  if (kleene->parsed()) return run_kleene(path, format);
  if (check->parsed()) return run_check(suite, seed, sizes, count, max_len);
  return 2;
}
