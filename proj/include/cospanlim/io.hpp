#pragma once

#include <string>

#include "cospanlim/automaton.hpp"
#include "cospanlim/cospan.hpp"
#include "cospanlim/dcospan.hpp"
#include "cospanlim/langcat.hpp"
#include "cospanlim/monoidal.hpp"

namespace cospanlim {

// A diagram file holds either an ordinary diagram cospan or, when any edge
// lists word-shaped src/tgt, a monoidal one.
struct DiagramFile {
  bool monoidal = false;
  DiagramCospan dia;
  MonoidalDiagramCospan mon;
};

// Malformed JSON raises parse_error (with line/column); well-formed JSON
// that fails validation (missing fields, bad references, non-identifier
// names) raises type_error.
DiagramFile parse_diagram_json(const std::string& text);

std::string diagram_to_json(const DiagramCospan& c);
std::string monoidal_to_json(const MonoidalDiagramCospan& c);

std::string to_json(const Cospan& c);
std::string to_json(const Span& s);
Cospan cospan_from_json(const std::string& text);
Span span_from_json(const std::string& text);

Nfa parse_automaton_json(const std::string& text);
std::string automaton_to_json(const Nfa& g);

// Graphviz rendering of the center graph; feet are listed in a comment.
std::string to_dot(const DiagramCospan& c);
std::string to_dot(const MonoidalDiagramCospan& c);

// One line per (initial, final) pair, in file order.
std::string kleene_table_text(const Nfa& g, const RegexMatrix& m);
std::string kleene_table_json(const Nfa& g, const RegexMatrix& m);

}  // namespace cospanlim
