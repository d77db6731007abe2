#include "cospanlim/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

#include "cospanlim/errors.hpp"

namespace cospanlim {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, col = 1;
    std::size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.N] parse error at ...: ".
    std::size_t cut = what.find("]: ");
    if (cut == std::string::npos) cut = what.find(": ");
    throw parse_error(cut == std::string::npos ? what : what.substr(cut + (what[cut] == ']' ? 3 : 2)),
                      line, col);
  }
}

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string ident_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw type_error(where + " needs a string field \"" + key + "\"");
  std::string name = j[key].get<std::string>();
  if (!identifier_shaped(name))
    throw type_error(where + " name '" + name + "' is not identifier-shaped");
  return name;
}

int size_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw type_error(where + " needs an integer field \"" + key + "\"");
  long long v = j[key].get<long long>();
  if (v < 0 || v > (1 << 24)) throw type_error(where + " size " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> table_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_array())
    throw type_error(where + " needs an array field \"" + key + "\"");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw type_error(where + " map entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::string> name_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw type_error(where + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw type_error(where + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<int> foot_vertices(const json& root, const std::string& key,
                               const LabeledDiagram& d) {
  std::vector<int> out;
  if (!root.contains(key)) return out;
  for (const auto& name : name_list(root[key], "\"" + key + "\"")) {
    int v = d.vertex_index(name);
    if (v < 0) throw type_error("foot names unknown vertex '" + name + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<DiagramVertex> parse_vertices(const json& root) {
  if (!root.contains("vertices") || !root["vertices"].is_array())
    throw type_error("diagram needs a \"vertices\" array");
  std::vector<DiagramVertex> out;
  for (const auto& v : root["vertices"]) {
    std::string name = ident_field(v, "name", "vertex");
    int size = size_field(v, "size", "vertex '" + name + "'");
    out.push_back({name, FinSet{size, name}});
  }
  return out;
}

json fn_table(const FinFn& f) {
  json t = json::array();
  for (int v : f.table) t.push_back(v);
  return t;
}

json boundary_json(const FinSet& s) {
  json j = json::object();
  j["size"] = s.size;
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

FinSet boundary_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw type_error(where + " must be an object");
  FinSet out{size_field(j, "size", where), ""};
  if (j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string table_text(const FinFn& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.table[i]);
  }
  return out + "]";
}

std::string foot_comment(const std::vector<int>& foot, const std::vector<DiagramVertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < foot.size(); ++i) {
    if (i) out += ",";
    out += vs[foot[i]].name;
  }
  return out;
}

}  // namespace

DiagramFile parse_diagram_json(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object()) throw type_error("diagram file must be a JSON object");

  bool monoidal = false;
  if (root.contains("edges")) {
    if (!root["edges"].is_array()) throw type_error("\"edges\" must be an array");
    for (const auto& e : root["edges"])
      if (e.is_object() && e.contains("src") && e["src"].is_array()) monoidal = true;
  }

  DiagramFile out;
  out.monoidal = monoidal;
  std::vector<DiagramVertex> vertices = parse_vertices(root);

  if (!monoidal) {
    LabeledDiagram d;
    d.vertices = vertices;
    if (root.contains("edges"))
      for (const auto& e : root["edges"]) {
        std::string name = ident_field(e, "name", "edge");
        std::string where = "edge '" + name + "'";
        int src = d.vertex_index(ident_field(e, "src", where));
        int tgt = d.vertex_index(ident_field(e, "tgt", where));
        if (src < 0 || tgt < 0) throw type_error(where + " references an unknown vertex");
        FinFn map = make_fn(d.vertices[src].obj, d.vertices[tgt].obj, table_field(e, "map", where));
        d.edges.push_back({name, src, tgt, map});
      }
    out.dia.center = d;
    out.dia.left = foot_vertices(root, "left", d);
    out.dia.right = foot_vertices(root, "right", d);
    validate(out.dia);
    return out;
  }

  MonoidalDiagram d;
  d.vertices = vertices;
  LabeledDiagram lookup;  // borrow vertex_index
  lookup.vertices = vertices;
  for (const auto& e : root["edges"]) {
    std::string name = ident_field(e, "name", "edge");
    std::string where = "edge '" + name + "'";
    auto word = [&](const char* key) {
      if (!e.contains(key) || !e[key].is_array())
        throw type_error(where + " needs a word-shaped \"" + std::string(key) + "\" array");
      std::vector<int> w;
      for (const auto& name_j : name_list(e[key], where + " " + key)) {
        int v = lookup.vertex_index(name_j);
        if (v < 0) throw type_error(where + " references unknown vertex '" + name_j + "'");
        w.push_back(v);
      }
      return w;
    };
    MonArc arc;
    arc.name = name;
    arc.src = word("src");
    arc.tgt = word("tgt");
    int sdom = 0, scod = 0;
    for (int v : arc.src) sdom += vertices[v].obj.size;
    for (int v : arc.tgt) scod += vertices[v].obj.size;
    arc.map = make_fn(FinSet{sdom, ""}, FinSet{scod, ""}, table_field(e, "map", where));
    d.arcs.push_back(arc);
  }
  out.mon.center = d;
  out.mon.left = foot_vertices(root, "left", lookup);
  out.mon.right = foot_vertices(root, "right", lookup);
  validate(out.mon);
  return out;
}

std::string diagram_to_json(const DiagramCospan& c) {
  json root = json::object();
  root["vertices"] = json::array();
  for (const auto& v : c.center.vertices)
    root["vertices"].push_back({{"name", v.name}, {"size", v.obj.size}});
  root["edges"] = json::array();
  for (const auto& e : c.center.edges)
    root["edges"].push_back({{"name", e.name},
                             {"src", c.center.vertices[e.src].name},
                             {"tgt", c.center.vertices[e.tgt].name},
                             {"map", fn_table(e.map)}});
  json left = json::array(), right = json::array();
  for (int v : c.left) left.push_back(c.center.vertices[v].name);
  for (int v : c.right) right.push_back(c.center.vertices[v].name);
  root["left"] = left;
  root["right"] = right;
  return root.dump(2);
}

std::string monoidal_to_json(const MonoidalDiagramCospan& c) {
  json root = json::object();
  root["vertices"] = json::array();
  for (const auto& v : c.center.vertices)
    root["vertices"].push_back({{"name", v.name}, {"size", v.obj.size}});
  root["edges"] = json::array();
  for (const auto& a : c.center.arcs) {
    json src = json::array(), tgt = json::array();
    for (int v : a.src) src.push_back(c.center.vertices[v].name);
    for (int v : a.tgt) tgt.push_back(c.center.vertices[v].name);
    root["edges"].push_back({{"name", a.name}, {"src", src}, {"tgt", tgt}, {"map", fn_table(a.map)}});
  }
  json left = json::array(), right = json::array();
  for (int v : c.left) left.push_back(c.center.vertices[v].name);
  for (int v : c.right) right.push_back(c.center.vertices[v].name);
  root["left"] = left;
  root["right"] = right;
  return root.dump(2);
}

std::string to_json(const Cospan& c) {
  json root = json::object();
  root["kind"] = "cospan";
  root["left"] = boundary_json(c.left);
  root["right"] = boundary_json(c.right);
  root["apex"] = boundary_json(c.apex);
  root["legL"] = fn_table(c.legL);
  root["legR"] = fn_table(c.legR);
  return root.dump(2);
}

std::string to_json(const Span& s) {
  json root = json::object();
  root["kind"] = "span";
  root["left"] = boundary_json(s.left);
  root["right"] = boundary_json(s.right);
  root["apex"] = boundary_json(s.apex);
  root["legL"] = fn_table(s.legL);
  root["legR"] = fn_table(s.legR);
  return root.dump(2);
}

Cospan cospan_from_json(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object() || !root.contains("kind") || root["kind"] != "cospan")
    throw type_error("expected a JSON object with \"kind\": \"cospan\"");
  Cospan out;
  out.left = boundary_from_json(root["left"], "\"left\"");
  out.right = boundary_from_json(root["right"], "\"right\"");
  out.apex = boundary_from_json(root["apex"], "\"apex\"");
  out.legL = make_fn(out.left, out.apex, table_field(root, "legL", "cospan"));
  out.legR = make_fn(out.right, out.apex, table_field(root, "legR", "cospan"));
  return out;
}

Span span_from_json(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object() || !root.contains("kind") || root["kind"] != "span")
    throw type_error("expected a JSON object with \"kind\": \"span\"");
  Span out;
  out.left = boundary_from_json(root["left"], "\"left\"");
  out.right = boundary_from_json(root["right"], "\"right\"");
  out.apex = boundary_from_json(root["apex"], "\"apex\"");
  out.legL = make_fn(out.apex, out.left, table_field(root, "legL", "span"));
  out.legR = make_fn(out.apex, out.right, table_field(root, "legR", "span"));
  return out;
}

Nfa parse_automaton_json(const std::string& text) {
  json root = parse_json(text);
  if (!root.is_object()) throw type_error("automaton file must be a JSON object");
  Nfa g;
  if (!root.contains("alphabet")) throw type_error("automaton needs an \"alphabet\" array");
  g.alphabet = name_list(root["alphabet"], "\"alphabet\"");
  if (!root.contains("states")) throw type_error("automaton needs a \"states\" array");
  g.states = name_list(root["states"], "\"states\"");
  if (root.contains("edges")) {
    if (!root["edges"].is_array()) throw type_error("\"edges\" must be an array");
    for (const auto& e : root["edges"]) {
      if (!e.is_object()) throw type_error("automaton edges must be objects");
      NfaEdge edge;
      auto state_of = [&](const std::string& key) {
        if (!e.contains(key) || !e[key].is_string())
          throw type_error("automaton edge needs a string field \"" + key + "\"");
        std::string name = e[key].get<std::string>();
        int v = g.state_index(name);
        if (v < 0) throw type_error("automaton edge references unknown state '" + name + "'");
        return v;
      };
      edge.src = state_of("src");
      edge.tgt = state_of("tgt");
      if (!e.contains("label") || !e["label"].is_string())
        throw type_error("automaton edge needs a string field \"label\"");
      std::string label = e["label"].get<std::string>();
      if (label == "eps") {
        edge.label = -1;
      } else {
        edge.label = -1;
        for (std::size_t i = 0; i < g.alphabet.size(); ++i)
          if (g.alphabet[i] == label) edge.label = static_cast<int>(i);
        if (edge.label < 0)
          throw type_error("edge label '" + label + "' is not in the alphabet");
      }
      g.edges.push_back(edge);
    }
  }
  auto states_of = [&](const char* key) {
    std::vector<int> out;
    if (!root.contains(key)) return out;
    for (const auto& name : name_list(root[key], "\"" + std::string(key) + "\"")) {
      int v = g.state_index(name);
      if (v < 0) throw type_error(std::string(key) + " references unknown state '" + name + "'");
      out.push_back(v);
    }
    return out;
  };
  g.initial = states_of("initial");
  g.final_states = states_of("final");
  validate(g);
  return g;
}

std::string automaton_to_json(const Nfa& g) {
  json root = json::object();
  root["alphabet"] = g.alphabet;
  root["states"] = g.states;
  root["edges"] = json::array();
  for (const auto& e : g.edges)
    root["edges"].push_back({{"src", g.states[e.src]},
                             {"label", e.label < 0 ? "eps" : g.alphabet[e.label]},
                             {"tgt", g.states[e.tgt]}});
  json initial = json::array(), fin = json::array();
  for (int s : g.initial) initial.push_back(g.states[s]);
  for (int s : g.final_states) fin.push_back(g.states[s]);
  root["initial"] = initial;
  root["final"] = fin;
  return root.dump(2);
}

std::string to_dot(const DiagramCospan& c) {
  std::ostringstream out;
  out << "digraph diagram {\n  rankdir=LR;\n";
  out << "  // left: " << foot_comment(c.left, c.center.vertices) << "\n";
  out << "  // right: " << foot_comment(c.right, c.center.vertices) << "\n";
  for (const auto& v : c.center.vertices)
    out << "  " << quote_dot(v.name) << " [label=" << quote_dot(v.name + ":" + std::to_string(v.obj.size))
        << "];\n";
  for (const auto& e : c.center.edges)
    out << "  " << quote_dot(c.center.vertices[e.src].name) << " -> "
        << quote_dot(c.center.vertices[e.tgt].name)
        << " [label=" << quote_dot(e.name + "=" + table_text(e.map)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const MonoidalDiagramCospan& c) {
  std::ostringstream out;
  out << "digraph monoidal {\n  rankdir=LR;\n";
  out << "  // left: " << foot_comment(c.left, c.center.vertices) << "\n";
  out << "  // right: " << foot_comment(c.right, c.center.vertices) << "\n";
  for (const auto& v : c.center.vertices)
    out << "  " << quote_dot(v.name) << " [label=" << quote_dot(v.name + ":" + std::to_string(v.obj.size))
        << "];\n";
  for (const auto& a : c.center.arcs) {
    out << "  " << quote_dot("arc_" + a.name) << " [shape=box,label="
        << quote_dot(a.name + "=" + table_text(a.map)) << "];\n";
    for (std::size_t i = 0; i < a.src.size(); ++i)
      out << "  " << quote_dot(c.center.vertices[a.src[i]].name) << " -> "
          << quote_dot("arc_" + a.name) << " [label=\"" << i << "\"];\n";
    for (std::size_t i = 0; i < a.tgt.size(); ++i)
      out << "  " << quote_dot("arc_" + a.name) << " -> "
          << quote_dot(c.center.vertices[a.tgt[i]].name) << " [label=\"" << i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string kleene_table_text(const Nfa& g, const RegexMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.initial.size(); ++i)
    for (std::size_t f = 0; f < g.final_states.size(); ++f)
      out << g.states[g.initial[i]] << " -> " << g.states[g.final_states[f]] << ": "
          << to_text(m[i][f]) << "\n";
  return out.str();
}

std::string kleene_table_json(const Nfa& g, const RegexMatrix& m) {
  json root = json::object();
  root["alphabet"] = g.alphabet;
  json table = json::array();
  for (std::size_t i = 0; i < g.initial.size(); ++i)
    for (std::size_t f = 0; f < g.final_states.size(); ++f)
      table.push_back({{"initial", g.states[g.initial[i]]},
                       {"final", g.states[g.final_states[f]]},
                       {"regex", to_text(m[i][f])}});
  root["table"] = table;
  return root.dump(2);
}

}  // namespace cospanlim
