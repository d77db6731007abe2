#include "cospanlim/expr.hpp"

#include <map>
#include <set>
#include <sstream>

#include "cospanlim/errors.hpp"

namespace cospanlim {

ExprPtr econst(StructKind k, ObjList a, ObjList b) {
  return std::make_shared<const Expr>(Expr{ExprConst{k, std::move(a), std::move(b)}});
}

ExprPtr egen(std::string name, FinFn fn) {
  return std::make_shared<const Expr>(Expr{ExprGen{std::move(name), std::move(fn)}});
}

ExprPtr edisc(ObjList left, ObjList mid, ObjList right, std::vector<int> phi,
              std::vector<int> psi) {
  return std::make_shared<const Expr>(
      Expr{ExprDisc{std::move(left), std::move(mid), std::move(right), std::move(phi),
                    std::move(psi)}});
}

ExprPtr eseq(ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{ExprSeq{std::move(a), std::move(b)}});
}

ExprPtr eten(ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{ExprTen{std::move(a), std::move(b)}});
}

namespace {

ObjList concat(ObjList x, const ObjList& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

void check_disc(const ExprDisc& d) {
  auto side = [&](const ObjList& objs, const std::vector<int>& idx, const char* which) {
    if (objs.size() != idx.size())
      throw type_error(std::string("disc ") + which + " foot " + list_text(objs) +
                       " needs one index per object");
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= static_cast<int>(d.mid.size()))
        throw type_error(std::string("disc ") + which + " index " + std::to_string(idx[i]) +
                         " outside mid " + list_text(d.mid));
      if (objs[i].size != d.mid[idx[i]].size)
        throw type_error(std::string("disc ") + which + " foot " + list_text(objs) +
                         " does not match mid " + list_text(d.mid) + " at position " +
                         std::to_string(i));
    }
  };
  side(d.left, d.phi, "left");
  side(d.right, d.psi, "right");
}

}  // namespace

Boundary boundary(const ExprPtr& e, Mode mode) {
  if (!e) throw type_error("empty expression");
  if (auto* c = std::get_if<ExprConst>(&e->node)) {
    if (c->kind != StructKind::Sym && !c->b.empty())
      throw type_error(to_text(c->kind) + " takes a single object list");
    switch (c->kind) {
      case StructKind::Id: return {c->a, c->a};
      case StructKind::Sym: return {concat(c->a, c->b), concat(c->b, c->a)};
      case StructKind::Mult: return {concat(c->a, c->a), c->a};
      case StructKind::Unit: return {{}, c->a};
      case StructKind::Comult: return {c->a, concat(c->a, c->a)};
      case StructKind::Counit: return {c->a, {}};
      case StructKind::Eta: return {{}, concat(c->a, c->a)};
      case StructKind::Eps: return {concat(c->a, c->a), {}};
    }
    throw type_error("unknown constant");
  }
  if (auto* g = std::get_if<ExprGen>(&e->node)) return {{g->fn.dom}, {g->fn.cod}};
  if (auto* d = std::get_if<ExprDisc>(&e->node)) {
    check_disc(*d);
    return {d->left, d->right};
  }
  if (auto* s = std::get_if<ExprSeq>(&e->node)) {
    Boundary ba = boundary(s->a, mode);
    Boundary bb = boundary(s->b, mode);
    if (flat_size(ba.right, mode) != flat_size(bb.left, mode))
      throw type_error("composition boundary mismatch: " + list_text(ba.right) + " (" +
                       std::to_string(flat_size(ba.right, mode)) + ") vs " +
                       list_text(bb.left) + " (" + std::to_string(flat_size(bb.left, mode)) +
                       ")");
    return {ba.left, bb.right};
  }
  const auto& t = std::get<ExprTen>(e->node);
  Boundary ba = boundary(t.a, mode);
  Boundary bb = boundary(t.b, mode);
  return {concat(ba.left, bb.left), concat(ba.right, bb.right)};
}

Cospan disc_cospan(const ExprDisc& d) {
  check_disc(d);
  std::vector<int> midSizes;
  for (const auto& o : d.mid) midSizes.push_back(o.size);
  SumDecomp sm = sum_of(midSizes);
  FinSet apex{sm.total, ""};
  auto leg = [&](const ObjList& objs, const std::vector<int>& idx) {
    std::vector<int> t;
    for (size_t i = 0; i < objs.size(); ++i)
      for (int x = 0; x < objs[i].size; ++x) t.push_back(sm.offset[idx[i]] + x);
    return FinFn{FinSet{static_cast<int>(t.size()), ""}, apex, std::move(t)};
  };
  return Cospan{FinSet{flat_size(d.left, Mode::Cospan), ""},
                FinSet{flat_size(d.right, Mode::Cospan), ""}, apex, leg(d.left, d.phi),
                leg(d.right, d.psi)};
}

Span disc_span(const ExprDisc& d) {
  check_disc(d);
  std::vector<int> midSizes;
  for (const auto& o : d.mid) midSizes.push_back(o.size);
  ProdDecomp pm = prod_of(midSizes);
  FinSet apex{flat_size(d.mid, Mode::Span), ""};
  auto leg = [&](const ObjList& objs, const std::vector<int>& idx) {
    std::vector<int> sizes;
    for (const auto& o : objs) sizes.push_back(o.size);
    ProdDecomp pf = prod_of(sizes);
    FinSet cod{flat_size(objs, Mode::Span), ""};
    std::vector<int> t(apex.size);
    for (int x = 0; x < apex.size; ++x) {
      long long enc = 0;
      for (size_t i = 0; i < objs.size(); ++i) {
        int comp = static_cast<int>((x / pm.stride[idx[i]]) % midSizes[idx[i]]);
        enc += comp * pf.stride[i];
      }
      t[x] = static_cast<int>(enc);
    }
    return FinFn{apex, cod, std::move(t)};
  };
  return Span{FinSet{flat_size(d.left, Mode::Span), ""},
              FinSet{flat_size(d.right, Mode::Span), ""}, apex, leg(d.left, d.phi),
              leg(d.right, d.psi)};
}

namespace {

Cospan evalC(const ExprPtr& e) {
  if (auto* c = std::get_if<ExprConst>(&e->node)) return cospan_constant(c->kind, c->a, c->b);
  if (auto* g = std::get_if<ExprGen>(&e->node)) return cospan_of_fn(g->fn);
  if (auto* d = std::get_if<ExprDisc>(&e->node)) return disc_cospan(*d);
  if (auto* s = std::get_if<ExprSeq>(&e->node)) return compose(evalC(s->a), evalC(s->b));
  const auto& t = std::get<ExprTen>(e->node);
  return tensor(evalC(t.a), evalC(t.b));
}

Span evalS(const ExprPtr& e) {
  if (auto* c = std::get_if<ExprConst>(&e->node)) return span_constant(c->kind, c->a, c->b);
  if (auto* g = std::get_if<ExprGen>(&e->node)) return span_of_fn(g->fn);
  if (auto* d = std::get_if<ExprDisc>(&e->node)) return disc_span(*d);
  if (auto* s = std::get_if<ExprSeq>(&e->node)) return compose(evalS(s->a), evalS(s->b));
  const auto& t = std::get<ExprTen>(e->node);
  return tensor(evalS(t.a), evalS(t.b));
}

}  // namespace

Cospan eval_cospan(const ExprPtr& e) {
  boundary(e, Mode::Cospan);
  return canonical(evalC(e));
}

Span eval_span(const ExprPtr& e) {
  boundary(e, Mode::Span);
  return canonical(evalS(e));
}

// ---------------------------------------------------------------------------
// Text language

namespace {

struct Token {
  enum Kind {
    Ident,
    Int,
    LPar,
    RPar,
    LBrk,
    RBrk,
    Semi,
    Star,
    Plus,
    Comma,
    Colon,
    Eq,
    Arrow,      // ->
    BackArrow,  // <-
    End
  };
  Kind kind;
  std::string text;
  long long num = 0;
  int line = 1, col = 1;
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Ident: return "name";
    case Token::Int: return "number";
    case Token::LPar: return "'('";
    case Token::RPar: return "')'";
    case Token::LBrk: return "'['";
    case Token::RBrk: return "']'";
    case Token::Semi: return "';'";
    case Token::Star: return "'*'";
    case Token::Plus: return "'+'";
    case Token::Comma: return "','";
    case Token::Colon: return "':'";
    case Token::Eq: return "'='";
    case Token::Arrow: return "'->'";
    case Token::BackArrow: return "'<-'";
    case Token::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, long long num = 0) {
    out.push_back(Token{k, std::move(text), num, line, col});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      push(Token::Ident, src.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      long long v = 0;
      while (j < src.size() && isdigit(static_cast<unsigned char>(src[j]))) {
        v = v * 10 + (src[j] - '0');
        if (v > (1LL << 31)) throw parse_error("number too large", line, col);
        ++j;
      }
      push(Token::Int, src.substr(i, j - i), v);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      push(Token::Arrow, "->");
      col += 2;
      i += 2;
      continue;
    }
    if (c == '<' && i + 1 < src.size() && src[i + 1] == '-') {
      push(Token::BackArrow, "<-");
      col += 2;
      i += 2;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::LPar; break;
      case ')': k = Token::RPar; break;
      case '[': k = Token::LBrk; break;
      case ']': k = Token::RBrk; break;
      case ';': k = Token::Semi; break;
      case '*': k = Token::Star; break;
      case '+': k = Token::Plus; break;
      case ',': k = Token::Comma; break;
      case ':': k = Token::Colon; break;
      case '=': k = Token::Eq; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
    push(k, std::string(1, c));
    ++col;
    ++i;
  }
  out.push_back(Token{Token::End, "", 0, line, col});
  return out;
}

const std::set<std::string> kReserved = {"obj",  "gen",    "id",  "sym",  "mult", "comult",
                                         "unit", "counit", "eta", "eps",  "disc"};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  std::map<std::string, FinSet> objs;
  std::map<std::string, FinFn> gens;

  const Token& peek(int k = 0) const {
    size_t i = pos + k;
    return i < toks.size() ? toks[i] : toks.back();
  }

  Token expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw parse_error(std::string("expected ") + what + ", found " +
                            (peek().kind == Token::Ident ? "'" + peek().text + "'"
                                                         : token_name(peek().kind)),
                        peek().line, peek().col);
    return toks[pos++];
  }

  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos;
    return true;
  }

  FinSet resolve_obj(const Token& t) const {
    auto it = objs.find(t.text);
    if (it == objs.end())
      throw parse_error("unknown object '" + t.text + "'", t.line, t.col);
    return it->second;
  }

  std::vector<int> parse_table() {
    expect(Token::LBrk, "'['");
    std::vector<int> t;
    if (!accept(Token::RBrk)) {
      do {
        Token n = expect(Token::Int, "number");
        t.push_back(static_cast<int>(n.num));
      } while (accept(Token::Comma));
      expect(Token::RBrk, "']'");
    }
    return t;
  }

  void parse_preamble() {
    while (peek().kind == Token::Ident && peek(1).kind == Token::Ident &&
           (peek().text == "obj" || peek().text == "gen")) {
      Token kw = toks[pos++];
      Token name = expect(Token::Ident, "name");
      if (kReserved.count(name.text))
        throw parse_error("'" + name.text + "' is a reserved word", name.line, name.col);
      if (kw.text == "obj") {
        if (objs.count(name.text))
          throw parse_error("object '" + name.text + "' declared twice", name.line, name.col);
        expect(Token::Eq, "'='");
        Token size = expect(Token::Int, "number");
        objs[name.text] = FinSet{static_cast<int>(size.num), name.text};
      } else {
        if (gens.count(name.text))
          throw parse_error("generator '" + name.text + "' declared twice", name.line,
                            name.col);
        expect(Token::Colon, "':'");
        FinSet dom = resolve_obj(expect(Token::Ident, "object name"));
        expect(Token::Arrow, "'->'");
        FinSet cod = resolve_obj(expect(Token::Ident, "object name"));
        expect(Token::Eq, "'='");
        gens.emplace(name.text, make_fn(dom, cod, parse_table()));
      }
    }
  }

  // `+`-joined object names; empty before ')' or ','.
  ObjList parse_objsum() {
    ObjList objs_;
    if (peek().kind == Token::RPar || peek().kind == Token::Comma) return objs_;
    objs_.push_back(resolve_obj(expect(Token::Ident, "object name")));
    while (accept(Token::Plus))
      objs_.push_back(resolve_obj(expect(Token::Ident, "object name")));
    return objs_;
  }

  // Bracketed comma-separated object names, as used by disc.
  ObjList parse_objlist() {
    expect(Token::LBrk, "'['");
    ObjList objs_;
    if (!accept(Token::RBrk)) {
      do {
        objs_.push_back(resolve_obj(expect(Token::Ident, "object name")));
      } while (accept(Token::Comma));
      expect(Token::RBrk, "']'");
    }
    return objs_;
  }

  ExprPtr parse_atom() {
    if (accept(Token::LPar)) {
      ExprPtr e = parse_seq();
      expect(Token::RPar, "')'");
      return e;
    }
    Token t = expect(Token::Ident, "expression");
    if (t.text == "gen") {
      expect(Token::LPar, "'('");
      Token name = expect(Token::Ident, "generator name");
      auto it = gens.find(name.text);
      if (it == gens.end())
        throw parse_error("unknown generator '" + name.text + "'", name.line, name.col);
      expect(Token::RPar, "')'");
      return egen(name.text, it->second);
    }
    if (t.text == "disc") {
      expect(Token::LPar, "'('");
      ObjList left = parse_objlist();
      expect(Token::Arrow, "'->'");
      ObjList mid = parse_objlist();
      expect(Token::BackArrow, "'<-'");
      ObjList right = parse_objlist();
      expect(Token::Semi, "';'");
      std::vector<int> phi = parse_table();
      expect(Token::Semi, "';'");
      std::vector<int> psi = parse_table();
      expect(Token::RPar, "')'");
      return edisc(std::move(left), std::move(mid), std::move(right), std::move(phi),
                   std::move(psi));
    }
    StructKind k;
    if (t.text == "id") k = StructKind::Id;
    else if (t.text == "sym") k = StructKind::Sym;
    else if (t.text == "mult") k = StructKind::Mult;
    else if (t.text == "unit") k = StructKind::Unit;
    else if (t.text == "comult") k = StructKind::Comult;
    else if (t.text == "counit") k = StructKind::Counit;
    else if (t.text == "eta") k = StructKind::Eta;
    else if (t.text == "eps") k = StructKind::Eps;
    else
      throw parse_error("unknown expression head '" + t.text + "'", t.line, t.col);
    expect(Token::LPar, "'('");
    ObjList a = parse_objsum();
    ObjList b;
    if (k == StructKind::Sym) {
      expect(Token::Comma, "','");
      b = parse_objsum();
    }
    expect(Token::RPar, "')'");
    return econst(k, std::move(a), std::move(b));
  }

  ExprPtr parse_ten() {
    ExprPtr e = parse_atom();
    while (accept(Token::Star)) e = eten(e, parse_atom());
    return e;
  }

  ExprPtr parse_seq() {
    ExprPtr e = parse_ten();
    while (accept(Token::Semi)) e = eseq(e, parse_ten());
    return e;
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  p.parse_preamble();
  ExprPtr e = p.parse_seq();
  if (p.peek().kind != Token::End)
    throw parse_error(std::string("unexpected ") + token_name(p.peek().kind) +
                          " after expression",
                      p.peek().line, p.peek().col);
  return e;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string table_text(const std::vector<int>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

// Optional consistent renaming used when emitting a reparseable file.
struct NameCtx {
  std::map<std::pair<std::string, int>, std::string> obj;
  const std::string& obj_name(const FinSet& o, std::string& scratch) const {
    auto it = obj.find({o.name, o.size});
    if (it != obj.end()) return it->second;
    scratch = o.name.empty() ? std::to_string(o.size) : o.name;
    return scratch;
  }
};

struct ExprPrinter {
  const NameCtx* ctx = nullptr;

  std::string obj(const FinSet& o) const {
    std::string scratch;
    if (ctx) return ctx->obj_name(o, scratch);
    return o.name.empty() ? std::to_string(o.size) : o.name;
  }

  std::string objsum(const ObjList& objs) const {
    std::string s;
    for (size_t i = 0; i < objs.size(); ++i) {
      if (i) s += "+";
      s += obj(objs[i]);
    }
    return s;
  }

  std::string objlist(const ObjList& objs) const {
    std::string s = "[";
    for (size_t i = 0; i < objs.size(); ++i) {
      if (i) s += ",";
      s += obj(objs[i]);
    }
    return s + "]";
  }

  std::string atom(const ExprPtr& e) const {
    if (auto* c = std::get_if<ExprConst>(&e->node)) {
      if (c->kind == StructKind::Sym)
        return "sym(" + objsum(c->a) + ", " + objsum(c->b) + ")";
      return to_text(c->kind) + "(" + objsum(c->a) + ")";
    }
    if (auto* g = std::get_if<ExprGen>(&e->node)) return "gen(" + g->name + ")";
    if (auto* d = std::get_if<ExprDisc>(&e->node))
      return "disc(" + objlist(d->left) + " -> " + objlist(d->mid) + " <- " +
             objlist(d->right) + "; " + table_text(d->phi) + "; " + table_text(d->psi) + ")";
    return "(" + seq(e) + ")";
  }

  std::string ten(const ExprPtr& e) const {
    if (auto* t = std::get_if<ExprTen>(&e->node)) return ten(t->a) + " * " + ten(t->b);
    if (std::holds_alternative<ExprSeq>(e->node)) return "(" + seq(e) + ")";
    return atom(e);
  }

  std::string seq(const ExprPtr& e) const {
    if (auto* s = std::get_if<ExprSeq>(&e->node)) return seq(s->a) + " ; " + seq(s->b);
    return ten(e);
  }
};

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
  std::string name = base.empty() ? "x" : base;
  if (!kReserved.count(name) && used.insert(name).second) return name;
  for (int k = 2;; ++k) {
    std::string alt = name + "_" + std::to_string(k);
    if (used.insert(alt).second) return alt;
  }
}

}  // namespace

std::string print_expr(const ExprPtr& e) { return ExprPrinter{}.seq(e); }

std::string print_expr_file(const ExprPtr& e) {
  NameCtx ctx;
  std::vector<std::pair<std::string, int>> objOrder;  // final name, size
  std::set<std::string> usedObj;
  struct GenDecl {
    std::string name;
    FinFn fn;
  };
  std::vector<GenDecl> genOrder;

  auto addObj = [&](const FinSet& o) {
    std::pair<std::string, int> key{o.name, o.size};
    if (ctx.obj.count(key)) return;
    std::string base = o.name.empty() ? "_" + std::to_string(o.size) : o.name;
    std::string name = fresh_name(base, usedObj);
    ctx.obj[key] = name;
    objOrder.push_back({name, o.size});
  };
  auto addObjs = [&](const ObjList& objs) {
    for (const auto& o : objs) addObj(o);
  };

  auto walk = [&](auto&& self, const ExprPtr& n) -> void {
    if (auto* c = std::get_if<ExprConst>(&n->node)) {
      addObjs(c->a);
      addObjs(c->b);
    } else if (auto* g = std::get_if<ExprGen>(&n->node)) {
      addObj(g->fn.dom);
      addObj(g->fn.cod);
      bool seen = false;
      for (const auto& prev : genOrder)
        if (prev.name == g->name) {
          // gen() references print by name, so one name must mean one map.
          if (!same_fn(prev.fn, g->fn))
            throw type_error("generator name '" + g->name + "' is used for two different maps");
          seen = true;
        }
      if (!seen) {
        if (g->name.empty() || kReserved.count(g->name))
          throw type_error("generator name '" + g->name + "' cannot be declared");
        genOrder.push_back({g->name, g->fn});
      }
    } else if (auto* d = std::get_if<ExprDisc>(&n->node)) {
      addObjs(d->left);
      addObjs(d->mid);
      addObjs(d->right);
    } else if (auto* s = std::get_if<ExprSeq>(&n->node)) {
      self(self, s->a);
      self(self, s->b);
    } else {
      const auto& t = std::get<ExprTen>(n->node);
      self(self, t.a);
      self(self, t.b);
    }
  };
  walk(walk, e);

  std::ostringstream os;
  for (const auto& [name, size] : objOrder) os << "obj " << name << " = " << size << "\n";
  std::string scratch;
  for (const auto& g : genOrder)
    os << "gen " << g.name << " : " << ctx.obj_name(g.fn.dom, scratch) << " -> "
       << ctx.obj_name(g.fn.cod, scratch) << " = " << table_text(g.fn.table) << "\n";
  ExprPrinter printer{&ctx};
  os << printer.seq(e) << "\n";
  return os.str();
}

}  // namespace cospanlim
