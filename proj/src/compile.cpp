#include "cospanlim/compile.hpp"

#include <algorithm>
#include <numeric>

#include "cospanlim/errors.hpp"

namespace cospanlim {

namespace {

ExprPtr ten_fold(const std::vector<ExprPtr>& factors) {
  if (factors.empty()) return econst(StructKind::Id, {});
  ExprPtr e = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) e = eten(e, factors[i]);
  return e;
}

ExprPtr seq_fold(const std::vector<ExprPtr>& factors) {
  ExprPtr e = factors.at(0);
  for (size_t i = 1; i < factors.size(); ++i) e = eseq(e, factors[i]);
  return e;
}

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

ExprPtr compile(const DiagramCospan& c) {
  validate(c);
  const auto& vs = c.center.vertices;
  ObjList objList;
  for (const auto& v : vs) objList.push_back(v.obj);

  ObjList domList, codList;
  std::vector<int> srcIdx, tgtIdx;
  std::vector<ExprPtr> gens;
  for (const auto& e : c.center.edges) {
    domList.push_back(vs[e.src].obj);
    codList.push_back(vs[e.tgt].obj);
    srcIdx.push_back(e.src);
    tgtIdx.push_back(e.tgt);
    gens.push_back(egen(e.name, FinFn{vs[e.src].obj, vs[e.tgt].obj, e.map.table}));
  }
  std::vector<int> vertIdx = iota(static_cast<int>(vs.size()));

  ExprPtr edges = ten_fold(gens);
  ExprPtr iCod = edisc(codList, objList, objList, tgtIdx, vertIdx);

  if (c.left.empty() && c.right.empty()) {
    ExprPtr iDom = edisc(domList, objList, objList, srcIdx, vertIdx);
    return seq_fold({econst(StructKind::Eta, domList),
                     eten(eseq(edges, iCod), iDom),
                     econst(StructKind::Eps, objList)});
  }

  ExprPtr l = edisc(c.left_objs(), objList, objList, c.left, vertIdx);
  ExprPtr iDomRev = edisc(objList, objList, domList, vertIdx, srcIdx);
  ExprPtr w = seq_fold({iDomRev, edges, iCod});
  ExprPtr r = edisc(objList, objList, c.right_objs(), vertIdx, c.right);
  return seq_fold({l, econst(StructKind::Comult, objList),
                   eten(w, econst(StructKind::Id, objList)),
                   econst(StructKind::Mult, objList), r});
}

DiagramCospan deval(const ExprPtr& e) {
  if (!e) throw type_error("empty expression");
  if (auto* c = std::get_if<ExprConst>(&e->node)) return dconstant(c->kind, c->a, c->b);
  if (auto* g = std::get_if<ExprGen>(&e->node)) {
    DiagramCospan d;
    d.center.vertices.push_back({g->fn.dom.name.empty() ? "src" : g->fn.dom.name, g->fn.dom});
    std::string codName = g->fn.cod.name.empty() ? "tgt" : g->fn.cod.name;
    if (codName == d.center.vertices[0].name) codName += "_2";
    d.center.vertices.push_back({codName, g->fn.cod});
    d.center.edges.push_back({g->name, 0, 1, g->fn});
    d.left = {0};
    d.right = {1};
    return d;
  }
  if (auto* dn = std::get_if<ExprDisc>(&e->node)) {
    boundary(e, Mode::Cospan);  // disc feet must match its middle objects
    DiagramCospan d;
    DiagramCospan shape = dconstant(StructKind::Id, dn->mid);
    d.center.vertices = shape.center.vertices;
    d.left = dn->phi;
    d.right = dn->psi;
    return d;
  }
  if (auto* s = std::get_if<ExprSeq>(&e->node)) return dcompose(deval(s->a), deval(s->b));
  const auto& t = std::get<ExprTen>(e->node);
  return dtensor(deval(t.a), deval(t.b));
}

ExprPtr reverse_expr(const ExprPtr& e) {
  if (!e) throw type_error("empty expression");
  if (auto* c = std::get_if<ExprConst>(&e->node)) {
    switch (c->kind) {
      case StructKind::Id: return e;
      case StructKind::Sym: return econst(StructKind::Sym, c->b, c->a);
      case StructKind::Mult: return econst(StructKind::Comult, c->a);
      case StructKind::Comult: return econst(StructKind::Mult, c->a);
      case StructKind::Unit: return econst(StructKind::Counit, c->a);
      case StructKind::Counit: return econst(StructKind::Unit, c->a);
      case StructKind::Eta: return econst(StructKind::Eps, c->a);
      case StructKind::Eps: return econst(StructKind::Eta, c->a);
    }
    throw type_error("unknown constant");
  }
  if (std::get_if<ExprGen>(&e->node))
    throw type_error("gen nodes have no reverse");
  if (auto* d = std::get_if<ExprDisc>(&e->node))
    return edisc(d->right, d->mid, d->left, d->psi, d->phi);
  if (auto* s = std::get_if<ExprSeq>(&e->node))
    return eseq(reverse_expr(s->b), reverse_expr(s->a));
  const auto& t = std::get<ExprTen>(e->node);
  return eten(reverse_expr(t.a), reverse_expr(t.b));
}

namespace {

// Word of symmetries then folds realizing the block map foot -> mid:
// boundary (objs, mid), cospan evaluation the forward block map against an
// identity leg.
ExprPtr block_word(const ObjList& objs, const std::vector<int>& idx, const ObjList& mid) {
  struct Block {
    int key;
    FinSet obj;
  };
  std::vector<Block> cur;
  for (size_t i = 0; i < objs.size(); ++i) cur.push_back({idx[i], objs[i]});

  std::vector<ExprPtr> factors;
  // Bubble sort with adjacent block swaps; stable, so equal keys keep order.
  for (size_t pass = 0; pass + 1 < cur.size(); ++pass)
    for (size_t p = 0; p + 1 < cur.size() - pass; ++p)
      if (cur[p].key > cur[p + 1].key) {
        ObjList prefix, suffix;
        for (size_t q = 0; q < p; ++q) prefix.push_back(cur[q].obj);
        for (size_t q = p + 2; q < cur.size(); ++q) suffix.push_back(cur[q].obj);
        ExprPtr swap = econst(StructKind::Sym, {cur[p].obj}, {cur[p + 1].obj});
        if (!prefix.empty()) swap = eten(econst(StructKind::Id, prefix), swap);
        if (!suffix.empty()) swap = eten(swap, econst(StructKind::Id, suffix));
        factors.push_back(swap);
        std::swap(cur[p], cur[p + 1]);
      }

  // Fold each group of blocks aimed at the same middle object.
  std::vector<int> count(mid.size(), 0);
  for (const auto& b : cur) ++count[b.key];
  std::vector<ExprPtr> groups;
  for (size_t j = 0; j < mid.size(); ++j) {
    if (count[j] == 0) {
      groups.push_back(econst(StructKind::Unit, {mid[j]}));
      continue;
    }
    std::vector<ExprPtr> fold;
    for (int k = count[j]; k >= 2; --k) {
      ExprPtr step = econst(StructKind::Mult, {mid[j]});
      if (k > 2) step = eten(step, econst(StructKind::Id, ObjList(k - 2, mid[j])));
      fold.push_back(step);
    }
    groups.push_back(fold.empty() ? econst(StructKind::Id, {mid[j]}) : seq_fold(fold));
  }

  ExprPtr word = ten_fold(groups);
  if (!factors.empty()) word = eseq(seq_fold(factors), word);
  return word;
}

}  // namespace

ExprPtr expand_disc(const ExprPtr& e) {
  if (!e) throw type_error("empty expression");
  if (std::get_if<ExprConst>(&e->node) || std::get_if<ExprGen>(&e->node)) return e;
  if (auto* d = std::get_if<ExprDisc>(&e->node)) {
    ExprPtr fwd = block_word(d->left, d->phi, d->mid);
    ExprPtr bwd = reverse_expr(block_word(d->right, d->psi, d->mid));
    return eseq(fwd, bwd);
  }
  if (auto* s = std::get_if<ExprSeq>(&e->node))
    return eseq(expand_disc(s->a), expand_disc(s->b));
  const auto& t = std::get<ExprTen>(e->node);
  return eten(expand_disc(t.a), expand_disc(t.b));
}

}  // namespace cospanlim
