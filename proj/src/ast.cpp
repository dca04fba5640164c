#include "ckr/ast.hpp"

#include <algorithm>

namespace ckr {

const char* axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::RoleAssertion: return "RoleAssertion";
    case AxiomKind::Eq: return "Eq";
    case AxiomKind::Neq: return "Neq";
    case AxiomKind::SubClass: return "SubClass";
    case AxiomKind::NomSubClass: return "NomSubClass";
    case AxiomKind::SubConj: return "SubConj";
    case AxiomKind::SubEx: return "SubEx";
    case AxiomKind::SupEx: return "SupEx";
    case AxiomKind::SupForall: return "SupForall";
    case AxiomKind::SupLeqOne: return "SupLeqOne";
    case AxiomKind::SubRole: return "SubRole";
    case AxiomKind::SubRChain: return "SubRChain";
    case AxiomKind::Dis: return "Dis";
    case AxiomKind::Inv: return "Inv";
    case AxiomKind::Irr: return "Irr";
    case AxiomKind::SubEvalC: return "SubEvalC";
    case AxiomKind::SubEvalR: return "SubEvalR";
  }
  return "?";
}

bool defeasible_kind_allowed(AxiomKind k) {
  switch (k) {
    case AxiomKind::SubClass:
    case AxiomKind::SubConj:
    case AxiomKind::SubEx:
    case AxiomKind::SupEx:
    case AxiomKind::SupForall:
    case AxiomKind::SupLeqOne:
    case AxiomKind::SubRole:
    case AxiomKind::SubRChain:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
    case AxiomKind::Irr:
      return true;
    default:
      return false;
  }
}

namespace {

// Transitive closure of `edges` over the node universe.
PairSet transitive_closure(const std::vector<std::string>& nodes,
                           const PairSet& edges) {
  PairSet out = edges;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : out)
      for (const auto& [b2, c] : out)
        if (b == b2 && !out.count({a, c})) add.push_back({a, c});
    for (const auto& p : add) {
      out.insert(p);
      changed = true;
    }
    (void)nodes;
  }
  return out;
}

PairSet with_identity(PairSet s, const std::vector<std::string>& nodes) {
  for (const auto& n : nodes) s.insert({n, n});
  return s;
}

}  // namespace

OrderClosures compute_closures(const ContextStructure& s) {
  OrderClosures cl;
  PairSet all_edges;
  for (const auto& rel : s.relations) {
    PairSet edges(rel.edges.begin(), rel.edges.end());
    PairSet strict = transitive_closure(s.contexts, edges);
    for (const auto& c : s.contexts)
      if (strict.count({c, c}))
        throw CkrError("relation '" + rel.name +
                       "' is cyclic: context '" + c +
                       "' precedes itself");
    cl.prec[rel.name] = strict;
    cl.preceq[rel.name] = with_identity(strict, s.contexts);
    all_edges.insert(edges.begin(), edges.end());
  }
  cl.preceq_star =
      with_identity(transitive_closure(s.contexts, all_edges), s.contexts);
  for (const auto& rel : s.relations) {
    PairSet others;
    for (const auto& other : s.relations)
      if (other.name != rel.name)
        others.insert(other.edges.begin(), other.edges.end());
    cl.preceq_except[rel.name] =
        with_identity(transitive_closure(s.contexts, others), s.contexts);
  }
  for (const auto& rel : s.relations) {
    PairSet r;
    const PairSet& strict = cl.prec[rel.name];
    const PairSet& exc = cl.preceq_except[rel.name];
    for (const auto& [c, c2] : strict)
      for (const auto& [c2b, c1] : exc)
        if (c2 == c2b) r.insert({c, c1});
    cl.reach[rel.name] = r;
  }
  return cl;
}

namespace {

enum class Cat { Concept, Role, Individual, Context };

// Expected operand categories per axiom kind.
std::vector<Cat> operand_cats(AxiomKind k) {
  using C = Cat;
  switch (k) {
    case AxiomKind::ClassAssertion: return {C::Concept, C::Individual};
    case AxiomKind::RoleAssertion: return {C::Role, C::Individual, C::Individual};
    case AxiomKind::Eq:
    case AxiomKind::Neq: return {C::Individual, C::Individual};
    case AxiomKind::SubClass: return {C::Concept, C::Concept};
    case AxiomKind::NomSubClass: return {C::Individual, C::Concept};
    case AxiomKind::SubConj: return {C::Concept, C::Concept, C::Concept};
    case AxiomKind::SubEx: return {C::Role, C::Concept, C::Concept};
    case AxiomKind::SupEx: return {C::Concept, C::Role, C::Individual};
    case AxiomKind::SupForall: return {C::Concept, C::Role, C::Concept};
    case AxiomKind::SupLeqOne: return {C::Concept, C::Role};
    case AxiomKind::SubRole: return {C::Role, C::Role};
    case AxiomKind::SubRChain: return {C::Role, C::Role, C::Role};
    case AxiomKind::Dis:
    case AxiomKind::Inv: return {C::Role, C::Role};
    case AxiomKind::Irr: return {C::Role};
    case AxiomKind::SubEvalC: return {C::Concept, C::Context, C::Concept};
    case AxiomKind::SubEvalR: return {C::Role, C::Context, C::Role};
  }
  return {};
}

bool in_cat(const Vocabulary& v, const std::string& sym, Cat c) {
  switch (c) {
    case Cat::Concept: return v.concepts.count(sym) != 0;
    case Cat::Role: return v.roles.count(sym) != 0;
    case Cat::Individual: return v.individuals.count(sym) != 0;
    case Cat::Context: return v.contexts.count(sym) != 0;
  }
  return false;
}

const char* cat_name(Cat c) {
  switch (c) {
    case Cat::Concept: return "concept";
    case Cat::Role: return "role";
    case Cat::Individual: return "individual";
    case Cat::Context: return "context";
  }
  return "?";
}

void check_axiom(const Sckr& k, const std::string& ctx, const NormalAxiom& a,
                 std::vector<Diagnostic>& out) {
  auto cats = operand_cats(a.kind);
  if (cats.size() != a.ops.size()) {
    out.push_back({ctx, std::string("axiom of kind ") + axiom_kind_name(a.kind) +
                            " has wrong operand count"});
    return;
  }
  for (size_t i = 0; i < cats.size(); ++i)
    if (!in_cat(k.vocab, a.ops[i], cats[i]))
      out.push_back({ctx, "symbol '" + a.ops[i] + "' in axiom '" +
                              std::string(axiom_kind_name(a.kind)) +
                              "' is not a registered " + cat_name(cats[i])});
}

}  // namespace

std::vector<Diagnostic> validate_normal_form(const Sckr& k) {
  std::vector<Diagnostic> out;
  std::set<std::string> rel_names;
  for (const auto& r : k.structure.relations) rel_names.insert(r.name);
  std::set<std::string> ctx_names(k.structure.contexts.begin(),
                                  k.structure.contexts.end());
  for (const auto& [ctx, kb] : k.kbs) {
    if (!ctx_names.count(ctx))
      out.push_back({ctx, "context has a knowledge base but is not part of "
                          "the context structure"});
    for (const auto& a : kb.strict) check_axiom(k, ctx, a, out);
    for (const auto& d : kb.defeasible) {
      if (!defeasible_kind_allowed(d.body.kind))
        out.push_back({ctx, std::string("axiom of kind ") +
                                axiom_kind_name(d.body.kind) +
                                " is not allowed in a defeasible axiom"});
      else
        check_axiom(k, ctx, d.body, out);
      if (!rel_names.count(d.relation))
        out.push_back({ctx, "defeasible axiom tagged with undeclared relation '" +
                                d.relation + "'"});
    }
  }
  return out;
}

}  // namespace ckr
