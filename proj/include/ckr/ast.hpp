// Core domain model: vocabulary, axioms, context structures and order closures
// for multi-relational simple contextualized knowledge repositories.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ckr {

class CkrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public CkrError {
 public:
  ParseError(const std::string& msg, int line, int col)
      : CkrError(msg + " (line " + std::to_string(line) + ", column " +
                 std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

class CapExceeded : public CkrError {
 public:
  using CkrError::CkrError;
};

enum class AxiomKind {
  ClassAssertion,  // A(a)            ops: A, a
  RoleAssertion,   // R(a,b)          ops: R, a, b
  Eq,              // a = b           ops: a, b
  Neq,             // a != b          ops: a, b
  SubClass,        // A ⊑ B           ops: A, B
  NomSubClass,     // {a} ⊑ B         ops: a, B
  SubConj,         // A ⊓ B ⊑ C       ops: A, B, C
  SubEx,           // ∃R.A ⊑ B        ops: R, A, B
  SupEx,           // A ⊑ ∃R.{a}      ops: A, R, a
  SupForall,       // A ⊑ ∀R.B        ops: A, R, B
  SupLeqOne,       // A ⊑ ≤1 R.⊤      ops: A, R
  SubRole,         // R ⊑ T           ops: R, T
  SubRChain,       // R∘S ⊑ T         ops: R, S, T
  Dis,             // Dis(R,S)        ops: R, S
  Inv,             // Inv(R,S)        ops: R, S
  Irr,             // Irr(R)          ops: R
  SubEvalC,        // eval(A,c') ⊑ B  ops: A, c', B
  SubEvalR,        // eval(R,c') ⊑ S  ops: R, c', S
};

const char* axiom_kind_name(AxiomKind k);

struct NormalAxiom {
  AxiomKind kind;
  std::vector<std::string> ops;
  auto operator<=>(const NormalAxiom&) const = default;
};

struct DefeasibleAxiom {
  std::string relation;
  NormalAxiom body;
  auto operator<=>(const DefeasibleAxiom&) const = default;
};

// True iff `k` may appear under D_rel(...) (inclusions only: no assertions,
// no (in)equalities, no eval expressions).
bool defeasible_kind_allowed(AxiomKind k);

struct ContextKB {
  std::vector<NormalAxiom> strict;
  std::vector<DefeasibleAxiom> defeasible;
  auto operator<=>(const ContextKB&) const = default;
};

struct Relation {
  std::string name;
  // Input edges c1 < c2; the strict order is their transitive closure.
  std::vector<std::pair<std::string, std::string>> edges;
  auto operator<=>(const Relation&) const = default;
};

struct ContextStructure {
  std::vector<std::string> contexts;   // declaration order
  std::vector<Relation> relations;     // declaration order = priority (1 = highest)
  auto operator<=>(const ContextStructure&) const = default;
};

struct Vocabulary {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;  // includes context names (N ⊆ NI)
  std::set<std::string> contexts;
  auto operator<=>(const Vocabulary&) const = default;
};

struct Sckr {
  ContextStructure structure;
  std::map<std::string, ContextKB> kbs;
  Vocabulary vocab;
  auto operator<=>(const Sckr&) const = default;

  const ContextKB* kb(const std::string& c) const {
    auto it = kbs.find(c);
    return it == kbs.end() ? nullptr : &it->second;
  }
};

using PairSet = std::set<std::pair<std::string, std::string>>;

struct OrderClosures {
  // Strict orders: transitive closure of the input edges, per relation.
  std::map<std::string, PairSet> prec;
  // Reflexive-transitive closure per relation.
  std::map<std::string, PairSet> preceq;
  // Closure of the union of all *other* relations (identity when only one
  // relation exists).
  std::map<std::string, PairSet> preceq_except;
  // Closure of the union of all relations.
  PairSet preceq_star;
  // Derived guard: reach[r] = {(c,c1) | exists c2: c ≺_r c2 and c2 ⪯_{-r} c1},
  // the pair set under which r-defeasible axioms declared at c1 are visible
  // (and overridable) at c.
  std::map<std::string, PairSet> reach;

  bool holds(const PairSet& s, const std::string& a, const std::string& b) const {
    return s.count({a, b}) != 0;
  }
};

// Computes all closure families. Throws CkrError when some relation's
// transitive closure is reflexive (cycle), naming an offending cycle.
OrderClosures compute_closures(const ContextStructure& s);

struct Diagnostic {
  std::string context;
  std::string message;
};

// Empty iff every axiom fits a normal-form shape, every defeasible body is an
// allowed defeasible shape, all symbols are registered consistently and eval
// targets / relation tags are declared.
std::vector<Diagnostic> validate_normal_form(const Sckr& k);

}  // namespace ckr
