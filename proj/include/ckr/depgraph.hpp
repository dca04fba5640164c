// Concept/role-context dependency graph and eval-disconnectedness.
#pragma once

#include <string>
#include <vector>

#include "ckr/ast.hpp"

namespace ckr {

struct DepVertex {
  std::string expr;     // rendered expression, e.g. "A", "exists R.A", "eval(A,c2)"
  std::string context;
  auto operator<=>(const DepVertex&) const = default;
};

enum class DepEdgeKind {
  Subexpression,  // (i)  X_c -> X'_c, X' a subexpression of X
  CoOccurrence,   // (ii) X_c -> X'_c, X and X' co-occur in an axiom
  Eval,           // (iii) eval(X',c')_c -> X'_{c'}
};

struct DepEdge {
  DepVertex from;
  DepVertex to;
  DepEdgeKind kind;
  auto operator<=>(const DepEdge&) const = default;
};

struct DepGraph {
  std::set<DepVertex> vertices;
  std::set<DepEdge> edges;
};

DepGraph build_dep_graph(const Sckr& k);

struct DisconnectVerdict {
  bool disconnected = true;
  // When connected: a witness path of vertices whose consecutive members are
  // joined by graph edges (in either direction).
  std::vector<DepVertex> witness;
};

// True iff no undirected path of DEP(k) connects X_c and X'_{c'} for symbols
// X, X' occurring in defeasible axioms at distinct contexts c != c'.
DisconnectVerdict is_eval_disconnected(const Sckr& k);

}  // namespace ckr
