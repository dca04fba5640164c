#include "ckr/depgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ckr {

namespace {

struct SideExpr {
  std::string rendered;
  std::vector<std::string> subexprs;            // same-context atomic parts
  std::vector<DepVertex> eval_targets;          // kind-(iii) targets
};

// Top-level side expressions of an axiom, with their atomic subexpressions.
std::vector<SideExpr> side_exprs(const NormalAxiom& a) {
  const auto& o = a.ops;
  switch (a.kind) {
    case AxiomKind::ClassAssertion: return {{o[0], {}, {}}};
    case AxiomKind::RoleAssertion: return {{o[0], {}, {}}};
    case AxiomKind::Eq:
    case AxiomKind::Neq: return {};
    case AxiomKind::SubClass: return {{o[0], {}, {}}, {o[1], {}, {}}};
    case AxiomKind::NomSubClass:
      return {{"{" + o[0] + "}", {}, {}}, {o[1], {}, {}}};
    case AxiomKind::SubConj:
      return {{o[0] + " and " + o[1], {o[0], o[1]}, {}}, {o[2], {}, {}}};
    case AxiomKind::SubEx:
      return {{"exists " + o[0] + "." + o[1], {o[0], o[1]}, {}}, {o[2], {}, {}}};
    case AxiomKind::SupEx:
      return {{o[0], {}, {}},
              {"exists " + o[1] + ".{" + o[2] + "}", {o[1]}, {}}};
    case AxiomKind::SupForall:
      return {{o[0], {}, {}}, {"forall " + o[1] + "." + o[2], {o[1], o[2]}, {}}};
    case AxiomKind::SupLeqOne:
      return {{o[0], {}, {}}, {"atmost1 " + o[1], {o[1]}, {}}};
    case AxiomKind::SubRole: return {{o[0], {}, {}}, {o[1], {}, {}}};
    case AxiomKind::SubRChain:
      return {{o[0] + " o " + o[1], {o[0], o[1]}, {}}, {o[2], {}, {}}};
    case AxiomKind::Dis:
    case AxiomKind::Inv: return {{o[0], {}, {}}, {o[1], {}, {}}};
    case AxiomKind::Irr: return {{o[0], {}, {}}};
    case AxiomKind::SubEvalC:
      return {{"eval(" + o[0] + "," + o[1] + ")", {}, {{o[0], o[1]}}},
              {o[2], {}, {}}};
    case AxiomKind::SubEvalR:
      return {{"eval(" + o[0] + "," + o[1] + ")", {}, {{o[0], o[1]}}},
              {o[2], {}, {}}};
  }
  return {};
}

void add_axiom(DepGraph& g, const std::string& c, const NormalAxiom& a) {
  auto sides = side_exprs(a);
  std::vector<DepVertex> tops;
  for (const auto& s : sides) {
    DepVertex v{s.rendered, c};
    g.vertices.insert(v);
    tops.push_back(v);
    for (const auto& sub : s.subexprs) {
      DepVertex sv{sub, c};
      g.vertices.insert(sv);
      g.edges.insert({v, sv, DepEdgeKind::Subexpression});
    }
    for (const auto& tgt : s.eval_targets) {
      g.vertices.insert(tgt);
      g.edges.insert({v, tgt, DepEdgeKind::Eval});
    }
  }
  for (size_t i = 0; i < tops.size(); ++i)
    for (size_t j = i + 1; j < tops.size(); ++j)
      g.edges.insert({tops[i], tops[j], DepEdgeKind::CoOccurrence});
}

}  // namespace

DepGraph build_dep_graph(const Sckr& k) {
  DepGraph g;
  for (const auto& [c, kb] : k.kbs) {
    for (const auto& a : kb.strict) add_axiom(g, c, a);
    for (const auto& d : kb.defeasible) add_axiom(g, c, d.body);
  }
  return g;
}

DisconnectVerdict is_eval_disconnected(const Sckr& k) {
  DepGraph g = build_dep_graph(k);
  std::map<DepVertex, std::vector<DepVertex>> adj;
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  // Vertices stemming from defeasible axioms, per context.
  std::map<std::string, std::set<DepVertex>> def_vertices;
  for (const auto& [c, kb] : k.kbs)
    for (const auto& d : kb.defeasible)
      for (const auto& s : side_exprs(d.body)) {
        def_vertices[c].insert({s.rendered, c});
        for (const auto& sub : s.subexprs) def_vertices[c].insert({sub, c});
      }
  for (const auto& [c, starts] : def_vertices) {
    // BFS once per context over the undirected graph.
    std::map<DepVertex, DepVertex> parent;
    std::deque<DepVertex> q;
    for (const auto& v : starts) {
      parent.emplace(v, v);
      q.push_back(v);
    }
    while (!q.empty()) {
      DepVertex v = q.front();
      q.pop_front();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (const auto& w : it->second)
        if (!parent.count(w)) {
          parent.emplace(w, v);
          q.push_back(w);
        }
    }
    for (const auto& [c2, starts2] : def_vertices) {
      if (c2 == c) continue;
      for (const auto& v2 : starts2) {
        if (!parent.count(v2)) continue;
        DisconnectVerdict verdict;
        verdict.disconnected = false;
        DepVertex cur = v2;
        while (true) {
          verdict.witness.push_back(cur);
          DepVertex p = parent.at(cur);
          if (p == cur) break;
          cur = p;
        }
        std::reverse(verdict.witness.begin(), verdict.witness.end());
        return verdict;
      }
    }
  }
  return {};
}

}  // namespace ckr
