#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckr/depgraph.hpp"
#include "testutil.hpp"

using namespace ckr;

TEST_CASE("fixtures without eval expressions are disconnected") {
  CHECK(is_eval_disconnected(ckrtest::load_fixture("korg.ckr")).disconnected);
  CHECK(is_eval_disconnected(ckrtest::load_fixture("korg1.ckr")).disconnected);
}

TEST_CASE("eval-free random repositories are disconnected") {
  std::mt19937 rng(23);
  for (int it = 0; it < 50; ++it)
    CHECK(is_eval_disconnected(ckrtest::random_sckr(rng)).disconnected);
}

namespace {

Sckr connected_example() {
  return parse_sckr(
      "relation r.\n"
      "context c1.\n"
      "context c2.\n"
      "c1 < c2 [r].\n"
      "c1: eval(A,c2) subClassOf B.\n"
      "c1: D[r](B subClassOf C).\n"
      "c2: D[r](A subClassOf B).\n");
}

}  // namespace

TEST_CASE("an eval expression can connect defeasible symbols") {
  Sckr k = connected_example();
  DisconnectVerdict v = is_eval_disconnected(k);
  REQUIRE_FALSE(v.disconnected);
  // The witness is a genuine undirected path in the graph.
  DepGraph g = build_dep_graph(k);
  REQUIRE(v.witness.size() >= 2);
  for (size_t i = 0; i + 1 < v.witness.size(); ++i) {
    bool joined = false;
    for (const auto& e : g.edges)
      if ((e.from == v.witness[i] && e.to == v.witness[i + 1]) ||
          (e.from == v.witness[i + 1] && e.to == v.witness[i]))
        joined = true;
    CHECK(joined);
  }
}

TEST_CASE("dependency graph structure") {
  Sckr k = connected_example();
  DepGraph g = build_dep_graph(k);
  // The eval vertex lives at the context holding the axiom and points into
  // the referenced context.
  DepVertex ev{"eval(A,c2)", "c1"};
  CHECK(g.vertices.count(ev) == 1);
  bool eval_edge = false;
  for (const auto& e : g.edges)
    if (e.kind == DepEdgeKind::Eval && e.from == ev &&
        e.to == DepVertex{"A", "c2"})
      eval_edge = true;
  CHECK(eval_edge);
  // Co-occurrence edges join the two sides of the eval axiom at c1.
  bool co = false;
  for (const auto& e : g.edges)
    if (e.kind == DepEdgeKind::CoOccurrence && e.from.context == "c1" &&
        e.to.context == "c1")
      co = true;
  CHECK(co);
}

TEST_CASE("eval axioms alone do not force connectedness") {
  // The eval axiom links c1 and c2, but only c2 carries a defeasible axiom,
  // so no two distinct defeasible contexts are joined.
  Sckr k = parse_sckr(
      "relation r.\n"
      "context c1.\n"
      "context c2.\n"
      "c1 < c2 [r].\n"
      "c1: eval(A,c2) subClassOf B.\n"
      "c2: D[r](A subClassOf B).\n");
  CHECK(is_eval_disconnected(k).disconnected);
}
