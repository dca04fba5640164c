#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace ckr;

TEST_CASE("fixture parsing: organization repository") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  CHECK(k.structure.contexts.size() == 9);
  REQUIRE(k.structure.relations.size() == 2);
  CHECK(k.structure.relations[0].name == "time");
  CHECK(k.structure.relations[1].name == "covers");
  REQUIRE(k.kb("c_world_2019") != nullptr);
  CHECK(k.kb("c_world_2019")->defeasible.size() == 1);
  CHECK(k.kb("c_world_2019")->defeasible[0].relation == "covers");
  CHECK(k.kb("c_world_2019")->defeasible[0].body ==
        NormalAxiom{AxiomKind::SubClass, {"S", "E"}});
  CHECK(k.kb("c_world_2019")->strict[0] ==
        NormalAxiom{AxiomKind::SubConj, {"E", "R", "Bot"}});
  CHECK(k.kb("c_local_2020")->strict[0] ==
        NormalAxiom{AxiomKind::ClassAssertion, {"S", "i"}});
  CHECK(validate_normal_form(k).empty());
}

TEST_CASE("parser handles every axiom shape") {
  const char* text =
      "relation r.\n"
      "context c1.\n"
      "context c2.\n"
      "c1 < c2 [r].\n"
      "c1: A(a).\n"
      "c1: p(a,b).\n"
      "c1: a = b.\n"
      "c1: a != b.\n"
      "c1: A subClassOf B.\n"
      "c1: {a} subClassOf B.\n"
      "c1: A and B subClassOf C.\n"
      "c1: exists p.A subClassOf B.\n"
      "c1: A subClassOf exists p.{a}.\n"
      "c1: A subClassOf forall p.B.\n"
      "c1: A subClassOf atmost1 p.\n"
      "c1: p subRoleOf q.\n"
      "c1: p o q subRoleOf s.\n"
      "c1: disjoint(p,q).\n"
      "c1: inverse(p,q).\n"
      "c1: irreflexive(p).\n"
      "c1: eval(A,c2) subClassOf B.\n"
      "c1: eval(p,c2) subRoleOf q.\n"
      "c2: D[r](A subClassOf B).\n";
  Sckr k = parse_sckr(text);
  CHECK(k.kb("c1")->strict.size() == 18);
  CHECK(k.kb("c2")->defeasible.size() == 1);
  CHECK(validate_normal_form(k).empty());
  // Round trip through the pretty printer.
  CHECK(parse_sckr(print_sckr(k)) == k);
}

TEST_CASE("parser reports positions and conflicts") {
  CHECK_THROWS_AS(parse_sckr("relation r.\ncontext c.\nc: A("), ParseError);
  CHECK_THROWS_AS(parse_sckr("context c.\nc < c [r]."), ParseError);
  // Symbol used both as concept and role.
  CHECK_THROWS_AS(parse_sckr("context c.\nc: A(a).\nc: A(a,b)."), ParseError);
  // Unknown relation tag in a defeasible axiom.
  CHECK_THROWS_AS(parse_sckr("context c.\nc: D[r](A subClassOf B)."),
                  ParseError);
  try {
    parse_sckr("context c.\nc: A subClassOf .");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("defeasible axioms reject assertion shapes") {
  Sckr k = parse_sckr("relation r.\ncontext c.\n");
  k.kbs["c"].defeasible.push_back(
      {"r", {AxiomKind::ClassAssertion, {"A", "a"}}});
  k.vocab.concepts.insert("A");
  k.vocab.individuals.insert("a");
  CHECK_FALSE(validate_normal_form(k).empty());
}

TEST_CASE("closures on the organization structure") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  OrderClosures cl = compute_closures(k.structure);
  // time chains are transitive.
  CHECK(cl.holds(cl.prec.at("time"), "c_world_2021", "c_world_2019"));
  CHECK_FALSE(cl.holds(cl.prec.at("time"), "c_world_2019", "c_world_2021"));
  CHECK_FALSE(cl.holds(cl.prec.at("time"), "c_local_2021", "c_branch_2021"));
  CHECK(cl.holds(cl.prec.at("covers"), "c_local_2020", "c_world_2020"));
  // preceq is reflexive, prec is not.
  CHECK(cl.holds(cl.preceq.at("time"), "c_local_2019", "c_local_2019"));
  CHECK_FALSE(cl.holds(cl.prec.at("time"), "c_local_2019", "c_local_2019"));
  // the union closure mixes relations.
  CHECK(cl.holds(cl.preceq_star, "c_local_2021", "c_world_2019"));
  // the exception closure of time uses covers only.
  CHECK(cl.holds(cl.preceq_except.at("time"), "c_local_2020", "c_world_2020"));
  CHECK_FALSE(
      cl.holds(cl.preceq_except.at("time"), "c_local_2020", "c_local_2019"));
  // reach[covers]: one covers-step, then non-covers closure.
  CHECK(cl.holds(cl.reach.at("covers"), "c_local_2020", "c_world_2019"));
  CHECK_FALSE(cl.holds(cl.reach.at("covers"), "c_world_2019", "c_world_2019"));
}

TEST_CASE("single relation: exception closure is the identity") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  for (const auto& p : cl.preceq_except.at("covers")) CHECK(p.first == p.second);
  for (const auto& c : k.structure.contexts)
    CHECK(cl.holds(cl.preceq_except.at("covers"), c, c));
}

TEST_CASE("cyclic relations are rejected") {
  Sckr k = parse_sckr(
      "relation r.\ncontext c1.\ncontext c2.\n"
      "c1 < c2 [r].\nc2 < c1 [r].\n");
  CHECK_THROWS_AS(compute_closures(k.structure), CkrError);
}

TEST_CASE("closure properties on random structures") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    Sckr k = ckrtest::random_sckr(rng);
    OrderClosures cl = compute_closures(k.structure);
    const auto& ctxs = k.structure.contexts;
    for (const auto& r : k.structure.relations) {
      const PairSet& prec = cl.prec.at(r.name);
      const PairSet& preceq = cl.preceq.at(r.name);
      // transitivity of prec and preceq
      for (const auto& [a, b] : prec)
        for (const auto& [b2, c] : prec)
          if (b == b2) CHECK(cl.holds(prec, a, c));
      // preceq = prec + identity
      for (const auto& c : ctxs) CHECK(cl.holds(preceq, c, c));
      for (const auto& [a, b] : prec) CHECK(cl.holds(preceq, a, b));
      CHECK(preceq.size() == prec.size() + ctxs.size());
      // reach agrees with its defining composition
      for (const auto& a : ctxs)
        for (const auto& c : ctxs) {
          bool expect = false;
          for (const auto& b : ctxs)
            if (cl.holds(prec, a, b) &&
                cl.holds(cl.preceq_except.at(r.name), b, c))
              expect = true;
          CHECK(cl.holds(cl.reach.at(r.name), a, c) == expect);
        }
      // every preceq pair is in the union closure
      for (const auto& p : preceq) CHECK(cl.preceq_star.count(p) == 1);
    }
  }
}

TEST_CASE("print/parse round trip on random repositories") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Sckr k = ckrtest::random_sckr(rng);
    CHECK(validate_normal_form(k).empty());
    Sckr back = parse_sckr(print_sckr(k));
    CHECK(back.structure == k.structure);
    CHECK(back.kbs == k.kbs);
  }
}
