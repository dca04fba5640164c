#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckr/depgraph.hpp"
#include "testutil.hpp"

using namespace ckr;

namespace {

ClashingAssumption ca_subclass(const std::string& a, const std::string& b,
                               const std::string& at, const std::string& rel,
                               const std::string& inst = "i") {
  ClashingAssumption ca;
  ca.kind = AxiomKind::SubClass;
  ca.operands = {a, b};
  ca.instance = {inst};
  ca.declared_at = at;
  ca.relation = rel;
  return ca;
}

// A single-relation chain c0 < c1 < ... < c(n-1) with two defeasible
// inclusions declared at every non-bottom context; the pool collects the
// corresponding clashing assumptions, all overridable at c0.
struct ChainPool {
  Sckr k;
  OrderClosures cl;
  std::vector<ClashingAssumption> pool;
};

ChainPool make_chain(int n) {
  ChainPool out;
  out.k.structure.relations.push_back({"r", {}});
  for (int i = 0; i < n; ++i) {
    std::string c = "c" + std::to_string(i);
    out.k.structure.contexts.push_back(c);
    if (i > 0)
      out.k.structure.relations[0].edges.push_back(
          {"c" + std::to_string(i - 1), c});
  }
  out.cl = compute_closures(out.k.structure);
  for (int i = 1; i < n; ++i) {
    std::string c = "c" + std::to_string(i);
    out.pool.push_back(ca_subclass("A" + std::to_string(i), "B", c, "r"));
    out.pool.push_back(ca_subclass("A" + std::to_string(i), "C", c, "r"));
  }
  return out;
}

ClashSet random_subset(const std::vector<ClashingAssumption>& pool,
                       std::mt19937& rng) {
  ClashSet out;
  for (const auto& ca : pool)
    if (rng() % 2) out.insert(ca);
  return out;
}

}  // namespace

TEST_CASE("clash witnesses follow the order guard") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  ClashingAssumption e = ca_subclass("S", "E", "c_world", "covers");
  auto w = clash_witnesses(cl, e, "c_local1");
  CHECK(w == std::vector<std::string>{"c_world"});
  // Not overridable at its own declaration context.
  CHECK(clash_witnesses(cl, e, "c_world").empty());
}

TEST_CASE("local preference on the single-relation fixture") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  ClashingAssumption e = ca_subclass("S", "E", "c_world", "covers");
  ClashingAssumption m = ca_subclass("S", "M", "c_branch1", "covers");
  ClashingAssumption r = ca_subclass("S", "R", "c_branch2", "covers");
  ClashSet er{e, r}, em{e, m}, mr{m, r};
  // {S⊑E, S⊑R} trades the branch1 exception for cheaper, higher ones.
  CHECK(local_pref_gt(er, em, "c_local1", "covers", cl));
  CHECK(local_pref_gt(er, mr, "c_local1", "covers", cl));
  CHECK_FALSE(local_pref_gt(em, er, "c_local1", "covers", cl));
  CHECK_FALSE(local_pref_gt(mr, er, "c_local1", "covers", cl));
  // em vs mr: the e-exception at c_world outranks the r-exception at
  // c_branch2, and m cancels out.
  CHECK(local_pref_gt(em, mr, "c_local1", "covers", cl));
  CHECK_FALSE(local_pref_gt(mr, em, "c_local1", "covers", cl));
  // Equality never compares strictly.
  CHECK_FALSE(local_pref_gt(er, er, "c_local1", "covers", cl));
  // A guard failure is reported.
  ClashSet bad{ca_subclass("S", "E", "c_world", "covers")};
  CHECK_THROWS_AS(local_pref_gt(bad, {}, "c_world", "covers", cl), CkrError);
}

TEST_CASE("local preference is transitive on random clash-set triples") {
  ChainPool chain = make_chain(5);
  std::mt19937 rng(31);
  int compared = 0;
  for (int it = 0; it < 1000; ++it) {
    ClashSet a = random_subset(chain.pool, rng);
    ClashSet b = random_subset(chain.pool, rng);
    ClashSet c = random_subset(chain.pool, rng);
    bool ab = local_pref_gt(a, b, "c0", "r", chain.cl);
    bool bc = local_pref_gt(b, c, "c0", "r", chain.cl);
    if (ab && bc) {
      ++compared;
      CHECK(local_pref_gt(a, c, "c0", "r", chain.cl));
    }
    // strictness: never both directions at once
    CHECK_FALSE((ab && local_pref_gt(b, a, "c0", "r", chain.cl)));
  }
  CHECK(compared > 0);
}

TEST_CASE("multiset local preference extends the set form") {
  ChainPool chain = make_chain(4);
  auto& p = chain.pool;
  ClashMultiset m1{{p[4], 1}};            // exception high in the chain
  ClashMultiset m2{{p[0], 1}, {p[1], 1}};  // two exceptions at the bottom
  CHECK(local_pref_gt_multiset(m1, m2, "c0", "r", chain.cl));
  CHECK_FALSE(local_pref_gt_multiset(m2, m1, "c0", "r", chain.cl));
  // Extra copies of the same assumption are a strictly worse multiset only
  // if the trade-off rule says so; equal multisets never compare.
  CHECK_FALSE(local_pref_gt_multiset(m1, m1, "c0", "r", chain.cl));
}

TEST_CASE("global preference picks the expected fixture model") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  SolveResult r = solve_ckr(k);
  REQUIRE(r.models.size() == 3);
  std::vector<JustifiedModel> pref = preferred_filter(r.models, k, cl);
  REQUIRE(pref.size() == 1);
  ClashSet expect{ca_subclass("S", "E", "c_world", "covers"),
                  ca_subclass("S", "R", "c_branch2", "covers")};
  CHECK(pref[0].clash_maps.at("covers").at("c_local1") == expect);
  // Direct pairwise checks through the global ordering.
  for (const auto& m : r.models) {
    if (m.answer_set == pref[0].answer_set) continue;
    CHECK(global_pref_gt(pref[0].clash_maps, m.clash_maps, k, cl));
    CHECK_FALSE(global_pref_gt(m.clash_maps, pref[0].clash_maps, k, cl));
  }
}

TEST_CASE("pairwise and pareto preference coincide on fixtures") {
  for (const char* name : {"korg.ckr", "korg1.ckr"}) {
    Sckr k = ckrtest::load_fixture(name);
    OrderClosures cl = compute_closures(k.structure);
    SolveResult r = solve_ckr(k);
    std::vector<ClashMap> maps;
    for (const auto& m : r.models) maps.push_back(m.clash_maps);
    CHECK(preferred_indices(maps, k, cl, false) ==
          preferred_indices(maps, k, cl, true));
  }
}

TEST_CASE("pairwise and pareto preference coincide on random repositories") {
  std::mt19937 rng(61);
  for (int it = 0; it < 25; ++it) {
    GroundCkr g;
    Sckr k = ckrtest::random_oracle_sckr(rng, &g);
    REQUIRE(is_eval_disconnected(k).disconnected);
    OrderClosures cl = compute_closures(k.structure);
    SolveResult r = solve_ckr(k);
    std::vector<ClashMap> maps;
    for (const auto& m : r.models) maps.push_back(m.clash_maps);
    CHECK(preferred_indices(maps, k, cl, false) ==
          preferred_indices(maps, k, cl, true));
  }
}

TEST_CASE("the organization fixture has a unique preferred model") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  OrderClosures cl = compute_closures(k.structure);
  SolveResult r = solve_ckr(k);
  REQUIRE(r.models.size() == 8);
  std::vector<JustifiedModel> pref = preferred_filter(r.models, k, cl);
  CHECK(pref.size() == 1);
}
