#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace ckr;

TEST_CASE("translation facts for the single-relation fixture") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  SymbolicProgram sp = translate(k);
  auto has_fact = [&](const std::string& rendered) {
    for (const auto& f : sp.facts)
      if (f.render() == rendered) return true;
    return false;
  };
  CHECK(has_fact("context(c_world)"));
  CHECK(has_fact("relation(covers)"));
  CHECK(has_fact("prec(c_local1,c_world,covers)"));  // transitive closure
  CHECK(has_fact("rel_w(covers,1)"));
  CHECK(has_fact("relation_weight(covers,1)"));
  CHECK(has_fact("def_subclass(S,E,c_world,covers)"));
  CHECK(has_fact("def_subclass(S,M,c_branch1,covers)"));
  CHECK(has_fact("def_subclass(S,R,c_branch2,covers)"));
  CHECK(has_fact("nom(i,c_local1)"));
  CHECK(has_fact("insta(i,S,c_local1)"));
  CHECK(has_fact("subConj(E,R,bot,c_world)"));
  CHECK_FALSE(has_fact("cls(top,c_world)"));
  CHECK_FALSE(has_fact("cls(bot,c_world)"));
}

TEST_CASE("relation weights invert declaration priority") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  SymbolicProgram sp = translate(k);
  auto has_fact = [&](const std::string& rendered) {
    for (const auto& f : sp.facts)
      if (f.render() == rendered) return true;
    return false;
  };
  // Two relations: the first declared (time) gets the larger weight.
  CHECK(has_fact("relation_weight(time,2)"));
  CHECK(has_fact("relation_weight(covers,1)"));
}

TEST_CASE("grounding sizes and domains") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  GroundCkr g = ground(k, cl);
  CHECK(g.ovr_domain.size() == 6);  // 3 defeasible inclusions x {local1} x ...
  CHECK(g.envs.size() == 7);        // main + 6 hypothesis environments
  CHECK(g.inds == std::vector<std::string>{"i"});
  CHECK(g.rols.empty());
  // The overriding domain is sorted by rendered atom name.
  for (size_t i = 0; i + 1 < g.ovr_domain.size(); ++i)
    CHECK(g.program.atoms.name(g.ovr_domain[i].atom_id) <
          g.program.atoms.name(g.ovr_domain[i + 1].atom_id));

  Sckr k2 = ckrtest::load_fixture("korg.ckr");
  OrderClosures cl2 = compute_closures(k2.structure);
  GroundCkr g2 = ground(k2, cl2);
  CHECK(g2.ovr_domain.size() == 14);
  CHECK(g2.envs.size() == 15);
}

TEST_CASE("grounding respects the rule cap") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  OrderClosures cl = compute_closures(k.structure);
  SolveOptions opts;
  opts.max_ground_rules = 100;
  CHECK_THROWS_AS(ground(k, cl, opts), CapExceeded);
}

TEST_CASE("model counts on the fixtures") {
  SolveResult r1 = solve_ckr(ckrtest::load_fixture("korg1.ckr"));
  CHECK(r1.models.size() == 3);
  SolveResult r2 = solve_ckr(ckrtest::load_fixture("korg.ckr"));
  CHECK(r2.models.size() == 8);
  // Every reported answer set verifies against the full ground program.
  for (const auto& m : r2.models)
    CHECK(asp::is_answer_set(r2.ground.program, m.answer_set));
}

TEST_CASE("guess evaluation pins down the stable guesses") {
  Sckr k = ckrtest::load_fixture("korg1.ckr");
  OrderClosures cl = compute_closures(k.structure);
  GroundCkr g = ground(k, cl);
  REQUIRE(g.ovr_domain.size() == 6);
  asp::Interp out;
  size_t stable = 0;
  for (std::uint64_t mask = 0; mask < (1u << 6); ++mask)
    if (evaluate_guess(g, mask, out)) {
      ++stable;
      CHECK(asp::is_answer_set(g.program, out));
    }
  CHECK(stable == 3);
  CHECK_FALSE(evaluate_guess(g, 0, out));  // no overriding is unstable here
}

TEST_CASE("parallel and serial sweeps agree") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  SolveOptions par, ser;
  par.parallel = true;
  ser.parallel = false;
  SolveResult a = solve_ckr(k, par);
  SolveResult b = solve_ckr(k, ser);
  REQUIRE(a.models.size() == b.models.size());
  for (size_t i = 0; i < a.models.size(); ++i)
    CHECK(a.models[i].answer_set == b.models[i].answer_set);
}

TEST_CASE("guess-space cap") {
  Sckr k = ckrtest::load_fixture("korg.ckr");
  SolveOptions opts;
  opts.max_guesses = 16;
  CHECK_THROWS_AS(solve_ckr(k, opts), CapExceeded);
}

TEST_CASE("views exclude the built-in concepts") {
  SolveResult r = solve_ckr(ckrtest::load_fixture("korg1.ckr"));
  for (const auto& m : r.models)
    for (const auto& [c, view] : m.views)
      for (const auto& ax : view) {
        CHECK(ax.ops[0] != "top");
        CHECK(ax.ops[0] != "bot");
      }
}

TEST_CASE("solver matches the reduct oracle on random repositories") {
  std::mt19937 rng(101);
  for (int it = 0; it < 40; ++it) {
    GroundCkr g;
    Sckr k = ckrtest::random_oracle_sckr(rng, &g);
    SolveResult r = solve_ckr(k);
    auto oracle = asp::enumerate_answer_sets_by_reducts(g.program, 16);
    std::set<asp::Interp> expect(oracle.begin(), oracle.end());
    std::set<asp::Interp> got;
    for (const auto& m : r.models) got.insert(m.answer_set);
    CHECK(expect == got);
  }
}

TEST_CASE("emitted text matches the golden files") {
  for (const char* name : {"korg", "korg1"}) {
    Sckr k = ckrtest::load_fixture(std::string(name) + ".ckr");
    std::string text = emit_asp_text(k);
    std::string golden =
        ckrtest::read_file(ckrtest::fixture_path(std::string(name) + ".lp.golden"));
    CHECK(text == golden);
  }
}

TEST_CASE("emitted text carries the preference statements verbatim") {
  std::string text = emit_asp_text(ckrtest::load_fixture("korg1.ckr"));
  CHECK(text.find("#preference(GlobPref,lexico)") != std::string::npos);
  CHECK(text.find("#optimize(GlobPref).") != std::string::npos);
  CHECK(text.find("#preference(RelPref(REL),pareto)") != std::string::npos);
  CHECK(text.find("#preference(LocPref(C,REL),poset)") != std::string::npos);
}
