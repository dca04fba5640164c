// Compilation of an sCKR into its ASP encoding: symbolic facts, ground
// program, guess-and-check solver and clingo/asprin text emission.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ckr/asp.hpp"
#include "ckr/ast.hpp"
#include "ckr/preferences.hpp"

namespace ckr {

struct SymFact {
  std::string tag;   // originating table tag, e.g. "igl-ctx", "id-subc"
  std::string pred;
  std::vector<std::string> args;
  std::string render() const;
};

struct SymbolicProgram {
  std::vector<SymFact> facts;
  // Tags of the (fixed) deduction-rule templates, in table order.
  std::vector<std::string> rule_tags;
};

// Input translation: facts for the context structure and every context KB,
// plus the applicable deduction-rule template tags.
SymbolicProgram translate(const Sckr& k);

enum class RuleClass : std::uint8_t {
  Other,       // definite given the overriding guess (propd negation included)
  Ovr,         // overriding rules (negation on test_fails)
  TestFails,   // test-fails rules (negation on unsat)
  Constraint,  // constraints, including (prl-sat)
};

struct OvrInfo {
  ClashingAssumption ca;
  std::string target;  // the context the override applies at
  int atom_id = -1;    // the ovr/… atom in the ground program
};

struct GroundStats {
  size_t rules = 0;
  size_t atoms = 0;
  size_t envs = 0;
};

struct GroundCkr {
  asp::Program program;
  std::vector<RuleClass> rule_class;           // parallel to program.rules
  std::vector<OvrInfo> ovr_domain;             // sorted by atom name
  int unsat_main = -1;
  std::vector<std::string> inds, clss, rols, envs;
  GroundStats stats;
};

struct SolveOptions {
  std::uint64_t max_guesses = std::uint64_t(1) << 20;
  std::size_t max_ground_rules = 1000000;
  bool parallel = true;
  // Double-check every accepted candidate with asp::is_answer_set.
  bool verify = true;
};

// Grounds the translation over the sorted constant domains; throws
// CapExceeded when the rule count exceeds opts.max_ground_rules.
GroundCkr ground(const Sckr& k, const OrderClosures& cl,
                 const SolveOptions& opts = {});

// Per-context derived assertions (environment main), as ClassAssertion /
// RoleAssertion axioms over surface names; the built-in top concept is
// excluded.
using View = std::set<NormalAxiom>;

struct JustifiedModel {
  asp::Interp answer_set;
  ClashMap clash_maps;
  std::map<std::string, View> views;
};

struct SolveResult {
  GroundCkr ground;
  std::vector<JustifiedModel> models;  // sorted by answer set
};

// Enumerates all answer sets of the ground program by guessing subsets of the
// overriding-atom domain and evaluating the remainder stratum-wise.
SolveResult solve_ckr(const Sckr& k, const SolveOptions& opts = {});

// Evaluates one overriding guess (indices into g.ovr_domain as a bitmask).
// Returns true and fills `out` iff the induced interpretation is stable.
bool evaluate_guess(const GroundCkr& g, std::uint64_t guess_mask,
                    asp::Interp& out);

JustifiedModel extract_model(const Sckr& k, const GroundCkr& g,
                             const asp::Interp& i);

// clingo/asprin rendering: facts, deduction rules by table tag, preparation
// rules and the preference statements. Byte-stable across runs.
std::string emit_asp_text(const Sckr& k);

}  // namespace ckr
