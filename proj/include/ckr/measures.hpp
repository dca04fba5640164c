// Algebraic measures over answer sets: semiring values, weighted formulas,
// the overriding-set measure, the preference semiring and its per-context
// optimal-set variants, plus a semiring law-checking harness.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ckr/translate.hpp"

namespace ckr {

// Exact rational with a signed infinity flag (inf = +1/-1), used by the
// tropical and max-plus semirings.
struct Rat {
  long long num = 0;
  long long den = 1;
  int inf = 0;  // 0 finite, +1 = +infinity, -1 = -infinity
  static Rat make(long long n, long long d = 1);
  static Rat infinity(int sign) { return Rat{0, 1, sign}; }
  friend Rat operator+(const Rat& a, const Rat& b);
  bool operator==(const Rat&) const = default;
  bool less(const Rat& b) const;  // total order with -inf < finite < +inf
  std::string to_string() const;
};

using Multiset = std::map<std::string, long long>;  // multiplicity-exact

// Carrier of the preference semiring: Zero, One, or a pair of a multiset
// over the atom base and a context-indexed multiset of overriding keys.
struct PrefValue {
  enum class Kind { Zero, One, Pair };
  Kind kind = Kind::Zero;
  Multiset s;
  std::map<std::string, Multiset> chi;  // context -> overriding multiset
  bool operator==(const PrefValue&) const = default;
  static PrefValue pair(Multiset s, std::map<std::string, Multiset> chi) {
    return {Kind::Pair, std::move(s), std::move(chi)};
  }
};

// Element of a per-context optimal-set value: derivable-assertion set plus
// the overriding multiset charged at that context.
struct OptPair {
  std::set<std::string> s;
  Multiset chi;
  auto operator<=>(const OptPair&) const = default;
};
using OptSet = std::set<OptPair>;

struct Value {
  enum class Kind { Int, Bool, Set, Num, Pref, Opt, Tuple };
  Kind kind = Kind::Int;
  long long i = 0;
  bool b = false;
  std::set<std::string> set;
  Rat q;
  PrefValue pref;
  OptSet opt;
  std::vector<Value> tuple;

  static Value of_int(long long v);
  static Value of_bool(bool v);
  static Value of_set(std::set<std::string> v);
  static Value of_num(Rat v);
  static Value of_pref(PrefValue v);
  static Value of_opt(OptSet v);
  static Value of_tuple(std::vector<Value> v);
  bool operator==(const Value& o) const;
  std::string to_string() const;
};

struct SemiringDef {
  std::string name;
  Value zero, one;
  std::function<Value(const Value&, const Value&)> add, mul;
};

// Fixture-independent semirings: "nat", "bool", "trop", "max".
SemiringDef make_semiring(const std::string& name);
// Powerset semiring over a fixed universe (add = union, mul = intersection,
// one = the universe).
SemiringDef make_powerset(std::set<std::string> universe);

struct WeightedFormula {
  enum class Node { Const, Lit, NegLit, Sum, Prod };
  Node node = Node::Const;
  Value constant;
  std::string atom;
  std::shared_ptr<WeightedFormula> lhs, rhs;

  static WeightedFormula k(Value v);
  static WeightedFormula lit(std::string a);
  static WeightedFormula neg(std::string a);
  static WeightedFormula sum(WeightedFormula l, WeightedFormula r);
  static WeightedFormula prod(WeightedFormula l, WeightedFormula r);
};

// Parses the formula mini-language: integer constants, atom literals,
// `~atom`, `+`, `*` and parentheses. Atom names may be quoted with '...'
// to include parentheses and commas.
WeightedFormula parse_weighted_formula(const std::string& text);

Value eval_weighted_formula(const WeightedFormula& f,
                            const std::set<std::string>& interp,
                            const SemiringDef& r);

// Semiring sum of the formula's value over the answer sets; the fold order
// is canonical (sorted interpretations).
Value overall_weight(std::vector<std::set<std::string>> answer_sets,
                     const WeightedFormula& f, const SemiringDef& r);

// Measure of overriding assumptions: powerset semiring over the
// overriding-atom domain with one collector summand per domain atom.
struct MuOpt {
  SemiringDef semiring;
  WeightedFormula formula;
  std::vector<std::string> domain;  // canonical overriding keys
};
MuOpt build_mu_opt(const Sckr& k, const GroundCkr& g);

// Preference semiring over the ground program's atom base. Requires a
// single-relational KB without eval expressions; throws CkrError otherwise.
// var_order must enumerate the atom base (lexicographic by default).
SemiringDef make_r_one(const Sckr& k, const GroundCkr& g,
                       const OrderClosures& cl,
                       const std::vector<std::string>& var_order);
// Deliberately non-distributive variant that joins overriding sets without
// multiplicities; used to demonstrate why multiset bookkeeping is needed.
SemiringDef make_r_one_setchi(const Sckr& k, const GroundCkr& g,
                              const OrderClosures& cl,
                              const std::vector<std::string>& var_order);
// Collector formula for the preference semiring: one satisfied-atom summand
// per base atom times one overriding summand per domain atom.
WeightedFormula build_alpha_one(const GroundCkr& g);

// Per-context optimal-set semiring and its collector formula.
SemiringDef make_r_c(const Sckr& k, const GroundCkr& g,
                     const OrderClosures& cl, const std::string& c);
WeightedFormula build_alpha_c(const Sckr& k, const GroundCkr& g,
                              const std::string& c);
// Componentwise crossproduct of the per-context semirings, ordered by the
// context list.
SemiringDef make_r_all(const Sckr& k, const GroundCkr& g,
                       const OrderClosures& cl);
// Per-context overall weights of the optimal-set measures.
std::map<std::string, OptSet> mu_all(
    const Sckr& k, const GroundCkr& g, const OrderClosures& cl,
    const std::vector<std::set<std::string>>& answer_sets);

struct LawReport {
  bool ok = true;
  size_t triples = 0;
  std::string counterexample;  // first violated law, rendered
};

// Checks commutative-monoid, monoid, distributivity and annihilation laws
// on all ordered triples of the samples (zero and one are always included).
LawReport check_semiring_laws(const SemiringDef& r,
                              const std::vector<Value>& samples);

}  // namespace ckr
