// Queries over the preferred models: contextualized assertion entailment,
// Boolean conjunctive queries, certain/possible answers and epistemic
// aggregate queries over the certain answers.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ckr/translate.hpp"

namespace ckr {

// The preferred models among `models` (pairwise global-preference filter).
std::vector<JustifiedModel> preferred_filter(
    const std::vector<JustifiedModel>& models, const Sckr& k,
    const OrderClosures& cl, bool pareto = false);

// A query term starting with an upper-case letter is a variable.
bool is_query_var(const std::string& t);

// One conjunct `ctx : A(t)` or `ctx : r(t1,t2)`; the context and every
// argument may be a variable.
struct QueryAtom {
  std::string context;
  std::string pred;               // concept or role name (never a variable)
  std::vector<std::string> args;  // 1 (concept) or 2 (role) terms
  auto operator<=>(const QueryAtom&) const = default;
};

struct ConjunctiveQuery {
  std::vector<QueryAtom> atoms;
};

// Parses a comma-separated conjunction of query atoms, optionally preceded
// by a variable declaration `K X, Y.` and optionally terminated by `.`.
ConjunctiveQuery parse_query(const std::string& text);

using Binding = std::map<std::string, std::string>;  // variable -> constant

// True iff the assertion (ClassAssertion / RoleAssertion) is in the view of
// context c in every preferred model.
bool c_entails(const std::vector<JustifiedModel>& preferred,
               const std::string& c, const NormalAxiom& assertion);

// Boolean conjunctive query: true iff every preferred model contains a match
// of the whole conjunction (variables quantified existentially per model).
bool bcq_entails(const std::vector<JustifiedModel>& preferred,
                 const ConjunctiveQuery& q);

// Answer bindings over the query's free variables: intersection over the
// preferred models (certain) or union (brave = true).
std::set<Binding> consequences(const std::vector<JustifiedModel>& preferred,
                               const ConjunctiveQuery& q, bool brave = false);

enum class AggFn { Count, CountD, Sum, Min, Max };

// q(x̄, fn(ȳ)) <- body: grouped aggregate over the certain answers of body.
struct AggregateQuery {
  std::vector<std::string> group_vars;
  AggFn fn;
  std::vector<std::string> agg_vars;
  ConjunctiveQuery body;
};

// Parses `q(X, count(Y)) <- ctx : A(Y), ...` (head name arbitrary).
AggregateQuery parse_aggregate_query(const std::string& text);

struct AggregateRow {
  std::vector<std::string> group;
  std::string value;  // rendered number for count/countd/sum
  auto operator<=>(const AggregateRow&) const = default;
};

// Groups the certain answers by the group variables and aggregates the
// aggregate variables per group. With an empty group-variable list,
// count/countd/sum yield a single 0 row on no answers while min/max yield
// no row.
std::vector<AggregateRow> epistemic_aggregate(
    const std::vector<JustifiedModel>& preferred, const AggregateQuery& q);

}  // namespace ckr
