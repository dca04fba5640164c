// Local preference on clash sets, per-relation and global model preference,
// and the preferred-model filter.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ckr/ast.hpp"

namespace ckr {

struct ClashingAssumption {
  AxiomKind kind;
  std::vector<std::string> operands;  // axiom operands (e.g. A,B for A ⊑ B)
  std::vector<std::string> instance;  // instance tuple e
  std::string declared_at;            // the context holding D_rel(axiom)
  std::string relation;
  auto operator<=>(const ClashingAssumption&) const = default;

  std::string to_string() const;
};

using ClashSet = std::set<ClashingAssumption>;
// Multiset of clashing assumptions (multiplicity-exact equality).
using ClashMultiset = std::map<ClashingAssumption, long long>;

// relation -> context -> clash set.
using ClashMap = std::map<std::string, std::map<std::string, ClashSet>>;

// Witness contexts for overriding `ca` at target context `c`:
// {c1b | c ≺_rel c1b and c1b ⪯_{-rel} declared_at}. Empty iff the clashing
// assumption's guard fails at c.
std::vector<std::string> clash_witnesses(const OrderClosures& cl,
                                         const ClashingAssumption& ca,
                                         const std::string& c);

// Local preference: x1 > x2 at context c for ca.relation == rel. Witness
// contexts are quantified existentially. Throws CkrError when some
// assumption's guard fails at c.
bool local_pref_gt(const ClashSet& x1, const ClashSet& x2,
                   const std::string& c, const std::string& rel,
                   const OrderClosures& cl);

// Multiset variant: compares multiplicities instead of set membership.
bool local_pref_gt_multiset(const ClashMultiset& x1, const ClashMultiset& x2,
                            const std::string& c, const std::string& rel,
                            const OrderClosures& cl);

using RelSlice = std::map<std::string, ClashSet>;  // context -> clash set

// Per-relation model preference, item (i): some context strictly better and
// no context strictly worse ("strictly" meaning > holds one way only).
bool rel_pref_gt(const RelSlice& m1, const RelSlice& m2,
                 const std::vector<std::string>& contexts,
                 const std::string& rel, const OrderClosures& cl);

// Pareto variant P_2: some context strictly better and every context better
// or equal.
bool rel_pref_gt_pareto(const RelSlice& m1, const RelSlice& m2,
                        const std::vector<std::string>& contexts,
                        const std::string& rel, const OrderClosures& cl);

// Global model preference, item (ii): lexicographic over relations in
// priority order; relations tie when neither direction of the per-relation
// preference holds. `pareto` selects the P_2 per-relation form.
bool global_pref_gt(const ClashMap& a, const ClashMap& b, const Sckr& k,
                    const OrderClosures& cl, bool pareto = false);

// Indices of map entries not strictly dominated by any other entry
// (pairwise filter; no transitivity assumed).
std::vector<size_t> preferred_indices(const std::vector<ClashMap>& maps,
                                      const Sckr& k, const OrderClosures& cl,
                                      bool pareto = false);

}  // namespace ckr
