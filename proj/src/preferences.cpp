#include "ckr/preferences.hpp"

#include <algorithm>
#include <sstream>

namespace ckr {

std::string ClashingAssumption::to_string() const {
  std::ostringstream out;
  out << axiom_kind_name(kind) << "(";
  for (size_t i = 0; i < operands.size(); ++i)
    out << (i ? "," : "") << operands[i];
  out << ")@" << declared_at << "[" << relation << "]<";
  for (size_t i = 0; i < instance.size(); ++i)
    out << (i ? "," : "") << instance[i];
  out << ">";
  return out.str();
}

std::vector<std::string> clash_witnesses(const OrderClosures& cl,
                                         const ClashingAssumption& ca,
                                         const std::string& c) {
  std::vector<std::string> out;
  auto prec_it = cl.prec.find(ca.relation);
  auto exc_it = cl.preceq_except.find(ca.relation);
  if (prec_it == cl.prec.end() || exc_it == cl.preceq_except.end()) return out;
  for (const auto& [a, c1b] : prec_it->second) {
    if (a != c) continue;
    if (exc_it->second.count({c1b, ca.declared_at})) out.push_back(c1b);
  }
  return out;
}

namespace {

void require_guard(const OrderClosures& cl, const ClashingAssumption& ca,
                   const std::string& c,
                   const std::vector<std::string>& witnesses) {
  if (witnesses.empty())
    throw CkrError("clashing assumption " + ca.to_string() +
                   " has no witness context above '" + c + "'");
}

bool strictly_above(const OrderClosures& cl, const std::string& rel,
                    const std::string& a, const std::string& b) {
  auto it = cl.prec.find(rel);
  return it != cl.prec.end() && it->second.count({a, b}) != 0;
}

// Shared core of the set and multiset variants: `d1` are the assumptions with
// surplus multiplicity on the left, `d2` on the right.
bool lp_core(const std::vector<ClashingAssumption>& d1,
             const std::vector<ClashingAssumption>& d2, const std::string& c,
             const std::string& rel, const OrderClosures& cl) {
  if (d1.empty() && d2.empty()) return false;  // equal: never strictly better
  for (const auto& a1 : d1) {
    auto w1 = clash_witnesses(cl, a1, c);
    require_guard(cl, a1, c, w1);
    bool matched = false;
    for (const auto& a2 : d2) {
      auto w2 = clash_witnesses(cl, a2, c);
      require_guard(cl, a2, c, w2);
      for (const auto& c1b : w1) {
        for (const auto& c2b : w2)
          if (strictly_above(cl, rel, c2b, c1b)) {
            matched = true;
            break;
          }
        if (matched) break;
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool local_pref_gt(const ClashSet& x1, const ClashSet& x2, const std::string& c,
                   const std::string& rel, const OrderClosures& cl) {
  std::vector<ClashingAssumption> d1, d2;
  for (const auto& a : x1)
    if (!x2.count(a)) d1.push_back(a);
  for (const auto& a : x2)
    if (!x1.count(a)) d2.push_back(a);
  return lp_core(d1, d2, c, rel, cl);
}

bool local_pref_gt_multiset(const ClashMultiset& x1, const ClashMultiset& x2,
                            const std::string& c, const std::string& rel,
                            const OrderClosures& cl) {
  auto mult = [](const ClashMultiset& m, const ClashingAssumption& a) {
    auto it = m.find(a);
    return it == m.end() ? 0LL : it->second;
  };
  std::vector<ClashingAssumption> d1, d2;
  for (const auto& [a, n] : x1)
    if (n > mult(x2, a)) d1.push_back(a);
  for (const auto& [a, n] : x2)
    if (n > mult(x1, a)) d2.push_back(a);
  return lp_core(d1, d2, c, rel, cl);
}

namespace {

const ClashSet& slice_at(const RelSlice& m, const std::string& c) {
  static const ClashSet empty;
  auto it = m.find(c);
  return it == m.end() ? empty : it->second;
}

}  // namespace

bool rel_pref_gt(const RelSlice& m1, const RelSlice& m2,
                 const std::vector<std::string>& contexts,
                 const std::string& rel, const OrderClosures& cl) {
  bool some_better = false;
  for (const auto& c : contexts) {
    const ClashSet& a = slice_at(m1, c);
    const ClashSet& b = slice_at(m2, c);
    if (a == b) continue;
    bool ab = local_pref_gt(a, b, c, rel, cl);
    bool ba = local_pref_gt(b, a, c, rel, cl);
    if (ab && !ba) some_better = true;
    if (ba && !ab) return false;
  }
  return some_better;
}

bool rel_pref_gt_pareto(const RelSlice& m1, const RelSlice& m2,
                        const std::vector<std::string>& contexts,
                        const std::string& rel, const OrderClosures& cl) {
  bool some_strict = false;
  for (const auto& c : contexts) {
    const ClashSet& a = slice_at(m1, c);
    const ClashSet& b = slice_at(m2, c);
    if (a == b) continue;
    if (!local_pref_gt(a, b, c, rel, cl)) return false;
    some_strict = true;
  }
  return some_strict;
}

namespace {

const RelSlice& map_slice(const ClashMap& m, const std::string& rel) {
  static const RelSlice empty;
  auto it = m.find(rel);
  return it == m.end() ? empty : it->second;
}

}  // namespace

bool global_pref_gt(const ClashMap& a, const ClashMap& b, const Sckr& k,
                    const OrderClosures& cl, bool pareto) {
  for (const auto& rel : k.structure.relations) {
    const RelSlice& sa = map_slice(a, rel.name);
    const RelSlice& sb = map_slice(b, rel.name);
    bool ab = pareto
                  ? rel_pref_gt_pareto(sa, sb, k.structure.contexts, rel.name, cl)
                  : rel_pref_gt(sa, sb, k.structure.contexts, rel.name, cl);
    bool ba = pareto
                  ? rel_pref_gt_pareto(sb, sa, k.structure.contexts, rel.name, cl)
                  : rel_pref_gt(sb, sa, k.structure.contexts, rel.name, cl);
    if (ab && !ba) return true;
    if (ab || ba) return false;  // higher-priority relation decides against a
  }
  return false;
}

std::vector<size_t> preferred_indices(const std::vector<ClashMap>& maps,
                                      const Sckr& k, const OrderClosures& cl,
                                      bool pareto) {
  std::vector<size_t> out;
  for (size_t i = 0; i < maps.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < maps.size() && !dominated; ++j)
      if (j != i && global_pref_gt(maps[j], maps[i], k, cl, pareto))
        dominated = true;
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace ckr
