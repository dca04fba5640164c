#include "ckr/asp.hpp"

#include <algorithm>
#include <sstream>

namespace ckr {
namespace asp {

LeastModelResult least_model(const Program& p) {
  for (const auto& r : p.rules)
    if (!r.neg.empty())
      throw CkrError("least_model requires an empty negative body in every rule");

  int n = p.atoms.size();
  std::vector<char> in(n, 0);
  // Dowling-Gallier style counting: remaining unsatisfied positive body atoms
  // per rule; occurrence lists from atom to rules.
  std::vector<int> remaining(p.rules.size());
  std::vector<std::vector<int>> occ(n);
  std::vector<int> queue;
  for (size_t ri = 0; ri < p.rules.size(); ++ri) {
    const Rule& r = p.rules[ri];
    remaining[ri] = static_cast<int>(r.pos.size());
    for (int a : r.pos) occ[a].push_back(static_cast<int>(ri));
    if (r.pos.empty() && r.head >= 0 && !in[r.head]) {
      in[r.head] = 1;
      queue.push_back(r.head);
    }
  }
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int ri : occ[a]) {
      if (--remaining[ri] == 0) {
        int h = p.rules[ri].head;
        if (h >= 0 && !in[h]) {
          in[h] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  // Counting visits each rule body atom once, but duplicate atoms in one body
  // decrement twice; recount constraints and duplicated bodies exactly.
  LeastModelResult res;
  for (int a = 0; a < n; ++a)
    if (in[a]) res.model.insert(a);
  for (size_t ri = 0; ri < p.rules.size(); ++ri) {
    const Rule& r = p.rules[ri];
    if (r.head >= 0) continue;
    bool body_true = true;
    for (int a : r.pos)
      if (!in[a]) {
        body_true = false;
        break;
      }
    if (body_true) {
      res.constraint_violated = true;
      res.violated_rule = static_cast<int>(ri);
      break;
    }
  }
  return res;
}

Program gl_reduct(const Program& p, const Interp& i) {
  Program out;
  out.atoms = p.atoms;
  for (const auto& r : p.rules) {
    bool blocked = false;
    for (int a : r.neg)
      if (i.count(a)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    out.rules.push_back({r.head, r.pos, {}, r.tag});
  }
  return out;
}

bool satisfies_all_rules(const Program& p, const Interp& i) {
  for (const auto& r : p.rules) {
    bool body_true = true;
    for (int a : r.pos)
      if (!i.count(a)) {
        body_true = false;
        break;
      }
    if (body_true)
      for (int a : r.neg)
        if (i.count(a)) {
          body_true = false;
          break;
        }
    if (!body_true) continue;
    if (r.head < 0 || !i.count(r.head)) return false;
  }
  return true;
}

bool is_answer_set(const Program& p, const Interp& i) {
  Program reduct = gl_reduct(p, i);
  // Constraints of the reduct must be satisfied by i itself; the least model
  // is computed from the definite rules only.
  Program definite;
  definite.atoms = reduct.atoms;
  for (const auto& r : reduct.rules)
    if (r.head >= 0) definite.rules.push_back(r);
  LeastModelResult lm = least_model(definite);
  if (lm.model != i) return false;
  return satisfies_all_rules(p, i);
}

std::vector<Interp> enumerate_answer_sets_bruteforce(const Program& p, int cap) {
  int n = p.atoms.size();
  if (n > cap)
    throw CapExceeded("herbrand base of " + std::to_string(n) +
                      " atoms exceeds the enumeration cap of " +
                      std::to_string(cap));
  std::vector<Interp> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Interp i;
    for (int a = 0; a < n; ++a)
      if (mask & (std::uint64_t(1) << a)) i.insert(a);
    if (is_answer_set(p, i)) out.push_back(std::move(i));
  }
  return out;
}

std::vector<Interp> enumerate_answer_sets_by_reducts(const Program& p, int cap) {
  std::set<int> negset;
  for (const auto& r : p.rules) negset.insert(r.neg.begin(), r.neg.end());
  std::vector<int> neg(negset.begin(), negset.end());
  int n = static_cast<int>(neg.size());
  if (n > cap)
    throw CapExceeded(std::to_string(n) +
                      " atoms occur negatively, exceeding the cap of " +
                      std::to_string(cap));
  std::vector<Interp> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Interp guess;
    for (int bi = 0; bi < n; ++bi)
      if (mask & (std::uint64_t(1) << bi)) guess.insert(neg[bi]);
    Program reduct = gl_reduct(p, guess);
    Program definite;
    definite.atoms = reduct.atoms;
    for (const auto& r : reduct.rules)
      if (r.head >= 0) definite.rules.push_back(r);
    LeastModelResult lm = least_model(definite);
    // The candidate is stable only if it induces the reduct it was built from.
    bool consistent = true;
    for (int a : neg)
      if ((lm.model.count(a) != 0) != (guess.count(a) != 0)) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    if (is_answer_set(p, lm.model)) out.push_back(std::move(lm.model));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string dump_interp(const Program& p, const Interp& i) {
  std::vector<std::string> lines;
  lines.reserve(i.size());
  for (int a : i) lines.push_back(p.atoms.name(a));
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

}  // namespace asp
}  // namespace ckr
