// Guess-and-check enumeration of the answer sets of a ground translation:
// overriding atoms are guessed, the remainder is evaluated stratum-wise and
// every accepted candidate is re-verified against the full program.
#include <algorithm>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ckr/translate.hpp"

namespace ckr {

namespace {

// Depth-aware split of "pred(a1,...,an)" into predicate and arguments.
bool split_atom(const std::string& s, std::string& pred,
                std::vector<std::string>& args) {
  size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return false;
  pred = s.substr(0, open);
  args.clear();
  std::string cur;
  int depth = 0;
  for (size_t i = open + 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  args.push_back(cur);
  return true;
}

class Evaluator {
 public:
  explicit Evaluator(const GroundCkr& g) : g_(g) {
    size_t natoms = static_cast<size_t>(g.program.atoms.size());
    size_t nrules = g.program.rules.size();
    occ_.resize(natoms);
    count_.resize(nrules);
    in_.assign(natoms, 0);
    is_ovr_.assign(natoms, 0);
    guess_.assign(natoms, 0);
    for (const auto& info : g.ovr_domain) is_ovr_[info.atom_id] = 1;
    for (size_t r = 0; r < nrules; ++r) {
      if (g.rule_class[r] != RuleClass::Other) continue;
      other_.push_back(r);
      // Index once per distinct atom; the propagation step decrements by the
      // occurrence count, so duplicate entries would double-count.
      std::vector<int> ps = g.program.rules[r].pos;
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      for (int a : ps) occ_[a].push_back(r);
    }
    for (size_t r = 0; r < nrules; ++r) {
      switch (g.rule_class[r]) {
        case RuleClass::Ovr: ovr_rules_.push_back(r); break;
        case RuleClass::TestFails: tf_rules_.push_back(r); break;
        case RuleClass::Constraint: constr_rules_.push_back(r); break;
        default: break;
      }
    }
  }

  // Returns true iff the guess induces an answer set, which is stored in
  // `out` (sorted atom ids).
  bool eval(std::uint64_t mask, asp::Interp& out) {
    const auto& rules = g_.program.rules;
    std::vector<int> touched;
    std::vector<int> queue;
    auto set_in = [&](int a) {
      if (!in_[a]) {
        in_[a] = 1;
        touched.push_back(a);
        queue.push_back(a);
      }
    };
    std::vector<int> gatoms;
    for (size_t b = 0; b < g_.ovr_domain.size(); ++b)
      if (mask >> b & 1) {
        int a = g_.ovr_domain[b].atom_id;
        guess_[a] = 1;
        gatoms.push_back(a);
      }
    // Least model of the definite stratum given the guess: guessed atoms are
    // facts; propagation rules whose negated overriding atoms were guessed
    // are dropped.
    for (size_t r : other_) {
      const asp::Rule& rule = rules[r];
      bool applicable = true;
      for (int n : rule.neg)
        if (guess_[n]) {
          applicable = false;
          break;
        }
      count_[r] = applicable ? static_cast<int>(rule.pos.size()) : -1;
      if (count_[r] == 0) set_in(rule.head);
    }
    for (int a : gatoms) set_in(a);
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      for (size_t r : occ_[a]) {
        if (count_[r] <= 0) continue;
        // pos lists may contain duplicates; decrement per occurrence.
        const asp::Rule& rule = rules[r];
        int dec = 0;
        for (int p : rule.pos)
          if (p == a) ++dec;
        count_[r] -= dec;
        if (count_[r] == 0) set_in(rule.head);
      }
    }
    bool ok = check(mask, touched, out);
    for (int a : touched) in_[a] = 0;
    for (int a : gatoms) guess_[a] = 0;
    return ok;
  }

 private:
  bool check(std::uint64_t mask, std::vector<int>& touched, asp::Interp& out) {
    const auto& rules = g_.program.rules;
    // Hypothesis tests fail when the test environment stayed consistent.
    std::vector<int> tf_atoms;
    for (size_t r : tf_rules_) {
      const asp::Rule& rule = rules[r];
      bool fire = true;
      for (int p : rule.pos)
        if (!in_[p]) {
          fire = false;
          break;
        }
      for (int n : rule.neg)
        if (in_[n]) {
          fire = false;
          break;
        }
      if (fire && !in_[rule.head]) {
        in_[rule.head] = 2;  // mark as test_fails stratum
        touched.push_back(rule.head);
        tf_atoms.push_back(rule.head);
      }
    }
    // The overriding rules must re-derive exactly the guessed atoms.
    std::uint64_t derived = 0;
    for (size_t r : ovr_rules_) {
      const asp::Rule& rule = rules[r];
      bool fire = true;
      for (int p : rule.pos)
        if (in_[p] != 1) {  // body atoms live in the definite stratum
          fire = false;
          break;
        }
      for (int n : rule.neg)
        if (in_[n]) {
          fire = false;
          break;
        }
      if (!fire) continue;
      for (size_t b = 0; b < g_.ovr_domain.size(); ++b)
        if (g_.ovr_domain[b].atom_id == rule.head) {
          derived |= std::uint64_t(1) << b;
          break;
        }
    }
    if (derived != mask) return false;
    for (size_t r : constr_rules_) {
      const asp::Rule& rule = rules[r];
      bool fire = true;
      for (int p : rule.pos)
        if (!in_[p]) {
          fire = false;
          break;
        }
      for (int n : rule.neg)
        if (in_[n]) {
          fire = false;
          break;
        }
      if (fire) return false;
    }
    out.clear();
    for (int a : touched)
      if (in_[a]) out.insert(a);
    return true;
  }

  const GroundCkr& g_;
  std::vector<std::vector<size_t>> occ_;
  std::vector<int> count_;
  std::vector<char> in_, is_ovr_, guess_;
  std::vector<size_t> other_, ovr_rules_, tf_rules_, constr_rules_;
};

// Next bit-permutation with the same popcount (Gosper); used by the serial
// reference enumeration, which visits guesses by increasing cardinality.
std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -(~t)) - 1) >> (__builtin_ctzll(v) + 1));
}

}  // namespace

bool evaluate_guess(const GroundCkr& g, std::uint64_t guess_mask,
                    asp::Interp& out) {
  Evaluator ev(g);
  return ev.eval(guess_mask, out);
}

JustifiedModel extract_model(const Sckr& k, const GroundCkr& g,
                             const asp::Interp& i) {
  JustifiedModel m;
  m.answer_set = i;
  for (const auto& c : k.structure.contexts) m.views[c];
  std::string pred;
  std::vector<std::string> args;
  for (int a : i) {
    const std::string& name = g.program.atoms.name(a);
    if (name.compare(0, 6, "instd(") == 0) {
      if (!split_atom(name, pred, args) || args.size() != 4) continue;
      if (args[3] != "main") continue;
      if (args[1] == "top" || args[1] == "bot") continue;
      m.views[args[2]].insert(
          {AxiomKind::ClassAssertion, {args[1], args[0]}});
    } else if (name.compare(0, 8, "tripled(") == 0) {
      if (!split_atom(name, pred, args) || args.size() != 5) continue;
      if (args[4] != "main") continue;
      m.views[args[3]].insert(
          {AxiomKind::RoleAssertion, {args[1], args[0], args[2]}});
    }
  }
  for (const auto& info : g.ovr_domain)
    if (i.count(info.atom_id))
      m.clash_maps[info.ca.relation][info.target].insert(info.ca);
  return m;
}

SolveResult solve_ckr(const Sckr& k, const SolveOptions& opts) {
  OrderClosures cl = compute_closures(k.structure);
  SolveResult res;
  res.ground = ground(k, cl, opts);
  const GroundCkr& g = res.ground;
  size_t n = g.ovr_domain.size();
  if (n >= 63 || (std::uint64_t(1) << n) > opts.max_guesses)
    throw CapExceeded("guess space 2^" + std::to_string(n) +
                      " exceeds the cap of " +
                      std::to_string(opts.max_guesses) + " guesses");
  std::uint64_t total = std::uint64_t(1) << n;
  std::vector<asp::Interp> found;
  if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      Evaluator ev(g);
      asp::Interp out;
      std::vector<asp::Interp> local;
#pragma omp for schedule(dynamic, 64)
      for (long long mask = 0; mask < static_cast<long long>(total); ++mask)
        if (ev.eval(static_cast<std::uint64_t>(mask), out)) local.push_back(out);
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
#else
    Evaluator ev(g);
    asp::Interp out;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (ev.eval(mask, out)) found.push_back(out);
#endif
  } else {
    // Serial reference: sweep by increasing guess cardinality.
    Evaluator ev(g);
    asp::Interp out;
    if (ev.eval(0, out)) found.push_back(out);
    for (size_t c = 1; c <= n; ++c) {
      std::uint64_t mask = (std::uint64_t(1) << c) - 1;
      while (mask < total) {
        if (ev.eval(mask, out)) found.push_back(out);
        std::uint64_t next = next_same_popcount(mask);
        if (next >= total || next <= mask) break;
        mask = next;
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (opts.verify)
    for (const auto& i : found)
      if (!asp::is_answer_set(g.program, i))
        throw CkrError("internal error: candidate failed verification");
  for (const auto& i : found) res.models.push_back(extract_model(k, g, i));
  return res;
}

}  // namespace ckr
