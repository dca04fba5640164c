// Ground normal programs and their stable-model semantics: least models of
// definite programs, reducts, answer-set checks and exhaustive oracles.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ckr/ast.hpp"

namespace ckr {
namespace asp {

// Interns ground atoms (rendered as strings `pred(arg,...)`) to dense ids.
class AtomTable {
 public:
  int intern(const std::string& s) {
    auto it = ids_.find(s);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    ids_.emplace(s, id);
    names_.push_back(s);
    return id;
  }
  int lookup(const std::string& s) const {
    auto it = ids_.find(s);
    return it == ids_.end() ? -1 : it->second;
  }
  const std::string& name(int id) const { return names_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

struct Rule {
  int head = -1;  // -1: constraint
  std::vector<int> pos;
  std::vector<int> neg;
  // Free-form origin tag (table tag for translated programs, "" otherwise).
  std::string tag;
};

struct Program {
  AtomTable atoms;
  std::vector<Rule> rules;

  Rule& add(int head, std::vector<int> pos = {}, std::vector<int> neg = {},
            std::string tag = "") {
    rules.push_back({head, std::move(pos), std::move(neg), std::move(tag)});
    return rules.back();
  }
};

// An interpretation over a program's atom table.
using Interp = std::set<int>;

struct LeastModelResult {
  Interp model;
  bool constraint_violated = false;
  int violated_rule = -1;
};

// Least model of the definite part of `p` (every rule must have an empty
// negative body; constraints permitted and checked after the fixpoint).
// Throws CkrError when some rule has a non-empty negative body.
LeastModelResult least_model(const Program& p);

Program gl_reduct(const Program& p, const Interp& i);

bool is_answer_set(const Program& p, const Interp& i);

// True iff `i` satisfies every rule of `p` classically.
bool satisfies_all_rules(const Program& p, const Interp& i);

// Exhaustive subset enumeration over the full Herbrand base (atom table).
// Throws CapExceeded when the base is larger than `cap` atoms.
std::vector<Interp> enumerate_answer_sets_bruteforce(const Program& p,
                                                     int cap = 22);

// Independent answer-set oracle that only enumerates assignments to atoms
// occurring in negative rule bodies: the reduct depends solely on those, so
// each assignment determines at most one stable-model candidate (the least
// model of the corresponding reduct). Throws CapExceeded when more than `cap`
// atoms occur negatively.
std::vector<Interp> enumerate_answer_sets_by_reducts(const Program& p,
                                                     int cap = 24);

// One atom name per line, sorted lexicographically.
std::string dump_interp(const Program& p, const Interp& i);

}  // namespace asp
}  // namespace ckr
