#include "ckr/measures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ckr {

// ---------------------------------------------------------------------------
// Rational with infinities
// ---------------------------------------------------------------------------

Rat Rat::make(long long n, long long d) {
  if (d == 0) throw CkrError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat{n, d, 0};
}

Rat operator+(const Rat& a, const Rat& b) {
  if (a.inf != 0) return a;
  if (b.inf != 0) return b;
  return Rat::make(a.num * b.den + b.num * a.den, a.den * b.den);
}

bool Rat::less(const Rat& b) const {
  if (inf != 0 || b.inf != 0) return inf < b.inf;
  return num * b.den < b.num * den;
}

std::string Rat::to_string() const {
  if (inf > 0) return "inf";
  if (inf < 0) return "-inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

Value Value::of_int(long long v) {
  Value out;
  out.kind = Kind::Int;
  out.i = v;
  return out;
}
Value Value::of_bool(bool v) {
  Value out;
  out.kind = Kind::Bool;
  out.b = v;
  return out;
}
Value Value::of_set(std::set<std::string> v) {
  Value out;
  out.kind = Kind::Set;
  out.set = std::move(v);
  return out;
}
Value Value::of_num(Rat v) {
  Value out;
  out.kind = Kind::Num;
  out.q = v;
  return out;
}
Value Value::of_pref(PrefValue v) {
  Value out;
  out.kind = Kind::Pref;
  out.pref = std::move(v);
  return out;
}
Value Value::of_opt(OptSet v) {
  Value out;
  out.kind = Kind::Opt;
  out.opt = std::move(v);
  return out;
}
Value Value::of_tuple(std::vector<Value> v) {
  Value out;
  out.kind = Kind::Tuple;
  out.tuple = std::move(v);
  return out;
}

bool Value::operator==(const Value& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Int: return i == o.i;
    case Kind::Bool: return b == o.b;
    case Kind::Set: return set == o.set;
    case Kind::Num: return q == o.q;
    case Kind::Pref: return pref == o.pref;
    case Kind::Opt: return opt == o.opt;
    case Kind::Tuple: return tuple == o.tuple;
  }
  return false;
}

namespace {

std::string dump_multiset(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, n] : m) {
    if (n == 0) continue;
    if (!first) out += ",";
    first = false;
    out += k;
    if (n != 1) out += ":" + std::to_string(n);
  }
  return out + "}";
}

std::string dump_chi(const std::map<std::string, Multiset>& chi) {
  std::string out = "{";
  bool first = true;
  for (const auto& [c, m] : chi) {
    if (m.empty()) continue;
    if (!first) out += ",";
    first = false;
    out += c + ":" + dump_multiset(m);
  }
  return out + "}";
}

}  // namespace

std::string Value::to_string() const {
  switch (kind) {
    case Kind::Int: return std::to_string(i);
    case Kind::Bool: return b ? "true" : "false";
    case Kind::Set: {
      std::string out = "{";
      bool first = true;
      for (const auto& s : set) {
        if (!first) out += ",";
        first = false;
        out += s;
      }
      return out + "}";
    }
    case Kind::Num: return q.to_string();
    case Kind::Pref:
      if (pref.kind == PrefValue::Kind::Zero) return "0";
      if (pref.kind == PrefValue::Kind::One) return "1";
      return "(" + dump_multiset(pref.s) + "," + dump_chi(pref.chi) + ")";
    case Kind::Opt: {
      std::string out = "{";
      bool first = true;
      for (const auto& p : opt) {
        if (!first) out += ",";
        first = false;
        std::string s = "{";
        bool f2 = true;
        for (const auto& a : p.s) {
          if (!f2) s += ",";
          f2 = false;
          s += a;
        }
        out += "(" + s + "}," + dump_multiset(p.chi) + ")";
      }
      return out + "}";
    }
    case Kind::Tuple: {
      std::string out = "(";
      for (size_t i2 = 0; i2 < tuple.size(); ++i2)
        out += (i2 ? ";" : "") + tuple[i2].to_string();
      return out + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Basic semirings
// ---------------------------------------------------------------------------

SemiringDef make_semiring(const std::string& name) {
  SemiringDef r;
  r.name = name;
  if (name == "nat") {
    r.zero = Value::of_int(0);
    r.one = Value::of_int(1);
    r.add = [](const Value& a, const Value& b) {
      return Value::of_int(a.i + b.i);
    };
    r.mul = [](const Value& a, const Value& b) {
      return Value::of_int(a.i * b.i);
    };
  } else if (name == "bool") {
    r.zero = Value::of_bool(false);
    r.one = Value::of_bool(true);
    r.add = [](const Value& a, const Value& b) {
      return Value::of_bool(a.b || b.b);
    };
    r.mul = [](const Value& a, const Value& b) {
      return Value::of_bool(a.b && b.b);
    };
  } else if (name == "trop") {
    r.zero = Value::of_num(Rat::infinity(+1));
    r.one = Value::of_num(Rat::make(0));
    r.add = [](const Value& a, const Value& b) {
      return a.q.less(b.q) ? a : b;  // min
    };
    r.mul = [](const Value& a, const Value& b) {
      // +inf is the additive zero and must annihilate products.
      if (a.q.inf > 0 || b.q.inf > 0) return Value::of_num(Rat::infinity(+1));
      return Value::of_num(a.q + b.q);
    };
  } else if (name == "max") {
    r.zero = Value::of_num(Rat::infinity(-1));
    r.one = Value::of_num(Rat::make(0));
    r.add = [](const Value& a, const Value& b) {
      return a.q.less(b.q) ? b : a;  // max
    };
    r.mul = [](const Value& a, const Value& b) {
      // -inf is the additive zero and must annihilate products.
      if (a.q.inf < 0 || b.q.inf < 0) return Value::of_num(Rat::infinity(-1));
      return Value::of_num(a.q + b.q);
    };
  } else {
    throw CkrError("unknown semiring '" + name + "'");
  }
  return r;
}

SemiringDef make_powerset(std::set<std::string> universe) {
  SemiringDef r;
  r.name = "powerset";
  r.zero = Value::of_set({});
  r.one = Value::of_set(universe);
  r.add = [](const Value& a, const Value& b) {
    std::set<std::string> out = a.set;
    out.insert(b.set.begin(), b.set.end());
    return Value::of_set(std::move(out));
  };
  r.mul = [](const Value& a, const Value& b) {
    std::set<std::string> out;
    std::set_intersection(a.set.begin(), a.set.end(), b.set.begin(),
                          b.set.end(), std::inserter(out, out.begin()));
    return Value::of_set(std::move(out));
  };
  return r;
}

// ---------------------------------------------------------------------------
// Weighted formulas
// ---------------------------------------------------------------------------

WeightedFormula WeightedFormula::k(Value v) {
  WeightedFormula f;
  f.node = Node::Const;
  f.constant = std::move(v);
  return f;
}
WeightedFormula WeightedFormula::lit(std::string a) {
  WeightedFormula f;
  f.node = Node::Lit;
  f.atom = std::move(a);
  return f;
}
WeightedFormula WeightedFormula::neg(std::string a) {
  WeightedFormula f;
  f.node = Node::NegLit;
  f.atom = std::move(a);
  return f;
}
WeightedFormula WeightedFormula::sum(WeightedFormula l, WeightedFormula r) {
  WeightedFormula f;
  f.node = Node::Sum;
  f.lhs = std::make_shared<WeightedFormula>(std::move(l));
  f.rhs = std::make_shared<WeightedFormula>(std::move(r));
  return f;
}
WeightedFormula WeightedFormula::prod(WeightedFormula l, WeightedFormula r) {
  WeightedFormula f;
  f.node = Node::Prod;
  f.lhs = std::make_shared<WeightedFormula>(std::move(l));
  f.rhs = std::make_shared<WeightedFormula>(std::move(r));
  return f;
}

namespace {

struct FormulaParser {
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("weighted formula: " + what + " at offset " +
                     std::to_string(pos), 1, static_cast<int>(pos + 1));
  }

  std::string atom() {
    skip();
    if (pos < text.size() && text[pos] == '\'') {
      size_t end = text.find('\'', pos + 1);
      if (end == std::string::npos) fail("unterminated quoted atom");
      std::string out = text.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      return out;
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected atom");
    return text.substr(start, pos - start);
  }

  WeightedFormula factor() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      WeightedFormula f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '~') {
      ++pos;
      return WeightedFormula::neg(atom());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      return WeightedFormula::k(Value::of_int(v));
    }
    return WeightedFormula::lit(atom());
  }

  WeightedFormula term() {
    WeightedFormula f = factor();
    while (eat('*')) f = WeightedFormula::prod(std::move(f), factor());
    return f;
  }

  WeightedFormula expr() {
    WeightedFormula f = term();
    while (eat('+')) f = WeightedFormula::sum(std::move(f), term());
    return f;
  }
};

Value coerce(const Value& v, const SemiringDef& r) {
  if (v.kind != Value::Kind::Int || r.zero.kind == Value::Kind::Int) return v;
  switch (r.zero.kind) {
    case Value::Kind::Bool: return Value::of_bool(v.i != 0);
    case Value::Kind::Num: return Value::of_num(Rat::make(v.i));
    default:
      throw CkrError("integer constant not valid in semiring '" + r.name +
                     "'");
  }
}

}  // namespace

WeightedFormula parse_weighted_formula(const std::string& text) {
  FormulaParser p{text};
  WeightedFormula f = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

Value eval_weighted_formula(const WeightedFormula& f,
                            const std::set<std::string>& interp,
                            const SemiringDef& r) {
  switch (f.node) {
    case WeightedFormula::Node::Const: return coerce(f.constant, r);
    case WeightedFormula::Node::Lit:
      return interp.count(f.atom) ? r.one : r.zero;
    case WeightedFormula::Node::NegLit:
      return interp.count(f.atom) ? r.zero : r.one;
    case WeightedFormula::Node::Sum:
      return r.add(eval_weighted_formula(*f.lhs, interp, r),
                   eval_weighted_formula(*f.rhs, interp, r));
    case WeightedFormula::Node::Prod:
      return r.mul(eval_weighted_formula(*f.lhs, interp, r),
                   eval_weighted_formula(*f.rhs, interp, r));
  }
  throw CkrError("invalid formula node");
}

Value overall_weight(std::vector<std::set<std::string>> answer_sets,
                     const WeightedFormula& f, const SemiringDef& r) {
  std::sort(answer_sets.begin(), answer_sets.end());
  Value acc = r.zero;
  for (const auto& i : answer_sets)
    acc = r.add(acc, eval_weighted_formula(f, i, r));
  return acc;
}

// ---------------------------------------------------------------------------
// Overriding-set measure
// ---------------------------------------------------------------------------

MuOpt build_mu_opt(const Sckr& k, const GroundCkr& g) {
  (void)k;
  MuOpt m;
  std::set<std::string> universe;
  for (const auto& info : g.ovr_domain)
    universe.insert(g.program.atoms.name(info.atom_id));
  m.domain.assign(universe.begin(), universe.end());
  m.semiring = make_powerset(universe);
  WeightedFormula acc = WeightedFormula::k(Value::of_set({}));
  for (const auto& key : m.domain)
    acc = WeightedFormula::sum(
        std::move(acc),
        WeightedFormula::prod(WeightedFormula::lit(key),
                              WeightedFormula::k(Value::of_set({key}))));
  m.formula = std::move(acc);
  return m;
}

// ---------------------------------------------------------------------------
// Preference semirings
// ---------------------------------------------------------------------------

namespace {

struct PrefEnv {
  std::string rel;
  OrderClosures cl;
  std::map<std::string, ClashingAssumption> registry;  // key -> assumption
};

std::shared_ptr<PrefEnv> make_env(const Sckr& k, const GroundCkr& g,
                                  const OrderClosures& cl) {
  if (k.structure.relations.size() != 1)
    throw CkrError("preference semiring requires a single relation");
  for (const auto& [c, kb] : k.kbs) {
    for (const auto& a : kb.strict)
      if (a.kind == AxiomKind::SubEvalC || a.kind == AxiomKind::SubEvalR)
        throw CkrError("preference semiring requires an eval-free KB");
  }
  auto env = std::make_shared<PrefEnv>();
  env->rel = k.structure.relations[0].name;
  env->cl = cl;
  for (const auto& info : g.ovr_domain)
    env->registry.emplace(g.program.atoms.name(info.atom_id), info.ca);
  return env;
}

ClashMultiset to_clash_multiset(const Multiset& m, const PrefEnv& env) {
  ClashMultiset out;
  for (const auto& [key, n] : m) {
    if (n == 0) continue;
    auto it = env.registry.find(key);
    if (it == env.registry.end())
      throw CkrError("unknown overriding key '" + key + "'");
    out[it->second] += n;
  }
  return out;
}

// Pareto combination over contexts of the local multiset preference.
bool pareto_gt(const std::map<std::string, Multiset>& chi1,
               const std::map<std::string, Multiset>& chi2,
               const PrefEnv& env) {
  std::set<std::string> ctxs;
  for (const auto& [c, m] : chi1) ctxs.insert(c);
  for (const auto& [c, m] : chi2) ctxs.insert(c);
  bool strict = false;
  static const Multiset empty;
  for (const auto& c : ctxs) {
    auto i1 = chi1.find(c);
    auto i2 = chi2.find(c);
    const Multiset& m1 = i1 == chi1.end() ? empty : i1->second;
    const Multiset& m2 = i2 == chi2.end() ? empty : i2->second;
    if (m1 == m2) continue;
    if (!local_pref_gt_multiset(to_clash_multiset(m1, env),
                                to_clash_multiset(m2, env), c, env.rel,
                                env.cl))
      return false;
    strict = true;
  }
  return strict;
}

// Lexicographic comparison of atom multisets in var_order; the value with
// the smaller multiplicity at the first differing atom is smaller.
int lex_cmp(const Multiset& a, const Multiset& b,
            const std::vector<std::string>& var_order) {
  auto mult = [](const Multiset& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? 0LL : it->second;
  };
  for (const auto& atom : var_order) {
    long long ma = mult(a, atom), mb = mult(b, atom);
    if (ma != mb) return ma < mb ? -1 : 1;
  }
  // atoms outside var_order, in sorted order
  std::set<std::string> rest;
  std::set<std::string> ordered(var_order.begin(), var_order.end());
  for (const auto& [k, n] : a)
    if (!ordered.count(k)) rest.insert(k);
  for (const auto& [k, n] : b)
    if (!ordered.count(k)) rest.insert(k);
  for (const auto& atom : rest) {
    long long ma = mult(a, atom), mb = mult(b, atom);
    if (ma != mb) return ma < mb ? -1 : 1;
  }
  return 0;
}

SemiringDef make_r_one_impl(const Sckr& k, const GroundCkr& g,
                            const OrderClosures& cl,
                            const std::vector<std::string>& var_order,
                            bool set_chi) {
  auto env = make_env(k, g, cl);
  auto order = std::make_shared<std::vector<std::string>>(var_order);
  SemiringDef r;
  r.name = set_chi ? "r_one_setchi" : "r_one";
  PrefValue zero, one;
  zero.kind = PrefValue::Kind::Zero;
  one.kind = PrefValue::Kind::One;
  r.zero = Value::of_pref(zero);
  r.one = Value::of_pref(one);
  r.add = [env, order](const Value& av, const Value& bv) {
    const PrefValue& a = av.pref;
    const PrefValue& b = bv.pref;
    if (a.kind == PrefValue::Kind::Zero) return bv;
    if (b.kind == PrefValue::Kind::Zero) return av;
    if (a.kind == PrefValue::Kind::One || b.kind == PrefValue::Kind::One)
      return Value::of_pref({PrefValue::Kind::One, {}, {}});
    if (pareto_gt(a.chi, b.chi, *env)) return av;
    if (pareto_gt(b.chi, a.chi, *env)) return bv;
    int c = lex_cmp(a.s, b.s, *order);
    if (c != 0) return c < 0 ? av : bv;
    return dump_chi(a.chi) <= dump_chi(b.chi) ? av : bv;
  };
  r.mul = [set_chi](const Value& av, const Value& bv) {
    const PrefValue& a = av.pref;
    const PrefValue& b = bv.pref;
    if (a.kind == PrefValue::Kind::Zero) return av;
    if (b.kind == PrefValue::Kind::Zero) return bv;
    if (a.kind == PrefValue::Kind::One) return bv;
    if (b.kind == PrefValue::Kind::One) return av;
    PrefValue out = a;
    for (const auto& [key, n] : b.s) out.s[key] += n;
    for (const auto& [c, m] : b.chi)
      for (const auto& [key, n] : m) {
        long long& slot = out.chi[c][key];
        slot = set_chi ? std::max(slot, std::min(n, 1LL)) : slot + n;
      }
    return Value::of_pref(std::move(out));
  };
  return r;
}

}  // namespace

SemiringDef make_r_one(const Sckr& k, const GroundCkr& g,
                       const OrderClosures& cl,
                       const std::vector<std::string>& var_order) {
  return make_r_one_impl(k, g, cl, var_order, false);
}

SemiringDef make_r_one_setchi(const Sckr& k, const GroundCkr& g,
                              const OrderClosures& cl,
                              const std::vector<std::string>& var_order) {
  return make_r_one_impl(k, g, cl, var_order, true);
}

WeightedFormula build_alpha_one(const GroundCkr& g) {
  PrefValue one;
  one.kind = PrefValue::Kind::One;
  WeightedFormula acc = WeightedFormula::k(Value::of_pref(one));
  std::vector<std::string> base;
  for (int a = 0; a < g.program.atoms.size(); ++a)
    base.push_back(g.program.atoms.name(a));
  std::sort(base.begin(), base.end());
  for (const auto& atom : base) {
    PrefValue collect = PrefValue::pair({{atom, 1}}, {});
    acc = WeightedFormula::prod(
        std::move(acc),
        WeightedFormula::sum(
            WeightedFormula::prod(WeightedFormula::lit(atom),
                                  WeightedFormula::k(Value::of_pref(collect))),
            WeightedFormula::neg(atom)));
  }
  for (const auto& info : g.ovr_domain) {
    std::string key = g.program.atoms.name(info.atom_id);
    PrefValue collect = PrefValue::pair({}, {{info.target, {{key, 1}}}});
    acc = WeightedFormula::prod(
        std::move(acc),
        WeightedFormula::sum(
            WeightedFormula::prod(WeightedFormula::lit(key),
                                  WeightedFormula::k(Value::of_pref(collect))),
            WeightedFormula::neg(key)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Per-context optimal-set semirings
// ---------------------------------------------------------------------------

namespace {

OptSet opt_prune(const OptSet& a, const std::string& c,
                 const std::shared_ptr<PrefEnv>& env) {
  OptSet out;
  for (const auto& p : a) {
    bool dominated = false;
    ClashMultiset mp = to_clash_multiset(p.chi, *env);
    for (const auto& q : a) {
      if (q.chi == p.chi) continue;
      if (local_pref_gt_multiset(to_clash_multiset(q.chi, *env), mp, c,
                                 env->rel, env->cl)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

}  // namespace

SemiringDef make_r_c(const Sckr& k, const GroundCkr& g,
                     const OrderClosures& cl, const std::string& c) {
  auto env = make_env(k, g, cl);
  SemiringDef r;
  r.name = "r_c(" + c + ")";
  r.zero = Value::of_opt({});
  r.one = Value::of_opt({OptPair{}});
  r.add = [env, c](const Value& a, const Value& b) {
    OptSet u = a.opt;
    u.insert(b.opt.begin(), b.opt.end());
    return Value::of_opt(opt_prune(u, c, env));
  };
  r.mul = [env, c](const Value& a, const Value& b) {
    OptSet u;
    for (const auto& p : a.opt)
      for (const auto& q : b.opt) {
        OptPair out = p;
        out.s.insert(q.s.begin(), q.s.end());
        for (const auto& [key, n] : q.chi) out.chi[key] += n;
        u.insert(std::move(out));
      }
    return Value::of_opt(opt_prune(u, c, env));
  };
  return r;
}

WeightedFormula build_alpha_c(const Sckr& k, const GroundCkr& g,
                              const std::string& c) {
  (void)k;
  WeightedFormula acc = WeightedFormula::k(Value::of_opt({OptPair{}}));
  auto collector = [&acc](const std::string& ground_atom,
                          const OptPair& pair) {
    acc = WeightedFormula::prod(
        std::move(acc),
        WeightedFormula::sum(
            WeightedFormula::prod(WeightedFormula::lit(ground_atom),
                                  WeightedFormula::k(Value::of_opt({pair}))),
            WeightedFormula::neg(ground_atom)));
  };
  for (const auto& x : g.inds)
    for (const auto& a : g.clss) {
      if (a == "top" || a == "bot") continue;
      collector("instd(" + x + "," + a + "," + c + ",main)",
                OptPair{{a + "(" + x + ")"}, {}});
    }
  for (const auto& x : g.inds)
    for (const auto& rl : g.rols)
      for (const auto& y : g.inds)
        collector("tripled(" + x + "," + rl + "," + y + "," + c + ",main)",
                  OptPair{{rl + "(" + x + "," + y + ")"}, {}});
  for (const auto& info : g.ovr_domain) {
    if (info.target != c) continue;
    std::string key = g.program.atoms.name(info.atom_id);
    collector(key, OptPair{{}, {{key, 1}}});
  }
  return acc;
}

SemiringDef make_r_all(const Sckr& k, const GroundCkr& g,
                       const OrderClosures& cl) {
  auto parts = std::make_shared<std::vector<SemiringDef>>();
  std::vector<Value> zeros, ones;
  for (const auto& c : k.structure.contexts) {
    parts->push_back(make_r_c(k, g, cl, c));
    zeros.push_back(parts->back().zero);
    ones.push_back(parts->back().one);
  }
  SemiringDef r;
  r.name = "r_all";
  r.zero = Value::of_tuple(std::move(zeros));
  r.one = Value::of_tuple(std::move(ones));
  r.add = [parts](const Value& a, const Value& b) {
    std::vector<Value> out;
    for (size_t i = 0; i < parts->size(); ++i)
      out.push_back((*parts)[i].add(a.tuple[i], b.tuple[i]));
    return Value::of_tuple(std::move(out));
  };
  r.mul = [parts](const Value& a, const Value& b) {
    std::vector<Value> out;
    for (size_t i = 0; i < parts->size(); ++i)
      out.push_back((*parts)[i].mul(a.tuple[i], b.tuple[i]));
    return Value::of_tuple(std::move(out));
  };
  return r;
}

std::map<std::string, OptSet> mu_all(
    const Sckr& k, const GroundCkr& g, const OrderClosures& cl,
    const std::vector<std::set<std::string>>& answer_sets) {
  std::map<std::string, OptSet> out;
  for (const auto& c : k.structure.contexts) {
    SemiringDef r = make_r_c(k, g, cl, c);
    WeightedFormula f = build_alpha_c(k, g, c);
    out[c] = overall_weight(answer_sets, f, r).opt;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Law harness
// ---------------------------------------------------------------------------

LawReport check_semiring_laws(const SemiringDef& r,
                              const std::vector<Value>& samples) {
  LawReport rep;
  std::vector<Value> vals = samples;
  vals.push_back(r.zero);
  vals.push_back(r.one);
  auto fail = [&](const std::string& law, const Value& a, const Value& b,
                  const Value& c) {
    if (!rep.ok) return;
    rep.ok = false;
    rep.counterexample = law + " at a=" + a.to_string() +
                         ", b=" + b.to_string() + ", c=" + c.to_string();
  };
  for (const auto& a : vals) {
    if (!(r.add(a, r.zero) == a)) fail("add-identity", a, r.zero, r.zero);
    if (!(r.mul(r.one, a) == a)) fail("mul-identity-left", a, r.one, r.one);
    if (!(r.mul(a, r.one) == a)) fail("mul-identity-right", a, r.one, r.one);
    if (!(r.mul(r.zero, a) == r.zero)) fail("annihilation-left", a, a, a);
    if (!(r.mul(a, r.zero) == r.zero)) fail("annihilation-right", a, a, a);
    if (!rep.ok) return rep;
  }
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals) {
        ++rep.triples;
        if (!(r.add(a, b) == r.add(b, a))) fail("add-commutativity", a, b, c);
        if (!(r.add(r.add(a, b), c) == r.add(a, r.add(b, c))))
          fail("add-associativity", a, b, c);
        if (!(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))))
          fail("mul-associativity", a, b, c);
        if (!(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))))
          fail("left-distributivity", a, b, c);
        if (!(r.mul(r.add(b, c), a) == r.add(r.mul(b, a), r.mul(c, a))))
          fail("right-distributivity", a, b, c);
        if (!rep.ok) return rep;
      }
  return rep;
}

}  // namespace ckr
