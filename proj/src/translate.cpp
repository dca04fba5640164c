#include "ckr/translate.hpp"

#include <algorithm>
#include <sstream>

namespace ckr {

namespace {

// Surface concept names Top/Bot map to the built-in constants.
std::string mapc(const std::string& name) {
  if (name == "Top") return "top";
  if (name == "Bot") return "bot";
  return name;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i];
  }
  return out;
}

// Signature of a context KB: individuals, concepts (surface names), roles.
struct Signature {
  std::set<std::string> inds, clss, rols;
};

void collect_axiom(const NormalAxiom& a, Signature& sig) {
  const auto& o = a.ops;
  switch (a.kind) {
    case AxiomKind::ClassAssertion:
      sig.clss.insert(o[0]);
      sig.inds.insert(o[1]);
      break;
    case AxiomKind::RoleAssertion:
      sig.rols.insert(o[0]);
      sig.inds.insert(o[1]);
      sig.inds.insert(o[2]);
      break;
    case AxiomKind::Eq:
    case AxiomKind::Neq:
      sig.inds.insert(o[0]);
      sig.inds.insert(o[1]);
      break;
    case AxiomKind::SubClass:
      sig.clss.insert(o[0]);
      sig.clss.insert(o[1]);
      break;
    case AxiomKind::NomSubClass:
      sig.inds.insert(o[0]);
      sig.clss.insert(o[1]);
      break;
    case AxiomKind::SubConj:
      sig.clss.insert(o[0]);
      sig.clss.insert(o[1]);
      sig.clss.insert(o[2]);
      break;
    case AxiomKind::SubEx:
      sig.rols.insert(o[0]);
      sig.clss.insert(o[1]);
      sig.clss.insert(o[2]);
      break;
    case AxiomKind::SupEx:
      sig.clss.insert(o[0]);
      sig.rols.insert(o[1]);
      sig.inds.insert(o[2]);
      break;
    case AxiomKind::SupForall:
      sig.clss.insert(o[0]);
      sig.rols.insert(o[1]);
      sig.clss.insert(o[2]);
      break;
    case AxiomKind::SupLeqOne:
      sig.clss.insert(o[0]);
      sig.rols.insert(o[1]);
      break;
    case AxiomKind::SubRole:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
      sig.rols.insert(o[0]);
      sig.rols.insert(o[1]);
      break;
    case AxiomKind::SubRChain:
      sig.rols.insert(o[0]);
      sig.rols.insert(o[1]);
      sig.rols.insert(o[2]);
      break;
    case AxiomKind::Irr:
      sig.rols.insert(o[0]);
      break;
    case AxiomKind::SubEvalC:
      sig.clss.insert(o[0]);
      sig.clss.insert(o[2]);
      break;
    case AxiomKind::SubEvalR:
      sig.rols.insert(o[0]);
      sig.rols.insert(o[2]);
      break;
  }
}

Signature context_signature(const ContextKB& kb) {
  Signature sig;
  for (const auto& a : kb.strict) collect_axiom(a, sig);
  for (const auto& d : kb.defeasible) collect_axiom(d.body, sig);
  return sig;
}

// Input-translation facts for one strict axiom (surface names).
void strict_axiom_facts(const NormalAxiom& a, const std::string& c,
                        std::vector<SymFact>& out) {
  const auto& o = a.ops;
  switch (a.kind) {
    case AxiomKind::ClassAssertion:
      if (o[0] == "Top")
        out.push_back({"irl-top", "insta", {o[1], "top", c}});
      else if (o[0] == "Bot")
        out.push_back({"irl-bot", "insta", {o[1], "bot", c}});
      else
        out.push_back({"irl-inst1", "insta", {o[1], o[0], c}});
      break;
    case AxiomKind::RoleAssertion:
      out.push_back({"irl-triple", "triplea", {o[1], o[0], o[2], c}});
      break;
    case AxiomKind::Eq:
      out.push_back({"irl-eq", "eq", {o[0], o[1], c, "main"}});
      break;
    case AxiomKind::Neq:
      break;  // maps to the empty set under the unique name assumption
    case AxiomKind::NomSubClass:
      out.push_back({"irl-inst3", "insta", {o[0], mapc(o[1]), c}});
      break;
    case AxiomKind::SubClass:
      out.push_back({"irl-subc", "subClass", {mapc(o[0]), mapc(o[1]), c}});
      break;
    case AxiomKind::SubConj:
      out.push_back(
          {"irl-subcnj", "subConj", {mapc(o[0]), mapc(o[1]), mapc(o[2]), c}});
      break;
    case AxiomKind::SubEx:
      out.push_back({"irl-subex", "subEx", {o[0], mapc(o[1]), mapc(o[2]), c}});
      break;
    case AxiomKind::SupEx:
      out.push_back({"irl-supex", "supEx", {mapc(o[0]), o[1], o[2], c}});
      break;
    case AxiomKind::SupForall:
      out.push_back(
          {"irl-forall", "supForall", {mapc(o[0]), o[1], mapc(o[2]), c}});
      break;
    case AxiomKind::SupLeqOne:
      out.push_back({"irl-leqone", "supLeqOne", {mapc(o[0]), o[1], c}});
      break;
    case AxiomKind::SubRole:
      out.push_back({"irl-subr", "subRole", {o[0], o[1], c}});
      break;
    case AxiomKind::SubRChain:
      out.push_back({"irl-subrc", "subRChain", {o[0], o[1], o[2], c}});
      break;
    case AxiomKind::Dis:
      out.push_back({"irl-dis", "dis", {o[0], o[1], c}});
      break;
    case AxiomKind::Inv:
      out.push_back({"irl-inv", "inv", {o[0], o[1], c}});
      break;
    case AxiomKind::Irr:
      out.push_back({"irl-irr", "irr", {o[0], c}});
      break;
    case AxiomKind::SubEvalC:
      out.push_back(
          {"ilc-subevalat", "subEval", {mapc(o[0]), o[1], mapc(o[2]), c}});
      break;
    case AxiomKind::SubEvalR:
      out.push_back({"ilc-subevalr", "subEvalR", {o[0], o[1], o[2], c}});
      break;
  }
}

struct DefPred {
  const char* tag;
  const char* pred;
  const char* ovr_tag;
};

DefPred def_pred(AxiomKind k) {
  switch (k) {
    case AxiomKind::SubClass: return {"id-subc", "def_subclass", "subClass"};
    case AxiomKind::SubConj: return {"id-subcnj", "def_subcnj", "subConj"};
    case AxiomKind::SubEx: return {"id-subex", "def_subex", "subEx"};
    case AxiomKind::SupEx: return {"id-supex", "def_supex", "supEx"};
    case AxiomKind::SupForall:
      return {"id-forall", "def_supforall", "supForall"};
    case AxiomKind::SupLeqOne:
      return {"id-leqone", "def_supleqone", "supLeqOne"};
    case AxiomKind::SubRole: return {"id-subr", "def_subr", "subRole"};
    case AxiomKind::SubRChain: return {"id-subrc", "def_subrc", "subRChain"};
    case AxiomKind::Dis: return {"id-dis", "def_dis", "dis"};
    case AxiomKind::Inv: return {"id-inv", "def_inv", "inv"};
    case AxiomKind::Irr: return {"id-irr", "def_irr", "irr"};
    default: throw CkrError("axiom kind not allowed as defeasible");
  }
}

std::vector<std::string> mapped_ops(const NormalAxiom& a) {
  std::vector<std::string> ops = a.ops;
  switch (a.kind) {
    case AxiomKind::SubClass:
    case AxiomKind::SubConj:
      for (auto& o : ops) o = mapc(o);
      break;
    case AxiomKind::SubEx:
      ops[1] = mapc(ops[1]);
      ops[2] = mapc(ops[2]);
      break;
    case AxiomKind::SupEx:
      ops[0] = mapc(ops[0]);
      break;
    case AxiomKind::SupForall:
      ops[0] = mapc(ops[0]);
      ops[2] = mapc(ops[2]);
      break;
    case AxiomKind::SupLeqOne:
      ops[0] = mapc(ops[0]);
      break;
    default:
      break;
  }
  return ops;
}

}  // namespace

std::string SymFact::render() const { return pred + "(" + join(args) + ")"; }

static const char* kRuleTags[] = {
    // P_rl
    "prl-instd", "prl-tripled", "prl-eq", "prl-top", "prl-bot", "prl-subc",
    "prl-subcnj", "prl-subex", "prl-supex", "prl-supforall", "prl-leqone",
    "prl-subr", "prl-subrc", "prl-dis", "prl-inv1", "prl-inv2", "prl-irr",
    "prl-sat",
    // P_glob
    "pgl-preceq1", "pgl-preceq2", "pgl-preceqexc1", "pgl-preceqexc2",
    // P_eval
    "plc-subevalat", "plc-subevalr", "plc-subevalatp", "plc-subevalrp",
    // overriding
    "ovr-subc", "ovr-cnj", "ovr-subex", "ovr-supex", "ovr-forall",
    "ovr-leqone", "ovr-subr", "ovr-subrc", "ovr-dis", "ovr-inv1", "ovr-inv2",
    "ovr-irr",
    // strict inheritance
    "props-inst", "props-triple", "props-subc", "props-cnj", "props-subex",
    "props-supex", "props-forall", "props-leqone", "props-subr", "props-subrc",
    "props-dis", "props-inv1", "props-inv2", "props-irr",
    // defeasible inheritance
    "propd-subc", "propd-cnj", "propd-subex", "propd-supex", "propd-forall",
    "propd-leqone", "propd-subr", "propd-subrc", "propd-dis", "propd-inv1",
    "propd-inv2", "propd-irr",
    // parallel inheritance
    "propp-subc", "propp-cnj", "propp-subex", "propp-supex", "propp-forall",
    "propp-leqone", "propp-subr", "propp-subrc", "propp-dis", "propp-inv1",
    "propp-inv2", "propp-irr",
    // tests
    "test-subc", "constr-subc", "test-subcnj", "constr-subcnj", "test-subex",
    "constr-subex", "test-supex", "constr-supex", "test-supforall",
    "constr-supforall", "test-subr", "constr-subr", "test-subrc",
    "constr-subrc", "test-inv1", "test-inv2", "constr-inv1", "constr-inv2",
    "test-fails1", "test-fails2", "test-add1", "test-add2", "test-copy1",
    "test-copy2",
    // preparation
    "prep-indiv", "prep-ovr-subs", "prep-ovr-subc", "prep-ovr-subex",
    "prep-ovr-supex", "prep-ovr-supfa", "prep-ovr-suble", "prep-ovr-subr",
    "prep-ovr-subrc", "prep-ovr-dis", "prep-ovr-inv", "prep-ovr-irr",
    "act-ovr-subs", "act-ovr-subc", "act-ovr-subex", "act-ovr-supex",
    "act-ovr-supfa", "act-ovr-suble", "act-ovr-subr", "act-ovr-subrc",
    "act-ovr-dis", "act-ovr-inv", "act-ovr-irr",
};

SymbolicProgram translate(const Sckr& k) {
  SymbolicProgram out;
  OrderClosures cl = compute_closures(k.structure);
  for (const auto& c : k.structure.contexts)
    out.facts.push_back({"igl-ctx", "context", {c}});
  for (const auto& r : k.structure.relations)
    out.facts.push_back({"igl-rel", "relation", {r.name}});
  for (const auto& r : k.structure.relations)
    for (const auto& [a, b] : cl.prec.at(r.name))
      out.facts.push_back({"igl-prec", "prec", {a, b, r.name}});
  int m = static_cast<int>(k.structure.relations.size());
  for (int i = 0; i < m; ++i) {
    std::string w = std::to_string(m - i);
    const std::string& name = k.structure.relations[i].name;
    out.facts.push_back({"rel-weight", "rel_w", {name, w}});
    out.facts.push_back({"rel-weight", "relation_weight", {name, w}});
  }
  for (const auto& c : k.structure.contexts) {
    const ContextKB* kb = k.kb(c);
    if (kb == nullptr) continue;
    Signature sig = context_signature(*kb);
    for (const auto& a : sig.inds) out.facts.push_back({"irl-nom", "nom", {a, c}});
    for (const auto& a : sig.clss)
      if (a != "Top" && a != "Bot")
        out.facts.push_back({"irl-cls", "cls", {a, c}});
    for (const auto& r : sig.rols) out.facts.push_back({"irl-rol", "rol", {r, c}});
    for (const auto& a : kb->strict) strict_axiom_facts(a, c, out.facts);
    for (const auto& d : kb->defeasible) {
      DefPred dp = def_pred(d.body.kind);
      std::vector<std::string> args = mapped_ops(d.body);
      args.push_back(c);
      args.push_back(d.relation);
      out.facts.push_back({dp.tag, dp.pred, std::move(args)});
    }
  }
  out.rule_tags.assign(std::begin(kRuleTags), std::end(kRuleTags));
  return out;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

struct DefFact {
  AxiomKind kind;
  std::vector<std::string> ops;  // mapped operand names
  std::string ctx;               // declaring context c1
  std::string rel;
  std::string atom;              // rendered def_* fact
};

// One overridable instantiation of a defeasible axiom at target context c:
// the main-environment body, the hypothetical-test environment term (empty
// for supLeqOne/dis/irr) and the instance tuple.
struct OvrEntry {
  std::vector<std::string> inst;
  std::vector<std::string> body;  // main-env atoms, rendered
  std::string env;
  // Head/body of the corresponding propagation-rule instance at env t.
  // (Filled by prop_insts instead; see below.)
};

class Grounder {
 public:
  Grounder(const Sckr& k, const OrderClosures& cl, const SolveOptions& opts)
      : k_(k), cl_(cl), opts_(opts) {}

  GroundCkr run() {
    collect();
    add_facts();
    collect_envs();
    add_rl_rules();
    add_eval_rules();
    add_props_rules();
    add_propd_propp_rules();
    add_ovr_test_rules();
    add_env_machinery();
    add_prep_rules();
    finish();
    return std::move(g_);
  }

 private:
  const Sckr& k_;
  const OrderClosures& cl_;
  const SolveOptions& opts_;
  GroundCkr g_;
  SymbolicProgram sym_;
  std::vector<std::string> ctxs_;
  std::vector<DefFact> defs_;
  // strict axiom tuples with mapped names, per declaring context
  std::vector<std::pair<std::string, NormalAxiom>> stricts_;
  std::set<std::pair<std::string, std::string>> noms_;  // (ind, ctx)
  std::map<int, OvrInfo> ovr_info_;  // ovr atom id -> provenance

  int A(const std::string& pred, const std::vector<std::string>& args) {
    return g_.program.atoms.intern(pred + "(" + join(args) + ")");
  }

  void add(RuleClass rc, const std::string& tag, int head, std::vector<int> pos,
           std::vector<int> neg = {}) {
    if (g_.program.rules.size() >= opts_.max_ground_rules)
      throw CapExceeded("ground program exceeds the cap of " +
                        std::to_string(opts_.max_ground_rules) + " rules");
    g_.program.add(head, std::move(pos), std::move(neg), tag);
    g_.rule_class.push_back(rc);
  }

  const PairSet& reach(const std::string& rel) const {
    return cl_.reach.at(rel);
  }

  // Strict ⪯_*: pairs (c, c1) with c ⪯_* c1 and c != c1.
  std::vector<std::pair<std::string, std::string>> star_strict() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : cl_.preceq_star)
      if (p.first != p.second) out.push_back(p);
    return out;
  }

  void collect() {
    ctxs_ = k_.structure.contexts;
    sym_ = translate(k_);
    std::set<std::string> inds, clss, rols;
    clss.insert("top");
    clss.insert("bot");
    for (const auto& c : ctxs_) {
      const ContextKB* kb = k_.kb(c);
      if (kb == nullptr) continue;
      Signature sig = context_signature(*kb);
      for (const auto& i : sig.inds) {
        inds.insert(i);
        noms_.insert({i, c});
      }
      for (const auto& a : sig.clss) clss.insert(mapc(a));
      rols.insert(sig.rols.begin(), sig.rols.end());
      for (const auto& a : kb->strict) {
        NormalAxiom mapped = a;
        mapped.ops = a.kind == AxiomKind::ClassAssertion
                         ? std::vector<std::string>{mapc(a.ops[0]), a.ops[1]}
                         : mapped_ops(a);
        if (a.kind == AxiomKind::ClassAssertion) mapped.ops[0] = mapc(a.ops[0]);
        stricts_.push_back({c, mapped});
      }
      for (const auto& d : kb->defeasible) {
        DefPred dp = def_pred(d.body.kind);
        std::vector<std::string> ops = mapped_ops(d.body);
        std::vector<std::string> args = ops;
        args.push_back(c);
        args.push_back(d.relation);
        defs_.push_back({d.body.kind, ops, c, d.relation,
                         std::string(dp.pred) + "(" + join(args) + ")"});
      }
    }
    g_.inds.assign(inds.begin(), inds.end());
    g_.clss.assign(clss.begin(), clss.end());
    g_.rols.assign(rols.begin(), rols.end());
  }

  void add_facts() {
    for (const auto& f : sym_.facts)
      add(RuleClass::Other, f.tag, g_.program.atoms.intern(f.render()), {});
  }

  // --- environment terms -------------------------------------------------

  // Overridable instantiations of a defeasible axiom at target context c.
  std::vector<OvrEntry> ovr_entries(const DefFact& d, const std::string& c) {
    std::vector<OvrEntry> out;
    const auto& o = d.ops;
    auto instd = [&](const std::string& x, const std::string& z) {
      return "instd(" + x + "," + z + "," + c + ",main)";
    };
    auto tripled = [&](const std::string& x, const std::string& r,
                       const std::string& y) {
      return "tripled(" + x + "," + r + "," + y + "," + c + ",main)";
    };
    auto nlit = [&](const std::string& x, const std::string& z) {
      return "nlit(" + x + "," + z + "," + c + ")";
    };
    auto nrel = [&](const std::string& x, const std::string& r,
                    const std::string& y) {
      return "nrel(" + x + "," + r + "," + y + "," + c + ")";
    };
    const auto& I = g_.inds;
    switch (d.kind) {
      case AxiomKind::SubClass:
        for (const auto& x : I)
          out.push_back({{x}, {instd(x, o[0])}, nlit(x, o[1])});
        break;
      case AxiomKind::SubConj:
        for (const auto& x : I)
          out.push_back({{x}, {instd(x, o[0]), instd(x, o[1])}, nlit(x, o[2])});
        break;
      case AxiomKind::SubEx:
        for (const auto& x : I)
          for (const auto& w : I)
            out.push_back(
                {{x}, {tripled(x, o[0], w), instd(w, o[1])}, nlit(x, o[2])});
        break;
      case AxiomKind::SupEx:
        for (const auto& x : I)
          out.push_back({{x}, {instd(x, o[0])}, nrel(x, o[1], o[2])});
        break;
      case AxiomKind::SupForall:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back({{x, y},
                           {instd(x, o[0]), tripled(x, o[1], y)},
                           nlit(y, o[2])});
        break;
      case AxiomKind::SupLeqOne:
        for (const auto& x : I)
          for (const auto& x1 : I)
            for (const auto& x2 : I) {
              if (x1 == x2) continue;
              out.push_back({{x, x1, x2},
                             {instd(x, o[0]), tripled(x, o[1], x1),
                              tripled(x, o[1], x2)},
                             ""});
            }
        break;
      case AxiomKind::SubRole:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back({{x, y}, {tripled(x, o[0], y)}, nrel(x, o[1], y)});
        break;
      case AxiomKind::SubRChain:
        for (const auto& x : I)
          for (const auto& y : I)
            for (const auto& z : I)
              out.push_back({{x, y, z},
                             {tripled(x, o[0], y), tripled(y, o[1], z)},
                             nrel(x, o[2], z)});
        break;
      case AxiomKind::Dis:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back(
                {{x, y}, {tripled(x, o[0], y), tripled(x, o[1], y)}, ""});
        break;
      case AxiomKind::Inv:
        // Two overridable readings per pair, sharing the ovr atom.
        for (const auto& x : I)
          for (const auto& y : I) {
            out.push_back({{x, y}, {tripled(x, o[0], y)}, nrel(x, o[1], y)});
            out.push_back({{x, y}, {tripled(y, o[1], x)}, nrel(x, o[0], y)});
          }
        break;
      case AxiomKind::Irr:
        for (const auto& x : I) out.push_back({{x}, {tripled(x, o[0], x)}, ""});
        break;
      default:
        break;
    }
    return out;
  }

  std::vector<std::string> ovr_args(const DefFact& d,
                                    const std::vector<std::string>& inst,
                                    const std::string& c) {
    std::vector<std::string> args;
    args.push_back(def_pred(d.kind).ovr_tag);
    args.insert(args.end(), inst.begin(), inst.end());
    args.insert(args.end(), d.ops.begin(), d.ops.end());
    args.push_back(d.ctx);
    args.push_back(c);
    args.push_back(d.rel);
    return args;
  }

  int ovr_atom(const DefFact& d, const std::vector<std::string>& inst,
               const std::string& c) {
    int id = A("ovr", ovr_args(d, inst, c));
    auto it = ovr_info_.find(id);
    if (it == ovr_info_.end()) {
      OvrInfo info;
      info.ca = {d.kind, d.ops, inst, d.ctx, d.rel};
      info.target = c;
      info.atom_id = id;
      ovr_info_.emplace(id, std::move(info));
    }
    return id;
  }

  void collect_envs() {
    std::set<std::string> envs;
    envs.insert("main");
    for (const auto& d : defs_)
      for (const auto& [c, c1] : reach(d.rel)) {
        if (c1 != d.ctx) continue;
        for (const auto& e : ovr_entries(d, c))
          if (!e.env.empty()) envs.insert(e.env);
      }
    g_.envs.assign(envs.begin(), envs.end());
  }

  // --- deduction rules over one axiom at (evaluation context c, env t) ----

  struct Inst {
    std::string head;               // rendered head atom ("" => unsat(t))
    std::vector<std::string> body;  // rendered body atoms (axiom part only)
    std::vector<std::string> inst;  // ovr instance tuple
  };

  std::vector<Inst> axiom_insts(AxiomKind kind,
                                const std::vector<std::string>& o,
                                const std::string& c, const std::string& t) {
    std::vector<Inst> out;
    auto instd = [&](const std::string& x, const std::string& z) {
      return "instd(" + x + "," + z + "," + c + "," + t + ")";
    };
    auto tripled = [&](const std::string& x, const std::string& r,
                       const std::string& y) {
      return "tripled(" + x + "," + r + "," + y + "," + c + "," + t + ")";
    };
    const auto& I = g_.inds;
    switch (kind) {
      case AxiomKind::SubClass:
        for (const auto& x : I)
          out.push_back({instd(x, o[1]), {instd(x, o[0])}, {x}});
        break;
      case AxiomKind::SubConj:
        for (const auto& x : I)
          out.push_back(
              {instd(x, o[2]), {instd(x, o[0]), instd(x, o[1])}, {x}});
        break;
      case AxiomKind::SubEx:
        for (const auto& x : I)
          for (const auto& w : I)
            out.push_back(
                {instd(x, o[2]), {tripled(x, o[0], w), instd(w, o[1])}, {x}});
        break;
      case AxiomKind::SupEx:
        for (const auto& x : I)
          out.push_back({tripled(x, o[1], o[2]), {instd(x, o[0])}, {x}});
        break;
      case AxiomKind::SupForall:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back({instd(y, o[2]),
                           {instd(x, o[0]), tripled(x, o[1], y)},
                           {x, y}});
        break;
      case AxiomKind::SupLeqOne:
        for (const auto& x : I)
          for (const auto& x1 : I)
            for (const auto& x2 : I) {
              if (x1 == x2) continue;
              out.push_back({"",
                             {instd(x, o[0]), tripled(x, o[1], x1),
                              tripled(x, o[1], x2)},
                             {x, x1, x2}});
            }
        break;
      case AxiomKind::SubRole:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back({tripled(x, o[1], y), {tripled(x, o[0], y)}, {x, y}});
        break;
      case AxiomKind::SubRChain:
        for (const auto& x : I)
          for (const auto& y : I)
            for (const auto& z : I)
              out.push_back({tripled(x, o[2], z),
                             {tripled(x, o[0], y), tripled(y, o[1], z)},
                             {x, y, z}});
        break;
      case AxiomKind::Dis:
        for (const auto& x : I)
          for (const auto& y : I)
            out.push_back(
                {"", {tripled(x, o[0], y), tripled(x, o[1], y)}, {x, y}});
        break;
      case AxiomKind::Inv:
        for (const auto& x : I)
          for (const auto& y : I) {
            out.push_back(
                {tripled(y, o[1], x), {tripled(x, o[0], y)}, {x, y}});
            out.push_back(
                {tripled(x, o[0], y), {tripled(y, o[1], x)}, {x, y}});
          }
        break;
      case AxiomKind::Irr:
        for (const auto& x : I) out.push_back({"", {tripled(x, o[0], x)}, {x}});
        break;
      default:
        break;
    }
    return out;
  }

  int intern(const std::string& s) { return g_.program.atoms.intern(s); }

  std::vector<int> intern_all(const std::vector<std::string>& xs,
                              std::vector<int> extra = {}) {
    std::vector<int> out = std::move(extra);
    for (const auto& s : xs) out.push_back(intern(s));
    return out;
  }

  int unsat(const std::string& t) { return A("unsat", {t}); }

  static const char* rl_tag(AxiomKind k, size_t variant) {
    switch (k) {
      case AxiomKind::SubClass: return "prl-subc";
      case AxiomKind::SubConj: return "prl-subcnj";
      case AxiomKind::SubEx: return "prl-subex";
      case AxiomKind::SupEx: return "prl-supex";
      case AxiomKind::SupForall: return "prl-supforall";
      case AxiomKind::SupLeqOne: return "prl-leqone";
      case AxiomKind::SubRole: return "prl-subr";
      case AxiomKind::SubRChain: return "prl-subrc";
      case AxiomKind::Dis: return "prl-dis";
      case AxiomKind::Inv: return variant % 2 == 0 ? "prl-inv1" : "prl-inv2";
      case AxiomKind::Irr: return "prl-irr";
      default: return "prl";
    }
  }

  void add_rl_rules() {
    for (const auto& [c, a] : stricts_) {
      switch (a.kind) {
        case AxiomKind::ClassAssertion:
          add(RuleClass::Other, "prl-instd",
              A("instd", {a.ops[1], a.ops[0], c, "main"}),
              {A("insta", {a.ops[1], a.ops[0], c})});
          continue;
        case AxiomKind::RoleAssertion:
          add(RuleClass::Other, "prl-tripled",
              A("tripled", {a.ops[1], a.ops[0], a.ops[2], c, "main"}),
              {A("triplea", {a.ops[1], a.ops[0], a.ops[2], c})});
          continue;
        case AxiomKind::Eq:
          add(RuleClass::Other, "prl-eq", unsat("main"),
              {A("eq", {a.ops[0], a.ops[1], c, "main"})});
          continue;
        case AxiomKind::Neq:
          continue;
        case AxiomKind::NomSubClass:
          add(RuleClass::Other, "prl-instd",
              A("instd", {a.ops[0], mapc(a.ops[1]), c, "main"}),
              {A("insta", {a.ops[0], mapc(a.ops[1]), c})});
          continue;
        case AxiomKind::SubEvalC:
        case AxiomKind::SubEvalR:
          continue;  // handled by the eval rules
        default:
          break;
      }
      int fact = intern(fact_atom_for(a, c));
      for (const auto& t : g_.envs) {
        auto insts = axiom_insts(a.kind, a.ops, c, t);
        for (size_t vi = 0; vi < insts.size(); ++vi) {
          const Inst& in = insts[vi];
          int head = in.head.empty() ? unsat(t) : intern(in.head);
          add(RuleClass::Other, rl_tag(a.kind, vi), head,
              intern_all(in.body, {fact}));
        }
      }
    }
    for (const auto& [x, c] : noms_)
      add(RuleClass::Other, "prl-top", A("instd", {x, "top", c, "main"}),
          {A("nom", {x, c})});
    for (const auto& c : ctxs_)
      for (const auto& x : g_.inds)
        for (const auto& t : g_.envs)
          add(RuleClass::Other, "prl-bot", unsat(t),
              {A("instd", {x, "bot", c, t})});
    g_.unsat_main = unsat("main");
    add(RuleClass::Constraint, "prl-sat", -1, {g_.unsat_main});
  }

  std::string fact_atom_for(const NormalAxiom& a, const std::string& c) {
    std::vector<SymFact> fs;
    strict_axiom_facts(a, c, fs);
    if (fs.size() != 1) throw CkrError("unexpected fact translation");
    return fs[0].render();
  }

  void add_eval_rules() {
    auto star = star_strict();
    for (const auto& [c, a] : stricts_) {
      if (a.kind != AxiomKind::SubEvalC && a.kind != AxiomKind::SubEvalR)
        continue;
      int fact = intern(fact_atom_for(a, c));
      const std::string& src = a.ops[1];
      for (const auto& t : g_.envs) {
        if (a.kind == AxiomKind::SubEvalC) {
          for (const auto& x : g_.inds)
            add(RuleClass::Other, "plc-subevalat",
                A("instd", {x, mapc(a.ops[2]), c, t}),
                {fact, A("instd", {x, mapc(a.ops[0]), src, t})});
        } else {
          for (const auto& x : g_.inds)
            for (const auto& y : g_.inds)
              add(RuleClass::Other, "plc-subevalr",
                  A("tripled", {x, a.ops[2], y, c, t}),
                  {fact, A("tripled", {x, a.ops[0], y, src, t})});
        }
        for (const auto& [below, above] : star) {
          if (above != c) continue;
          if (a.kind == AxiomKind::SubEvalC) {
            for (const auto& x : g_.inds)
              add(RuleClass::Other, "plc-subevalatp",
                  A("instd", {x, mapc(a.ops[2]), below, t}),
                  {fact, A("instd", {x, mapc(a.ops[0]), src, t})});
          } else {
            for (const auto& x : g_.inds)
              for (const auto& y : g_.inds)
                add(RuleClass::Other, "plc-subevalrp",
                    A("tripled", {x, a.ops[2], y, below, t}),
                    {fact, A("tripled", {x, a.ops[0], y, src, t})});
          }
        }
      }
    }
  }

  static std::string family_tag(const char* family, AxiomKind k,
                                size_t variant) {
    std::string base = family;
    switch (k) {
      case AxiomKind::SubClass: return base + "-subc";
      case AxiomKind::SubConj: return base + "-cnj";
      case AxiomKind::SubEx: return base + "-subex";
      case AxiomKind::SupEx: return base + "-supex";
      case AxiomKind::SupForall: return base + "-forall";
      case AxiomKind::SupLeqOne: return base + "-leqone";
      case AxiomKind::SubRole: return base + "-subr";
      case AxiomKind::SubRChain: return base + "-subrc";
      case AxiomKind::Dis: return base + "-dis";
      case AxiomKind::Inv: return base + (variant % 2 == 0 ? "-inv1" : "-inv2");
      case AxiomKind::Irr: return base + "-irr";
      default: return base;
    }
  }

  void add_props_rules() {
    auto star = star_strict();
    for (const auto& [c1, a] : stricts_) {
      if (a.kind == AxiomKind::Eq || a.kind == AxiomKind::Neq ||
          a.kind == AxiomKind::SubEvalC || a.kind == AxiomKind::SubEvalR)
        continue;
      int fact = -1;
      if (a.kind != AxiomKind::ClassAssertion &&
          a.kind != AxiomKind::NomSubClass)
        fact = intern(fact_atom_for(a, c1));
      for (const auto& [c, above] : star) {
        if (above != c1) continue;
        if (a.kind == AxiomKind::ClassAssertion ||
            a.kind == AxiomKind::NomSubClass) {
          bool cls = a.kind == AxiomKind::ClassAssertion;
          std::string x = cls ? a.ops[1] : a.ops[0];
          std::string z = cls ? a.ops[0] : mapc(a.ops[1]);
          add(RuleClass::Other, "props-inst",
              A("instd", {x, z, c, "main"}), {A("insta", {x, z, c1})});
          continue;
        }
        if (a.kind == AxiomKind::RoleAssertion) {
          add(RuleClass::Other, "props-triple",
              A("tripled", {a.ops[1], a.ops[0], a.ops[2], c, "main"}),
              {A("triplea", {a.ops[1], a.ops[0], a.ops[2], c1})});
          continue;
        }
        for (const auto& t : g_.envs) {
          auto insts = axiom_insts(a.kind, a.ops, c, t);
          for (size_t vi = 0; vi < insts.size(); ++vi) {
            const Inst& in = insts[vi];
            int head = in.head.empty() ? unsat(t) : intern(in.head);
            add(RuleClass::Other, family_tag("props", a.kind, vi), head,
                intern_all(in.body, {fact}));
          }
        }
      }
    }
  }

  void add_propd_propp_rules() {
    for (const auto& d : defs_) {
      int fact = intern(d.atom);
      for (const auto& [c, c1] : reach(d.rel)) {
        if (c1 != d.ctx) continue;
        for (const auto& t : g_.envs) {
          auto insts = axiom_insts(d.kind, d.ops, c, t);
          for (size_t vi = 0; vi < insts.size(); ++vi) {
            const Inst& in = insts[vi];
            int head = in.head.empty() ? unsat(t) : intern(in.head);
            add(RuleClass::Other, family_tag("propd", d.kind, vi), head,
                intern_all(in.body, {fact}), {ovr_atom(d, in.inst, c)});
          }
        }
      }
      for (const auto& [c, c1] : cl_.preceq_except.at(d.rel)) {
        if (c1 != d.ctx) continue;
        for (const auto& t : g_.envs) {
          auto insts = axiom_insts(d.kind, d.ops, c, t);
          for (size_t vi = 0; vi < insts.size(); ++vi) {
            const Inst& in = insts[vi];
            int head = in.head.empty() ? unsat(t) : intern(in.head);
            add(RuleClass::Other, family_tag("propp", d.kind, vi), head,
                intern_all(in.body, {fact}));
          }
        }
      }
    }
  }

  void add_ovr_test_rules() {
    for (const auto& d : defs_) {
      int fact = intern(d.atom);
      for (const auto& [c, c1] : reach(d.rel)) {
        if (c1 != d.ctx) continue;
        auto entries = ovr_entries(d, c);
        std::set<std::pair<std::string, int>> constr_done;
        for (size_t ei = 0; ei < entries.size(); ++ei) {
          const OvrEntry& e = entries[ei];
          int ovr = ovr_atom(d, e.inst, c);
          std::vector<int> neg;
          if (!e.env.empty()) neg.push_back(A("test_fails", {e.env}));
          add(RuleClass::Ovr, family_tag("ovr", d.kind, ei), ovr,
              intern_all(e.body, {fact}), neg);
          if (!e.env.empty()) {
            add(RuleClass::Other, family_tag("test", d.kind, ei),
                A("test", {e.env}), intern_all(e.body, {fact}));
            if (constr_done.insert({e.env, ovr}).second) {
              int tf = A("test_fails", {e.env});
              if (d.kind == AxiomKind::Inv)
                add(RuleClass::Constraint, family_tag("constr", d.kind, ei),
                    -1, {ovr}, {tf});
              else
                add(RuleClass::Constraint, family_tag("constr", d.kind, ei),
                    -1, {tf, ovr});
            }
          }
        }
      }
    }
  }

  void add_env_machinery() {
    for (const auto& t : g_.envs) {
      if (t == "main") continue;
      int test = A("test", {t});
      // The env term carries its own literal: nlit(x,z,c) / nrel(x,r,y,c).
      std::string inner = t.substr(t.find('(') + 1);
      inner.pop_back();  // trailing ')'
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : inner) {
        if (ch == ',') {
          parts.push_back(cur);
          cur.clear();
        } else
          cur += ch;
      }
      parts.push_back(cur);
      bool is_lit = t.rfind("nlit", 0) == 0;
      int trigger;
      if (is_lit) {
        trigger = A("instd", {parts[0], parts[1], parts[2], t});
        add(RuleClass::Other, "test-add1", trigger, {test});
        add(RuleClass::TestFails, "test-fails1", A("test_fails", {t}),
            {trigger}, {unsat(t)});
      } else {
        trigger = A("tripled", {parts[0], parts[1], parts[2], parts[3], t});
        add(RuleClass::Other, "test-add2", trigger, {test});
        add(RuleClass::TestFails, "test-fails2", A("test_fails", {t}),
            {trigger}, {unsat(t)});
      }
      for (const auto& c : ctxs_) {
        for (const auto& x : g_.inds) {
          for (const auto& y : g_.clss)
            add(RuleClass::Other, "test-copy1", A("instd", {x, y, c, t}),
                {A("instd", {x, y, c, "main"}), test});
          for (const auto& r : g_.rols)
            for (const auto& y : g_.inds)
              add(RuleClass::Other, "test-copy2",
                  A("tripled", {x, r, y, c, t}),
                  {A("tripled", {x, r, y, c, "main"}), test});
        }
      }
    }
  }

  void add_prep_rules() {
    for (const auto& [x, c] : noms_)
      add(RuleClass::Other, "prep-indiv", A("ind", {x}), {A("nom", {x, c})});
    for (const auto& d : defs_) {
      int fact = intern(d.atom);
      // Instance tuples at the declaring context (no target guard).
      std::set<std::vector<std::string>> insts;
      for (const auto& in : axiom_insts(d.kind, d.ops, d.ctx, "main"))
        insts.insert(in.inst);
      for (const auto& inst : insts) {
        std::vector<std::string> args = ovr_args(d, inst, d.ctx);
        // p_ovr packs tag and arguments into one function term; drop the
        // declaring/target/relation tail and re-append context + relation.
        std::vector<std::string> inner(args.begin() + 1, args.end() - 3);
        std::string packed =
            std::string(def_pred(d.kind).ovr_tag) + "(" + join(inner) + ")";
        std::vector<int> body{fact};
        for (const auto& x : inst) body.push_back(A("ind", {x}));
        add(RuleClass::Other, "prep-ovr", A("p_ovr", {packed, d.ctx, d.rel}),
            std::move(body));
      }
    }
    for (const auto& [id, info] : ovr_info_) {
      std::vector<std::string> args =
          ovr_args({info.ca.kind, info.ca.operands, info.ca.declared_at,
                    info.ca.relation, ""},
                   info.ca.instance, info.target);
      std::vector<std::string> inner(args.begin() + 1, args.end() - 3);
      std::string packed =
          std::string(def_pred(info.ca.kind).ovr_tag) + "(" + join(inner) + ")";
      add(RuleClass::Other, "act-ovr",
          A("ovr", {packed, info.ca.declared_at, info.target,
                    info.ca.relation}),
          {id});
    }
  }

  void finish() {
    for (auto& [id, info] : ovr_info_) g_.ovr_domain.push_back(info);
    std::sort(g_.ovr_domain.begin(), g_.ovr_domain.end(),
              [&](const OvrInfo& a, const OvrInfo& b) {
                return g_.program.atoms.name(a.atom_id) <
                       g_.program.atoms.name(b.atom_id);
              });
    g_.stats.rules = g_.program.rules.size();
    g_.stats.atoms = static_cast<size_t>(g_.program.atoms.size());
    g_.stats.envs = g_.envs.size();
  }
};

}  // namespace

GroundCkr ground(const Sckr& k, const OrderClosures& cl,
                 const SolveOptions& opts) {
  return Grounder(k, cl, opts).run();
}

}  // namespace ckr
