// Query evaluation over preferred models: conjunctive matching against the
// per-context views, certain/possible answers and grouped aggregates.
#include "ckr/query.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ckr {

std::vector<JustifiedModel> preferred_filter(
    const std::vector<JustifiedModel>& models, const Sckr& k,
    const OrderClosures& cl, bool pareto) {
  std::vector<ClashMap> maps;
  maps.reserve(models.size());
  for (const auto& m : models) maps.push_back(m.clash_maps);
  std::vector<JustifiedModel> out;
  for (size_t i : preferred_indices(maps, k, cl, pareto))
    out.push_back(models[i]);
  return out;
}

bool is_query_var(const std::string& t) {
  return !t.empty() && std::isupper(static_cast<unsigned char>(t[0]));
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else
      cur += ch;
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

[[noreturn]] void qfail(const std::string& what) {
  throw ParseError("query: " + what, 1, 1);
}

QueryAtom parse_conjunct(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) qfail("expected 'context : atom' in '" + text + "'");
  QueryAtom a;
  a.context = trim(text.substr(0, colon));
  std::string atom = trim(text.substr(colon + 1));
  size_t open = atom.find('(');
  if (open == std::string::npos || atom.back() != ')')
    qfail("expected 'pred(args)' in '" + atom + "'");
  a.pred = trim(atom.substr(0, open));
  for (const auto& arg :
       split_top(atom.substr(open + 1, atom.size() - open - 2), ','))
    a.args.push_back(arg);
  if (a.context.empty() || a.pred.empty() || a.args.empty() ||
      a.args.size() > 2)
    qfail("malformed atom '" + text + "'");
  return a;
}

}  // namespace

ConjunctiveQuery parse_query(const std::string& text) {
  std::string body = trim(text);
  // Optional variable declaration prefix `K X, Y.` — informational only.
  if (body.size() > 2 && body[0] == 'K' &&
      std::isspace(static_cast<unsigned char>(body[1]))) {
    size_t dot = body.find('.');
    if (dot == std::string::npos) qfail("unterminated variable declaration");
    body = trim(body.substr(dot + 1));
  }
  if (!body.empty() && body.back() == '.') body.pop_back();
  ConjunctiveQuery q;
  for (const auto& part : split_top(body, ','))
    q.atoms.push_back(parse_conjunct(part));
  if (q.atoms.empty()) qfail("empty query");
  return q;
}

namespace {

struct Fact {
  std::string context;
  std::string pred;
  std::vector<std::string> args;
};

std::vector<Fact> model_facts(const JustifiedModel& m) {
  std::vector<Fact> out;
  for (const auto& [c, view] : m.views)
    for (const auto& ax : view) {
      if (ax.kind == AxiomKind::ClassAssertion)
        out.push_back({c, ax.ops[0], {ax.ops[1]}});
      else if (ax.kind == AxiomKind::RoleAssertion)
        out.push_back({c, ax.ops[0], {ax.ops[1], ax.ops[2]}});
    }
  return out;
}

bool unify(const std::string& term, const std::string& value, Binding& b) {
  if (!is_query_var(term)) return term == value;
  auto [it, inserted] = b.emplace(term, value);
  return inserted || it->second == value;
}

void match_rec(const ConjunctiveQuery& q, size_t i,
               const std::vector<Fact>& facts, Binding& b,
               std::set<Binding>& out) {
  if (i == q.atoms.size()) {
    out.insert(b);
    return;
  }
  const QueryAtom& a = q.atoms[i];
  for (const auto& f : facts) {
    if (f.pred != a.pred || f.args.size() != a.args.size()) continue;
    Binding saved = b;
    bool ok = unify(a.context, f.context, b);
    for (size_t j = 0; ok && j < a.args.size(); ++j)
      ok = unify(a.args[j], f.args[j], b);
    if (ok) match_rec(q, i + 1, facts, b, out);
    b = std::move(saved);
  }
}

std::set<Binding> model_answers(const ConjunctiveQuery& q,
                                const JustifiedModel& m) {
  std::vector<Fact> facts = model_facts(m);
  std::set<Binding> out;
  Binding b;
  match_rec(q, 0, facts, b, out);
  return out;
}

}  // namespace

bool c_entails(const std::vector<JustifiedModel>& preferred,
               const std::string& c, const NormalAxiom& assertion) {
  if (assertion.kind != AxiomKind::ClassAssertion &&
      assertion.kind != AxiomKind::RoleAssertion)
    throw CkrError("contextual entailment supports assertions only");
  if (preferred.empty()) return false;
  for (const auto& m : preferred) {
    auto it = m.views.find(c);
    if (it == m.views.end() || !it->second.count(assertion)) return false;
  }
  return true;
}

bool bcq_entails(const std::vector<JustifiedModel>& preferred,
                 const ConjunctiveQuery& q) {
  if (preferred.empty()) return false;
  for (const auto& m : preferred)
    if (model_answers(q, m).empty()) return false;
  return true;
}

std::set<Binding> consequences(const std::vector<JustifiedModel>& preferred,
                               const ConjunctiveQuery& q, bool brave) {
  std::set<Binding> acc;
  bool first = true;
  for (const auto& m : preferred) {
    std::set<Binding> cur = model_answers(q, m);
    if (brave) {
      acc.insert(cur.begin(), cur.end());
    } else if (first) {
      acc = std::move(cur);
    } else {
      std::set<Binding> inter;
      std::set_intersection(acc.begin(), acc.end(), cur.begin(), cur.end(),
                            std::inserter(inter, inter.begin()));
      acc = std::move(inter);
    }
    first = false;
  }
  return acc;
}

AggregateQuery parse_aggregate_query(const std::string& text) {
  size_t arrow = text.find("<-");
  if (arrow == std::string::npos) qfail("expected '<-' in aggregate query");
  std::string head = trim(text.substr(0, arrow));
  AggregateQuery q;
  q.body = parse_query(text.substr(arrow + 2));
  size_t open = head.find('(');
  if (open == std::string::npos || head.back() != ')')
    qfail("malformed aggregate head '" + head + "'");
  bool have_agg = false;
  for (const auto& arg :
       split_top(head.substr(open + 1, head.size() - open - 2), ',')) {
    size_t fopen = arg.find('(');
    if (fopen == std::string::npos) {
      if (have_agg) qfail("group variables must precede the aggregate");
      q.group_vars.push_back(arg);
      continue;
    }
    if (have_agg) qfail("only one aggregate term allowed");
    have_agg = true;
    std::string fn = trim(arg.substr(0, fopen));
    if (fn == "count")
      q.fn = AggFn::Count;
    else if (fn == "countd")
      q.fn = AggFn::CountD;
    else if (fn == "sum")
      q.fn = AggFn::Sum;
    else if (fn == "min")
      q.fn = AggFn::Min;
    else if (fn == "max")
      q.fn = AggFn::Max;
    else
      qfail("unknown aggregate function '" + fn + "'");
    for (const auto& v :
         split_top(arg.substr(fopen + 1, arg.size() - fopen - 2), ','))
      q.agg_vars.push_back(v);
  }
  if (!have_agg) qfail("aggregate head needs an aggregate term");
  if (q.agg_vars.empty()) qfail("aggregate term needs at least one variable");
  return q;
}

std::vector<AggregateRow> epistemic_aggregate(
    const std::vector<JustifiedModel>& preferred, const AggregateQuery& q) {
  std::set<Binding> certain = consequences(preferred, q.body, false);
  auto value_of = [](const Binding& b, const std::string& var) {
    auto it = b.find(var);
    if (it == b.end()) throw CkrError("unbound aggregate variable '" + var + "'");
    return it->second;
  };
  // group key -> aggregate-variable tuples (with row multiplicity)
  std::map<std::vector<std::string>, std::vector<std::vector<std::string>>>
      groups;
  for (const auto& b : certain) {
    std::vector<std::string> key, tup;
    for (const auto& v : q.group_vars) key.push_back(value_of(b, v));
    for (const auto& v : q.agg_vars) tup.push_back(value_of(b, v));
    groups[key].push_back(tup);
  }
  if (groups.empty() && q.group_vars.empty() &&
      (q.fn == AggFn::Count || q.fn == AggFn::CountD || q.fn == AggFn::Sum))
    groups[{}];
  std::vector<AggregateRow> out;
  for (const auto& [key, rows] : groups) {
    AggregateRow row;
    row.group = key;
    switch (q.fn) {
      case AggFn::Count:
        row.value = std::to_string(rows.size());
        break;
      case AggFn::CountD: {
        std::set<std::vector<std::string>> d(rows.begin(), rows.end());
        row.value = std::to_string(d.size());
        break;
      }
      case AggFn::Sum: {
        if (q.agg_vars.size() != 1)
          throw CkrError("sum takes exactly one variable");
        long long acc = 0;
        for (const auto& t : rows) acc += std::stoll(t[0]);
        row.value = std::to_string(acc);
        break;
      }
      case AggFn::Min:
      case AggFn::Max: {
        if (q.agg_vars.size() != 1)
          throw CkrError("min/max take exactly one variable");
        if (rows.empty()) continue;
        bool numeric = true;
        for (const auto& t : rows) {
          size_t used = 0;
          try {
            (void)std::stoll(t[0], &used);
          } catch (...) {
            used = 0;
          }
          if (used != t[0].size()) {
            numeric = false;
            break;
          }
        }
        std::string best = rows[0][0];
        for (const auto& t : rows) {
          bool less = numeric ? std::stoll(t[0]) < std::stoll(best)
                              : t[0] < best;
          if (q.fn == AggFn::Min ? less : (t[0] != best && !less))
            best = t[0];
        }
        row.value = best;
        break;
      }
    }
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ckr
