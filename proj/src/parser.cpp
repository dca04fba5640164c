#include "ckr/parser.hpp"

#include <cctype>
#include <sstream>

namespace ckr {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based column of the first character
};

struct Tokenizer {
  static std::vector<Token> run(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      int col = static_cast<int>(i) + 1;
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t j = i;
        while (j < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[j])) ||
                line[j] == '_'))
          ++j;
        out.push_back({line.substr(i, j - i), col});
        i = j;
        continue;
      }
      if (ch == '!' && i + 1 < line.size() && line[i + 1] == '=') {
        out.push_back({"!=", col});
        i += 2;
        continue;
      }
      static const std::string singles = "<[](){}:,=.";
      if (singles.find(ch) != std::string::npos) {
        out.push_back({std::string(1, ch), col});
        ++i;
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, ch) + "'",
                       lineno, col);
    }
    return out;
  }
};

enum class Cat { Concept, Role, Individual, Context };

const char* cat_name(Cat c) {
  switch (c) {
    case Cat::Concept: return "concept";
    case Cat::Role: return "role";
    case Cat::Individual: return "individual";
    case Cat::Context: return "context";
  }
  return "?";
}

class Parser {
 public:
  Sckr parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto cut = line.find('%');
      if (cut != std::string::npos) line = line.substr(0, cut);
      toks_ = Tokenizer::run(line, lineno);
      if (toks_.empty()) continue;
      lineno_ = lineno;
      pos_ = 0;
      statement();
    }
    finish();
    return std::move(k_);
  }

 private:
  Sckr k_;
  std::map<std::string, Cat> cats_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  int lineno_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    int col = pos_ < toks_.size() ? toks_[pos_].col
                                  : (toks_.empty() ? 1 : toks_.back().col + 1);
    throw ParseError(msg, lineno_, col);
  }

  bool at(const std::string& s) const {
    return pos_ < toks_.size() && toks_[pos_].text == s;
  }

  std::string expect_ident(const std::string& what) {
    if (pos_ >= toks_.size() ||
        !(std::isalpha(static_cast<unsigned char>(toks_[pos_].text[0])) ||
          toks_[pos_].text[0] == '_'))
      fail("expected " + what);
    return toks_[pos_++].text;
  }

  void expect(const std::string& s) {
    if (!at(s)) fail("expected '" + s + "'");
    ++pos_;
  }

  void declare(const std::string& sym, Cat c) {
    auto it = cats_.find(sym);
    if (it == cats_.end()) {
      cats_[sym] = c;
    } else if (it->second != c) {
      // Contexts are individuals; an individual may be promoted to a context.
      bool ok = (it->second == Cat::Context && c == Cat::Individual);
      if (it->second == Cat::Individual && c == Cat::Context) {
        it->second = Cat::Context;
        ok = true;
      }
      if (!ok)
        fail("symbol '" + sym + "' already used as a " +
             cat_name(it->second) + ", now used as a " + cat_name(c));
    }
    if (c == Cat::Context) ensure_context(sym);
  }

  void ensure_context(const std::string& c) {
    for (const auto& existing : k_.structure.contexts)
      if (existing == c) return;
    k_.structure.contexts.push_back(c);
  }

  Relation* find_relation(const std::string& name) {
    for (auto& r : k_.structure.relations)
      if (r.name == name) return &r;
    return nullptr;
  }

  void statement() {
    const std::string& first = toks_[0].text;
    if (first == "relation" && toks_.size() >= 2 && toks_[1].text != ":") {
      ++pos_;
      std::string name = expect_ident("relation name");
      if (find_relation(name)) fail("duplicate relation name '" + name + "'");
      k_.structure.relations.push_back({name, {}});
      end_statement();
      return;
    }
    if (first == "context" && toks_.size() >= 2 && toks_[1].text != ":") {
      ++pos_;
      declare(expect_ident("context name"), Cat::Context);
      end_statement();
      return;
    }
    std::string head = expect_ident("context name");
    if (at("<")) {
      ++pos_;
      std::string upper = expect_ident("context name");
      expect("[");
      std::string rel = expect_ident("relation name");
      expect("]");
      Relation* r = find_relation(rel);
      if (r == nullptr) fail("unknown relation '" + rel + "' in edge");
      declare(head, Cat::Context);
      declare(upper, Cat::Context);
      r->edges.push_back({head, upper});
      end_statement();
      return;
    }
    expect(":");
    declare(head, Cat::Context);
    if (at("D") && pos_ + 1 < toks_.size() && toks_[pos_ + 1].text == "[") {
      ++pos_;
      expect("[");
      std::string rel = expect_ident("relation tag");
      expect("]");
      if (find_relation(rel) == nullptr)
        fail("unknown relation tag '" + rel + "' in defeasible axiom");
      expect("(");
      NormalAxiom body = axiom();
      expect(")");
      k_.kbs[head].defeasible.push_back({rel, body});
    } else {
      k_.kbs[head].strict.push_back(axiom());
    }
    end_statement();
  }

  void end_statement() {
    expect(".");
    if (pos_ != toks_.size()) fail("unexpected input after '.'");
  }

  NormalAxiom axiom() {
    if (at("exists")) {
      ++pos_;
      std::string r = expect_ident("role name");
      expect(".");
      std::string a = expect_ident("concept name");
      expect("subClassOf");
      std::string b = expect_ident("concept name");
      declare(r, Cat::Role);
      declare(a, Cat::Concept);
      declare(b, Cat::Concept);
      return {AxiomKind::SubEx, {r, a, b}};
    }
    if (at("eval")) {
      ++pos_;
      expect("(");
      std::string x = expect_ident("concept or role name");
      expect(",");
      std::string c2 = expect_ident("context name");
      expect(")");
      declare(c2, Cat::Context);
      if (at("subClassOf")) {
        ++pos_;
        std::string b = expect_ident("concept name");
        declare(x, Cat::Concept);
        declare(b, Cat::Concept);
        return {AxiomKind::SubEvalC, {x, c2, b}};
      }
      expect("subRoleOf");
      std::string s = expect_ident("role name");
      declare(x, Cat::Role);
      declare(s, Cat::Role);
      return {AxiomKind::SubEvalR, {x, c2, s}};
    }
    if (at("disjoint") || at("inverse")) {
      bool dis = at("disjoint");
      ++pos_;
      expect("(");
      std::string r = expect_ident("role name");
      expect(",");
      std::string s = expect_ident("role name");
      expect(")");
      declare(r, Cat::Role);
      declare(s, Cat::Role);
      return {dis ? AxiomKind::Dis : AxiomKind::Inv, {r, s}};
    }
    if (at("irreflexive")) {
      ++pos_;
      expect("(");
      std::string r = expect_ident("role name");
      expect(")");
      declare(r, Cat::Role);
      return {AxiomKind::Irr, {r}};
    }
    if (at("{")) {
      ++pos_;
      std::string a = expect_ident("individual name");
      expect("}");
      expect("subClassOf");
      std::string b = expect_ident("concept name");
      declare(a, Cat::Individual);
      declare(b, Cat::Concept);
      return {AxiomKind::NomSubClass, {a, b}};
    }
    std::string x = expect_ident("symbol");
    if (at("(")) {
      ++pos_;
      std::string a = expect_ident("individual name");
      if (at(",")) {
        ++pos_;
        std::string b = expect_ident("individual name");
        expect(")");
        declare(x, Cat::Role);
        declare(a, Cat::Individual);
        declare(b, Cat::Individual);
        return {AxiomKind::RoleAssertion, {x, a, b}};
      }
      expect(")");
      declare(x, Cat::Concept);
      declare(a, Cat::Individual);
      return {AxiomKind::ClassAssertion, {x, a}};
    }
    if (at("=") || at("!=")) {
      bool eq = at("=");
      ++pos_;
      std::string b = expect_ident("individual name");
      declare(x, Cat::Individual);
      declare(b, Cat::Individual);
      return {eq ? AxiomKind::Eq : AxiomKind::Neq, {x, b}};
    }
    if (at("and")) {
      ++pos_;
      std::string y = expect_ident("concept name");
      expect("subClassOf");
      std::string z = expect_ident("concept name");
      declare(x, Cat::Concept);
      declare(y, Cat::Concept);
      declare(z, Cat::Concept);
      return {AxiomKind::SubConj, {x, y, z}};
    }
    if (at("o")) {
      ++pos_;
      std::string s = expect_ident("role name");
      expect("subRoleOf");
      std::string t = expect_ident("role name");
      declare(x, Cat::Role);
      declare(s, Cat::Role);
      declare(t, Cat::Role);
      return {AxiomKind::SubRChain, {x, s, t}};
    }
    if (at("subRoleOf")) {
      ++pos_;
      std::string t = expect_ident("role name");
      declare(x, Cat::Role);
      declare(t, Cat::Role);
      return {AxiomKind::SubRole, {x, t}};
    }
    expect("subClassOf");
    declare(x, Cat::Concept);
    if (at("exists")) {
      ++pos_;
      std::string r = expect_ident("role name");
      expect(".");
      expect("{");
      std::string a = expect_ident("individual name");
      expect("}");
      declare(r, Cat::Role);
      declare(a, Cat::Individual);
      return {AxiomKind::SupEx, {x, r, a}};
    }
    if (at("forall")) {
      ++pos_;
      std::string r = expect_ident("role name");
      expect(".");
      std::string b = expect_ident("concept name");
      declare(r, Cat::Role);
      declare(b, Cat::Concept);
      return {AxiomKind::SupForall, {x, r, b}};
    }
    if (at("atmost1")) {
      ++pos_;
      std::string r = expect_ident("role name");
      declare(r, Cat::Role);
      return {AxiomKind::SupLeqOne, {x, r}};
    }
    std::string b = expect_ident("concept name");
    declare(b, Cat::Concept);
    return {AxiomKind::SubClass, {x, b}};
  }

  void finish() {
    // Every declared context owns a knowledge base, possibly empty.
    for (const auto& c : k_.structure.contexts) k_.kbs[c];
    for (const auto& [sym, cat] : cats_) {
      switch (cat) {
        case Cat::Concept: k_.vocab.concepts.insert(sym); break;
        case Cat::Role: k_.vocab.roles.insert(sym); break;
        case Cat::Individual: k_.vocab.individuals.insert(sym); break;
        case Cat::Context:
          k_.vocab.contexts.insert(sym);
          k_.vocab.individuals.insert(sym);
          break;
      }
    }
  }
};

}  // namespace

Sckr parse_sckr(const std::string& text) { return Parser().parse(text); }

std::string print_axiom(const NormalAxiom& a) {
  const auto& o = a.ops;
  switch (a.kind) {
    case AxiomKind::ClassAssertion: return o[0] + "(" + o[1] + ")";
    case AxiomKind::RoleAssertion: return o[0] + "(" + o[1] + "," + o[2] + ")";
    case AxiomKind::Eq: return o[0] + " = " + o[1];
    case AxiomKind::Neq: return o[0] + " != " + o[1];
    case AxiomKind::SubClass: return o[0] + " subClassOf " + o[1];
    case AxiomKind::NomSubClass: return "{" + o[0] + "} subClassOf " + o[1];
    case AxiomKind::SubConj:
      return o[0] + " and " + o[1] + " subClassOf " + o[2];
    case AxiomKind::SubEx:
      return "exists " + o[0] + "." + o[1] + " subClassOf " + o[2];
    case AxiomKind::SupEx:
      return o[0] + " subClassOf exists " + o[1] + ".{" + o[2] + "}";
    case AxiomKind::SupForall:
      return o[0] + " subClassOf forall " + o[1] + "." + o[2];
    case AxiomKind::SupLeqOne: return o[0] + " subClassOf atmost1 " + o[1];
    case AxiomKind::SubRole: return o[0] + " subRoleOf " + o[1];
    case AxiomKind::SubRChain:
      return o[0] + " o " + o[1] + " subRoleOf " + o[2];
    case AxiomKind::Dis: return "disjoint(" + o[0] + "," + o[1] + ")";
    case AxiomKind::Inv: return "inverse(" + o[0] + "," + o[1] + ")";
    case AxiomKind::Irr: return "irreflexive(" + o[0] + ")";
    case AxiomKind::SubEvalC:
      return "eval(" + o[0] + "," + o[1] + ") subClassOf " + o[2];
    case AxiomKind::SubEvalR:
      return "eval(" + o[0] + "," + o[1] + ") subRoleOf " + o[2];
  }
  return "";
}

std::string print_sckr(const Sckr& k) {
  std::ostringstream out;
  for (const auto& r : k.structure.relations) out << "relation " << r.name << ".\n";
  for (const auto& c : k.structure.contexts) out << "context " << c << ".\n";
  for (const auto& r : k.structure.relations)
    for (const auto& [a, b] : r.edges)
      out << a << " < " << b << " [" << r.name << "].\n";
  for (const auto& c : k.structure.contexts) {
    const ContextKB* kb = k.kb(c);
    if (kb == nullptr) continue;
    for (const auto& a : kb->strict)
      out << c << ": " << print_axiom(a) << ".\n";
    for (const auto& d : kb->defeasible)
      out << c << ": D[" << d.relation << "](" << print_axiom(d.body) << ").\n";
  }
  return out.str();
}

}  // namespace ckr
