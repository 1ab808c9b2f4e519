#include "ontotdd/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace ontotdd {

std::string_view toString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnknownConstruct: return "unknown-construct";
    case ParseErrorKind::KindConflict: return "kind-conflict";
  }
  return "?";
}

ParseError::ParseError(int line, int column, std::string message, ParseErrorKind kind)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      kind_(kind) {}

namespace {

// ── Lexer ───────────────────────────────────────────────────────────────────

enum class Tok { Ident, Number, LParen, RParen, Comma, ColonKeyword, Thing, Nothing, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

constexpr std::array<std::string_view, 11> kColonKeywords = {
    "SubClassOf", "EquivalentTo", "DisjointWith", "DisjointUnionOf", "Type",   "SameAs",
    "DifferentFrom", "Domain",    "Range",        "Characteristics", "Facts"};

constexpr std::array<std::string_view, 9> kManchesterWords = {
    "and", "or", "not", "some", "only", "min", "max", "exactly", "Functional"};

constexpr std::array<std::string_view, 24> kFunctionalWords = {
    "Declaration",           "Class",
    "ObjectProperty",        "NamedIndividual",
    "SubClassOf",            "EquivalentClasses",
    "DisjointClasses",       "DisjointUnion",
    "ObjectPropertyDomain",  "ObjectPropertyRange",
    "FunctionalObjectProperty", "ClassAssertion",
    "ObjectPropertyAssertion", "SameIndividual",
    "DifferentIndividuals",  "ObjectIntersectionOf",
    "ObjectUnionOf",         "ObjectComplementOf",
    "ObjectSomeValuesFrom",  "ObjectAllValuesFrom",
    "ObjectMinCardinality",  "ObjectMaxCardinality",
    "ObjectExactCardinality", "Prefix"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool isReserved(std::string_view w) {
  return contains(kManchesterWords, w) || contains(kFunctionalWords, w) ||
         contains(kColonKeywords, w);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipBlank();
      const int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (c == '(') {
        advance();
        out.push_back({Tok::LParen, "(", line, col});
      } else if (c == ')') {
        advance();
        out.push_back({Tok::RParen, ")", line, col});
      } else if (c == ',') {
        advance();
        out.push_back({Tok::Comma, ",", line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          s += text_[pos_];
          advance();
        }
        out.push_back({Tok::Number, s, line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s = identifier();
        if (pos_ < text_.size() && text_[pos_] == ':') {
          if (s == "owl") {
            advance();
            std::string rest = identifier();
            if (rest == "Thing") {
              out.push_back({Tok::Thing, "owl:Thing", line, col});
            } else if (rest == "Nothing") {
              out.push_back({Tok::Nothing, "owl:Nothing", line, col});
            } else {
              throw ParseError(line, col, "unknown prefixed name 'owl:" + rest + "'",
                               ParseErrorKind::UnknownConstruct);
            }
            continue;
          }
          if (!contains(kColonKeywords, s)) {
            throw ParseError(line, col, "unknown keyword '" + s + ":'",
                             ParseErrorKind::UnknownConstruct);
          }
          advance();
          out.push_back({Tok::ColonKeyword, s, line, col});
        } else {
          out.push_back({Tok::Ident, s, line, col});
        }
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'",
                         ParseErrorKind::Syntax);
      }
    }
  }

 private:
  std::string identifier() {
    std::string s;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipBlank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string describe(const Token& t) {
  switch (t.type) {
    case Tok::End: return "end of input";
    case Tok::ColonKeyword: return "'" + t.text + ":'";
    default: return "'" + t.text + "'";
  }
}

// ── Shared parser base ──────────────────────────────────────────────────────

class ParserBase {
 public:
  explicit ParserBase(std::string_view text) : toks_(Lexer(text).run()) {}

 protected:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at(Tok type) const { return peek().type == type; }
  bool atWord(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  [[noreturn]] void fail(const Token& t, const std::string& msg,
                         ParseErrorKind kind = ParseErrorKind::Syntax) const {
    throw ParseError(t.line, t.column, msg, kind);
  }

  const Token& expect(Tok type, std::string_view what) {
    if (!at(type)) fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  void expectWord(std::string_view w) {
    if (!atWord(w)) fail(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
    next();
  }

  /// Identifier in an entity position; fixes the entity kind on first use.
  Name entity(EntityKind kind) {
    const Token& t = peek();
    if (t.type != Tok::Ident) fail(t, "expected " + std::string(entityKindName(kind)) + " name, found " + describe(t));
    if (isReserved(t.text)) fail(t, "reserved word '" + t.text + "' used as a name");
    if (auto existing = sig_.kindOf(t.text); existing && *existing != kind) {
      fail(t,
           "'" + t.text + "' is used as " + std::string(entityKindName(kind)) + " but was " +
               std::string(entityKindName(*existing)),
           ParseErrorKind::KindConflict);
    }
    sig_.add(kind, t.text);
    next();
    return t.text;
  }

  std::uint32_t natural() {
    const Token& t = expect(Tok::Number, "a non-negative integer");
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "cardinality out of range");
    return v;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
};

// ── Functional-style ────────────────────────────────────────────────────────

class FunctionalParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  ParsedOntology file() {
    ParsedOntology out;
    while (!at(Tok::End)) {
      const Token& head = expect(Tok::Ident, "a declaration or axiom");
      expect(Tok::LParen, "'('");
      if (head.text == "Declaration") {
        declaration();
      } else {
        out.axioms.push_back(axiomBody(head));
      }
      expect(Tok::RParen, "')'");
    }
    out.signature = sig_;
    return out;
  }

 private:
  void declaration() {
    const Token& kind = expect(Tok::Ident, "Class, ObjectProperty or NamedIndividual");
    expect(Tok::LParen, "'('");
    if (kind.text == "Class") {
      entity(EntityKind::Class);
    } else if (kind.text == "ObjectProperty") {
      entity(EntityKind::Role);
    } else if (kind.text == "NamedIndividual") {
      entity(EntityKind::Individual);
    } else {
      fail(kind, "unknown declaration '" + kind.text + "'", ParseErrorKind::UnknownConstruct);
    }
    expect(Tok::RParen, "')'");
  }

  std::vector<ClassExpression> classList(std::size_t minimum) {
    std::vector<ClassExpression> out;
    while (!at(Tok::RParen)) out.push_back(expr());
    if (out.size() < minimum) {
      fail(peek(), "expected at least " + std::to_string(minimum) + " class expressions");
    }
    return out;
  }

  std::vector<Name> individualList() {
    std::vector<Name> out;
    while (!at(Tok::RParen)) out.push_back(entity(EntityKind::Individual));
    if (out.size() < 2) fail(peek(), "expected at least 2 individuals");
    return out;
  }

  Axiom axiomBody(const Token& head) {
    const std::string& h = head.text;
    if (h == "SubClassOf") {
      auto sub = expr();
      auto sup = expr();
      return SubClassOf{sub, sup};
    }
    if (h == "EquivalentClasses") return EquivalentClasses{classList(2)};
    if (h == "DisjointClasses") return DisjointClasses{classList(2)};
    if (h == "DisjointUnion") {
      auto lhs = entity(EntityKind::Class);
      return DisjointUnion{lhs, classList(2)};
    }
    if (h == "ObjectPropertyDomain") {
      auto r = entity(EntityKind::Role);
      return ObjectPropertyDomain{r, expr()};
    }
    if (h == "ObjectPropertyRange") {
      auto r = entity(EntityKind::Role);
      return ObjectPropertyRange{r, expr()};
    }
    if (h == "FunctionalObjectProperty") return FunctionalObjectProperty{entity(EntityKind::Role)};
    if (h == "ClassAssertion") {
      auto c = expr();
      return ClassAssertion{entity(EntityKind::Individual), c};
    }
    if (h == "ObjectPropertyAssertion") {
      auto r = entity(EntityKind::Role);
      auto s = entity(EntityKind::Individual);
      auto o = entity(EntityKind::Individual);
      return ObjectPropertyAssertion{r, s, o};
    }
    if (h == "SameIndividual") return SameIndividual{individualList()};
    if (h == "DifferentIndividuals") return DifferentIndividuals{individualList()};
    fail(head, "unknown axiom type '" + h + "'", ParseErrorKind::UnknownConstruct);
  }

  ClassExpression expr() {
    if (at(Tok::Thing)) {
      next();
      return Top();
    }
    if (at(Tok::Nothing)) {
      next();
      return Bottom();
    }
    if (at(Tok::Ident) && peek(1).type == Tok::LParen) {
      const Token& head = next();
      const Token& open = next();
      if (!isConstructor(head.text)) {
        fail(open, "unexpected '(' after '" + head.text + "', not a class constructor",
             ParseErrorKind::UnknownConstruct);
      }
      auto e = constructor(head);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Ident) && isConstructor(peek().text)) {
      fail(peek(1), "expected '(' after '" + peek().text + "', found " + describe(peek(1)));
    }
    return Named(entity(EntityKind::Class));
  }

  static bool isConstructor(std::string_view w) {
    static constexpr std::array<std::string_view, 8> kConstructors{
        "ObjectIntersectionOf", "ObjectUnionOf",        "ObjectComplementOf",   "ObjectSomeValuesFrom",
        "ObjectAllValuesFrom",  "ObjectMinCardinality", "ObjectMaxCardinality", "ObjectExactCardinality"};
    return contains(kConstructors, w);
  }

  ClassExpression constructor(const Token& head) {
    const std::string& h = head.text;
    if (h == "ObjectIntersectionOf") return And(classList(2));
    if (h == "ObjectUnionOf") return Or(classList(2));
    if (h == "ObjectComplementOf") return Not(expr());
    if (h == "ObjectSomeValuesFrom" || h == "ObjectAllValuesFrom") {
      auto r = entity(EntityKind::Role);
      auto f = expr();
      return h == "ObjectSomeValuesFrom" ? Some(r, f) : All(r, f);
    }
    if (h == "ObjectMinCardinality" || h == "ObjectMaxCardinality" || h == "ObjectExactCardinality") {
      auto n = natural();
      auto r = entity(EntityKind::Role);
      auto f = at(Tok::RParen) ? Top() : expr();
      if (h == "ObjectMinCardinality") return MinCard(n, r, f);
      if (h == "ObjectMaxCardinality") return MaxCard(n, r, f);
      return ExactCard(n, r, f);
    }
    fail(head, "unknown class constructor '" + h + "'", ParseErrorKind::UnknownConstruct);
  }
};

// ── Manchester-like ─────────────────────────────────────────────────────────

class ManchesterParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  Axiom axiom() {
    const Token& first = peek();
    // Entity-headed forms are decided by the keyword after a single identifier.
    if (at(Tok::Ident) && peek(1).type == Tok::ColonKeyword && !isReserved(first.text)) {
      const std::string& kw = peek(1).text;
      if (kw == "Type") {
        auto a = entity(EntityKind::Individual);
        next();
        auto c = orExpr();
        return finish(ClassAssertion{a, c});
      }
      if (kw == "SameAs" || kw == "DifferentFrom") {
        auto a = entity(EntityKind::Individual);
        const Token& kwTok = next();
        std::vector<Name> inds{a};
        do {
          inds.push_back(entity(EntityKind::Individual));
        } while (at(Tok::Comma) && (next(), true));
        std::vector<Name> uniq = inds;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (uniq.size() < 2) fail(kwTok, "needs at least two distinct individuals");
        if (kw == "SameAs") return finish(SameIndividual{inds});
        return finish(DifferentIndividuals{inds});
      }
      if (kw == "Facts") {
        auto a = entity(EntityKind::Individual);
        next();
        auto r = entity(EntityKind::Role);
        auto b = entity(EntityKind::Individual);
        return finish(ObjectPropertyAssertion{r, a, b});
      }
      if (kw == "Domain" || kw == "Range") {
        auto r = entity(EntityKind::Role);
        next();
        auto c = orExpr();
        if (kw == "Domain") return finish(ObjectPropertyDomain{r, c});
        return finish(ObjectPropertyRange{r, c});
      }
      if (kw == "Characteristics") {
        auto r = entity(EntityKind::Role);
        next();
        expectWord("Functional");
        return finish(FunctionalObjectProperty{r});
      }
      if (kw == "DisjointUnionOf") {
        auto n = entity(EntityKind::Class);
        next();
        auto members = exprList();
        if (members.size() < 2) fail(peek(), "DisjointUnionOf needs at least two classes");
        return finish(DisjointUnion{n, members});
      }
    }
    auto lhs = orExpr();
    const Token& kw = peek();
    if (kw.type != Tok::ColonKeyword) fail(kw, "expected an axiom keyword, found " + describe(kw));
    next();
    if (kw.text == "SubClassOf") return finish(SubClassOf{lhs, orExpr()});
    if (kw.text == "EquivalentTo" || kw.text == "DisjointWith") {
      std::vector<ClassExpression> members{lhs};
      for (auto& m : exprList()) members.push_back(std::move(m));
      if (kw.text == "EquivalentTo") return finish(EquivalentClasses{members});
      return finish(DisjointClasses{members});
    }
    fail(kw, "'" + kw.text + ":' needs a single name on its left", ParseErrorKind::Syntax);
  }

  ClassExpression standalone() {
    auto e = orExpr();
    if (!at(Tok::End)) fail(peek(), "unexpected " + describe(peek()));
    return e;
  }

 private:
  template <class A>
  Axiom finish(A a) {
    if (!at(Tok::End)) fail(peek(), "unexpected " + describe(peek()) + " after axiom");
    return Axiom{std::move(a)};
  }

  std::vector<ClassExpression> exprList() {
    std::vector<ClassExpression> out{orExpr()};
    while (at(Tok::Comma)) {
      next();
      out.push_back(orExpr());
    }
    return out;
  }

  ClassExpression orExpr() {
    std::vector<ClassExpression> ops{andExpr()};
    while (atWord("or")) {
      next();
      ops.push_back(andExpr());
    }
    return ops.size() == 1 ? ops.front() : Or(std::move(ops));
  }

  ClassExpression andExpr() {
    std::vector<ClassExpression> ops{unary()};
    while (atWord("and")) {
      next();
      ops.push_back(unary());
    }
    return ops.size() == 1 ? ops.front() : And(std::move(ops));
  }

  bool startsUnary() const {
    return at(Tok::Thing) || at(Tok::Nothing) || at(Tok::LParen) ||
           (at(Tok::Ident) && (peek().text == "not" || !isReserved(peek().text)));
  }

  ClassExpression unary() {
    if (atWord("not")) {
      next();
      return Not(unary());
    }
    if (at(Tok::Ident) && !isReserved(peek().text) && peek(1).type == Tok::Ident) {
      const std::string& op = peek(1).text;
      if (op == "some" || op == "only") {
        auto r = entity(EntityKind::Role);
        next();
        auto f = unary();
        return op == "some" ? Some(r, f) : All(r, f);
      }
      if (op == "min" || op == "max" || op == "exactly") {
        auto r = entity(EntityKind::Role);
        next();
        auto n = natural();
        auto f = startsUnary() ? unary() : Top();
        if (op == "min") return MinCard(n, r, f);
        if (op == "max") return MaxCard(n, r, f);
        return ExactCard(n, r, f);
      }
    }
    return primary();
  }

  ClassExpression primary() {
    if (at(Tok::Thing)) {
      next();
      return Top();
    }
    if (at(Tok::Nothing)) {
      next();
      return Bottom();
    }
    if (at(Tok::LParen)) {
      next();
      auto e = orExpr();
      expect(Tok::RParen, "')'");
      return e;
    }
    return Named(entity(EntityKind::Class));
  }
};

// ── Printers ────────────────────────────────────────────────────────────────

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

enum class Level { Or = 0, And = 1, Unary = 2 };

void manchester(std::ostream& os, const ClassExpression& e, Level ctx) {
  auto wrap = [&](Level own, auto&& body) {
    const bool paren = own < ctx;
    if (paren) os << '(';
    body();
    if (paren) os << ')';
  };
  switch (e.kind()) {
    case ExprKind::Named: os << e.name(); return;
    case ExprKind::Top: os << "owl:Thing"; return;
    case ExprKind::Bottom: os << "owl:Nothing"; return;
    case ExprKind::Or:
      // Nested unions must keep their own parentheses to round-trip structurally.
      wrap(Level::Or, [&] {
        for (std::size_t i = 0; i < e.operands().size(); ++i) {
          if (i) os << " or ";
          manchester(os, e.operands()[i], Level::And);
        }
      });
      return;
    case ExprKind::And:
      wrap(Level::And, [&] {
        for (std::size_t i = 0; i < e.operands().size(); ++i) {
          if (i) os << " and ";
          manchester(os, e.operands()[i], Level::Unary);
        }
      });
      return;
    case ExprKind::Not:
      os << "not ";
      manchester(os, e.sub(), Level::Unary);
      return;
    case ExprKind::Some:
    case ExprKind::All:
      os << e.role() << (e.kind() == ExprKind::Some ? " some " : " only ");
      manchester(os, e.sub(), Level::Unary);
      return;
    case ExprKind::MinCard:
    case ExprKind::MaxCard:
    case ExprKind::ExactCard: {
      const char* op = e.kind() == ExprKind::MinCard ? " min " : e.kind() == ExprKind::MaxCard ? " max " : " exactly ";
      os << e.role() << op << e.cardinality() << ' ';
      manchester(os, e.sub(), Level::Unary);
      return;
    }
  }
}

void joinExprs(std::ostream& os, const std::vector<ClassExpression>& xs, std::size_t from) {
  for (std::size_t i = from; i < xs.size(); ++i) {
    if (i > from) os << ", ";
    manchester(os, xs[i], Level::Or);
  }
}

void joinNames(std::ostream& os, const std::vector<Name>& xs, std::size_t from, const char* sep) {
  for (std::size_t i = from; i < xs.size(); ++i) {
    if (i > from) os << sep;
    os << xs[i];
  }
}

void functional(std::ostream& os, const ClassExpression& e) {
  auto list = [&](const char* head) {
    os << head << '(';
    for (std::size_t i = 0; i < e.operands().size(); ++i) {
      if (i) os << ' ';
      functional(os, e.operands()[i]);
    }
    os << ')';
  };
  switch (e.kind()) {
    case ExprKind::Named: os << e.name(); return;
    case ExprKind::Top: os << "owl:Thing"; return;
    case ExprKind::Bottom: os << "owl:Nothing"; return;
    case ExprKind::And: list("ObjectIntersectionOf"); return;
    case ExprKind::Or: list("ObjectUnionOf"); return;
    case ExprKind::Not:
      os << "ObjectComplementOf(";
      functional(os, e.sub());
      os << ')';
      return;
    case ExprKind::Some:
    case ExprKind::All:
      os << (e.kind() == ExprKind::Some ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(") << e.role() << ' ';
      functional(os, e.sub());
      os << ')';
      return;
    case ExprKind::MinCard:
    case ExprKind::MaxCard:
    case ExprKind::ExactCard:
      os << (e.kind() == ExprKind::MinCard   ? "ObjectMinCardinality("
             : e.kind() == ExprKind::MaxCard ? "ObjectMaxCardinality("
                                             : "ObjectExactCardinality(")
         << e.cardinality() << ' ' << e.role() << ' ';
      functional(os, e.sub());
      os << ')';
      return;
  }
}

void functionalList(std::ostream& os, const std::vector<ClassExpression>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ' ';
    functional(os, xs[i]);
  }
}

}  // namespace

ParsedOntology parseOntology(std::string_view text) { return FunctionalParser(text).file(); }

Axiom parseTestAxiom(std::string_view text) { return ManchesterParser(text).axiom(); }

ClassExpression parseClassExpression(std::string_view text) {
  return ManchesterParser(text).standalone();
}

std::string printClassExpression(const ClassExpression& expr) {
  std::ostringstream os;
  manchester(os, expr, Level::Or);
  return os.str();
}

std::string printAxiom(const Axiom& axiom) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const SubClassOf& a) {
                   manchester(os, a.sub, Level::Or);
                   os << " SubClassOf: ";
                   manchester(os, a.sup, Level::Or);
                 },
                 [&](const EquivalentClasses& a) {
                   manchester(os, a.members.front(), Level::Or);
                   os << " EquivalentTo: ";
                   joinExprs(os, a.members, 1);
                 },
                 [&](const DisjointClasses& a) {
                   manchester(os, a.members.front(), Level::Or);
                   os << " DisjointWith: ";
                   joinExprs(os, a.members, 1);
                 },
                 [&](const DisjointUnion& a) {
                   os << a.lhs << " DisjointUnionOf: ";
                   joinExprs(os, a.members, 0);
                 },
                 [&](const ClassAssertion& a) {
                   os << a.individual << " Type: ";
                   manchester(os, a.expr, Level::Or);
                 },
                 [&](const ObjectPropertyAssertion& a) {
                   os << a.subject << " Facts: " << a.role << ' ' << a.object;
                 },
                 [&](const SameIndividual& a) {
                   os << a.individuals.front() << " SameAs: ";
                   joinNames(os, a.individuals, 1, ", ");
                 },
                 [&](const DifferentIndividuals& a) {
                   os << a.individuals.front() << " DifferentFrom: ";
                   joinNames(os, a.individuals, 1, ", ");
                 },
                 [&](const ObjectPropertyDomain& a) {
                   os << a.role << " Domain: ";
                   manchester(os, a.expr, Level::Or);
                 },
                 [&](const ObjectPropertyRange& a) {
                   os << a.role << " Range: ";
                   manchester(os, a.expr, Level::Or);
                 },
                 [&](const FunctionalObjectProperty& a) {
                   os << a.role << " Characteristics: Functional";
                 },
             },
             axiom);
  return os.str();
}

std::string printFunctional(const ClassExpression& expr) {
  std::ostringstream os;
  functional(os, expr);
  return os.str();
}

std::string printFunctional(const Axiom& axiom) {
  std::ostringstream os;
  os << axiomKindName(axiom) << '(';
  std::visit(Overloaded{
                 [&](const SubClassOf& a) {
                   functional(os, a.sub);
                   os << ' ';
                   functional(os, a.sup);
                 },
                 [&](const EquivalentClasses& a) { functionalList(os, a.members); },
                 [&](const DisjointClasses& a) { functionalList(os, a.members); },
                 [&](const DisjointUnion& a) {
                   os << a.lhs << ' ';
                   functionalList(os, a.members);
                 },
                 [&](const ClassAssertion& a) {
                   functional(os, a.expr);
                   os << ' ' << a.individual;
                 },
                 [&](const ObjectPropertyAssertion& a) {
                   os << a.role << ' ' << a.subject << ' ' << a.object;
                 },
                 [&](const SameIndividual& a) { joinNames(os, a.individuals, 0, " "); },
                 [&](const DifferentIndividuals& a) { joinNames(os, a.individuals, 0, " "); },
                 [&](const ObjectPropertyDomain& a) {
                   os << a.role << ' ';
                   functional(os, a.expr);
                 },
                 [&](const ObjectPropertyRange& a) {
                   os << a.role << ' ';
                   functional(os, a.expr);
                 },
                 [&](const FunctionalObjectProperty& a) { os << a.role; },
             },
             axiom);
  os << ')';
  return os.str();
}

std::string printOntology(const std::vector<Axiom>& axioms, const Signature& signature) {
  std::ostringstream os;
  for (const auto& c : signature.classes) os << "Declaration(Class(" << c << "))\n";
  for (const auto& r : signature.roles) os << "Declaration(ObjectProperty(" << r << "))\n";
  for (const auto& i : signature.individuals) os << "Declaration(NamedIndividual(" << i << "))\n";
  for (const auto& a : axioms) os << printFunctional(a) << '\n';
  return os.str();
}

}  // namespace ontotdd
