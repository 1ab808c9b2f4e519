#include "ontotdd/core.hpp"

#include <algorithm>
#include <sstream>

namespace ontotdd {

// ── ClassExpression ─────────────────────────────────────────────────────────

ClassExpression::ClassExpression() : ClassExpression(top()) {}

ClassExpression ClassExpression::make(ExprKind kind, Name name, std::uint32_t n,
                                      std::vector<ClassExpression> operands) {
  return ClassExpression(
      std::make_shared<const Node>(Node{kind, std::move(name), n, std::move(operands)}));
}

ClassExpression ClassExpression::named(Name name) {
  if (name.empty()) throw std::invalid_argument("empty class name");
  return make(ExprKind::Named, std::move(name), 0, {});
}

ClassExpression ClassExpression::top() {
  static const ClassExpression t = make(ExprKind::Top, {}, 0, {});
  return t;
}

ClassExpression ClassExpression::bottom() {
  static const ClassExpression b = make(ExprKind::Bottom, {}, 0, {});
  return b;
}

ClassExpression ClassExpression::conjunction(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) throw std::invalid_argument("intersection needs at least two operands");
  return make(ExprKind::And, {}, 0, std::move(operands));
}

ClassExpression ClassExpression::disjunction(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) throw std::invalid_argument("union needs at least two operands");
  return make(ExprKind::Or, {}, 0, std::move(operands));
}

ClassExpression ClassExpression::complement(ClassExpression operand) {
  return make(ExprKind::Not, {}, 0, {std::move(operand)});
}

ClassExpression ClassExpression::some(Name role, ClassExpression filler) {
  return make(ExprKind::Some, std::move(role), 0, {std::move(filler)});
}

ClassExpression ClassExpression::all(Name role, ClassExpression filler) {
  return make(ExprKind::All, std::move(role), 0, {std::move(filler)});
}

ClassExpression ClassExpression::minCard(std::uint32_t n, Name role, ClassExpression filler) {
  return make(ExprKind::MinCard, std::move(role), n, {std::move(filler)});
}

ClassExpression ClassExpression::maxCard(std::uint32_t n, Name role, ClassExpression filler) {
  return make(ExprKind::MaxCard, std::move(role), n, {std::move(filler)});
}

ClassExpression ClassExpression::exactCard(std::uint32_t n, Name role, ClassExpression filler) {
  return make(ExprKind::ExactCard, std::move(role), n, {std::move(filler)});
}

bool ClassExpression::isRestriction() const {
  switch (kind()) {
    case ExprKind::Some:
    case ExprKind::All:
    case ExprKind::MinCard:
    case ExprKind::MaxCard:
    case ExprKind::ExactCard:
      return true;
    default:
      return false;
  }
}

std::size_t ClassExpression::depth() const {
  std::size_t d = 0;
  for (const auto& op : operands()) d = std::max(d, op.depth());
  return operands().empty() ? 0 : d + 1;
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.cardinality() == b.cardinality() && a.name() == b.name() &&
         a.operands() == b.operands();
}

bool operator<(const ClassExpression& a, const ClassExpression& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
  if (a.name() != b.name()) return a.name() < b.name();
  return std::lexicographical_compare(a.operands().begin(), a.operands().end(),
                                      b.operands().begin(), b.operands().end());
}

ClassExpression Named(Name name) { return ClassExpression::named(std::move(name)); }
ClassExpression Top() { return ClassExpression::top(); }
ClassExpression Bottom() { return ClassExpression::bottom(); }
ClassExpression And(std::vector<ClassExpression> operands) {
  return ClassExpression::conjunction(std::move(operands));
}
ClassExpression Or(std::vector<ClassExpression> operands) {
  return ClassExpression::disjunction(std::move(operands));
}
ClassExpression Not(ClassExpression operand) { return ClassExpression::complement(std::move(operand)); }
ClassExpression Some(Name role, ClassExpression filler) {
  return ClassExpression::some(std::move(role), std::move(filler));
}
ClassExpression All(Name role, ClassExpression filler) {
  return ClassExpression::all(std::move(role), std::move(filler));
}
ClassExpression MinCard(std::uint32_t n, Name role, ClassExpression filler) {
  return ClassExpression::minCard(n, std::move(role), std::move(filler));
}
ClassExpression MaxCard(std::uint32_t n, Name role, ClassExpression filler) {
  return ClassExpression::maxCard(n, std::move(role), std::move(filler));
}
ClassExpression ExactCard(std::uint32_t n, Name role, ClassExpression filler) {
  return ClassExpression::exactCard(n, std::move(role), std::move(filler));
}

// ── NNF ─────────────────────────────────────────────────────────────────────

namespace {

ClassExpression nnfNegated(const ClassExpression& e);

std::vector<ClassExpression> mapOperands(const std::vector<ClassExpression>& ops, bool negate);

ClassExpression nnfPositive(const ClassExpression& e) {
  switch (e.kind()) {
    case ExprKind::Named:
    case ExprKind::Top:
    case ExprKind::Bottom:
      return e;
    case ExprKind::And:
      return And(mapOperands(e.operands(), false));
    case ExprKind::Or:
      return Or(mapOperands(e.operands(), false));
    case ExprKind::Not:
      return nnfNegated(e.sub());
    case ExprKind::Some:
      return Some(e.role(), nnfPositive(e.sub()));
    case ExprKind::All:
      return All(e.role(), nnfPositive(e.sub()));
    case ExprKind::MinCard:
      if (e.cardinality() == 0) return Top();
      return MinCard(e.cardinality(), e.role(), nnfPositive(e.sub()));
    case ExprKind::MaxCard:
      return MaxCard(e.cardinality(), e.role(), nnfPositive(e.sub()));
    case ExprKind::ExactCard: {
      const auto n = e.cardinality();
      return nnfPositive(And({MinCard(n, e.role(), e.sub()), MaxCard(n, e.role(), e.sub())}));
    }
  }
  return e;
}

ClassExpression nnfNegated(const ClassExpression& e) {
  switch (e.kind()) {
    case ExprKind::Named:
      return Not(e);
    case ExprKind::Top:
      return Bottom();
    case ExprKind::Bottom:
      return Top();
    case ExprKind::And:
      return Or(mapOperands(e.operands(), true));
    case ExprKind::Or:
      return And(mapOperands(e.operands(), true));
    case ExprKind::Not:
      return nnfPositive(e.sub());
    case ExprKind::Some:
      return All(e.role(), nnfNegated(e.sub()));
    case ExprKind::All:
      return Some(e.role(), nnfNegated(e.sub()));
    case ExprKind::MinCard:
      // not >= 0 is not Top.
      if (e.cardinality() == 0) return Bottom();
      return MaxCard(e.cardinality() - 1, e.role(), nnfPositive(e.sub()));
    case ExprKind::MaxCard:
      return MinCard(e.cardinality() + 1, e.role(), nnfPositive(e.sub()));
    case ExprKind::ExactCard: {
      const auto n = e.cardinality();
      return nnfNegated(And({MinCard(n, e.role(), e.sub()), MaxCard(n, e.role(), e.sub())}));
    }
  }
  return e;
}

std::vector<ClassExpression> mapOperands(const std::vector<ClassExpression>& ops, bool negate) {
  std::vector<ClassExpression> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(negate ? nnfNegated(op) : nnfPositive(op));
  return out;
}

void render(std::ostringstream& os, const ClassExpression& e) {
  switch (e.kind()) {
    case ExprKind::Named: os << e.name(); break;
    case ExprKind::Top: os << "T"; break;
    case ExprKind::Bottom: os << "F"; break;
    case ExprKind::And:
    case ExprKind::Or: {
      os << '(';
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        if (i) os << (e.kind() == ExprKind::And ? " & " : " | ");
        render(os, e.operands()[i]);
      }
      os << ')';
      break;
    }
    case ExprKind::Not: os << '~'; render(os, e.sub()); break;
    case ExprKind::Some: os << "E" << e.role() << '.'; render(os, e.sub()); break;
    case ExprKind::All: os << "A" << e.role() << '.'; render(os, e.sub()); break;
    case ExprKind::MinCard: os << ">=" << e.cardinality() << e.role() << '.'; render(os, e.sub()); break;
    case ExprKind::MaxCard: os << "<=" << e.cardinality() << e.role() << '.'; render(os, e.sub()); break;
    case ExprKind::ExactCard: os << "=" << e.cardinality() << e.role() << '.'; render(os, e.sub()); break;
  }
}

}  // namespace

ClassExpression nnf(const ClassExpression& expr) { return nnfPositive(expr); }

std::string toDlString(const ClassExpression& expr) {
  std::ostringstream os;
  render(os, expr);
  return os.str();
}

// ── Axioms ──────────────────────────────────────────────────────────────────

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void requireArity(std::size_t n, std::string_view what) {
  if (n < 2) throw InvalidAxiom(std::string(what) + " needs at least two arguments");
}

}  // namespace

void validate(const Axiom& axiom) {
  std::visit(Overloaded{
                 [](const EquivalentClasses& a) { requireArity(a.members.size(), "EquivalentClasses"); },
                 [](const DisjointClasses& a) { requireArity(a.members.size(), "DisjointClasses"); },
                 [](const DisjointUnion& a) {
                   requireArity(a.members.size(), "DisjointUnion");
                   if (a.lhs.empty()) throw InvalidAxiom("DisjointUnion needs a named class");
                 },
                 [](const SameIndividual& a) { requireArity(a.individuals.size(), "SameIndividual"); },
                 [](const DifferentIndividuals& a) {
                   requireArity(a.individuals.size(), "DifferentIndividuals");
                 },
                 [](const auto&) {},
             },
             axiom);
}

std::string_view axiomKindName(const Axiom& axiom) {
  static constexpr std::string_view names[] = {
      "SubClassOf",          "EquivalentClasses",     "DisjointClasses",         "DisjointUnion",
      "ClassAssertion",      "ObjectPropertyAssertion", "SameIndividual",        "DifferentIndividuals",
      "ObjectPropertyDomain", "ObjectPropertyRange",  "FunctionalObjectProperty"};
  return names[axiom.index()];
}

// ── Signature ───────────────────────────────────────────────────────────────

std::string_view entityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "class";
    case EntityKind::Role: return "object property";
    case EntityKind::Individual: return "individual";
  }
  return "?";
}

std::optional<EntityKind> Signature::kindOf(const Name& name) const {
  if (classes.count(name)) return EntityKind::Class;
  if (roles.count(name)) return EntityKind::Role;
  if (individuals.count(name)) return EntityKind::Individual;
  return std::nullopt;
}

void Signature::add(EntityKind kind, const Name& name) {
  switch (kind) {
    case EntityKind::Class: classes.insert(name); break;
    case EntityKind::Role: roles.insert(name); break;
    case EntityKind::Individual: individuals.insert(name); break;
  }
}

void Signature::merge(const Signature& other) {
  classes.insert(other.classes.begin(), other.classes.end());
  roles.insert(other.roles.begin(), other.roles.end());
  individuals.insert(other.individuals.begin(), other.individuals.end());
}

bool Signature::contains(const Signature& other) const { return missingFrom(other).empty(); }

NameSet Signature::missingFrom(const Signature& other) const {
  NameSet out;
  auto diff = [&out](const NameSet& have, const NameSet& want) {
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                        std::inserter(out, out.end()));
  };
  diff(classes, other.classes);
  diff(roles, other.roles);
  diff(individuals, other.individuals);
  return out;
}

namespace {

void collect(const ClassExpression& e, Signature& sig) {
  if (e.kind() == ExprKind::Named) {
    sig.classes.insert(e.name());
    return;
  }
  if (e.isRestriction()) sig.roles.insert(e.role());
  for (const auto& op : e.operands()) collect(op, sig);
}

}  // namespace

Signature signatureOf(const ClassExpression& expr) {
  Signature sig;
  collect(expr, sig);
  return sig;
}

Signature signatureOf(const Axiom& axiom) {
  Signature sig;
  std::visit(Overloaded{
                 [&](const SubClassOf& a) {
                   collect(a.sub, sig);
                   collect(a.sup, sig);
                 },
                 [&](const EquivalentClasses& a) {
                   for (const auto& m : a.members) collect(m, sig);
                 },
                 [&](const DisjointClasses& a) {
                   for (const auto& m : a.members) collect(m, sig);
                 },
                 [&](const DisjointUnion& a) {
                   sig.classes.insert(a.lhs);
                   for (const auto& m : a.members) collect(m, sig);
                 },
                 [&](const ClassAssertion& a) {
                   sig.individuals.insert(a.individual);
                   collect(a.expr, sig);
                 },
                 [&](const ObjectPropertyAssertion& a) {
                   sig.roles.insert(a.role);
                   sig.individuals.insert(a.subject);
                   sig.individuals.insert(a.object);
                 },
                 [&](const SameIndividual& a) {
                   sig.individuals.insert(a.individuals.begin(), a.individuals.end());
                 },
                 [&](const DifferentIndividuals& a) {
                   sig.individuals.insert(a.individuals.begin(), a.individuals.end());
                 },
                 [&](const ObjectPropertyDomain& a) {
                   sig.roles.insert(a.role);
                   collect(a.expr, sig);
                 },
                 [&](const ObjectPropertyRange& a) {
                   sig.roles.insert(a.role);
                   collect(a.expr, sig);
                 },
                 [&](const FunctionalObjectProperty& a) { sig.roles.insert(a.role); },
             },
             axiom);
  return sig;
}

// ── Verdicts ────────────────────────────────────────────────────────────────

Verdict maxVerdict(Verdict a, Verdict b) { return a < b ? b : a; }

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::Entailed: return "entailed";
    case Verdict::Absent: return "absent";
    case Verdict::Incoherent: return "incoherent";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::optional<Verdict> parseVerdict(std::string_view text) {
  for (auto v : {Verdict::Entailed, Verdict::Absent, Verdict::Incoherent, Verdict::Inconsistent}) {
    if (toString(v) == text) return v;
  }
  return std::nullopt;
}

std::string_view toString(PreconditionKind k) {
  switch (k) {
    case PreconditionKind::OntologyInconsistent: return "ontology-inconsistent";
    case PreconditionKind::OntologyIncoherent: return "ontology-incoherent";
    case PreconditionKind::MissingEntities: return "missing-entities";
  }
  return "?";
}

TestResult TestResult::precondition(PreconditionKind kind, NameSet missing) {
  if ((kind == PreconditionKind::MissingEntities) == missing.empty()) {
    throw std::invalid_argument("missing set must be non-empty exactly for missing-entities");
  }
  return TestResult{PreconditionFailure{kind, std::move(missing)}};
}

std::string TestResult::label() const {
  if (isVerdict()) return std::string(toString(verdict()));
  return std::string(toString(failure().kind));
}

}  // namespace ontotdd
