#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontotdd {

using Name = std::string;
using NameSet = std::set<Name>;

// ── Class expressions ───────────────────────────────────────────────────────

enum class ExprKind : std::uint8_t {
  Named,
  Top,
  Bottom,
  And,
  Or,
  Not,
  Some,
  All,
  MinCard,
  MaxCard,
  ExactCard,
};

/// Immutable class expression over named classes and roles.
///
/// Copies share structure; equality and ordering are structural and
/// order-sensitive on operand lists.
class ClassExpression {
 public:
  /// Defaults to owl:Thing.
  ClassExpression();

  static ClassExpression named(Name name);
  static ClassExpression top();
  static ClassExpression bottom();
  static ClassExpression conjunction(std::vector<ClassExpression> operands);
  static ClassExpression disjunction(std::vector<ClassExpression> operands);
  static ClassExpression complement(ClassExpression operand);
  static ClassExpression some(Name role, ClassExpression filler);
  static ClassExpression all(Name role, ClassExpression filler);
  static ClassExpression minCard(std::uint32_t n, Name role, ClassExpression filler);
  static ClassExpression maxCard(std::uint32_t n, Name role, ClassExpression filler);
  static ClassExpression exactCard(std::uint32_t n, Name role, ClassExpression filler);

  ExprKind kind() const { return node_->kind; }
  /// Class name for Named, role name for restrictions, empty otherwise.
  const Name& name() const { return node_->name; }
  const Name& role() const { return node_->name; }
  std::uint32_t cardinality() const { return node_->n; }
  const std::vector<ClassExpression>& operands() const { return node_->operands; }
  /// Operand of Not, filler of restrictions.
  const ClassExpression& sub() const { return node_->operands.front(); }

  bool isNamed() const { return kind() == ExprKind::Named; }
  bool isRestriction() const;
  std::size_t depth() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  friend bool operator!=(const ClassExpression& a, const ClassExpression& b) { return !(a == b); }
  friend bool operator<(const ClassExpression& a, const ClassExpression& b);

 private:
  struct Node {
    ExprKind kind;
    Name name;
    std::uint32_t n = 0;
    std::vector<ClassExpression> operands;
  };
  explicit ClassExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ClassExpression make(ExprKind kind, Name name, std::uint32_t n,
                              std::vector<ClassExpression> operands);

  std::shared_ptr<const Node> node_;
};

// Shorthands used heavily by tests and the engine.
ClassExpression Named(Name name);
ClassExpression Top();
ClassExpression Bottom();
ClassExpression And(std::vector<ClassExpression> operands);
ClassExpression Or(std::vector<ClassExpression> operands);
ClassExpression Not(ClassExpression operand);
ClassExpression Some(Name role, ClassExpression filler);
ClassExpression All(Name role, ClassExpression filler);
ClassExpression MinCard(std::uint32_t n, Name role, ClassExpression filler = Top());
ClassExpression MaxCard(std::uint32_t n, Name role, ClassExpression filler = Top());
ClassExpression ExactCard(std::uint32_t n, Name role, ClassExpression filler = Top());

/// Negation normal form. Negation only on named classes, =n expanded.
ClassExpression nnf(const ClassExpression& expr);

/// Debug rendering in a compact DL notation.
std::string toDlString(const ClassExpression& expr);

// ── Axioms ──────────────────────────────────────────────────────────────────

struct SubClassOf {
  ClassExpression sub;
  ClassExpression sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};
struct EquivalentClasses {
  std::vector<ClassExpression> members;
  friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};
struct DisjointClasses {
  std::vector<ClassExpression> members;
  friend bool operator==(const DisjointClasses&, const DisjointClasses&) = default;
};
struct DisjointUnion {
  Name lhs;
  std::vector<ClassExpression> members;
  friend bool operator==(const DisjointUnion&, const DisjointUnion&) = default;
};
struct ClassAssertion {
  Name individual;
  ClassExpression expr;
  friend bool operator==(const ClassAssertion&, const ClassAssertion&) = default;
};
struct ObjectPropertyAssertion {
  Name role;
  Name subject;
  Name object;
  friend bool operator==(const ObjectPropertyAssertion&, const ObjectPropertyAssertion&) = default;
};
struct SameIndividual {
  std::vector<Name> individuals;
  friend bool operator==(const SameIndividual&, const SameIndividual&) = default;
};
struct DifferentIndividuals {
  std::vector<Name> individuals;
  friend bool operator==(const DifferentIndividuals&, const DifferentIndividuals&) = default;
};
struct ObjectPropertyDomain {
  Name role;
  ClassExpression expr;
  friend bool operator==(const ObjectPropertyDomain&, const ObjectPropertyDomain&) = default;
};
struct ObjectPropertyRange {
  Name role;
  ClassExpression expr;
  friend bool operator==(const ObjectPropertyRange&, const ObjectPropertyRange&) = default;
};
struct FunctionalObjectProperty {
  Name role;
  friend bool operator==(const FunctionalObjectProperty&, const FunctionalObjectProperty&) = default;
};

using Axiom = std::variant<SubClassOf, EquivalentClasses, DisjointClasses, DisjointUnion,
                           ClassAssertion, ObjectPropertyAssertion, SameIndividual,
                           DifferentIndividuals, ObjectPropertyDomain, ObjectPropertyRange,
                           FunctionalObjectProperty>;

/// Thrown when an axiom violates its arity or shape constraints.
class InvalidAxiom : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const Axiom& axiom);

/// Short kind label, e.g. "SubClassOf".
std::string_view axiomKindName(const Axiom& axiom);

// ── Signatures ──────────────────────────────────────────────────────────────

enum class EntityKind : std::uint8_t { Class, Role, Individual };

std::string_view entityKindName(EntityKind kind);

struct Signature {
  NameSet classes;
  NameSet roles;
  NameSet individuals;

  bool empty() const { return classes.empty() && roles.empty() && individuals.empty(); }
  std::optional<EntityKind> kindOf(const Name& name) const;
  void add(EntityKind kind, const Name& name);
  void merge(const Signature& other);
  bool contains(const Signature& other) const;
  /// Names of `other` absent from this signature, kind-aware.
  NameSet missingFrom(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signatureOf(const ClassExpression& expr);
Signature signatureOf(const Axiom& axiom);

// ── Verdicts ────────────────────────────────────────────────────────────────

/// Outcome of testing one axiom, ordered by graveness of failure.
enum class Verdict : std::uint8_t { Entailed = 0, Absent = 1, Incoherent = 2, Inconsistent = 3 };

Verdict maxVerdict(Verdict a, Verdict b);
std::string_view toString(Verdict v);
std::optional<Verdict> parseVerdict(std::string_view text);

enum class PreconditionKind : std::uint8_t { OntologyInconsistent, OntologyIncoherent, MissingEntities };

std::string_view toString(PreconditionKind k);

struct PreconditionFailure {
  PreconditionKind kind;
  NameSet missing;  // non-empty iff kind == MissingEntities
  friend bool operator==(const PreconditionFailure&, const PreconditionFailure&) = default;
};

struct TestResult {
  std::variant<PreconditionFailure, Verdict> value;

  static TestResult outcome(Verdict v) { return TestResult{v}; }
  static TestResult precondition(PreconditionKind kind, NameSet missing = {});

  bool isVerdict() const { return std::holds_alternative<Verdict>(value); }
  Verdict verdict() const { return std::get<Verdict>(value); }
  const PreconditionFailure& failure() const { return std::get<PreconditionFailure>(value); }
  /// "entailed", ..., "ontology-inconsistent", "ontology-incoherent", "missing-entities".
  std::string label() const;

  friend bool operator==(const TestResult&, const TestResult&) = default;
};

}  // namespace ontotdd
