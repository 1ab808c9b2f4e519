#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ontotdd/core.hpp"

namespace ontotdd {

/// The tableau exceeded its node or branch budget.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query was issued against an unclassified or inconsistent ontology.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An individual named in a query is not in the ontology signature.
class UnknownEntity : public std::invalid_argument {
 public:
  explicit UnknownEntity(Name name)
      : std::invalid_argument("unknown entity '" + name + "'"), name_(std::move(name)) {}
  const Name& name() const { return name_; }

 private:
  Name name_;
};

struct ClassificationIndex {
  bool consistent = true;
  NameSet unsatisfiableNamed;
  /// Reflexive-transitive; every name in the class signature is a key.
  std::map<Name, NameSet> subsumers;
  std::map<Name, NameSet> instancesOf;
  /// Reflexive.
  std::map<Name, NameSet> sameAs;
  /// Irreflexive and symmetric.
  std::map<Name, NameSet> differentFrom;

  bool coherent() const { return consistent && unsatisfiableNamed.empty(); }

  friend bool operator==(const ClassificationIndex&, const ClassificationIndex&) = default;
};

/// Immutable ontology snapshot. Copies share storage.
///
/// `axioms()` keeps document order. The tableau works from `tbox()` and
/// `abox()`, where property axioms already appear as class axioms.
class OntologyState {
 public:
  OntologyState();
  OntologyState(std::vector<Axiom> axioms, Signature declared);

  const std::vector<Axiom>& axioms() const { return data_->axioms; }
  const std::vector<Axiom>& tbox() const { return data_->tbox; }
  const std::vector<Axiom>& abox() const { return data_->abox; }
  const Signature& signature() const { return data_->signature; }

  bool classified() const { return index_ != nullptr; }
  /// Null until classified.
  const ClassificationIndex* index() const { return index_.get(); }

  /// New unclassified state holding the union; this one is untouched.
  OntologyState addAxioms(const std::vector<Axiom>& more) const;
  OntologyState withIndex(ClassificationIndex index) const;
  OntologyState withoutIndex() const;

 private:
  struct Data {
    std::vector<Axiom> axioms;
    std::vector<Axiom> tbox;
    std::vector<Axiom> abox;
    Signature signature;
  };
  std::shared_ptr<const Data> data_;
  std::shared_ptr<const ClassificationIndex> index_;
};

struct ReasonerOptions {
  /// Tableau nodes created per decision before giving up.
  std::size_t nodeBudget = 1'000'000;
  /// Nondeterministic branch points per decision before giving up.
  std::size_t branchBudget = 1'000'000;
};

/// Tableau reasoner for ALCQ with ABoxes (no inverses, no UNA).
///
/// All methods are const and thread-safe; `classify` is the only operation
/// that builds an index and it is counted.
class Reasoner {
 public:
  explicit Reasoner(ReasonerOptions options = {});
  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  OntologyState classify(const OntologyState& state) const;

  /// Raw consistency check; needs no index and is not counted as a classification.
  bool isConsistent(const OntologyState& state) const;

  // The six query methods. They require a classified, consistent state.
  bool isSatisfiable(const OntologyState& state, const ClassExpression& c) const;
  NameSet getSubClasses(const OntologyState& state, const ClassExpression& c) const;
  NameSet getInstances(const OntologyState& state, const ClassExpression& c) const;
  NameSet getTypes(const OntologyState& state, const Name& individual) const;
  NameSet getSameIndividuals(const OntologyState& state, const Name& individual) const;
  NameSet getDifferentIndividuals(const OntologyState& state, const Name& individual) const;

  std::size_t classifyCount() const { return classify_count_.load(); }
  /// Tableau runs issued by the query methods (classification excluded).
  std::size_t queryCount() const { return query_count_.load(); }
  const ReasonerOptions& options() const { return options_; }

 private:
  const ClassificationIndex& requireReady(const OntologyState& state) const;

  ReasonerOptions options_;
  mutable std::atomic<std::size_t> classify_count_{0};
  mutable std::atomic<std::size_t> query_count_{0};
};

}  // namespace ontotdd
