#include "ontotdd/reasoner.hpp"

#include "ontotdd/tdd.hpp"
#include "tableau.hpp"

namespace ontotdd {

using detail::ExtraAssertions;
using detail::Tableau;

// ── OntologyState ───────────────────────────────────────────────────────────

OntologyState::OntologyState() : data_(std::make_shared<const Data>()) {}

OntologyState::OntologyState(std::vector<Axiom> axioms, Signature declared) {
  auto data = std::make_shared<Data>();
  data->signature = std::move(declared);
  for (const auto& ax : axioms) {
    validate(ax);
    data->signature.merge(signatureOf(ax));
    if (isPropertyAxiom(ax)) {
      data->tbox.emplace_back(rewritePropertyAxiom(ax));
    } else if (std::holds_alternative<ClassAssertion>(ax) || std::holds_alternative<ObjectPropertyAssertion>(ax) ||
               std::holds_alternative<SameIndividual>(ax) || std::holds_alternative<DifferentIndividuals>(ax)) {
      data->abox.push_back(ax);
    } else {
      data->tbox.push_back(ax);
    }
  }
  data->axioms = std::move(axioms);
  data_ = std::move(data);
}

OntologyState OntologyState::addAxioms(const std::vector<Axiom>& more) const {
  auto all = data_->axioms;
  all.insert(all.end(), more.begin(), more.end());
  return OntologyState(std::move(all), data_->signature);
}

OntologyState OntologyState::withIndex(ClassificationIndex index) const {
  OntologyState copy = *this;
  copy.index_ = std::make_shared<const ClassificationIndex>(std::move(index));
  return copy;
}

OntologyState OntologyState::withoutIndex() const {
  OntologyState copy = *this;
  copy.index_.reset();
  return copy;
}

// ── Reasoner ────────────────────────────────────────────────────────────────

Reasoner::Reasoner(ReasonerOptions options) : options_(options) {}

bool Reasoner::isConsistent(const OntologyState& state) const {
  Tableau t(state, options_);
  return t.consistent();
}

OntologyState Reasoner::classify(const OntologyState& state) const {
  ++classify_count_;
  ClassificationIndex index;
  Tableau t(state, options_);
  if (!t.consistent()) {
    index.consistent = false;
    return state.withIndex(std::move(index));
  }

  const auto& sig = state.signature();
  for (const auto& n : sig.classes) {
    ExtraAssertions probe;
    probe.anonymous.push_back(Named(n));
    if (!t.consistent(probe)) index.unsatisfiableNamed.insert(n);
  }

  for (const auto& n : sig.classes) {
    auto& up = index.subsumers[n];
    if (index.unsatisfiableNamed.count(n)) {
      up = sig.classes;
      continue;
    }
    up.insert(n);
    for (const auto& m : sig.classes) {
      if (m == n || index.unsatisfiableNamed.count(m)) continue;
      ExtraAssertions probe;
      probe.anonymous.push_back(And({Named(n), Not(Named(m))}));
      if (!t.consistent(probe)) up.insert(m);
    }
  }

  for (const auto& n : sig.classes) {
    auto& members = index.instancesOf[n];
    for (const auto& a : sig.individuals) {
      ExtraAssertions probe;
      probe.memberships.emplace_back(a, Not(Named(n)));
      if (!t.consistent(probe)) members.insert(a);
    }
  }

  for (const auto& a : sig.individuals) {
    index.sameAs[a].insert(a);
    index.differentFrom[a];
  }
  for (auto i = sig.individuals.begin(); i != sig.individuals.end(); ++i) {
    for (auto j = std::next(i); j != sig.individuals.end(); ++j) {
      ExtraAssertions apart;
      apart.different.emplace_back(*i, *j);
      if (!t.consistent(apart)) {
        index.sameAs[*i].insert(*j);
        index.sameAs[*j].insert(*i);
        continue;
      }
      ExtraAssertions together;
      together.same.emplace_back(*i, *j);
      if (!t.consistent(together)) {
        index.differentFrom[*i].insert(*j);
        index.differentFrom[*j].insert(*i);
      }
    }
  }
  return state.withIndex(std::move(index));
}

const ClassificationIndex& Reasoner::requireReady(const OntologyState& state) const {
  const auto* index = state.index();
  if (index == nullptr) throw ContractViolation("query on an unclassified ontology");
  if (!index->consistent) throw ContractViolation("query on an inconsistent ontology");
  return *index;
}

bool Reasoner::isSatisfiable(const OntologyState& state, const ClassExpression& c) const {
  requireReady(state);
  ++query_count_;
  Tableau t(state, options_);
  ExtraAssertions probe;
  probe.anonymous.push_back(c);
  return t.consistent(probe);
}

NameSet Reasoner::getSubClasses(const OntologyState& state, const ClassExpression& c) const {
  const auto& index = requireReady(state);
  NameSet out;
  const auto& classes = state.signature().classes;
  if (c.isNamed() && classes.count(c.name())) {
    for (const auto& [n, up] : index.subsumers) {
      if (!index.unsatisfiableNamed.count(n) && up.count(c.name())) out.insert(n);
    }
    return out;
  }
  ++query_count_;
  Tableau t(state, options_);
  for (const auto& n : classes) {
    if (index.unsatisfiableNamed.count(n)) continue;
    ExtraAssertions probe;
    probe.anonymous.push_back(And({Named(n), Not(c)}));
    if (!t.consistent(probe)) out.insert(n);
  }
  return out;
}

NameSet Reasoner::getInstances(const OntologyState& state, const ClassExpression& c) const {
  const auto& index = requireReady(state);
  if (c.isNamed()) {
    auto it = index.instancesOf.find(c.name());
    if (it != index.instancesOf.end()) return it->second;
  }
  ++query_count_;
  NameSet out;
  Tableau t(state, options_);
  for (const auto& a : state.signature().individuals) {
    ExtraAssertions probe;
    probe.memberships.emplace_back(a, Not(c));
    if (!t.consistent(probe)) out.insert(a);
  }
  return out;
}

namespace {

const NameSet& lookupIndividual(const std::map<Name, NameSet>& relation, const Name& individual) {
  auto it = relation.find(individual);
  if (it == relation.end()) throw UnknownEntity(individual);
  return it->second;
}

}  // namespace

NameSet Reasoner::getTypes(const OntologyState& state, const Name& individual) const {
  const auto& index = requireReady(state);
  if (!state.signature().individuals.count(individual)) throw UnknownEntity(individual);
  NameSet out;
  for (const auto& [n, members] : index.instancesOf) {
    if (members.count(individual)) out.insert(n);
  }
  return out;
}

NameSet Reasoner::getSameIndividuals(const OntologyState& state, const Name& individual) const {
  return lookupIndividual(requireReady(state).sameAs, individual);
}

NameSet Reasoner::getDifferentIndividuals(const OntologyState& state, const Name& individual) const {
  return lookupIndividual(requireReady(state).differentFrom, individual);
}

}  // namespace ontotdd
