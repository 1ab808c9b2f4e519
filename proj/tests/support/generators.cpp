#include "generators.hpp"

#include <iterator>

namespace ontotdd::support {

Name Generator::pick(const NameSet& s) {
  auto it = s.begin();
  std::advance(it, uniform(0, static_cast<int>(s.size()) - 1));
  return *it;
}

Signature Generator::signature() {
  static const std::vector<Name> classes{"A", "B", "C", "D"};
  static const std::vector<Name> roles{"r", "s"};
  static const std::vector<Name> individuals{"a", "b", "c"};
  Signature sig;
  const int nc = uniform(1, bounds_.maxClasses);
  const int nr = uniform(1, bounds_.maxRoles);
  const int ni = uniform(1, bounds_.maxIndividuals);
  for (int i = 0; i < nc; ++i) sig.classes.insert(classes[i]);
  for (int i = 0; i < nr; ++i) sig.roles.insert(roles[i]);
  for (int i = 0; i < ni; ++i) sig.individuals.insert(individuals[i]);
  return sig;
}

ClassExpression Generator::expression(const Signature& sig, int depth) {
  if (depth <= 0 || chance(0.35)) {
    const int roll = uniform(0, 19);
    if (roll == 0) return Top();
    if (roll == 1) return Bottom();
    return Named(pick(sig.classes));
  }
  auto sub = [&] { return expression(sig, depth - 1); };
  auto n = [&] { return static_cast<std::uint32_t>(uniform(0, static_cast<int>(bounds_.maxCardinality))); };
  switch (uniform(0, 8)) {
    case 0: return And({sub(), sub()});
    case 1: return Or({sub(), sub()});
    case 2:
    case 3: return Not(sub());
    case 4: return Some(pick(sig.roles), sub());
    case 5: return All(pick(sig.roles), sub());
    case 6: return MinCard(n(), pick(sig.roles), sub());
    case 7: return MaxCard(n(), pick(sig.roles), sub());
    default: return ExactCard(n(), pick(sig.roles), sub());
  }
}

std::vector<ClassExpression> Generator::expressions(const Signature& sig, int lo, int hi) {
  std::vector<ClassExpression> out;
  const int count = uniform(lo, hi);
  for (int i = 0; i < count; ++i) out.push_back(expression(sig, bounds_.maxDepth));
  return out;
}

std::vector<Name> Generator::individuals(const Signature& sig, int lo, int hi) {
  std::vector<Name> out;
  const int count = uniform(lo, hi);
  for (int i = 0; i < count; ++i) out.push_back(pick(sig.individuals));
  return out;
}

Axiom Generator::ontologyAxiom(const Signature& sig) {
  switch (uniform(0, 9)) {
    case 0: return ObjectPropertyAssertion{pick(sig.roles), pick(sig.individuals), pick(sig.individuals)};
    case 1: return ObjectPropertyAssertion{pick(sig.roles), pick(sig.individuals), pick(sig.individuals)};
    default: return testAxiom(sig);
  }
}

Axiom Generator::testAxiom(const Signature& sig) {
  const int depth = bounds_.maxDepth;
  switch (uniform(0, 12)) {
    case 0:
    case 1:
    case 2: return SubClassOf{expression(sig, depth), expression(sig, depth)};
    case 3: return EquivalentClasses{expressions(sig, 2, 3)};
    case 4: return DisjointClasses{expressions(sig, 2, 3)};
    case 5: return DisjointUnion{pick(sig.classes), expressions(sig, 2, 3)};
    case 6:
    case 7: return ClassAssertion{pick(sig.individuals), expression(sig, depth)};
    case 8: return SameIndividual{individuals(sig, 2, 3)};
    case 9: return DifferentIndividuals{individuals(sig, 2, 3)};
    case 10: return ObjectPropertyDomain{pick(sig.roles), expression(sig, depth - 1)};
    case 11: return ObjectPropertyRange{pick(sig.roles), expression(sig, depth - 1)};
    default: return FunctionalObjectProperty{pick(sig.roles)};
  }
}

OntologyState Generator::ontology() {
  const Signature sig = signature();
  std::vector<Axiom> axioms;
  const int count = uniform(0, bounds_.maxAxioms);
  for (int i = 0; i < count; ++i) axioms.push_back(ontologyAxiom(sig));
  return OntologyState(std::move(axioms), sig);
}

}  // namespace ontotdd::support
