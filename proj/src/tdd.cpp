#include "ontotdd/tdd.hpp"

#include <algorithm>

namespace ontotdd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool intersects(const NameSet& set, const std::vector<Name>& names) {
  return std::any_of(names.begin(), names.end(), [&](const Name& n) { return set.count(n) > 0; });
}

/// A name absent from the signature, for scratch individuals and aliases.
Name freshName(const Signature& sig, std::string_view stem) {
  for (int i = 0;; ++i) {
    Name candidate = std::string(stem) + "_" + std::to_string(i);
    if (!sig.kindOf(candidate)) return candidate;
  }
}

}  // namespace

bool isPropertyAxiom(const Axiom& axiom) {
  return std::holds_alternative<ObjectPropertyDomain>(axiom) || std::holds_alternative<ObjectPropertyRange>(axiom) ||
         std::holds_alternative<FunctionalObjectProperty>(axiom);
}

SubClassOf rewritePropertyAxiom(const Axiom& axiom) {
  return std::visit(
      Overloaded{
          [](const ObjectPropertyDomain& a) { return SubClassOf{Some(a.role, Top()), a.expr}; },
          [](const ObjectPropertyRange& a) { return SubClassOf{Top(), All(a.role, a.expr)}; },
          [](const FunctionalObjectProperty& a) { return SubClassOf{Top(), MaxCard(1, a.role, Top())}; },
          [](const auto& other) -> SubClassOf {
            throw UnsupportedAxiom("not a property axiom: " + std::string(axiomKindName(Axiom{other})));
          },
      },
      axiom);
}

PreTestReport preTest(const OntologyState& state, const Axiom& axiom) {
  PreTestReport report;
  const auto* index = state.index();
  if (index == nullptr) throw ContractViolation("pre-test on an unclassified ontology");
  report.consistent = index->consistent;
  report.coherent = index->coherent();
  report.missing = state.signature().missingFrom(signatureOf(axiom));
  return report;
}

Verdict testSubClassOf(const Reasoner& r, const OntologyState& s, const ClassExpression& c,
                       const ClassExpression& d) {
  const auto probe = And({c, Not(d)});
  if (!r.getInstances(s, probe).empty()) return Verdict::Inconsistent;
  if (!r.getSubClasses(s, probe).empty()) return Verdict::Incoherent;
  if (r.isSatisfiable(s, probe)) return Verdict::Absent;
  return Verdict::Entailed;
}

Verdict testEquivalentClasses(const Reasoner& r, const OntologyState& s,
                              const std::vector<ClassExpression>& members) {
  Verdict result = Verdict::Entailed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j) result = maxVerdict(result, testSubClassOf(r, s, members[i], members[j]));
    }
  }
  return result;
}

Verdict testDisjointClasses(const Reasoner& r, const OntologyState& s,
                            const std::vector<ClassExpression>& members) {
  Verdict result = Verdict::Entailed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      result = maxVerdict(result, testSubClassOf(r, s, members[i], Not(members[j])));
    }
  }
  return result;
}

Verdict testDisjointUnion(const Reasoner& r, const OntologyState& s, const Name& lhs,
                          const std::vector<ClassExpression>& members) {
  const Verdict r1 = testEquivalentClasses(r, s, {Named(lhs), Or(members)});
  const Verdict r2 = testDisjointClasses(r, s, members);
  return maxVerdict(r1, r2);
}

Verdict testSameIndividual(const Reasoner& r, const OntologyState& s, const std::vector<Name>& individuals) {
  const auto same = r.getSameIndividuals(s, individuals.front());
  if (std::all_of(individuals.begin() + 1, individuals.end(), [&](const Name& a) { return same.count(a) > 0; })) {
    return Verdict::Entailed;
  }
  for (const auto& a : individuals) {
    if (intersects(r.getDifferentIndividuals(s, a), individuals)) return Verdict::Inconsistent;
  }
  return Verdict::Absent;
}

Verdict testDifferentIndividuals(const Reasoner& r, const OntologyState& s,
                                 const std::vector<Name>& individuals) {
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    const auto same = r.getSameIndividuals(s, individuals[i]);
    for (std::size_t j = 0; j < individuals.size(); ++j) {
      if (i != j && same.count(individuals[j])) return Verdict::Inconsistent;
    }
  }
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    const auto different = r.getDifferentIndividuals(s, individuals[i]);
    for (std::size_t j = 0; j < individuals.size(); ++j) {
      if (individuals[j] != individuals[i] && !different.count(individuals[j])) return Verdict::Absent;
    }
  }
  return Verdict::Entailed;
}

Verdict testClassAssertion(const Reasoner& r, const OntologyState& s, const Name& individual,
                           const ClassExpression& c) {
  if (r.getInstances(s, c).count(individual)) return Verdict::Entailed;
  if (r.getInstances(s, Not(c)).count(individual)) return Verdict::Inconsistent;
  return Verdict::Absent;
}

TestResult evaluate(const Reasoner& reasoner, const OntologyState& state, const Axiom& axiom) {
  if (std::holds_alternative<ObjectPropertyAssertion>(axiom)) {
    throw UnsupportedAxiom("ObjectPropertyAssertion cannot be tested");
  }
  const auto pre = preTest(state, axiom);
  if (!pre.consistent) return TestResult::precondition(PreconditionKind::OntologyInconsistent);
  if (!pre.coherent) return TestResult::precondition(PreconditionKind::OntologyIncoherent);
  if (!pre.missing.empty()) return TestResult::precondition(PreconditionKind::MissingEntities, pre.missing);

  const auto& r = reasoner;
  const auto& s = state;
  const Verdict v = std::visit(
      Overloaded{
          [&](const SubClassOf& a) { return testSubClassOf(r, s, a.sub, a.sup); },
          [&](const EquivalentClasses& a) { return testEquivalentClasses(r, s, a.members); },
          [&](const DisjointClasses& a) { return testDisjointClasses(r, s, a.members); },
          [&](const DisjointUnion& a) { return testDisjointUnion(r, s, a.lhs, a.members); },
          [&](const ClassAssertion& a) { return testClassAssertion(r, s, a.individual, a.expr); },
          [&](const SameIndividual& a) { return testSameIndividual(r, s, a.individuals); },
          [&](const DifferentIndividuals& a) { return testDifferentIndividuals(r, s, a.individuals); },
          [&](const ObjectPropertyAssertion&) -> Verdict { throw UnsupportedAxiom("ObjectPropertyAssertion"); },
          [&](const auto& property) {
            const auto sub = rewritePropertyAxiom(property);
            return testSubClassOf(r, s, sub.sub, sub.sup);
          },
      },
      axiom);
  return TestResult::outcome(v);
}

// ── Reference verdict ───────────────────────────────────────────────────────

namespace {

/// O ⊢ C ⊑ D, decided as inconsistency of O ∪ {x : C ⊓ ¬D} for a fresh x.
bool entailsSubsumption(const Reasoner& r, const OntologyState& s, const ClassExpression& c,
                        const ClassExpression& d) {
  const Name x = freshName(s.signature(), "probe");
  return !r.isConsistent(s.addAxioms({ClassAssertion{x, And({c, Not(d)})}}));
}

bool entails(const Reasoner& r, const OntologyState& s, const Axiom& axiom) {
  auto pairwiseDisjoint = [&](const std::vector<ClassExpression>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!entailsSubsumption(r, s, And({m[i], m[j]}), Bottom())) return false;
      }
    }
    return true;
  };
  auto allEquivalent = [&](const std::vector<ClassExpression>& m) {
    for (std::size_t i = 1; i < m.size(); ++i) {
      if (!entailsSubsumption(r, s, m[0], m[i]) || !entailsSubsumption(r, s, m[i], m[0])) return false;
    }
    return true;
  };
  return std::visit(
      Overloaded{
          [&](const SubClassOf& a) { return entailsSubsumption(r, s, a.sub, a.sup); },
          [&](const EquivalentClasses& a) { return allEquivalent(a.members); },
          [&](const DisjointClasses& a) { return pairwiseDisjoint(a.members); },
          [&](const DisjointUnion& a) { return allEquivalent({Named(a.lhs), Or(a.members)}) && pairwiseDisjoint(a.members); },
          [&](const ClassAssertion& a) {
            return !r.isConsistent(s.addAxioms({ClassAssertion{a.individual, Not(a.expr)}}));
          },
          [&](const SameIndividual& a) {
            for (std::size_t i = 1; i < a.individuals.size(); ++i) {
              if (a.individuals[i] == a.individuals[0]) continue;
              if (r.isConsistent(s.addAxioms({DifferentIndividuals{{a.individuals[0], a.individuals[i]}}}))) {
                return false;
              }
            }
            return true;
          },
          [&](const DifferentIndividuals& a) {
            for (std::size_t i = 0; i < a.individuals.size(); ++i) {
              for (std::size_t j = i + 1; j < a.individuals.size(); ++j) {
                if (a.individuals[i] == a.individuals[j]) return false;
                if (r.isConsistent(s.addAxioms({SameIndividual{{a.individuals[i], a.individuals[j]}}}))) {
                  return false;
                }
              }
            }
            return true;
          },
          [&](const ObjectPropertyAssertion&) -> bool { throw UnsupportedAxiom("ObjectPropertyAssertion"); },
          [&](const auto& property) {
            const auto sub = rewritePropertyAxiom(property);
            return entailsSubsumption(r, s, sub.sub, sub.sup);
          },
      },
      axiom);
}

}  // namespace

Verdict referenceVerdict(const Reasoner& reasoner, const OntologyState& state, const Axiom& axiom) {
  if (entails(reasoner, state, axiom)) return Verdict::Entailed;
  const auto after = reasoner.classify(state.addAxioms({axiom}));
  if (!after.index()->consistent) return Verdict::Inconsistent;
  if (!after.index()->unsatisfiableNamed.empty()) return Verdict::Incoherent;
  return Verdict::Absent;
}

bool entailedViaAliases(const Reasoner& reasoner, const OntologyState& state, const ClassExpression& c,
                        const ClassExpression& d) {
  Signature sig = state.signature();
  const Name n = freshName(sig, "alias_sub");
  sig.add(EntityKind::Class, n);
  const Name m = freshName(sig, "alias_sup");
  const auto scratch = reasoner.classify(state.addAxioms({
      EquivalentClasses{{Named(n), c}},
      EquivalentClasses{{Named(m), d}},
  }));
  const auto& index = *scratch.index();
  if (!index.consistent) return true;
  return index.subsumers.at(n).count(m) > 0;
}

}  // namespace ontotdd
