#pragma once

#include <stdexcept>
#include <vector>

#include "ontotdd/core.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd {

/// The axiom kind has no test algorithm.
class UnsupportedAxiom : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool isPropertyAxiom(const Axiom& axiom);

/// Domain(R,C) -> ∃R.⊤ ⊑ C; Range(R,D) -> ⊤ ⊑ ∀R.D; Functional(R) -> ⊤ ⊑ ≤1R.⊤.
/// Throws UnsupportedAxiom for anything else.
SubClassOf rewritePropertyAxiom(const Axiom& axiom);

struct PreTestReport {
  bool consistent = true;
  bool coherent = true;
  NameSet missing;
};

/// Reads only the classification index and the signature.
PreTestReport preTest(const OntologyState& state, const Axiom& axiom);

/// Test one axiom against a classified ontology without reclassifying it.
TestResult evaluate(const Reasoner& reasoner, const OntologyState& state, const Axiom& axiom);

// Per-kind tests. Callers are expected to have checked the preconditions.
Verdict testSubClassOf(const Reasoner& r, const OntologyState& s, const ClassExpression& c,
                       const ClassExpression& d);
Verdict testEquivalentClasses(const Reasoner& r, const OntologyState& s,
                              const std::vector<ClassExpression>& members);
Verdict testDisjointClasses(const Reasoner& r, const OntologyState& s,
                            const std::vector<ClassExpression>& members);
Verdict testDisjointUnion(const Reasoner& r, const OntologyState& s, const Name& lhs,
                          const std::vector<ClassExpression>& members);
Verdict testSameIndividual(const Reasoner& r, const OntologyState& s, const std::vector<Name>& individuals);
Verdict testDifferentIndividuals(const Reasoner& r, const OntologyState& s,
                                 const std::vector<Name>& individuals);
Verdict testClassAssertion(const Reasoner& r, const OntologyState& s, const Name& individual,
                           const ClassExpression& c);

/// Add-and-reclassify reference: entailment via raw consistency checks on
/// scratch copies, otherwise add the axiom, classify and inspect the result.
/// Calls `classify` on the reasoner it is given.
Verdict referenceVerdict(const Reasoner& reasoner, const OntologyState& state, const Axiom& axiom);

/// Decides O ⊢ C ⊑ D by classifying a scratch copy with fresh aliases
/// N' ≡ C and M' ≡ D and looking up M' among the subsumers of N'.
bool entailedViaAliases(const Reasoner& reasoner, const OntologyState& state, const ClassExpression& c,
                        const ClassExpression& d);

}  // namespace ontotdd
