#pragma once

// Seeded random ontologies, expressions and test axioms.

#include <random>
#include <vector>

#include "ontotdd/core.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd::support {

struct Bounds {
  int maxClasses = 4;
  int maxRoles = 2;
  int maxIndividuals = 3;
  int maxAxioms = 10;
  std::uint32_t maxCardinality = 2;
  int maxDepth = 2;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed, Bounds bounds = {}) : rng_(seed), bounds_(bounds) {}

  /// Fixed vocabulary drawn from A..D, r/s, a..c, sized at random within bounds.
  Signature signature();

  ClassExpression expression(const Signature& sig, int depth);
  /// Any axiom kind, including role assertions and property axioms.
  Axiom ontologyAxiom(const Signature& sig);
  /// Any testable kind.
  Axiom testAxiom(const Signature& sig);
  /// Declares its whole signature, so test axioms over it never miss entities.
  OntologyState ontology();

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  Name pick(const NameSet& s);

 private:
  std::vector<ClassExpression> expressions(const Signature& sig, int lo, int hi);
  std::vector<Name> individuals(const Signature& sig, int lo, int hi);

  std::mt19937_64 rng_;
  Bounds bounds_;
};

}  // namespace ontotdd::support
