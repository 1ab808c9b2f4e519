#pragma once

// Internal tableau engine behind ontotdd::Reasoner.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ontotdd/core.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd::detail {

using ConceptId = std::uint32_t;

enum class ConceptKind : std::uint8_t { Top, Bottom, Atom, NegAtom, And, Or, Some, All, AtLeast, AtMost };

struct Concept {
  ConceptKind kind;
  std::uint32_t symbol = 0;  // atom or role id
  std::uint32_t n = 0;
  std::vector<ConceptId> args{};  // operands, or the filler for restrictions

  auto key() const { return std::tie(kind, symbol, n, args); }
  friend bool operator<(const Concept& a, const Concept& b) { return a.key() < b.key(); }
};

/// Hash-consed NNF concepts. And/Or operands are flattened, sorted and
/// deduplicated, so structurally equal labels compare equal by id.
class ConceptPool {
 public:
  static constexpr ConceptId kTop = 0;
  static constexpr ConceptId kBottom = 1;

  ConceptPool();

  ConceptId fromExpression(const ClassExpression& expr);
  ConceptId negate(ConceptId c);

  ConceptId atom(const Name& name);
  std::uint32_t role(const Name& name);

  ConceptId makeAnd(std::vector<ConceptId> args);
  ConceptId makeOr(std::vector<ConceptId> args);
  ConceptId makeSome(std::uint32_t role, ConceptId filler);
  ConceptId makeAll(std::uint32_t role, ConceptId filler);
  ConceptId makeAtLeast(std::uint32_t n, std::uint32_t role, ConceptId filler);
  ConceptId makeAtMost(std::uint32_t n, std::uint32_t role, ConceptId filler);

  const Concept& operator[](ConceptId c) const { return concepts_[c]; }
  std::size_t size() const { return concepts_.size(); }

 private:
  ConceptId intern(Concept c);
  ConceptId fromNnf(const ClassExpression& expr);

  std::vector<Concept> concepts_;
  std::map<Concept, ConceptId> ids_;
  std::map<ConceptId, ConceptId> negations_;
  std::map<Name, std::uint32_t> atoms_;
  std::map<Name, std::uint32_t> roles_;
};

/// Assertions added on top of the ontology for a single decision.
struct ExtraAssertions {
  std::vector<std::pair<Name, ClassExpression>> memberships;
  /// Each expression gets its own fresh anonymous root.
  std::vector<ClassExpression> anonymous;
  std::vector<std::pair<Name, Name>> same;
  std::vector<std::pair<Name, Name>> different;
};

/// Compiled ontology plus a decision procedure for consistency of
/// ontology ∪ extras. Not thread-safe; build one per thread.
class Tableau {
 public:
  Tableau(const OntologyState& state, const ReasonerOptions& options);

  bool consistent(const ExtraAssertions& extra = {});

  std::size_t nodesCreated() const { return nodes_created_; }

 private:
  friend class Search;

  void compileTbox(const std::vector<Axiom>& tbox);
  void addInclusion(const ClassExpression& sub, const ClassExpression& sup);

  ConceptPool pool_;
  std::vector<ConceptId> universal_;
  std::map<std::uint32_t, std::vector<ConceptId>> unfold_;  // atom symbol -> concepts
  std::vector<Name> individuals_;
  std::vector<std::pair<Name, ConceptId>> memberships_;
  std::vector<std::tuple<std::uint32_t, Name, Name>> edges_;
  std::vector<std::vector<Name>> same_;
  std::vector<std::vector<Name>> different_;
  ReasonerOptions options_;
  std::size_t nodes_created_ = 0;
  std::size_t branches_ = 0;
};

}  // namespace ontotdd::detail
