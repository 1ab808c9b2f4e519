#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "generators.hpp"
#include "ontotdd/parser.hpp"
#include "ontotdd/reasoner.hpp"

using namespace ontotdd;
using ontotdd::support::BruteForce;
using ontotdd::support::Generator;

namespace {

OntologyState load(std::string_view text) {
  auto parsed = parseOntology(text);
  return OntologyState(parsed.axioms, parsed.signature);
}

const char* kGiraffe = R"(
Declaration(Class(Giraffe))
Declaration(Class(Herbivore))
Declaration(Class(Mammal))
Declaration(Class(Animal))
SubClassOf(Giraffe Herbivore)
SubClassOf(Herbivore Mammal)
SubClassOf(Mammal Animal)
)";

}  // namespace

TEST(Classify, GiraffeHierarchy) {
  Reasoner r;
  auto s = r.classify(load(kGiraffe));
  EXPECT_EQ(s.index()->subsumers.at("Giraffe"), (NameSet{"Giraffe", "Herbivore", "Mammal", "Animal"}));
  EXPECT_EQ(s.index()->subsumers.at("Animal"), (NameSet{"Animal"}));
  EXPECT_TRUE(s.index()->coherent());
  EXPECT_EQ(r.classifyCount(), 1u);
}

TEST(Classify, EmptyOntology) {
  Reasoner r;
  auto s = r.classify(OntologyState{});
  EXPECT_TRUE(s.index()->consistent);
  EXPECT_TRUE(s.index()->coherent());
  EXPECT_TRUE(s.index()->subsumers.empty());
  EXPECT_TRUE(s.index()->instancesOf.empty());
}

TEST(Classify, ContradictorySuperclassesMakeClassUnsatisfiable) {
  Reasoner r;
  const std::vector<Axiom> axioms{SubClassOf{Named("A"), Named("B")}, SubClassOf{Named("A"), Not(Named("B"))}};
  auto s = r.classify(OntologyState(axioms, {}));
  EXPECT_EQ(s.index()->unsatisfiableNamed, NameSet{"A"});
  // Cross-check: no model with A non-empty, B satisfiable.
  BruteForce bf(axioms, s.signature());
  EXPECT_FALSE(bf.satisfiable(Named("A"), 2));
  EXPECT_TRUE(bf.satisfiable(Named("B"), 2));
}

TEST(Classify, InconsistentIndexIsEmpty) {
  Reasoner r;
  auto s = r.classify(OntologyState(
      {ClassAssertion{"a", Named("C")}, ClassAssertion{"a", Not(Named("C"))}}, {}));
  const auto& idx = *s.index();
  EXPECT_FALSE(idx.consistent);
  EXPECT_TRUE(idx.unsatisfiableNamed.empty());
  EXPECT_TRUE(idx.subsumers.empty());
  EXPECT_TRUE(idx.instancesOf.empty());
  EXPECT_TRUE(idx.sameAs.empty());
  EXPECT_THROW(r.isSatisfiable(s, Top()), ContractViolation);
}

TEST(Classify, Deterministic) {
  Generator g(7);
  Reasoner r;
  for (int i = 0; i < 30; ++i) {
    auto s = g.ontology();
    EXPECT_EQ(*r.classify(s).index(), *r.classify(s).index());
  }
}

TEST(Queries, RequireClassification) {
  Reasoner r;
  EXPECT_THROW(r.isSatisfiable(OntologyState{}, Top()), ContractViolation);
}

TEST(Queries, Satisfiability) {
  Reasoner r;
  auto s = r.classify(load(kGiraffe));
  EXPECT_FALSE(r.isSatisfiable(s, And({Named("Giraffe"), Not(Named("Giraffe"))})));
  EXPECT_TRUE(r.isSatisfiable(s, Named("Giraffe")));
  EXPECT_FALSE(r.isSatisfiable(s, And({Named("Herbivore"), Not(Named("Animal"))})));
}

TEST(Queries, SubClasses) {
  Reasoner r;
  auto s = r.classify(load(kGiraffe));
  EXPECT_EQ(r.getSubClasses(s, Named("Mammal")), (NameSet{"Mammal", "Herbivore", "Giraffe"}));
  EXPECT_EQ(r.getSubClasses(s, Top()), s.signature().classes);
  EXPECT_TRUE(r.getSubClasses(s, And({Named("Mammal"), Not(Named("Mammal"))})).empty());
  EXPECT_EQ(r.getSubClasses(s, Or({Named("Giraffe"), Named("Nothing_here")})), NameSet{"Giraffe"});
}

TEST(Queries, Instances) {
  Reasoner r;
  auto s = r.classify(OntologyState(
      {ClassAssertion{"a", Named("Giraffe")}, SubClassOf{Named("Giraffe"), Named("Mammal")}}, {}));
  EXPECT_EQ(r.getInstances(s, Top()), NameSet{"a"});
  EXPECT_EQ(r.getInstances(s, Named("Mammal")), NameSet{"a"});
  EXPECT_TRUE(r.getInstances(s, Bottom()).empty());
  EXPECT_EQ(r.getInstances(s, Some("eats", Top())), NameSet{});
}

TEST(Queries, Types) {
  Reasoner r;
  auto parsed = parseOntology(std::string(kGiraffe) + "ClassAssertion(Giraffe g) Declaration(NamedIndividual(x))");
  auto s = r.classify(OntologyState(parsed.axioms, parsed.signature));
  EXPECT_EQ(r.getTypes(s, "g"), (NameSet{"Giraffe", "Herbivore", "Mammal", "Animal"}));
  EXPECT_TRUE(r.getTypes(s, "x").empty());

  auto eq = r.classify(OntologyState(
      {ClassAssertion{"a", Named("C")}, EquivalentClasses{{Named("C"), Named("D")}}}, {}));
  EXPECT_EQ(r.getTypes(eq, "a"), (NameSet{"C", "D"}));
  EXPECT_THROW(r.getTypes(eq, "zz"), UnknownEntity);
}

TEST(Queries, SameIndividuals) {
  Reasoner r;
  auto asserted = r.classify(OntologyState({SameIndividual{{"a", "b"}}}, {}));
  EXPECT_EQ(r.getSameIndividuals(asserted, "a"), (NameSet{"a", "b"}));
  EXPECT_EQ(r.getSameIndividuals(asserted, "b"), (NameSet{"a", "b"}));

  auto none = r.classify(OntologyState({ClassAssertion{"a", Top()}, ClassAssertion{"b", Top()}}, {}));
  EXPECT_EQ(r.getSameIndividuals(none, "a"), NameSet{"a"});
  EXPECT_THROW(r.getSameIndividuals(none, "zz"), UnknownEntity);

  const std::vector<Axiom> functional{SubClassOf{Top(), MaxCard(1, "R", Top())},
                                      ObjectPropertyAssertion{"R", "c", "a"},
                                      ObjectPropertyAssertion{"R", "c", "b"}};
  auto merged = r.classify(OntologyState(functional, {}));
  EXPECT_EQ(r.getSameIndividuals(merged, "a"), (NameSet{"a", "b"}));
  // No model with a and b apart, and one with them together.
  BruteForce bf(functional, merged.signature());
  bool apart = false, together = false;
  bf.forEachModel(3, [&](const ontotdd::support::Model& m) {
    const auto& ids = m.individuals;
    (ids[0] == ids[1] ? together : apart) = true;  // a, b sorted first
    return true;
  });
  EXPECT_FALSE(apart);
  EXPECT_TRUE(together);
}

TEST(Queries, DifferentIndividuals) {
  Reasoner r;
  auto asserted = r.classify(OntologyState({DifferentIndividuals{{"a", "b"}}}, {}));
  EXPECT_EQ(r.getDifferentIndividuals(asserted, "a"), NameSet{"b"});

  auto none = r.classify(OntologyState({ClassAssertion{"a", Top()}, ClassAssertion{"b", Top()}}, {}));
  EXPECT_TRUE(r.getDifferentIndividuals(none, "a").empty());

  auto split = r.classify(OntologyState({ClassAssertion{"a", Named("C")}, ClassAssertion{"b", Not(Named("C"))}}, {}));
  EXPECT_EQ(r.getDifferentIndividuals(split, "a"), NameSet{"b"});
  EXPECT_EQ(r.getDifferentIndividuals(split, "b"), NameSet{"a"});
}

TEST(AddAxioms, ShortenedHierarchyDropsEntailment) {
  Reasoner r;
  auto parsed = parseOntology(kGiraffe);
  std::vector<Axiom> kept;
  for (const auto& ax : parsed.axioms) {
    if (ax != Axiom{SubClassOf{Named("Herbivore"), Named("Mammal")}}) kept.push_back(ax);
  }
  const OntologyState base(kept, parsed.signature);
  auto s = r.classify(base.addAxioms({SubClassOf{Named("Herbivore"), Named("Animal")}}));
  EXPECT_FALSE(s.index()->subsumers.at("Giraffe").count("Mammal"));
  EXPECT_TRUE(s.index()->subsumers.at("Giraffe").count("Animal"));
  EXPECT_FALSE(base.classified());
}

TEST(AddAxioms, EmptyAndIndividualGrowth) {
  Reasoner r;
  auto s = r.classify(load(kGiraffe));
  auto same = s.addAxioms({});
  EXPECT_FALSE(same.classified());
  EXPECT_EQ(same.axioms(), s.axioms());
  auto grown = s.addAxioms({ClassAssertion{"newInd", Named("Giraffe")}});
  EXPECT_EQ(grown.signature().individuals, NameSet{"newInd"});
  EXPECT_TRUE(s.signature().individuals.empty());
}

TEST(Tableau, CardinalityInteractions) {
  Reasoner r;
  auto s = r.classify(OntologyState{});
  EXPECT_FALSE(r.isSatisfiable(s, And({MinCard(2, "R", Named("C")), MaxCard(1, "R", Top())})));
  EXPECT_TRUE(r.isSatisfiable(s, And({MinCard(2, "R", Named("C")), MaxCard(2, "R", Top())})));
  EXPECT_FALSE(r.isSatisfiable(
      s, And({MinCard(2, "R", Named("C")), MinCard(2, "R", Not(Named("C"))), MaxCard(3, "R", Top())})));
  EXPECT_TRUE(r.isSatisfiable(s, And({Some("R", Named("C")), Some("R", Named("D")), MaxCard(1, "R", Top())})));
  EXPECT_FALSE(r.isSatisfiable(
      s, And({Some("R", Named("C")), Some("R", Not(Named("C"))), MaxCard(1, "R", Top())})));
  EXPECT_FALSE(r.isSatisfiable(s, And({ExactCard(1, "R", Top()), Some("R", Named("C")), All("R", Not(Named("C")))})));
}

TEST(Tableau, CyclicTboxTerminates) {
  Reasoner r;
  auto s = r.classify(OntologyState(
      {SubClassOf{Named("A"), Some("R", Named("A"))}, SubClassOf{Top(), Some("R", Named("B"))}}, {}));
  EXPECT_TRUE(r.isSatisfiable(s, Named("A")));
  EXPECT_FALSE(r.isSatisfiable(s, And({Named("A"), All("R", Not(Named("A")))})));
}

TEST(Tableau, BudgetExhaustion) {
  Reasoner r(ReasonerOptions{5});
  // A chain C0 -> C1 -> ... -> C9 of pairwise disjoint classes needs ten distinct nodes.
  std::vector<Axiom> axioms{ClassAssertion{"a", Named("C0")}};
  std::vector<ClassExpression> chain;
  for (int i = 0; i < 10; ++i) chain.push_back(Named("C" + std::to_string(i)));
  for (int i = 0; i + 1 < 10; ++i) axioms.push_back(SubClassOf{chain[i], Some("R", chain[i + 1])});
  axioms.push_back(DisjointClasses{chain});
  auto s = OntologyState(std::move(axioms), {});
  EXPECT_THROW(r.classify(s), ResourceExhausted);
}

// The tableau may never call something unsatisfiable for which a small model exists.
TEST(BruteForceAgreement, RandomOntologies) {
  ontotdd::support::Bounds bounds;
  bounds.maxClasses = 3;
  bounds.maxIndividuals = 2;
  bounds.maxAxioms = 6;
  Generator g(2024, bounds);
  Reasoner r;
  int refuted = 0, checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto s = g.ontology();
    BruteForce bf(s.axioms(), s.signature());
    const bool tableau = r.isConsistent(s);
    const bool small = bf.consistent(2);
    if (small) EXPECT_TRUE(tableau) << "case " << i;
    if (!tableau) continue;
    auto c = r.classify(s);
    for (int q = 0; q < 4; ++q) {
      auto e = g.expression(s.signature(), 2);
      ++checked;
      if (!r.isSatisfiable(c, e)) {
        if (bf.satisfiable(e, 2)) {
          ++refuted;
          ADD_FAILURE() << "case " << i << ": unsat but model found for " << toDlString(e);
        }
      }
    }
  }
  EXPECT_EQ(refuted, 0);
  EXPECT_GT(checked, 100);
}
