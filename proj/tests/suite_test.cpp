#include <gtest/gtest.h>

#include <numeric>

#include "ontotdd/parser.hpp"
#include "ontotdd/suite.hpp"

using namespace ontotdd;

namespace {

const std::string kFixtures = ONTOTDD_FIXTURES;

OntologyState ontology(std::string_view text) {
  auto p = parseOntology(text);
  return OntologyState(p.axioms, p.signature);
}

const char* kGiraffe = R"(
Declaration(Class(Giraffe)) Declaration(Class(Herbivore))
Declaration(Class(Mammal)) Declaration(Class(Animal))
SubClassOf(Giraffe Herbivore)
SubClassOf(Herbivore Mammal)
SubClassOf(Mammal Animal)
)";

const char* kShortened = R"(
Declaration(Class(Giraffe)) Declaration(Class(Herbivore))
Declaration(Class(Mammal)) Declaration(Class(Animal))
SubClassOf(Giraffe Herbivore)
SubClassOf(Herbivore Animal)
SubClassOf(Mammal Animal)
)";

}  // namespace

TEST(SuiteParse, LinesCommentsAndExpectations) {
  const auto cases = parseSuite(
      "# header\n"
      "\n"
      "Giraffe SubClassOf: Mammal ; expect entailed\n"
      "  Mammal SubClassOf: Giraffe   # trailing comment\n"
      "Unicorn SubClassOf: Animal ; expect missing\n");
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_EQ(cases[0].sourceLine, 3);
  EXPECT_EQ(cases[0].expected, "entailed");
  EXPECT_EQ(cases[1].sourceLine, 4);
  EXPECT_EQ(cases[1].text, "Mammal SubClassOf: Giraffe");
  EXPECT_FALSE(cases[1].expected);
  EXPECT_EQ(cases[2].expected, "missing-entities");
}

TEST(SuiteParse, ErrorsCarryLineAndColumn) {
  try {
    parseSuite("A SubClassOf: B\nA SubClassOf: and\n", "s.tdd");
    FAIL() << "no error";
  } catch (const InputError& e) {
    EXPECT_EQ(e.source(), "s.tdd");
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(parseSuite("A SubClassOf: B ; expect green\n"), InputError);
  EXPECT_THROW(parseSuite("A SubClassOf: B ; entailed\n"), InputError);
  EXPECT_THROW(parseSuite("; expect entailed\n"), InputError);
  EXPECT_THROW(parseSuite("a Facts: r b\n"), InputError);
}

TEST(Suite, GiraffeCasePasses) {
  const auto report = runSuite(ontology(kGiraffe), parseSuite("Giraffe SubClassOf: Mammal ; expect entailed\n"));
  ASSERT_EQ(report.cases.size(), 1u);
  EXPECT_EQ(report.cases[0].pass, true);
  EXPECT_EQ(report.exitCode(), 0);
  EXPECT_EQ(report.text(), "1: entailed [entailed] Giraffe SubClassOf: Mammal\n");
}

TEST(Suite, EmptySuite) {
  const auto report = runSuite(ontology(kGiraffe), parseSuite(""));
  EXPECT_TRUE(report.cases.empty());
  EXPECT_EQ(report.exitCode(), 0);
  EXPECT_EQ(report.classifyCount, 1u);
}

TEST(Suite, ShortenedHierarchyFlagsCase) {
  const auto report = runSuite(ontology(kShortened), parseSuite("Giraffe SubClassOf: Mammal ; expect entailed\n"));
  EXPECT_EQ(report.cases[0].label(), "absent");
  EXPECT_EQ(report.cases[0].pass, false);
  EXPECT_EQ(report.exitCode(), 1);
}

TEST(Suite, InformationalCasesNeverFail) {
  const auto report = runSuite(ontology(kGiraffe), parseSuite("Mammal SubClassOf: Giraffe\n"));
  EXPECT_FALSE(report.cases[0].pass);
  EXPECT_EQ(report.exitCode(), 0);
}

TEST(Suite, PreconditionFailureFailsRun) {
  const auto report = runSuite(ontology(kGiraffe), parseSuite("Unicorn SubClassOf: Animal ; expect missing\n"));
  EXPECT_EQ(report.cases[0].pass, true);
  EXPECT_EQ(report.exitCode(), 1);
}

TEST(Suite, OntologyLevelFailuresApplyToEveryCase) {
  const auto incoherent = runSuite(ontology("SubClassOf(A B) SubClassOf(A ObjectComplementOf(B))"),
                                   parseSuite("B SubClassOf: B\nUnknown SubClassOf: B\n"));
  for (const auto& c : incoherent.cases) EXPECT_EQ(c.label(), "ontology-incoherent");
  const auto inconsistent = runSuite(ontology("ClassAssertion(C a) ClassAssertion(ObjectComplementOf(C) a)"),
                                     parseSuite("C SubClassOf: C\n"));
  EXPECT_EQ(inconsistent.cases[0].label(), "ontology-inconsistent");
  EXPECT_EQ(inconsistent.exitCode(), 1);
}

TEST(Suite, ClassifiesOnceForHundredCases) {
  std::string text;
  const char* axioms[] = {"Giraffe SubClassOf: Mammal", "Mammal SubClassOf: Giraffe", "Giraffe DisjointWith: Animal",
                          "Herbivore EquivalentTo: Mammal", "Unicorn SubClassOf: Animal"};
  for (int i = 0; i < 100; ++i) text += std::string(axioms[i % 5]) + "\n";
  const auto report = runSuite(ontology(kGiraffe), parseSuite(text));
  EXPECT_EQ(report.cases.size(), 100u);
  EXPECT_EQ(report.classifyCount, 1u);
  const auto total = std::accumulate(report.counts.begin(), report.counts.end(), std::size_t{0},
                                     [](std::size_t n, const auto& kv) { return n + kv.second; });
  EXPECT_EQ(total, 100u);
}

TEST(Suite, OrderAndReportIndependentOfThreads) {
  std::string text;
  for (int i = 0; i < 40; ++i) {
    text += i % 2 ? "Giraffe SubClassOf: Mammal ; expect entailed\n" : "Animal SubClassOf: Herbivore\n";
  }
  const auto cases = parseSuite(text);
  SuiteOptions one, many;
  one.threads = 1;
  many.threads = 8;
  const auto a = runSuite(ontology(kGiraffe), cases, one, "g.ofn");
  const auto b = runSuite(ontology(kGiraffe), cases, many, "g.ofn");
  EXPECT_EQ(a.json(false), b.json(false));
  EXPECT_EQ(a.text(), b.text());
  for (std::size_t i = 0; i < b.cases.size(); ++i) EXPECT_EQ(b.cases[i].testCase.sourceLine, static_cast<int>(i + 1));
}

TEST(Suite, BudgetErrorMarksCaseErrored) {
  SuiteOptions tight;
  tight.reasoner.nodeBudget = 6;
  const auto report = runSuite(
      ontology("Declaration(Class(A)) Declaration(Class(B)) Declaration(ObjectProperty(r))"),
      parseSuite("A SubClassOf: not (r min 2 (r min 2 (r min 2 B)))\nA SubClassOf: A ; expect entailed\n"), tight);
  EXPECT_EQ(report.cases[0].label(), "error");
  EXPECT_FALSE(report.cases[0].error.empty());
  EXPECT_EQ(report.cases[1].label(), "entailed");
  EXPECT_EQ(report.exitCode(), 1);
  EXPECT_NE(report.json().find("\"error\""), std::string::npos);
}

TEST(Suite, FilesAndEvalOne) {
  const auto report = runSuiteFiles(kFixtures + "/giraffe.ofn", kFixtures + "/giraffe.tdd");
  EXPECT_EQ(report.exitCode(), 0);
  EXPECT_EQ(evalOne(kFixtures + "/giraffe.ofn", "Giraffe SubClassOf: Mammal").label(), "entailed");
  const auto missing = evalOne(kFixtures + "/giraffe.ofn", "Giraffe SubClassOf: Unicorn");
  EXPECT_EQ(missing.failure().missing, NameSet{"Unicorn"});
  EXPECT_EQ(evalOne(kFixtures + "/zoo.ofn", "gerald SameAs: leaf").label(), "inconsistent");
  EXPECT_THROW(runSuiteFiles(kFixtures + "/nope.ofn", kFixtures + "/giraffe.tdd"), InputError);
  EXPECT_THROW(evalOne(kFixtures + "/giraffe.ofn", "Giraffe SubClassOf:"), InputError);
}

TEST(Suite, FreshIndividualsAreNotSame) {
  const auto r = runSuite(ontology("Declaration(NamedIndividual(a)) Declaration(NamedIndividual(b))"),
                          parseSuite("a SameAs: b\n"));
  EXPECT_EQ(r.cases[0].label(), "absent");
}
