#pragma once

// Batch test runs: one ontology, classified once, against a file of test axioms.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontotdd/core.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd {

/// Unreadable or unparseable input. `line`/`column` are 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, int line, int column, const std::string& message);
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string source_;
  int line_;
  int column_;
};

struct TestCase {
  int sourceLine = 0;
  std::string text;  // axiom text as written
  Axiom axiom;
  /// A TestResult label; "missing" is stored as "missing-entities".
  std::optional<std::string> expected;
};

/// Parses a suite document. Each non-blank line is one axiom, optionally
/// followed by "; expect <tag>". '#' starts a comment.
/// Throws InputError with the suite line and column.
std::vector<TestCase> parseSuite(std::string_view text, const std::string& source = "<suite>");

struct CaseOutcome {
  TestCase testCase;
  std::optional<TestResult> result;  // empty when the case errored
  std::string error;
  /// Empty when the case has no expectation.
  std::optional<bool> pass;

  /// Result label, or "error".
  std::string label() const;
};

struct SuiteReport {
  std::string ontologyPath;
  double classificationMillis = 0;
  std::size_t classifyCount = 0;
  std::vector<CaseOutcome> cases;
  /// Per label, "error" included. Sums to cases.size().
  std::map<std::string, std::size_t> counts;

  /// 0 when every expectation holds and no case failed a precondition or
  /// errored, 1 otherwise.
  int exitCode() const;
  /// One line per case: "<line>: <label> [<expected>|-] <axiom>".
  std::string text() const;
  std::string json(bool withTiming = true) const;
};

struct SuiteOptions {
  ReasonerOptions reasoner;
  /// Worker threads for case evaluation; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Classifies `ontology` once with a private reasoner and evaluates each case.
SuiteReport runSuite(const OntologyState& ontology, const std::vector<TestCase>& cases,
                     const SuiteOptions& options = {}, std::string ontologyPath = "");

/// Reads both files. Throws InputError on unreadable or malformed input.
SuiteReport runSuiteFiles(const std::string& ontologyPath, const std::string& suitePath,
                          const SuiteOptions& options = {});

/// Single-axiom path over the same pipeline.
TestResult evalOne(const std::string& ontologyPath, const std::string& axiomText, const SuiteOptions& options = {});

/// Reads and parses an ontology file. Throws InputError.
OntologyState loadOntology(const std::string& path);

}  // namespace ontotdd
