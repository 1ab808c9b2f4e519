#include "ontotdd/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "encoding.hpp"
#include "ontotdd/parser.hpp"
#include "ontotdd/tdd.hpp"

namespace ontotdd {

namespace {

std::string where(const std::string& source, int line, int column) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  if (column > 0) out += ":" + std::to_string(column);
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, 0, "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::string> expectationTag(std::string_view word) {
  if (word == "missing" || word == "missing-entities") return "missing-entities";
  if (parseVerdict(word)) return std::string(word);
  if (word == "ontology-inconsistent" || word == "ontology-incoherent") return std::string(word);
  return std::nullopt;
}

}  // namespace

InputError::InputError(std::string source, int line, int column, const std::string& message)
    : std::runtime_error(where(source, line, column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

std::vector<TestCase> parseSuite(std::string_view text, const std::string& source) {
  std::vector<TestCase> cases;
  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    std::string_view axiomPart = line;
    std::optional<std::string> expected;
    if (const auto semi = line.find(';'); semi != std::string_view::npos) {
      axiomPart = line.substr(0, semi);
      const auto rest = trim(line.substr(semi + 1));
      const int column = static_cast<int>(semi) + 2;
      if (rest.substr(0, 6) != "expect" || (rest.size() > 6 && rest[6] != ' ' && rest[6] != '\t')) {
        throw InputError(source, lineNo, column, "expected 'expect <status>' after ';'");
      }
      const auto tag = trim(rest.substr(6));
      expected = expectationTag(tag);
      if (!expected) throw InputError(source, lineNo, column, "unknown expectation '" + std::string(tag) + "'");
    }
    if (trim(axiomPart).empty()) throw InputError(source, lineNo, 1, "missing axiom before ';'");

    TestCase tc;
    tc.sourceLine = lineNo;
    tc.text = std::string(trim(axiomPart));
    tc.expected = std::move(expected);
    try {
      tc.axiom = parseTestAxiom(axiomPart);
      validate(tc.axiom);
    } catch (const ParseError& e) {
      throw InputError(source, lineNo, e.column(), e.message());
    } catch (const InvalidAxiom& e) {
      throw InputError(source, lineNo, 0, e.what());
    }
    if (std::holds_alternative<ObjectPropertyAssertion>(tc.axiom)) {
      throw InputError(source, lineNo, 0, "property assertions cannot be tested");
    }
    cases.push_back(std::move(tc));
  }
  return cases;
}

std::string CaseOutcome::label() const { return result ? result->label() : "error"; }

int SuiteReport::exitCode() const {
  for (const auto& c : cases) {
    if (!c.result || !c.result->isVerdict() || c.pass == false) return 1;
  }
  return 0;
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  for (const auto& c : cases) {
    out << c.testCase.sourceLine << ": " << c.label() << " [" << c.testCase.expected.value_or("-") << "] "
        << c.testCase.text << '\n';
  }
  return out.str();
}

std::string SuiteReport::json(bool withTiming) const {
  nlohmann::ordered_json doc;
  doc["ontologyPath"] = ontologyPath;
  if (withTiming) doc["classificationMillis"] = classificationMillis;
  doc["classifyCount"] = classifyCount;
  doc["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json item;
    item["sourceLine"] = c.testCase.sourceLine;
    item["axiom"] = c.testCase.text;
    item["expected"] = c.testCase.expected ? nlohmann::ordered_json(*c.testCase.expected) : nullptr;
    if (c.result) {
      item["result"] = toJson(*c.result);
    } else {
      item["result"] = nullptr;
      item["error"] = c.error;
    }
    item["pass"] = c.pass ? nlohmann::ordered_json(*c.pass) : nullptr;
    doc["cases"].push_back(std::move(item));
  }
  doc["counts"] = counts;
  doc["exitCode"] = exitCode();
  return doc.dump(2) + "\n";
}

SuiteReport runSuite(const OntologyState& ontology, const std::vector<TestCase>& cases, const SuiteOptions& options,
                     std::string ontologyPath) {
  SuiteReport report;
  report.ontologyPath = std::move(ontologyPath);

  Reasoner reasoner(options.reasoner);
  const auto t0 = std::chrono::steady_clock::now();
  const OntologyState state = reasoner.classify(ontology);
  report.classificationMillis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto& index = *state.index();

  report.cases.resize(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) report.cases[i].testCase = cases[i];

  // Ontology-level failures are checked once for the whole suite.
  std::optional<TestResult> shared;
  if (!index.consistent) shared = TestResult::precondition(PreconditionKind::OntologyInconsistent);
  else if (!index.coherent()) shared = TestResult::precondition(PreconditionKind::OntologyIncoherent);

  if (shared) {
    for (auto& c : report.cases) c.result = shared;
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < report.cases.size(); i = next++) {
        auto& c = report.cases[i];
        try {
          c.result = evaluate(reasoner, state, c.testCase.axiom);
        } catch (const std::exception& e) {
          c.error = e.what();
        }
      }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  for (auto& c : report.cases) {
    if (c.testCase.expected) c.pass = c.result && c.result->label() == *c.testCase.expected;
    ++report.counts[c.label()];
  }
  report.classifyCount = reasoner.classifyCount();
  return report;
}

OntologyState loadOntology(const std::string& path) {
  const std::string text = readFile(path);
  try {
    auto parsed = parseOntology(text);
    for (const auto& a : parsed.axioms) validate(a);
    return OntologyState(std::move(parsed.axioms), std::move(parsed.signature));
  } catch (const ParseError& e) {
    throw InputError(path, e.line(), e.column(), e.message());
  } catch (const InvalidAxiom& e) {
    throw InputError(path, 0, 0, e.what());
  }
}

SuiteReport runSuiteFiles(const std::string& ontologyPath, const std::string& suitePath,
                          const SuiteOptions& options) {
  const OntologyState ontology = loadOntology(ontologyPath);
  const auto cases = parseSuite(readFile(suitePath), suitePath);
  return runSuite(ontology, cases, options, ontologyPath);
}

TestResult evalOne(const std::string& ontologyPath, const std::string& axiomText, const SuiteOptions& options) {
  const OntologyState ontology = loadOntology(ontologyPath);
  const auto cases = parseSuite(axiomText, "<axiom>");
  if (cases.size() != 1) throw InputError("<axiom>", 0, 0, "expected exactly one axiom");
  auto report = runSuite(ontology, cases, options, ontologyPath);
  auto& only = report.cases.front();
  if (!only.result) throw std::runtime_error(only.error);
  return *only.result;
}

}  // namespace ontotdd
