#pragma once

// Click and keystroke cost model comparing axiom entry in Protégé 5.2 with
// the test-first plugin, per axiom type and per ontology.

#include <optional>
#include <string>
#include <vector>

namespace ontotdd::efficiency {

/// Per-ontology averages.
struct Params {
  std::string name;
  double classificationSeconds = 0;
  double aC = 0;   // class name length
  double bC = 0;   // class hierarchy depth, in clicks
  double aOP = 0;  // object property name length
  double bOP = 0;  // property hierarchy depth, in clicks
  double c = 0;    // individual name length
};

struct Scenario {
  std::string name = "default";
  double secondsPerClick = 1.0;
  double secondsPerKeystroke = 0.3;
  std::optional<int> autocompleteKeystrokes = 4;  // empty: no autocomplete
  int protegeReasonerMultiplier = 9;
  int tddReasonerInvocations = 2;
};

/// default, no-ac, slow-click, ac8. Throws std::invalid_argument otherwise.
Scenario scenarioNamed(const std::string& name);
std::vector<Scenario> allScenarios();

/// The six rows of the published parameter table: AWO, Pizza, DMOP, M1, M2, M3.
const std::vector<Params>& builtinParams();

/// Axiom types i..x as 1..10.
constexpr int kTypes = 10;
std::string typeLabel(int type);

/// Keystrokes charged for the general class axiom of type viii. The published
/// totals leave that type out, so it is priced but not summed.
constexpr double kGciKeystrokes = 0;

struct AxiomTypeCost {
  int type = 0;
  double clicks = 0;
  double keystrokes = 0;
  double seconds = 0;
};

AxiomTypeCost protegeCost(int type, const Params& p, const Scenario& s);
AxiomTypeCost tddCost(int type, const Params& p, const Scenario& s);

struct Totals {
  double protege = 0;
  double tdd = 0;
};

/// Sum over types i..vii, ix and x, plus reasoner time when asked for.
Totals totals(const Params& p, const Scenario& s, bool includeReasoner);

/// Rows: ontology, scenario, reasoner, type, protege_seconds, tdd_seconds.
/// Per-type rows have reasoner "none". Each (ontology, scenario) ends with
/// one row of type "total", reasoner "with" or "without".
std::string sweepCsv(const std::vector<Params>& table, const std::vector<Scenario>& scenarios, bool perType,
                     bool includeReasoner);

/// Columns name,tclassify,aC,bC,aOP,bOP,c with a header line.
/// Throws std::invalid_argument on malformed input.
std::vector<Params> parseParamsCsv(const std::string& text);

}  // namespace ontotdd::efficiency
