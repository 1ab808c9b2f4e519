#include "ontotdd/efficiency.hpp"

#include <sstream>
#include <stdexcept>

namespace ontotdd::efficiency {

namespace {

/// Typed input, priced token by token.
class Typing {
 public:
  explicit Typing(const Scenario& s) : ac_(s.autocompleteKeystrokes) {}

  /// A vocabulary name of average length `length`.
  Typing& name(double length) { return word(length); }
  /// A keyword such as "SubClassOf:" or "some".
  Typing& keyword(double length) { return length > 1 ? word(length) : raw(length); }
  /// Characters that are always typed in full.
  Typing& raw(double n) {
    keystrokes_ += n;
    return *this;
  }
  double keystrokes() const { return keystrokes_; }

 private:
  Typing& word(double length) { return raw(ac_ ? *ac_ : length); }

  std::optional<int> ac_;
  double keystrokes_ = 0;
};

AxiomTypeCost priced(int type, double clicks, double keystrokes, const Scenario& s) {
  return {type, clicks, keystrokes, clicks * s.secondsPerClick + keystrokes * s.secondsPerKeystroke};
}

void checkType(int type) {
  if (type < 1 || type > kTypes) throw std::invalid_argument("axiom type out of range: " + std::to_string(type));
}

}  // namespace

Scenario scenarioNamed(const std::string& name) {
  Scenario s;
  s.name = name;
  if (name == "default") return s;
  if (name == "no-ac") {
    s.autocompleteKeystrokes.reset();
    return s;
  }
  if (name == "slow-click") {
    s.secondsPerClick = 2.0;
    s.secondsPerKeystroke = 0.25;
    s.autocompleteKeystrokes.reset();
    return s;
  }
  if (name == "ac8") {
    s.autocompleteKeystrokes = 8;
    return s;
  }
  throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<Scenario> allScenarios() {
  return {scenarioNamed("default"), scenarioNamed("no-ac"), scenarioNamed("slow-click"), scenarioNamed("ac8")};
}

const std::vector<Params>& builtinParams() {
  static const std::vector<Params> table{
      {"AWO", 0.81, 7.06, 2, 9.4, 1.2, 0},       {"Pizza", 0.1, 13.07, 4.86, 11.63, 1.5, 6.4},
      {"DMOP", 1196.53, 21.09, 8.39, 14.14, 2.2, 19.03}, {"M1", 100, 15, 6, 12, 2, 10},
      {"M2", 500, 15, 12, 12, 3, 10},            {"M3", 25, 23, 6, 15, 1.5, 19},
  };
  return table;
}

std::string typeLabel(int type) {
  static const char* labels[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
  checkType(type);
  return labels[type - 1];
}

AxiomTypeCost protegeCost(int type, const Params& p, const Scenario& s) {
  checkType(type);
  // One click opens the relevant tab in every case.
  switch (type) {
    case 1: return priced(type, 1 + 4 + p.bC, 0, s);
    case 2: return priced(type, 1 + 5 + p.bOP + p.bC, 0, s);
    case 3:
    case 4:
    case 5: return priced(type, 1 + 4 + p.bC, 0, s);
    case 6: return priced(type, 1 + 3 + p.bC, 0, s);
    case 7: return priced(type, 1 + 7 + p.bOP + p.bC, 0, s);
    case 8: return priced(type, 1 + 3, kGciKeystrokes, s);
    default: break;
  }
  // Types ix and x go through the class expression editor. The editor's two
  // clicks and the keywords are charged as typed characters, names follow
  // the autocomplete setting. The editor closes the open parenthesis.
  Typing t(s);
  t.raw(2).raw(4).name(p.aOP).name(p.aC).raw(3).raw(4).name(p.aOP);
  if (type == 9) {
    t.name(p.aC);
  } else {
    t.raw(1).name(p.aC).raw(2).name(p.aC);
  }
  return priced(type, 1, t.keystrokes(), s);
}

AxiomTypeCost tddCost(int type, const Params& p, const Scenario& s) {
  checkType(type);
  Typing t(s);
  switch (type) {
    case 1: t.name(p.aC).keyword(11).name(p.aC); break;
    case 2: t.name(p.aC).keyword(11).keyword(4).name(p.aOP).name(p.aC); break;
    case 3: t.name(p.aC).keyword(11).keyword(3).name(p.aC); break;
    case 4: t.keyword(4).name(p.aOP).keyword(11).name(p.aC); break;
    case 5: t.keyword(4).keyword(9).name(p.aOP).keyword(11).name(p.aC); break;
    case 6: t.name(p.c).keyword(5).name(p.aC); break;
    case 7: t.name(p.aC).keyword(11).name(p.aOP).keyword(4).name(p.aC); break;
    case 8: t.raw(kGciKeystrokes); break;
    case 9:
      t.name(p.aC).keyword(11).keyword(4).name(p.aOP).name(p.aC).keyword(3).keyword(4).name(p.aOP).name(p.aC);
      break;
    default:
      t.name(p.aC).keyword(11).keyword(4).name(p.aOP).name(p.aC).keyword(3).keyword(4).name(p.aOP);
      t.keyword(1).name(p.aC).keyword(2).name(p.aC).keyword(1);
      break;
  }
  // Every axiom ends with one click on Add.
  return priced(type, 1, t.keystrokes(), s);
}

Totals totals(const Params& p, const Scenario& s, bool includeReasoner) {
  Totals out;
  for (int type = 1; type <= kTypes; ++type) {
    if (type == 8) continue;
    out.protege += protegeCost(type, p, s).seconds;
    out.tdd += tddCost(type, p, s).seconds;
  }
  if (includeReasoner) {
    out.protege += s.protegeReasonerMultiplier * p.classificationSeconds;
    out.tdd += s.tddReasonerInvocations * p.classificationSeconds;
  }
  return out;
}

std::string sweepCsv(const std::vector<Params>& table, const std::vector<Scenario>& scenarios, bool perType,
                     bool includeReasoner) {
  std::ostringstream out;
  out.precision(10);
  out << "ontology,scenario,reasoner,type,protege_seconds,tdd_seconds\n";
  for (const auto& p : table) {
    for (const auto& s : scenarios) {
      if (perType) {
        for (int type = 1; type <= kTypes; ++type) {
          out << p.name << ',' << s.name << ",none," << typeLabel(type) << ',' << protegeCost(type, p, s).seconds << ','
              << tddCost(type, p, s).seconds << '\n';
        }
      }
      const Totals t = totals(p, s, includeReasoner);
      out << p.name << ',' << s.name << ',' << (includeReasoner ? "with" : "without") << ",total," << t.protege
          << ',' << t.tdd << '\n';
    }
  }
  return out.str();
}

std::vector<Params> parseParamsCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Params> out;
  bool header = true;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (header) {
      header = false;
      static const std::vector<std::string> expected{"name", "tclassify", "aC", "bC", "aOP", "bOP", "c"};
      if (cells != expected) throw std::invalid_argument("params header must be name,tclassify,aC,bC,aOP,bOP,c");
      continue;
    }
    if (cells.size() != 7) throw std::invalid_argument("line " + std::to_string(lineNo) + ": expected 7 columns");
    Params p;
    p.name = cells[0];
    double* fields[] = {&p.classificationSeconds, &p.aC, &p.bC, &p.aOP, &p.bOP, &p.c};
    for (int i = 0; i < 6; ++i) {
      std::size_t used = 0;
      try {
        *fields[i] = std::stod(cells[i + 1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cells[i + 1].size() || *fields[i] < 0) {
        throw std::invalid_argument("line " + std::to_string(lineNo) + ": bad number '" + cells[i + 1] + "'");
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ontotdd::efficiency
