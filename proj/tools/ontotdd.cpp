// ontotdd: check | eval | classify | serve | effcost

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ontotdd/efficiency.hpp"
#include "ontotdd/parser.hpp"
#include "ontotdd/service.hpp"
#include "ontotdd/suite.hpp"

using namespace ontotdd;

namespace {

constexpr int kInputError = 2;

std::string joined(const NameSet& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

int check(const std::string& ontology, const std::string& suite, const std::string& format, std::size_t budget) {
  SuiteOptions options;
  options.reasoner.nodeBudget = budget;
  const auto report = runSuiteFiles(ontology, suite, options);
  std::cout << (format == "json" ? report.json() : report.text());
  if (format != "json") {
    std::size_t failed = 0;
    for (const auto& c : report.cases) failed += c.pass == false;
    std::cerr << report.cases.size() << " cases, " << failed << " expectation failures, classified once in "
              << report.classificationMillis << " ms\n";
  }
  return report.exitCode();
}

int eval(const std::string& ontology, const std::string& axiom, std::size_t budget) {
  SuiteOptions options;
  options.reasoner.nodeBudget = budget;
  const TestResult r = evalOne(ontology, axiom, options);
  std::cout << r.label();
  if (!r.isVerdict() && !r.failure().missing.empty()) std::cout << ": " << joined(r.failure().missing);
  std::cout << '\n';
  return r.isVerdict() ? 0 : 1;
}

int classify(const std::string& path, std::size_t budget) {
  ReasonerOptions options;
  options.nodeBudget = budget;
  Reasoner reasoner(options);
  const auto state = reasoner.classify(loadOntology(path));
  const auto& index = *state.index();
  std::cout << "consistent: " << (index.consistent ? "yes" : "no") << '\n';
  if (!index.consistent) return 0;
  std::cout << "coherent: " << (index.coherent() ? "yes" : "no") << '\n';
  std::cout << "unsatisfiable: " << joined(index.unsatisfiableNamed) << '\n';
  std::cout << "hierarchy:\n";
  for (const auto& [name, supers] : index.subsumers) {
    NameSet strict = supers;
    strict.erase(name);
    std::cout << "  " << name << " <= " << joined(strict) << '\n';
  }
  for (const auto& [name, classes] : index.instancesOf) {
    if (!classes.empty()) std::cout << "  " << name << " : " << joined(classes) << '\n';
  }
  return 0;
}

int serve(const std::string& host, int port, std::size_t budget) {
  ServiceOptions options;
  options.reasoner.nodeBudget = budget;
  Service service(options);
  httplib::Server server;
  service.mount(server);
  std::cerr << "listening on " << host << ':' << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ':' << port << '\n';
    return kInputError;
  }
  return 0;
}

int effcost(const std::string& paramsPath, const std::string& scenario, bool reasoner, bool perType,
            const std::string& outPath) {
  std::vector<efficiency::Params> table = efficiency::builtinParams();
  if (!paramsPath.empty()) {
    std::ifstream in(paramsPath);
    if (!in) throw InputError(paramsPath, 0, 0, "cannot read file");
    std::stringstream buf;
    buf << in.rdbuf();
    table = efficiency::parseParamsCsv(buf.str());
  }
  const auto scenarios =
      scenario.empty() ? efficiency::allScenarios() : std::vector{efficiency::scenarioNamed(scenario)};
  const std::string csv = efficiency::sweepCsv(table, scenarios, perType, reasoner);
  if (outPath == "-") {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(outPath);
  if (!(out << csv)) throw InputError(outPath, 0, 0, "cannot write file");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test-first evaluation of axioms against OWL ontologies"};
  app.require_subcommand(1);

  std::string ontology, suite, axiom, format = "text";
  std::size_t budget = ReasonerOptions{}.nodeBudget;

  auto* checkCmd = app.add_subcommand("check", "Run a suite of test axioms against an ontology");
  checkCmd->add_option("ontology", ontology, "Ontology in functional syntax")->required();
  checkCmd->add_option("suite", suite, "Suite file")->required();
  checkCmd->add_option("--report", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  checkCmd->add_option("--budget", budget, "Tableau node budget per decision");

  auto* evalCmd = app.add_subcommand("eval", "Evaluate one test axiom");
  evalCmd->add_option("ontology", ontology, "Ontology in functional syntax")->required();
  evalCmd->add_option("axiom", axiom, "Test axiom")->required();
  evalCmd->add_option("--budget", budget, "Tableau node budget per decision");

  auto* classifyCmd = app.add_subcommand("classify", "Print consistency, unsatisfiable classes and hierarchy");
  classifyCmd->add_option("ontology", ontology, "Ontology in functional syntax")->required();
  classifyCmd->add_option("--budget", budget, "Tableau node budget per decision");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serveCmd = app.add_subcommand("serve", "Serve the session API over HTTP");
  serveCmd->add_option("--host", host, "Bind address");
  serveCmd->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serveCmd->add_option("--budget", budget, "Tableau node budget per decision");

  std::string params, scenario, out;
  bool reasoner = false, perType = false;
  auto* effCmd = app.add_subcommand("effcost", "Editing cost model as CSV");
  effCmd->add_option("--params", params, "CSV with columns name,tclassify,aC,bC,aOP,bOP,c");
  effCmd->add_option("--scenario", scenario, "Scenario; all when omitted")
      ->check(CLI::IsMember({"default", "no-ac", "slow-click", "ac8"}));
  effCmd->add_flag("--reasoner", reasoner, "Include reasoner time in totals");
  effCmd->add_flag("--per-type", perType, "Emit one row per axiom type");
  effCmd->add_option("--out", out, "Output CSV path, '-' for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*checkCmd) return check(ontology, suite, format, budget);
    if (*evalCmd) return eval(ontology, axiom, budget);
    if (*classifyCmd) return classify(ontology, budget);
    if (*serveCmd) return serve(host, port, budget);
    if (*effCmd) return effcost(params, scenario, reasoner, perType, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
