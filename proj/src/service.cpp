#include "ontotdd/service.hpp"

#include <httplib.h>

#include <atomic>
#include <optional>
#include <random>
#include <shared_mutex>
#include <vector>

#include "encoding.hpp"
#include "ontotdd/parser.hpp"
#include "ontotdd/tdd.hpp"

namespace ontotdd {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Service::Session {
  struct Pending {
    std::string text;
    std::optional<Axiom> axiom;
    json parseError;  // null when the text parsed
    std::optional<TestResult> result;
  };

  explicit Session(const ReasonerOptions& options) : reasoner(options) {}

  void touch() { lastUsed = Clock::now().time_since_epoch().count(); }

  Reasoner reasoner;
  OntologyState state;
  std::vector<Pending> pending;
  // Exclusive for add and commit, shared for evaluate.
  std::shared_mutex lock;
  // Guards result slots written by concurrent evaluations.
  std::mutex results;
  std::atomic<Clock::rep> lastUsed{0};
};

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, const std::string& message) { reply(res, status, {{"error", message}}); }

std::string newId() {
  static std::mutex m;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard g(m);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

std::optional<json> parseBody(const httplib::Request& req, httplib::Response& res) {
  if (req.body.empty()) return json::object();
  try {
    auto body = json::parse(req.body);
    if (!body.is_object()) {
      fail(res, 400, "body must be a JSON object");
      return std::nullopt;
    }
    return body;
  } catch (const json::parse_error& e) {
    fail(res, 400, std::string("malformed JSON: ") + e.what());
    return std::nullopt;
  }
}

/// Positions from {"positions": [...]}; every entry when `allByDefault` and
/// the field is absent, or when {"all": true}. Replies 400 and returns
/// nullopt on bad input.
std::optional<std::vector<std::size_t>> selection(const json& body, std::size_t size, bool allByDefault,
                                                  httplib::Response& res) {
  std::vector<std::size_t> out;
  const bool all = body.value("all", false);
  if (all || (allByDefault && !body.contains("positions"))) {
    for (std::size_t i = 0; i < size; ++i) out.push_back(i);
    return out;
  }
  if (!body.contains("positions") || !body["positions"].is_array()) {
    fail(res, 400, "expected a 'positions' array");
    return std::nullopt;
  }
  for (const auto& p : body["positions"]) {
    if (!p.is_number_unsigned() || p.get<std::size_t>() >= size) {
      fail(res, 400, "invalid position " + p.dump());
      return std::nullopt;
    }
    out.push_back(p.get<std::size_t>());
  }
  return out;
}

json signatureJson(const Signature& sig) {
  return {{"classes", sig.classes}, {"roles", sig.roles}, {"individuals", sig.individuals}};
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)) {}
Service::~Service() = default;

std::size_t Service::sessionCount() const {
  std::lock_guard g(mutex_);
  return sessions_.size();
}

std::size_t Service::evictIdle() {
  const auto cutoff = (Clock::now() - options_.idleTimeout).time_since_epoch().count();
  std::lock_guard g(mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) { return entry.second->lastUsed.load() < cutoff; });
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) {
  evictIdle();
  std::lock_guard g(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->touch();
  return it->second;
}

void Service::mount(httplib::Server& server) {
  auto withSession = [this](auto handler) {
    return [this, handler](const httplib::Request& req, httplib::Response& res) {
      auto session = find(req.matches[1]);
      if (!session) return fail(res, 404, "unknown session");
      handler(*session, req, res);
    };
  };

  server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    auto session = std::make_shared<Session>(options_.reasoner);
    try {
      auto parsed = parseOntology(req.body);
      session->state = session->reasoner.classify(OntologyState(std::move(parsed.axioms), std::move(parsed.signature)));
    } catch (const ParseError& e) {
      return reply(res, 400, {{"error", e.message()}, {"line", e.line()}, {"column", e.column()}});
    } catch (const InvalidAxiom& e) {
      return fail(res, 400, e.what());
    } catch (const ResourceExhausted& e) {
      return fail(res, 422, e.what());
    }
    session->touch();
    const std::string id = newId();
    json body = statusJson(*session->state.index());
    body["id"] = id;
    evictIdle();
    std::lock_guard g(mutex_);
    sessions_.emplace(id, std::move(session));
    reply(res, 201, body);
  });

  server.Delete(R"(/sessions/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
    std::lock_guard g(mutex_);
    if (sessions_.erase(req.matches[1]) == 0) return fail(res, 404, "unknown session");
    res.status = 204;
  });

  server.Get(R"(/sessions/([0-9a-f]+)/signature)",
             withSession([](Session& s, const httplib::Request&, httplib::Response& res) {
               std::shared_lock g(s.lock);
               reply(res, 200, signatureJson(s.state.signature()));
             }));

  server.Post(R"(/sessions/([0-9a-f]+)/pending)",
              withSession([](Session& s, const httplib::Request& req, httplib::Response& res) {
                auto body = parseBody(req, res);
                if (!body) return;
                if (!body->contains("text") || !(*body)["text"].is_string()) return fail(res, 400, "expected 'text'");
                Session::Pending entry;
                entry.text = (*body)["text"].get<std::string>();
                try {
                  entry.axiom = parseTestAxiom(entry.text);
                  validate(*entry.axiom);
                } catch (const ParseError& e) {
                  entry.axiom.reset();
                  entry.parseError = {{"message", e.message()}, {"line", e.line()}, {"column", e.column()}};
                } catch (const InvalidAxiom& e) {
                  entry.axiom.reset();
                  entry.parseError = {{"message", e.what()}, {"line", 0}, {"column", 0}};
                }
                std::unique_lock g(s.lock);
                json out = {{"position", s.pending.size()}};
                if (!entry.parseError.is_null()) out["parseError"] = entry.parseError;
                s.pending.push_back(std::move(entry));
                reply(res, 201, out);
              }));

  server.Post(R"(/sessions/([0-9a-f]+)/evaluate)",
              withSession([](Session& s, const httplib::Request& req, httplib::Response& res) {
                auto body = parseBody(req, res);
                if (!body) return;
                std::shared_lock g(s.lock);
                auto positions = selection(*body, s.pending.size(), true, res);
                if (!positions) return;
                json out = json::array();
                for (std::size_t p : *positions) {
                  auto& entry = s.pending[p];
                  json item = {{"position", p}, {"result", nullptr}};
                  if (!entry.axiom) {
                    item["parseError"] = entry.parseError;
                  } else {
                    try {
                      const TestResult r = evaluate(s.reasoner, s.state, *entry.axiom);
                      item["result"] = toJson(r);
                      std::lock_guard rg(s.results);
                      entry.result = r;
                    } catch (const std::exception& e) {
                      item["error"] = e.what();
                    }
                  }
                  out.push_back(std::move(item));
                }
                reply(res, 200, out);
              }));

  server.Post(R"(/sessions/([0-9a-f]+)/commit)",
              withSession([](Session& s, const httplib::Request& req, httplib::Response& res) {
                auto body = parseBody(req, res);
                if (!body) return;
                std::unique_lock g(s.lock);
                auto positions = selection(*body, s.pending.size(), false, res);
                if (!positions) return;
                std::sort(positions->begin(), positions->end());
                positions->erase(std::unique(positions->begin(), positions->end()), positions->end());
                if (positions->empty()) return reply(res, 200, statusJson(*s.state.index()));

                std::vector<Axiom> batch;
                for (std::size_t p : *positions) {
                  const auto& entry = s.pending[p];
                  if (!entry.axiom) {
                    return reply(res, 409, {{"error", "entry has a parse error"}, {"position", p}});
                  }
                  const auto missing = s.state.signature().missingFrom(signatureOf(*entry.axiom));
                  if (!missing.empty()) {
                    return reply(res, 409, {{"error", "entry uses undeclared names"}, {"position", p}, {"missing", missing}});
                  }
                  batch.push_back(*entry.axiom);
                }
                try {
                  s.state = s.reasoner.classify(s.state.addAxioms(batch));
                } catch (const ResourceExhausted& e) {
                  return fail(res, 422, e.what());
                }
                std::vector<Session::Pending> kept;
                for (std::size_t i = 0, k = 0; i < s.pending.size(); ++i) {
                  if (k < positions->size() && (*positions)[k] == i) {
                    ++k;
                    continue;
                  }
                  kept.push_back(std::move(s.pending[i]));
                  kept.back().result.reset();
                }
                s.pending = std::move(kept);
                reply(res, 200, statusJson(*s.state.index()));
              }));

  server.Get(R"(/sessions/([0-9a-f]+)/export)",
             withSession([](Session& s, const httplib::Request&, httplib::Response& res) {
               std::shared_lock g(s.lock);
               res.set_content(printOntology(s.state.axioms(), s.state.signature()), "text/plain");
             }));

  server.Get(R"(/sessions/([0-9a-f]+)/diag)",
             withSession([](Session& s, const httplib::Request&, httplib::Response& res) {
               std::shared_lock g(s.lock);
               reply(res, 200,
                     {{"classifyCount", s.reasoner.classifyCount()},
                      {"queryCount", s.reasoner.queryCount()},
                      {"pending", s.pending.size()}});
             }));
}

}  // namespace ontotdd
