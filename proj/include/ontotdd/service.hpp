#pragma once

// HTTP+JSON sessions for interactive test-first authoring.

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ontotdd/reasoner.hpp"

namespace httplib {
class Server;
}

namespace ontotdd {

struct ServiceOptions {
  ReasonerOptions reasoner;
  std::chrono::milliseconds idleTimeout = std::chrono::minutes(30);
};

/// Routes:
///   POST /sessions                 ontology text -> {id, consistent, coherent, unsatisfiable}
///   GET  /sessions/{id}/signature  -> {classes, roles, individuals}
///   POST /sessions/{id}/pending    {text} -> {position, parseError?}
///   POST /sessions/{id}/evaluate   {positions?, all?} -> [{position, result}]
///   POST /sessions/{id}/commit     {positions} -> {consistent, coherent, unsatisfiable}
///   GET  /sessions/{id}/export     -> ontology text
///   GET  /sessions/{id}/diag       -> {classifyCount, queryCount, pending}
///   DELETE /sessions/{id}
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Registers the routes on `server`. The service must outlive it.
  void mount(httplib::Server& server);

  /// Drops sessions idle for longer than the timeout. Returns how many.
  std::size_t evictIdle();
  std::size_t sessionCount() const;

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id);

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace ontotdd
