#pragma once

#include <json.hpp>

#include "ontotdd/core.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd {

/// {kind: "verdict"|"precondition", value, missing?}
inline nlohmann::json toJson(const TestResult& result) {
  nlohmann::json out;
  out["kind"] = result.isVerdict() ? "verdict" : "precondition";
  out["value"] = result.label();
  if (!result.isVerdict() && result.failure().kind == PreconditionKind::MissingEntities) {
    out["missing"] = result.failure().missing;
  }
  return out;
}

inline nlohmann::json statusJson(const ClassificationIndex& index) {
  return {{"consistent", index.consistent},
          {"coherent", index.coherent()},
          {"unsatisfiable", index.unsatisfiableNamed}};
}

}  // namespace ontotdd
