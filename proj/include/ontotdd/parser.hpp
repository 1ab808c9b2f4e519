#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontotdd/core.hpp"

namespace ontotdd {

enum class ParseErrorKind { Syntax, UnknownConstruct, KindConflict };

std::string_view toString(ParseErrorKind kind);

/// Positioned parse failure; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, ParseErrorKind kind);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  ParseErrorKind kind() const { return kind_; }

 private:
  int line_;
  int column_;
  std::string message_;
  ParseErrorKind kind_;
};

struct ParsedOntology {
  std::vector<Axiom> axioms;
  Signature signature;
};

/// Functional-style ontology document: declarations and axioms, '#' comments.
ParsedOntology parseOntology(std::string_view text);

/// One Manchester-like test axiom, e.g. "Giraffe SubClassOf: eats some Plant".
/// Names need not be declared anywhere.
Axiom parseTestAxiom(std::string_view text);

/// Manchester-like class expression on its own.
ClassExpression parseClassExpression(std::string_view text);

/// Canonical Manchester-like rendering; parses back to an equal value.
std::string printAxiom(const Axiom& axiom);
std::string printClassExpression(const ClassExpression& expr);

/// Functional-style rendering of a single axiom.
std::string printFunctional(const Axiom& axiom);
std::string printFunctional(const ClassExpression& expr);

/// Full document: declarations (sorted per kind), then axioms in order.
std::string printOntology(const std::vector<Axiom>& axioms, const Signature& signature);

}  // namespace ontotdd
