#ifndef GINF_ERROR_HPP
#define GINF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ginf {

/// Base of every error raised by the library. The CLI maps the three
/// branches below onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (exit code 2).
class InputError : public Error {
public:
  using Error::Error;
};

/// A configured resource budget ran out (exit code 4).
class BudgetError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public InputError {
public:
  SyntaxError(std::size_t line, std::size_t col, const std::string &what)
      : InputError("syntax error at " + std::to_string(line) + ":" +
                   std::to_string(col) + ": " + what),
        line_(line), col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

class DanglingReference : public InputError {
public:
  explicit DanglingReference(const std::string &name)
      : InputError("reference to undeclared group '" + name + "'"), name_(name) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

class InvalidEdgeLabel : public InputError {
public:
  explicit InvalidEdgeLabel(long long label)
      : InputError("edge label " + std::to_string(label) + " is below 2"),
        label_(label) {}
  long long label() const { return label_; }

private:
  long long label_;
};

class DuplicateName : public InputError {
public:
  explicit DuplicateName(const std::string &name)
      : InputError("duplicate name '" + name + "'") {}
};

class UnknownVertex : public InputError {
public:
  explicit UnknownVertex(const std::string &name)
      : InputError("unknown vertex '" + name + "'") {}
};

/// Structural violation of a diagram or complex (self-loop, duplicate edge,
/// cyclic group references, ...).
class InvalidStructure : public InputError {
public:
  using InputError::InputError;
};

class DiagramTooLarge : public InputError {
public:
  DiagramTooLarge(std::size_t n, std::size_t cap)
      : InputError("diagram has " + std::to_string(n) +
                   " vertices; the exhaustive deciders accept at most " +
                   std::to_string(cap)) {}
};

class EmptyDiagram : public InputError {
public:
  EmptyDiagram() : InputError("diagram has no vertices") {}
};

class UnknownProfile : public InputError {
public:
  explicit UnknownProfile(const std::string &vertex)
      : InputError("vertex '" + vertex + "' has an unknown group profile") {}
};

class DisconnectedGraph : public InputError {
public:
  DisconnectedGraph() : InputError("graph is not connected") {}
};

class NotFlag : public InputError {
public:
  NotFlag() : InputError("complex is not flag") {}
};

class ExcludedComplex : public InputError {
public:
  ExcludedComplex()
      : InputError("complex is empty, a 0-simplex, or a 1-simplex") {}
};

class IndexOutOfRange : public InputError {
public:
  using InputError::InputError;
};

class WindowTooSmall : public InputError {
public:
  using InputError::InputError;
};

class OrbitBudgetExceeded : public BudgetError {
public:
  explicit OrbitBudgetExceeded(std::size_t budget)
      : BudgetError("braid orbit exceeded " + std::to_string(budget) + " words"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

private:
  std::size_t budget_;
};

class OracleBudgetExceeded : public BudgetError {
public:
  using BudgetError::BudgetError;
};

class MemoryCapExceeded : public BudgetError {
public:
  explicit MemoryCapExceeded(std::size_t cap)
      : BudgetError("ball exceeded the element cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

/// Both polarities of one fact were established (exit code 3). Carries the
/// rendered certificates of the two opposing derivations.
class ContradictionDetected : public Error {
public:
  ContradictionDetected(std::string fact, std::string holds_certificate,
                        std::string fails_certificate)
      : Error("contradiction on " + fact), fact_(std::move(fact)),
        holds_(std::move(holds_certificate)), fails_(std::move(fails_certificate)) {}

  const std::string &fact() const { return fact_; }
  const std::string &holds_certificate() const { return holds_; }
  const std::string &fails_certificate() const { return fails_; }

private:
  std::string fact_;
  std::string holds_;
  std::string fails_;
};

class FactNotDerived : public InputError {
public:
  explicit FactNotDerived(const std::string &fact)
      : InputError("fact not derived: " + fact) {}
};

} // namespace ginf

#endif // GINF_ERROR_HPP
