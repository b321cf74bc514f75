#pragma once

#include <stdexcept>
#include <string>

namespace afsa {

// Semantic failures: invalid frameworks, unbound variables, exhausted caps,
// failed solves. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public DomainError {
 public:
  explicit ValidationError(const std::string& what) : DomainError(what) {}
};

class UnboundVariable : public DomainError {
 public:
  explicit UnboundVariable(const std::string& name)
      : DomainError("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class CapExceeded : public DomainError {
 public:
  CapExceeded(long long required, long long cap)
      : DomainError("enumeration requires " + std::to_string(required) +
                    " assignments, cap is " + std::to_string(cap)),
        required_(required) {}
  long long required() const { return required_; }

 private:
  long long required_;
};

// Frame-document errors with position info. Exit code 2 in the CLI.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace afsa
