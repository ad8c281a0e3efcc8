#pragma once

#include <stdexcept>
#include <string>

namespace logcorners {

/// Base for every engine failure. The CLI maps `exit_code()` straight to the
/// process status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 3; }
};

/// Malformed input text (expression grammar, chart files, basepoint syntax).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  int exit_code() const override { return 2; }
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates the typing rules (log of a non-monoid
/// expression, wedge of non-forms, ...). `node_path` locates the offending node.
class TypeError : public Error {
 public:
  TypeError(const std::string& what, std::string node_path)
      : Error(what + " (node " + node_path + ")"), node_path_(std::move(node_path)) {}
  int exit_code() const override { return 2; }
  const std::string& node_path() const { return node_path_; }

 private:
  std::string node_path_;
};

/// Mathematically invalid request: chart mismatch, leftover phantoms,
/// non-representable results, unsolvable data.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The exact engine cannot produce a closed form (exp factors under an
/// integral). Callers may fall back to the numeric oracle.
class NotExactError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace logcorners
