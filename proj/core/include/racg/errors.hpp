#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace racg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad generator names, words over the wrong alphabet,
// subsets that are not cliques where a clique is required.
class InputError : public Error {
 public:
  using Error::Error;
};

class UnknownGeneratorError : public InputError {
 public:
  explicit UnknownGeneratorError(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An operation was called outside its domain (e.g. a malformed witness).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Ball enumeration hit the configured element cap.  Carries how far it got.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::size_t limit, int completed_radius,
                     std::size_t elements);

  std::size_t limit() const noexcept { return limit_; }
  int completed_radius() const noexcept { return completed_radius_; }
  std::size_t elements() const noexcept { return elements_; }

 private:
  std::size_t limit_;
  int completed_radius_;
  std::size_t elements_;
};

}  // namespace racg
