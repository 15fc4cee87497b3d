#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flexcolor {

// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called outside its contract (e.g. mad >= 3 for the engine).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& message) : std::invalid_argument(message) {}
};

// Exact enumeration was requested on an instance above the configured cap.
class CapExceededError : public PreconditionError {
 public:
  explicit CapExceededError(const std::string& message) : PreconditionError(message) {}
};

// A step that a proven structural result guarantees has failed. The
// certificate carries whatever is needed to reproduce the failure.
class CitationError : public std::logic_error {
 public:
  CitationError(const std::string& message, std::string certificate = {});
  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

}  // namespace flexcolor
