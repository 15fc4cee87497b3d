#include "flexcolor/core/errors.hpp"

#include <utility>

namespace flexcolor {

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

CitationError::CitationError(const std::string& message, std::string certificate)
    : std::logic_error(message), certificate_(std::move(certificate)) {}

}  // namespace flexcolor
