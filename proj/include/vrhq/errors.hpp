#ifndef VRHQ_ERRORS_HPP
#define VRHQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrhq {

/// Broad failure classes. The CLI maps each class onto an exit code.
enum class ErrorKind {
  input,     ///< malformed or out-of-domain input (files, vertex lists, graphs)
  resource,  ///< a configured size cap was exceeded
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

#define VRHQ_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& message)                           \
        : Error(ErrorKind::Kind, #Name, message) {}                     \
  };

VRHQ_DEFINE_ERROR(DegenerateScale, input)
VRHQ_DEFINE_ERROR(InconsistentHeader, input)
VRHQ_DEFINE_ERROR(IsolatedVertex, input)
VRHQ_DEFINE_ERROR(OddCount, input)
VRHQ_DEFINE_ERROR(DuplicateVertex, input)
VRHQ_DEFINE_ERROR(InvalidVertex, input)
VRHQ_DEFINE_ERROR(DimensionOutOfRange, input)
VRHQ_DEFINE_ERROR(TruncationTooShallow, input)
VRHQ_DEFINE_ERROR(DimensionTooLarge, resource)
VRHQ_DEFINE_ERROR(TooLarge, resource)

#undef VRHQ_DEFINE_ERROR

/// Malformed text input; carries the 1-based line number (0 when not tied to a line).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::input, "ParseError",
              line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace vrhq

#endif // VRHQ_ERRORS_HPP
