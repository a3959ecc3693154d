#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbowtri {

/// An operation's documented precondition does not hold for its input.
class PreconditionViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// An exhaustive enumeration was requested beyond its configured cap.
class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph file. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    std::size_t line() const noexcept { return _line; }

  private:
    std::size_t _line;
};

} // namespace rainbowtri
