#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmenum {

// Raised when a caller violates an operation's precondition (bad ids,
// non-matching input, out-of-range parameters).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the text readers. line() is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mmenum
