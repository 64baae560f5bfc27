#pragma once

#include <stdexcept>
#include <string>

namespace edgechroma {

/// Recoverable library error: I/O failure, decode failure, bad file content.
/// Caller bugs (dimension mismatches, out-of-range parameters) throw
/// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Error in a line-oriented text file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line)
        : Error(message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace edgechroma
