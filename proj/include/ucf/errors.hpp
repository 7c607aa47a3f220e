#ifndef UCF_ERRORS_HPP
#define UCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ucf {

/// Bad arguments or malformed input: out-of-range parameters, invalid sets,
/// unparsable files. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that is well formed but outside an operation's domain, e.g. a
/// family that is not union-closed where closure is required.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A .ucf parse failure, carrying the 1-based line it occurred on.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace ucf

#endif  // UCF_ERRORS_HPP
