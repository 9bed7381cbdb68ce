#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motivic {

// Base for all library errors; CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Semantic violations: arity/bound violations, registry mismatch,
// non-dualizable classes, poles, malformed SNC data.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Syntax errors with a source position; CLI maps these to exit status 2.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace motivic

#endif
