#ifndef SGB_ERRORS_HPP
#define SGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgb {

// Bad input data: malformed tables, broken group axioms, inadmissible
// family parameters, size ceilings.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input; message always names the offending line.
class parse_error : public validation_error {
public:
    parse_error(int line, const std::string& msg)
        : validation_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Numeric trouble: eigensolver non-convergence, rational overflow,
// indeterminate float comparisons.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sgb

#endif
