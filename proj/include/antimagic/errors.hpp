#ifndef ANTIMAGIC_ERRORS_HPP
#define ANTIMAGIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antimagic {

// Malformed input document. `where` is a line number for edge lists and a
// JSON pointer for JSON documents.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// Well-formed input that violates a structural invariant (loops, parallel
// edges, unknown vertices, duplicate list entries).
class ValidationError : public ParseError {
public:
    using ParseError::ParseError;
};

// Caller broke a documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The instance cannot satisfy the size requirements the construction needs
// (for example a list shorter than m + k).
class InfeasibleInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search that a nonzero coefficient certificate guarantees to succeed came
// back empty. Never expected when preconditions hold.
class InternalCertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace antimagic

#endif
