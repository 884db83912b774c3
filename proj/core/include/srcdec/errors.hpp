#pragma once

#include <stdexcept>
#include <string>

namespace srcdec {

/// Polynomials built against different variable orderings were combined.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An operation was applied outside its mathematical domain
/// (leading variable of a constant, pseudo-division by a constant, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Groebner basis computation exceeded its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result contradicted a property the algorithms guarantee.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when the SRC-divisor search ends with a pair that does not divide
/// the ideal. The message carries a rendering of the explored branch tree.
class MorbidityError : public InternalError {
public:
    MorbidityError(const std::string& what, std::string tree)
        : InternalError(what), tree_(std::move(tree)) {}

    const std::string& branch_tree() const noexcept { return tree_; }

private:
    std::string tree_;
};

/// Malformed polynomial system text; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace srcdec
