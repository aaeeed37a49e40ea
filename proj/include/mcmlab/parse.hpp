#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mcmlab/polynomial.hpp"

namespace mcmlab {

/// Parse failure with a 1-based column position into the source string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int column)
        : std::runtime_error(msg + " (column " + std::to_string(column) + ")"), column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

/// Parses a polynomial in the task-file grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INTEGER | VARIABLE ['^' INTEGER]
/// Variables must match the ring's variable names; whitespace is free.
Poly parse_poly(const Field& k, const std::vector<std::string>& vars, const std::string& src);

}  // namespace mcmlab
