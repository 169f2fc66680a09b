#pragma once

#include "acn/scalar.hpp"

#include <string>
#include <string_view>

namespace acn::expr {

/// Parses the plain-text scalar grammar: rationals, symbol names, + - * / ^
/// and parentheses. '/' accepts only a divisor that evaluates to a nonzero
/// rational constant (so "s/2" works but "1/s" does not). Throws ParseError.
Scalar parse(const TablePtr& table, std::string_view text);

/// Canonical rendering; parse(to_string(x)) == x.
std::string to_string(const Scalar& s);
std::string to_string(const Fraction& f);

} // namespace acn::expr
