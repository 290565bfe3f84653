#pragma once

#include "rikitake/ratfn.hpp"

#include <map>
#include <string>
#include <string_view>

namespace rikitake {

// Binds a variable ring together with named rational parameters (e.g. beta).
// Parameters are substituted at parse time, so parsed values always have
// pure rational coefficients.
class ParseContext {
public:
    ParseContext(RingPtr ring, std::map<std::string, Rational> params = {});

    const RingPtr& ring() const { return ring_; }
    const std::map<std::string, Rational>& params() const { return params_; }

private:
    RingPtr ring_;
    std::map<std::string, Rational> params_;
};

// Grammar: integer literals, identifiers (ring variables or bound
// parameters), binary + - * /, ^ with a nonnegative integer literal
// exponent, parentheses, unary minus. Precedence ^ > unary- > * / > + -,
// with * / and + - left-associative. Whitespace is ignored. Decimal
// literals are rejected; write fractions as quotients (e.g. 3/4).
RationalFn parse_expr(std::string_view src, const ParseContext& ctx);

// As parse_expr but the result must have a constant denominator.
MultiPoly parse_poly(std::string_view src, const ParseContext& ctx);

} // namespace rikitake
