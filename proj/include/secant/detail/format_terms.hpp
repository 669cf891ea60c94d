#pragma once

#include <string>
#include <utility>
#include <vector>

#include "secant/rational.hpp"

namespace secant::detail {

/// Builds "c1*m1 + c2*m2 - c3*m3" from (coefficient, monomial) pairs in the
/// order given; zero coefficients are skipped, unit coefficients elided, an
/// empty monomial denotes the constant term.
inline std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms)
{
    std::string out;
    for (const auto& [coeff, monomial] : terms) {
        if (coeff.is_zero())
            continue;
        const bool negative = coeff.sign() < 0;
        const Rational magnitude = negative ? -coeff : coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (monomial.empty())
            out += magnitude.to_string();
        else if (magnitude == Rational(1))
            out += monomial;
        else
            out += magnitude.to_string() + "*" + monomial;
    }
    return out.empty() ? "0" : out;
}

inline std::string power(const char* symbol, int exponent)
{
    if (exponent == 0)
        return {};
    if (exponent == 1)
        return symbol;
    return std::string(symbol) + "^" + std::to_string(exponent);
}

inline std::string join_monomial(const std::string& a, const std::string& b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    return a + "*" + b;
}

} // namespace secant::detail
