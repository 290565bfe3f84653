#pragma once

#include "rikitake/multipoly.hpp"

namespace rikitake {

// Quotient of two polynomials over one ring. No gcd normalization: the
// degrees in this project stay small and zero-testing needs only the
// numerator. A constant denominator is folded into the coefficients, so
// polynomial-valued quotients always have den = 1.
class RationalFn {
public:
    explicit RationalFn(MultiPoly num);
    RationalFn(MultiPoly num, MultiPoly den);

    static RationalFn constant(RingPtr ring, const Rational& c) {
        return RationalFn(MultiPoly(std::move(ring), c));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const Rational& c);
    friend RationalFn operator*(const Rational& c, const RationalFn& a) { return a * c; }

    // Equality of rational functions (cross-multiplied; no canonical form).
    friend bool operator==(const RationalFn& a, const RationalFn& b);

    RationalFn pow(unsigned k) const;

    // Quotient rule, exactly: (num' den - num den') / den^2.
    RationalFn derivative(std::size_t var) const;
    RationalFn derivative(std::string_view var) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    RationalFn substitute(std::span<const RationalFn> images) const;

    std::string str() const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

// Exact composition of a polynomial with rational-function images.
RationalFn substitute(const MultiPoly& p, std::span<const RationalFn> images);

} // namespace rikitake
