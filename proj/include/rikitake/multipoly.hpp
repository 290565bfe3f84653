#pragma once

#include "rikitake/rational.hpp"
#include "rikitake/ring.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace rikitake {

using Exponents = std::vector<unsigned>;

// Orders monomials by descending graded lex: higher total degree first,
// ties broken by the ring's variable order. Map iteration then visits the
// leading term first, which is also the canonical printing order.
struct GradedLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored coefficient is zero; every exponent vector has
// length equal to the ring arity. Immutable value type.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit MultiPoly(RingPtr ring);
    MultiPoly(RingPtr ring, const Rational& constant);

    static MultiPoly variable(RingPtr ring, std::size_t index);
    static MultiPoly variable(RingPtr ring, std::string_view name);
    static MultiPoly monomial(RingPtr ring, Exponents exps, const Rational& coeff);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; equals the whole polynomial iff is_constant().
    Rational constant_term() const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;
    bool depends_on(std::size_t var) const;
    Rational coefficient(const Exponents& exps) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned k) const;

    MultiPoly derivative(std::size_t var) const;
    MultiPoly derivative(std::string_view var) const;

    Rational eval(std::span<const Rational> point) const;
    // Floating evaluation sums the terms in canonical order, each term
    // computed as coefficient times the monomial (no Horner scheme).
    double eval(std::span<const double> point) const;

    // Exact composition: one image per ring variable, all over one target ring.
    MultiPoly substitute(std::span<const MultiPoly> images) const;

    // Canonical text form, e.g. "1/2*x^2 + -1/2*y^2"; round-trips through
    // the expression parser.
    std::string str() const;

private:
    void add_term(const Exponents& exps, const Rational& coeff);
    void check_same_ring(const MultiPoly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

} // namespace rikitake
