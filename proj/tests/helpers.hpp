#pragma once

#include "rikitake/models.hpp"
#include "rikitake/parser.hpp"

#include <random>

namespace rikitake::testing {

inline Rational random_rational(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

// Random sparse polynomial with bounded total degree and term count.
inline MultiPoly random_poly(std::mt19937_64& rng, const RingPtr& ring,
                             unsigned max_degree = 4, std::size_t max_terms = 6) {
    std::uniform_int_distribution<std::size_t> term_count(0, max_terms);
    std::uniform_int_distribution<unsigned> exponent(0, max_degree);
    MultiPoly p(ring);
    const std::size_t n = ring->arity();
    const std::size_t terms = term_count(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        unsigned budget = max_degree;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned d = exponent(rng) % (budget + 1);
            e[i] = d;
            budget -= d;
        }
        p += MultiPoly::monomial(ring, std::move(e), random_rational(rng));
    }
    return p;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> point;
    point.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        point.push_back(random_rational(rng));
    return point;
}

inline MultiPoly P(std::string_view src, const RingPtr& ring,
                   std::map<std::string, Rational> params = {}) {
    return parse_poly(src, ParseContext(ring, std::move(params)));
}

inline RationalFn RF(std::string_view src, const RingPtr& ring,
                     std::map<std::string, Rational> params = {}) {
    return parse_expr(src, ParseContext(ring, std::move(params)));
}

} // namespace rikitake::testing
