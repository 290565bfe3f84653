#include "rikitake/rational.hpp"

#include "rikitake/errors.hpp"

#include <cctype>
#include <ostream>

namespace rikitake {

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d.is_zero())
        throw std::invalid_argument("rational with zero denominator");
    // cpp_rational's two-argument constructor rejects negative denominators;
    // division canonicalizes both sign and gcd.
    value_ = Rep(n) / Rep(d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::invalid_argument("inverse of zero");
    return Rational(Rep(1) / value_);
}

Rational Rational::pow(unsigned k) const {
    Rational result(1);
    Rational base = *this;
    while (k != 0) {
        if (k & 1u)
            result *= base;
        base *= base;
        k >>= 1u;
    }
    return result;
}

Rational Rational::from_string(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational {
        throw std::invalid_argument(std::string(msg) + ": '" + std::string(text) + "'");
    };

    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end)
        return fail("empty rational literal");

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }

    auto digits = [&](std::string& out) {
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i])))
            out.push_back(text[i++]);
    };

    std::string whole;
    digits(whole);

    if (i < end && text[i] == '/') {
        ++i;
        std::string den;
        digits(den);
        if (whole.empty() || den.empty() || i != end)
            return fail("malformed rational literal");
        BigInt n(whole), d(den);
        if (d.is_zero())
            return fail("zero denominator in rational literal");
        Rational r(n, d);
        return negative ? -r : r;
    }

    std::string frac;
    if (i < end && text[i] == '.') {
        ++i;
        digits(frac);
    }
    if ((whole.empty() && frac.empty()) || i != end)
        return fail("malformed rational literal");

    BigInt n(whole.empty() ? "0" : whole);
    for (char c : frac) {
        n *= 10;
        n += c - '0';
    }
    BigInt d(1);
    for (std::size_t k = 0; k < frac.size(); ++k)
        d *= 10;
    Rational r(n, d);
    return negative ? -r : r;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer())
        s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace rikitake
