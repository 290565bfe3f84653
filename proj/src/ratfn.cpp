#include "rikitake/ratfn.hpp"

#include "rikitake/errors.hpp"

#include <stdexcept>

namespace rikitake {

RationalFn::RationalFn(MultiPoly num)
    : num_(std::move(num)), den_(num_.ring(), Rational(1)) {}

RationalFn::RationalFn(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!same_ring(num_.ring(), den_.ring()))
        throw RingMismatchError("numerator and denominator in different rings");
    if (den_.is_zero())
        throw std::invalid_argument("rational function with zero denominator");
    if (den_.is_constant()) {
        num_ = num_ * den_.constant_term().inverse();
        den_ = MultiPoly(num_.ring(), Rational(1));
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero())
        throw std::domain_error("division by the zero function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn operator*(const RationalFn& a, const Rational& c) {
    RationalFn r = a;
    r.num_ = r.num_ * c;
    return r;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::pow(unsigned k) const {
    return RationalFn(num_.pow(k), den_.pow(k));
}

RationalFn RationalFn::derivative(std::size_t var) const {
    return RationalFn(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                      den_ * den_);
}

RationalFn RationalFn::derivative(std::string_view var) const {
    auto idx = ring()->index_of(var);
    if (!idx)
        throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    return derivative(*idx);
}

Rational RationalFn::eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero())
        throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

double RationalFn::eval(std::span<const double> point) const {
    return num_.eval(point) / den_.eval(point);
}

RationalFn RationalFn::substitute(std::span<const RationalFn> images) const {
    RationalFn n = rikitake::substitute(num_, images);
    RationalFn d = rikitake::substitute(den_, images);
    return n / d;
}

std::string RationalFn::str() const {
    if (is_zero() || is_polynomial())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn substitute(const MultiPoly& p, std::span<const RationalFn> images) {
    if (images.size() != p.ring()->arity())
        throw std::invalid_argument("substitution needs one image per variable");
    const RingPtr& target = images[0].ring();
    for (const RationalFn& im : images)
        if (!same_ring(target, im.ring()))
            throw RingMismatchError("substitution images live in different rings");

    RationalFn sum = RationalFn::constant(target, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        RationalFn term = RationalFn::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term = term * images[i].pow(e[i]);
        sum = sum + term;
    }
    return sum;
}

} // namespace rikitake
