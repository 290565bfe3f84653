#include "rikitake/multipoly.hpp"

#include "rikitake/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace rikitake {

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db)
        return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i];
    return false;
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_)
        throw std::invalid_argument("null ring");
}

MultiPoly::MultiPoly(RingPtr ring, const Rational& constant) : MultiPoly(std::move(ring)) {
    if (!constant.is_zero())
        terms_.emplace(Exponents(ring_->arity(), 0), constant);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->arity())
        throw std::invalid_argument("variable index out of range");
    Exponents e(ring->arity(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e), Rational(1));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx)
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exps, const Rational& coeff) {
    MultiPoly p(std::move(ring));
    if (exps.size() != p.ring_->arity())
        throw std::invalid_argument("exponent vector arity mismatch");
    if (!coeff.is_zero())
        p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(ring_->arity(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty())
        return 0;
    // leading term has maximal total degree under graded lex
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool MultiPoly::depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0)
            return true;
    return false;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_))
        throw RingMismatchError("polynomials live in different rings");
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    MultiPoly r(a.ring_);
    const std::size_t n = a.ring_->arity();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly& p, const Rational& c) {
    MultiPoly r(p.ring_);
    if (c.is_zero())
        return r;
    for (const auto& [e, pc] : p.terms_)
        r.terms_.emplace(e, pc * c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result(ring_, Rational(1));
    MultiPoly base = *this;
    while (k != 0) {
        if (k & 1u)
            result = result * base;
        if (k >>= 1u)
            base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= ring_->arity())
        throw std::invalid_argument("variable index out of range");
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
    auto idx = ring_->index_of(var);
    if (!idx)
        throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    return derivative(*idx);
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != ring_->arity())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term *= point[i].pow(e[i]);
        sum += term;
    }
    return sum;
}

double MultiPoly::eval(std::span<const double> point) const {
    if (point.size() != ring_->arity())
        throw std::invalid_argument("evaluation point arity mismatch");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                term *= point[i];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != ring_->arity())
        throw std::invalid_argument("substitution needs one image per variable");
    const RingPtr& target = images[0].ring();
    for (const MultiPoly& im : images)
        if (!same_ring(target, im.ring()))
            throw RingMismatchError("substitution images live in different rings");

    MultiPoly sum(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term = term * images[i].pow(e[i]);
        sum += term;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += c.str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            out += "*" + ring_->name(i);
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

} // namespace rikitake
