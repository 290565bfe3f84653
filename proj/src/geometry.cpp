#include "rikitake/geometry.hpp"

#include "rikitake/errors.hpp"

#include <stdexcept>

namespace rikitake {

bool matrix_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero())
                return false;
    return true;
}

VectorField::VectorField(RingPtr ring, std::vector<MultiPoly> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    if (components_.size() != ring_->arity())
        throw std::invalid_argument("vector field needs one component per ring variable");
    for (const MultiPoly& c : components_)
        if (!same_ring(c.ring(), ring_))
            throw RingMismatchError("vector field component over a different ring");
}

VectorField VectorField::zero(const RingPtr& ring) {
    return VectorField(ring, std::vector<MultiPoly>(ring->arity(), MultiPoly(ring)));
}

bool VectorField::is_zero() const {
    for (const MultiPoly& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

VectorField VectorField::operator-() const {
    std::vector<MultiPoly> comps;
    comps.reserve(components_.size());
    for (const MultiPoly& c : components_)
        comps.push_back(-c);
    return VectorField(ring_, std::move(comps));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    if (!same_ring(a.ring_, b.ring_))
        throw RingMismatchError("vector fields live in different rings");
    std::vector<MultiPoly> comps;
    comps.reserve(a.components_.size());
    for (std::size_t i = 0; i < a.components_.size(); ++i)
        comps.push_back(a.components_[i] + b.components_[i]);
    return VectorField(a.ring_, std::move(comps));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    return a + (-b);
}

VectorField operator*(const Rational& c, const VectorField& f) {
    std::vector<MultiPoly> comps;
    comps.reserve(f.components_.size());
    for (const MultiPoly& comp : f.components_)
        comps.push_back(comp * c);
    return VectorField(f.ring_, std::move(comps));
}

bool operator==(const VectorField& a, const VectorField& b) {
    return same_ring(a.ring_, b.ring_) && a.components_ == b.components_;
}

PoissonTensor::PoissonTensor(RingPtr ring, PolyMatrix entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
    const std::size_t n = ring_->arity();
    if (entries_.size() != n)
        throw std::invalid_argument("tensor dimension must match ring arity");
    for (const auto& row : entries_) {
        if (row.size() != n)
            throw std::invalid_argument("tensor matrix must be square");
        for (const MultiPoly& p : row)
            if (!same_ring(p.ring(), ring_))
                throw RingMismatchError("tensor entry over a different ring");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries_[i][i].is_zero())
            throw std::invalid_argument("tensor diagonal must vanish identically");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(entries_[i][j] == -entries_[j][i]))
                throw std::invalid_argument("tensor must be antisymmetric");
    }
}

PoissonTensor PoissonTensor::from_upper_triangle(RingPtr ring, std::vector<MultiPoly> upper) {
    const std::size_t n = ring->arity();
    if (upper.size() != n * (n - 1) / 2)
        throw std::invalid_argument("wrong number of upper-triangle entries");
    PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = upper[k];
            m[j][i] = -upper[k];
            ++k;
        }
    }
    return PoissonTensor(std::move(ring), std::move(m));
}

PolyMap::PolyMap(RingPtr source, RingPtr target, std::vector<MultiPoly> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (components_.size() != target_->arity())
        throw std::invalid_argument("map needs one component per target variable");
    for (const MultiPoly& c : components_)
        if (!same_ring(c.ring(), source_))
            throw RingMismatchError("map component over a different ring");
}

MultiPoly PolyMap::pullback(const MultiPoly& f) const {
    if (!same_ring(f.ring(), target_))
        throw RingMismatchError("pullback input must live in the map's target ring");
    return f.substitute(components_);
}

PolyMatrix PolyMap::jacobian() const {
    PolyMatrix jac(target_->arity(), std::vector<MultiPoly>(source_->arity(), MultiPoly(source_)));
    for (std::size_t i = 0; i < target_->arity(); ++i)
        for (std::size_t j = 0; j < source_->arity(); ++j)
            jac[i][j] = components_[i].derivative(j);
    return jac;
}

MultiPoly embed(const MultiPoly& p, const RingPtr& target) {
    const RingPtr& src = p.ring();
    if (same_ring(src, target))
        return p;
    std::vector<MultiPoly> images;
    images.reserve(src->arity());
    for (const std::string& name : src->names()) {
        auto idx = target->index_of(name);
        if (!idx)
            throw RingMismatchError("embedding target lacks variable '" + name + "'");
        images.push_back(MultiPoly::variable(target, *idx));
    }
    return p.substitute(images);
}

RationalFn embed(const RationalFn& r, const RingPtr& target) {
    return RationalFn(embed(r.num(), target), embed(r.den(), target));
}

} // namespace rikitake
