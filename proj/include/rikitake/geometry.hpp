#pragma once

#include "rikitake/ratfn.hpp"

#include <vector>

namespace rikitake {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

bool matrix_is_zero(const PolyMatrix& m);

// Polynomial vector field on a state ring; one component per variable.
class VectorField {
public:
    VectorField(RingPtr ring, std::vector<MultiPoly> components);

    static VectorField zero(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    std::size_t dimension() const { return components_.size(); }
    const std::vector<MultiPoly>& components() const { return components_; }
    const MultiPoly& component(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Rational& c, const VectorField& f);
    friend bool operator==(const VectorField& a, const VectorField& b);

private:
    RingPtr ring_;
    std::vector<MultiPoly> components_;
};

// Antisymmetric matrix of polynomials over a state ring. Antisymmetry and
// the zero diagonal are enforced at construction; the Jacobi identity is
// not (that is what jacobi_residual is for).
class PoissonTensor {
public:
    PoissonTensor(RingPtr ring, PolyMatrix entries);

    // Build from the strict upper triangle, row-major: (0,1), (0,2), ..., (n-2,n-1).
    static PoissonTensor from_upper_triangle(RingPtr ring, std::vector<MultiPoly> upper);

    const RingPtr& ring() const { return ring_; }
    std::size_t dimension() const { return entries_.size(); }
    const PolyMatrix& entries() const { return entries_; }
    const MultiPoly& entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

private:
    RingPtr ring_;
    PolyMatrix entries_;
};

// Polynomial map between rings; one source-ring component per target variable.
class PolyMap {
public:
    PolyMap(RingPtr source, RingPtr target, std::vector<MultiPoly> components);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<MultiPoly>& components() const { return components_; }
    const MultiPoly& component(std::size_t i) const { return components_.at(i); }

    // f on the target ring composed with the map: f of (phi(u)).
    MultiPoly pullback(const MultiPoly& f) const;

    // d(phi_i)/d(u_j), target arity x source arity.
    PolyMatrix jacobian() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<MultiPoly> components_;
};

// Rewrite a value over a ring whose variables are a subset (by name) of the
// target ring's variables.
MultiPoly embed(const MultiPoly& p, const RingPtr& target);
RationalFn embed(const RationalFn& r, const RingPtr& target);

} // namespace rikitake
