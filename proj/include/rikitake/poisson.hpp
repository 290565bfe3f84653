#pragma once

#include "rikitake/geometry.hpp"

#include <array>

namespace rikitake {

// Hamiltonian vector field: component i = sum_j pi[i][j] * dH/du_j.
VectorField ham_field(const PoissonTensor& pi, const MultiPoly& H);

// J^{ijk} = sum_l (pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij}),
// one entry per index triple i < j < k. The tensor is Poisson iff all vanish.
struct JacobiResidual {
    std::array<std::size_t, 3> triple;
    MultiPoly residual;
};
std::vector<JacobiResidual> jacobi_residual(const PoissonTensor& pi);

// pi * grad C; identically zero iff C is a Casimir of pi.
VectorField casimir_residual(const PoissonTensor& pi, const MultiPoly& C);

// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// L_X f = sum_i X^i d_i f.
MultiPoly lie_derivative(const VectorField& X, const MultiPoly& f);

// (L_X pi)^{ij} = sum_k (X^k d_k pi^{ij} - pi^{kj} d_k X^i - pi^{ik} d_k X^j).
PolyMatrix lie_derivative(const VectorField& X, const PoissonTensor& pi);

// (L_X pi - lambda pi, L_X H - nu H); X is a conformal symmetry of the
// Hamilton-Poisson pair iff both vanish.
struct ConformalResidual {
    PolyMatrix bivector;
    MultiPoly scalar;

    bool is_zero() const { return matrix_is_zero(bivector) && scalar.is_zero(); }
};
ConformalResidual conformal_residual(const VectorField& X, const PoissonTensor& pi,
                                     const Rational& lambda, const MultiPoly& H,
                                     const Rational& nu);

// Canonical bracket on a ring (q1..qm, p1..pm):
// {F, G} = sum_i (dF/dq_i dG/dp_i - dF/dp_i dG/dq_i).
// The sign is fixed so that udot = {u, H} gives qdot = dH/dp, pdot = -dH/dq.
MultiPoly canonical_bracket(const MultiPoly& F, const MultiPoly& G);
RationalFn canonical_bracket(const RationalFn& F, const RationalFn& G);

// (Jacobian of phi) * F_src - F_tgt of phi, one component per target variable,
// all over the source ring. Zero iff phi maps F_src onto F_tgt.
std::vector<MultiPoly> pushforward_residual(const PolyMap& phi, const VectorField& F_src,
                                            const VectorField& F_tgt);

// Entry (i, j) = {u_i of phi, u_j of phi}_canonical - Pi^{ij} of phi, where u
// are the target coordinates. Zero iff phi is a Poisson map onto Pi.
PolyMatrix poisson_map_residual(const PolyMap& phi, const PoissonTensor& Pi);

} // namespace rikitake
