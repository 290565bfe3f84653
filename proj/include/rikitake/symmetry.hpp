#pragma once

#include "rikitake/models.hpp"

#include <utility>

namespace rikitake {

// Point-symmetry candidate for a first-order system: tau d/dt + sum A_i d/dx_i
// with coefficients over the extended ring (t, states).
struct PointSymmetryCandidate {
    MultiPoly tau;
    std::vector<MultiPoly> A;

    PointSymmetryCandidate(MultiPoly tau, std::vector<MultiPoly> A);

    const RingPtr& ring() const { return tau.ring(); }
};

// On-shell total derivative D_t g = d_t g + sum_i F^i d_i g, for g over the
// extended ring (t, states) and F over the state sub-ring.
MultiPoly total_derivative(const MultiPoly& g, const VectorField& F);

// First-prolongation determining residuals
// R_i = D_t A_i - F^i D_t tau - sum_j A_j d_j F^i; all zero iff the
// candidate is a Lie point symmetry of xdot = F(x).
std::vector<MultiPoly> ode1_symmetry_residual(const VectorField& F,
                                              const PointSymmetryCandidate& cand);

// Point-symmetry candidate for the second-order Newton equations:
// xi d/dt + eta1 d/dq1 + eta2 d/dq2 over the ring (t, q1, q2).
struct NewtonCandidate {
    MultiPoly xi;
    MultiPoly eta1;
    MultiPoly eta2;

    NewtonCandidate(MultiPoly xi, MultiPoly eta1, MultiPoly eta2);

    const RingPtr& ring() const { return xi.ring(); }
};

RingPtr newton_candidate_ring(); // t, q1, q2

// Constant candidate (c1, e1, e2).
NewtonCandidate constant_newton_candidate(const Rational& c1, const Rational& e1,
                                          const Rational& e2);

// Total time derivative on the jet ring:
// D g = d_t g + qd_i d_{q_i} g + qdd_i d_{qd_i} g. The input may not depend
// on the highest jet coordinates (their derivatives are not represented).
MultiPoly jet_total_derivative(const MultiPoly& g);
RationalFn jet_total_derivative(const RationalFn& g);

// Second-prolongation residuals pr2(v)(Delta_k) with the on-shell
// accelerations substituted; both zero iff v is a point symmetry of the
// Newton equations.
std::pair<RationalFn, RationalFn> prolong2_residual(const JetSystem& js,
                                                    const NewtonCandidate& cand);

// Variational-symmetry residual pr1(v)(L) + L D_t xi; zero iff v is a
// Noether symmetry of the Lagrangian.
RationalFn noether_residual(const JetSystem& js, const NewtonCandidate& cand);

struct ConservedQuantities {
    RationalFn energy;                // sum qd_i dL/dqd_i - L
    std::vector<RationalFn> momenta;  // dL/dqd_i
};
ConservedQuantities conserved_quantities(const JetSystem& js);

// Euler-Lagrange expressions D_t(dL/dqd_k) - dL/dq_k with on-shell
// accelerations substituted; both vanish for the generating Lagrangian.
std::pair<RationalFn, RationalFn> euler_lagrange_residual(const JetSystem& js);

} // namespace rikitake
