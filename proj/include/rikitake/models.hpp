#pragma once

#include "rikitake/geometry.hpp"

#include <optional>

namespace rikitake {

// Shared rings. The catalog objects below all live on one of these, so
// ring checks reduce to pointer comparisons.
RingPtr state_ring();          // x, y, z
RingPtr extended_state_ring(); // t, x, y, z
RingPtr canonical_ring();      // q1, q2, p1, p2
RingPtr jet_ring();            // t, q1, q2, qd1, qd2, qdd1, qdd2

// Indices into jet_ring().
enum JetVar : std::size_t { JetT = 0, JetQ1, JetQ2, JetQd1, JetQd2, JetQdd1, JetQdd2 };

// The Rikitake-type field (y z + beta y, x z - beta x, -x y) on (x, y, z).
VectorField rikitake_field(const Rational& beta);

// The two Lie-Poisson tensors of the beta = 0 system plus, for beta != 0,
// the cocycle-modified tensor.
class PoissonTensors {
public:
    explicit PoissonTensors(const Rational& beta);

    const PoissonTensor& pi1() const { return pi1_; }
    const PoissonTensor& pi2() const { return pi2_; }
    bool has_pibeta() const { return pibeta_.has_value(); }
    const PoissonTensor& pibeta() const;

private:
    PoissonTensor pi1_;
    PoissonTensor pi2_;
    std::optional<PoissonTensor> pibeta_;
};

PoissonTensors poisson_tensors(const Rational& beta);

// H1, H2 (always) and the beta-family Hbeta, Cbeta (beta != 0 only).
class InvariantFunctions {
public:
    explicit InvariantFunctions(const Rational& beta);

    const MultiPoly& H1() const { return h1_; }
    const MultiPoly& H2() const { return h2_; }
    bool has_beta_family() const { return hbeta_.has_value(); }
    const MultiPoly& Hbeta() const;
    const MultiPoly& Cbeta() const;

private:
    MultiPoly h1_;
    MultiPoly h2_;
    std::optional<MultiPoly> hbeta_;
    std::optional<MultiPoly> cbeta_;
};

InvariantFunctions invariant_functions(const Rational& beta);

// Canonical Hamiltonian system on (q1, q2, p1, p2). Construction certifies
// that the field equals the Hamiltonian equations of H.
struct CanonicalSystem {
    MultiPoly H;
    VectorField field;
};

CanonicalSystem canonical_system(const Rational& beta);

// The realization map (q1, q2, p1, p2) -> (q1, p1, -q1^2/(4 beta) + p1^2/(4 beta) + p2).
PolyMap phi_map(const Rational& beta);

// Second-order Newton equations on the jet ring, the generating Lagrangian,
// and the accelerations solved from the equations. Construction certifies
// that substituting the accelerations annihilates both equations.
class JetSystem {
public:
    explicit JetSystem(const Rational& beta);

    const Rational& beta() const { return beta_; }
    const RingPtr& ring() const;
    const MultiPoly& delta1() const { return delta1_; }
    const MultiPoly& delta2() const { return delta2_; }
    const RationalFn& accel1() const { return accel1_; }
    const RationalFn& accel2() const { return accel2_; }
    const RationalFn& lagrangian() const { return lagrangian_; }

    // Jet images that replace the accelerations by their on-shell values.
    const std::vector<RationalFn>& onshell_images() const { return onshell_; }
    RationalFn onshell(const MultiPoly& p) const;
    RationalFn onshell(const RationalFn& r) const;

private:
    Rational beta_;
    MultiPoly delta1_;
    MultiPoly delta2_;
    RationalFn accel1_;
    RationalFn accel2_;
    RationalFn lagrangian_;
    std::vector<RationalFn> onshell_;
};

JetSystem lagrangian_system(const Rational& beta);

// Named fields used by the symmetry checks.
struct FieldCatalog {
    VectorField V;      // rikitake_field(beta)
    VectorField V0;     // rikitake_field(0)
    VectorField euler;  // (x, y, z)
    VectorField master; // (k1 x + k2 y z, k1 y + k2 x z, k1 z - k2 x y)
    std::vector<std::string> warnings;
};

FieldCatalog named_fields(const Rational& beta, const Rational& k1, const Rational& k2);

} // namespace rikitake
