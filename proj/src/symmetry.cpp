#include "rikitake/symmetry.hpp"

#include "rikitake/errors.hpp"

namespace rikitake {

PointSymmetryCandidate::PointSymmetryCandidate(MultiPoly tau_, std::vector<MultiPoly> A_)
    : tau(std::move(tau_)), A(std::move(A_)) {
    for (const MultiPoly& a : A)
        if (!same_ring(a.ring(), tau.ring()))
            throw RingMismatchError("candidate coefficients over different rings");
    if (A.size() + 1 != tau.ring()->arity())
        throw std::invalid_argument("candidate needs one coefficient per state variable");
}

namespace {

// images embedding the state ring into (t, states): state variable i maps to
// extended variable i + 1
std::vector<MultiPoly> state_embedding(const RingPtr& state, const RingPtr& extended) {
    std::vector<MultiPoly> images;
    images.reserve(state->arity());
    for (const std::string& name : state->names()) {
        auto idx = extended->index_of(name);
        if (!idx)
            throw RingMismatchError("extended ring lacks state variable '" + name + "'");
        images.push_back(MultiPoly::variable(extended, *idx));
    }
    return images;
}

} // namespace

MultiPoly total_derivative(const MultiPoly& g, const VectorField& F) {
    const RingPtr& ext = g.ring();
    auto t_idx = ext->index_of("t");
    if (!t_idx)
        throw RingMismatchError("total derivative needs a ring containing t");
    std::vector<MultiPoly> images = state_embedding(F.ring(), ext);

    MultiPoly result = g.derivative(*t_idx);
    for (std::size_t i = 0; i < F.dimension(); ++i) {
        auto state_idx = ext->index_of(F.ring()->name(i));
        result += F.component(i).substitute(images) * g.derivative(*state_idx);
    }
    return result;
}

std::vector<MultiPoly> ode1_symmetry_residual(const VectorField& F,
                                              const PointSymmetryCandidate& cand) {
    const RingPtr& ext = cand.ring();
    if (F.dimension() != cand.A.size())
        throw RingMismatchError("candidate and field dimensions differ");
    std::vector<MultiPoly> images = state_embedding(F.ring(), ext);

    std::vector<MultiPoly> embedded;
    embedded.reserve(F.dimension());
    for (const MultiPoly& c : F.components())
        embedded.push_back(c.substitute(images));

    MultiPoly tau_dot = total_derivative(cand.tau, F);
    std::vector<MultiPoly> residuals;
    residuals.reserve(F.dimension());
    for (std::size_t i = 0; i < F.dimension(); ++i) {
        MultiPoly r = total_derivative(cand.A[i], F) - embedded[i] * tau_dot;
        for (std::size_t j = 0; j < F.dimension(); ++j) {
            auto state_idx = ext->index_of(F.ring()->name(j));
            r -= cand.A[j] * embedded[i].derivative(*state_idx);
        }
        residuals.push_back(std::move(r));
    }
    return residuals;
}

NewtonCandidate::NewtonCandidate(MultiPoly xi_, MultiPoly eta1_, MultiPoly eta2_)
    : xi(std::move(xi_)), eta1(std::move(eta1_)), eta2(std::move(eta2_)) {
    if (!same_ring(xi.ring(), eta1.ring()) || !same_ring(xi.ring(), eta2.ring()))
        throw RingMismatchError("candidate coefficients over different rings");
}

RingPtr newton_candidate_ring() {
    static const RingPtr ring = Ring::make({"t", "q1", "q2"});
    return ring;
}

NewtonCandidate constant_newton_candidate(const Rational& c1, const Rational& e1,
                                          const Rational& e2) {
    const RingPtr& ring = newton_candidate_ring();
    return NewtonCandidate(MultiPoly(ring, c1), MultiPoly(ring, e1), MultiPoly(ring, e2));
}

MultiPoly jet_total_derivative(const MultiPoly& g) {
    const RingPtr& jet = jet_ring();
    if (!same_ring(g.ring(), jet))
        throw RingMismatchError("jet total derivative needs the jet ring");
    if (g.depends_on(JetQdd1) || g.depends_on(JetQdd2))
        throw std::invalid_argument("jet total derivative input depends on the highest jet");
    MultiPoly result = g.derivative(JetT);
    result += MultiPoly::variable(jet, JetQd1) * g.derivative(JetQ1);
    result += MultiPoly::variable(jet, JetQd2) * g.derivative(JetQ2);
    result += MultiPoly::variable(jet, JetQdd1) * g.derivative(JetQd1);
    result += MultiPoly::variable(jet, JetQdd2) * g.derivative(JetQd2);
    return result;
}

RationalFn jet_total_derivative(const RationalFn& g) {
    // D is a derivation, so the quotient rule applies
    MultiPoly n = jet_total_derivative(g.num());
    MultiPoly d = jet_total_derivative(g.den());
    return RationalFn(n * g.den() - g.num() * d, g.den() * g.den());
}

namespace {

struct Prolongation {
    MultiPoly xi, eta1, eta2;      // embedded into the jet ring
    MultiPoly xi_dot;              // D xi
    MultiPoly eta1_1, eta2_1;      // first-order coefficients
    MultiPoly eta1_2, eta2_2;      // second-order coefficients
};

Prolongation prolong(const NewtonCandidate& cand) {
    const RingPtr& jet = jet_ring();
    MultiPoly xi = embed(cand.xi, jet);
    MultiPoly eta1 = embed(cand.eta1, jet);
    MultiPoly eta2 = embed(cand.eta2, jet);

    MultiPoly qd1 = MultiPoly::variable(jet, JetQd1);
    MultiPoly qd2 = MultiPoly::variable(jet, JetQd2);
    MultiPoly qdd1 = MultiPoly::variable(jet, JetQdd1);
    MultiPoly qdd2 = MultiPoly::variable(jet, JetQdd2);

    MultiPoly xi_dot = jet_total_derivative(xi);
    MultiPoly eta1_1 = jet_total_derivative(eta1) - qd1 * xi_dot;
    MultiPoly eta2_1 = jet_total_derivative(eta2) - qd2 * xi_dot;
    MultiPoly eta1_2 = jet_total_derivative(eta1_1) - qdd1 * xi_dot;
    MultiPoly eta2_2 = jet_total_derivative(eta2_1) - qdd2 * xi_dot;

    return {std::move(xi),     std::move(eta1),   std::move(eta2),  std::move(xi_dot),
            std::move(eta1_1), std::move(eta2_1), std::move(eta1_2), std::move(eta2_2)};
}

MultiPoly apply_pr2(const Prolongation& pr, const MultiPoly& delta) {
    MultiPoly r = pr.xi * delta.derivative(JetT);
    r += pr.eta1 * delta.derivative(JetQ1);
    r += pr.eta2 * delta.derivative(JetQ2);
    r += pr.eta1_1 * delta.derivative(JetQd1);
    r += pr.eta2_1 * delta.derivative(JetQd2);
    r += pr.eta1_2 * delta.derivative(JetQdd1);
    r += pr.eta2_2 * delta.derivative(JetQdd2);
    return r;
}

} // namespace

std::pair<RationalFn, RationalFn> prolong2_residual(const JetSystem& js,
                                                    const NewtonCandidate& cand) {
    Prolongation pr = prolong(cand);
    return {js.onshell(apply_pr2(pr, js.delta1())), js.onshell(apply_pr2(pr, js.delta2()))};
}

RationalFn noether_residual(const JetSystem& js, const NewtonCandidate& cand) {
    Prolongation pr = prolong(cand);
    const RationalFn& L = js.lagrangian();

    RationalFn r = RationalFn(pr.xi) * L.derivative(JetT);
    r = r + RationalFn(pr.eta1) * L.derivative(JetQ1);
    r = r + RationalFn(pr.eta2) * L.derivative(JetQ2);
    r = r + RationalFn(pr.eta1_1) * L.derivative(JetQd1);
    r = r + RationalFn(pr.eta2_1) * L.derivative(JetQd2);
    r = r + L * RationalFn(pr.xi_dot);
    return r;
}

ConservedQuantities conserved_quantities(const JetSystem& js) {
    const RingPtr& jet = jet_ring();
    const RationalFn& L = js.lagrangian();
    RationalFn m1 = L.derivative(JetQd1);
    RationalFn m2 = L.derivative(JetQd2);
    RationalFn energy = RationalFn(MultiPoly::variable(jet, JetQd1)) * m1 +
                        RationalFn(MultiPoly::variable(jet, JetQd2)) * m2 - L;
    return {std::move(energy), {std::move(m1), std::move(m2)}};
}

std::pair<RationalFn, RationalFn> euler_lagrange_residual(const JetSystem& js) {
    const RationalFn& L = js.lagrangian();
    RationalFn el1 = jet_total_derivative(L.derivative(JetQd1)) - L.derivative(JetQ1);
    RationalFn el2 = jet_total_derivative(L.derivative(JetQd2)) - L.derivative(JetQ2);
    return {js.onshell(el1), js.onshell(el2)};
}

} // namespace rikitake
