#include "rikitake/poisson.hpp"

#include "rikitake/errors.hpp"

namespace rikitake {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b))
        throw RingMismatchError(std::string(what) + ": ring mismatch");
}

} // namespace

VectorField ham_field(const PoissonTensor& pi, const MultiPoly& H) {
    require_same_ring(pi.ring(), H.ring(), "ham_field");
    const std::size_t n = pi.dimension();
    std::vector<MultiPoly> grad;
    grad.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        grad.push_back(H.derivative(j));

    std::vector<MultiPoly> comps(n, MultiPoly(pi.ring()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            comps[i] += pi.entry(i, j) * grad[j];
    return VectorField(pi.ring(), std::move(comps));
}

std::vector<JacobiResidual> jacobi_residual(const PoissonTensor& pi) {
    const std::size_t n = pi.dimension();
    std::vector<JacobiResidual> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                MultiPoly sum(pi.ring());
                for (std::size_t l = 0; l < n; ++l) {
                    sum += pi.entry(i, l) * pi.entry(j, k).derivative(l);
                    sum += pi.entry(j, l) * pi.entry(k, i).derivative(l);
                    sum += pi.entry(k, l) * pi.entry(i, j).derivative(l);
                }
                out.push_back({{i, j, k}, std::move(sum)});
            }
        }
    }
    return out;
}

VectorField casimir_residual(const PoissonTensor& pi, const MultiPoly& C) {
    return ham_field(pi, C);
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    require_same_ring(X.ring(), Y.ring(), "lie_bracket");
    const std::size_t n = X.dimension();
    std::vector<MultiPoly> comps(n, MultiPoly(X.ring()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            comps[i] += X.component(j) * Y.component(i).derivative(j) -
                        Y.component(j) * X.component(i).derivative(j);
    return VectorField(X.ring(), std::move(comps));
}

MultiPoly lie_derivative(const VectorField& X, const MultiPoly& f) {
    require_same_ring(X.ring(), f.ring(), "lie_derivative");
    MultiPoly sum(X.ring());
    for (std::size_t i = 0; i < X.dimension(); ++i)
        sum += X.component(i) * f.derivative(i);
    return sum;
}

PolyMatrix lie_derivative(const VectorField& X, const PoissonTensor& pi) {
    require_same_ring(X.ring(), pi.ring(), "lie_derivative");
    const std::size_t n = pi.dimension();
    PolyMatrix out(n, std::vector<MultiPoly>(n, MultiPoly(pi.ring())));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly sum(pi.ring());
            for (std::size_t k = 0; k < n; ++k) {
                sum += X.component(k) * pi.entry(i, j).derivative(k);
                sum -= pi.entry(k, j) * X.component(i).derivative(k);
                sum -= pi.entry(i, k) * X.component(j).derivative(k);
            }
            out[i][j] = std::move(sum);
        }
    }
    return out;
}

ConformalResidual conformal_residual(const VectorField& X, const PoissonTensor& pi,
                                     const Rational& lambda, const MultiPoly& H,
                                     const Rational& nu) {
    require_same_ring(X.ring(), pi.ring(), "conformal_residual");
    require_same_ring(X.ring(), H.ring(), "conformal_residual");
    PolyMatrix bivector = lie_derivative(X, pi);
    for (std::size_t i = 0; i < bivector.size(); ++i)
        for (std::size_t j = 0; j < bivector.size(); ++j)
            bivector[i][j] -= pi.entry(i, j) * lambda;
    MultiPoly scalar = lie_derivative(X, H) - H * nu;
    return ConformalResidual{std::move(bivector), std::move(scalar)};
}

namespace {

std::size_t canonical_pairs(const RingPtr& ring) {
    if (ring->arity() % 2 != 0)
        throw std::invalid_argument("canonical bracket needs an even-dimensional ring");
    return ring->arity() / 2;
}

} // namespace

MultiPoly canonical_bracket(const MultiPoly& F, const MultiPoly& G) {
    require_same_ring(F.ring(), G.ring(), "canonical_bracket");
    const std::size_t m = canonical_pairs(F.ring());
    MultiPoly sum(F.ring());
    for (std::size_t i = 0; i < m; ++i)
        sum += F.derivative(i) * G.derivative(m + i) - F.derivative(m + i) * G.derivative(i);
    return sum;
}

RationalFn canonical_bracket(const RationalFn& F, const RationalFn& G) {
    require_same_ring(F.ring(), G.ring(), "canonical_bracket");
    const std::size_t m = canonical_pairs(F.ring());
    RationalFn sum = RationalFn::constant(F.ring(), Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        sum = sum + F.derivative(i) * G.derivative(m + i) - F.derivative(m + i) * G.derivative(i);
    return sum;
}

std::vector<MultiPoly> pushforward_residual(const PolyMap& phi, const VectorField& F_src,
                                            const VectorField& F_tgt) {
    require_same_ring(phi.source(), F_src.ring(), "pushforward_residual");
    require_same_ring(phi.target(), F_tgt.ring(), "pushforward_residual");
    PolyMatrix jac = phi.jacobian();
    std::vector<MultiPoly> out;
    out.reserve(phi.target()->arity());
    for (std::size_t i = 0; i < phi.target()->arity(); ++i) {
        MultiPoly pushed(phi.source());
        for (std::size_t j = 0; j < phi.source()->arity(); ++j)
            pushed += jac[i][j] * F_src.component(j);
        out.push_back(pushed - phi.pullback(F_tgt.component(i)));
    }
    return out;
}

PolyMatrix poisson_map_residual(const PolyMap& phi, const PoissonTensor& Pi) {
    require_same_ring(phi.target(), Pi.ring(), "poisson_map_residual");
    const std::size_t n = Pi.dimension();
    PolyMatrix out(n, std::vector<MultiPoly>(n, MultiPoly(phi.source())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = canonical_bracket(phi.component(i), phi.component(j)) -
                        phi.pullback(Pi.entry(i, j));
    return out;
}

} // namespace rikitake
