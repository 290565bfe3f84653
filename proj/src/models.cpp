#include "rikitake/models.hpp"

#include "rikitake/errors.hpp"
#include "rikitake/parser.hpp"

namespace rikitake {

RingPtr state_ring() {
    static const RingPtr ring = Ring::make({"x", "y", "z"});
    return ring;
}

RingPtr extended_state_ring() {
    static const RingPtr ring = Ring::make({"t", "x", "y", "z"});
    return ring;
}

RingPtr canonical_ring() {
    static const RingPtr ring = Ring::make({"q1", "q2", "p1", "p2"});
    return ring;
}

RingPtr jet_ring() {
    static const RingPtr ring = Ring::make({"t", "q1", "q2", "qd1", "qd2", "qdd1", "qdd2"});
    return ring;
}

namespace {

ParseContext state_ctx(const Rational& beta) {
    return ParseContext(state_ring(), {{"beta", beta}});
}

void require_nonzero_beta(const Rational& beta, const char* what) {
    if (beta.is_zero())
        throw ParameterDomainError(std::string(what) + " is undefined at beta = 0");
}

} // namespace

VectorField rikitake_field(const Rational& beta) {
    ParseContext ctx = state_ctx(beta);
    return VectorField(state_ring(), {
                           parse_poly("y*z + beta*y", ctx),
                           parse_poly("x*z - beta*x", ctx),
                           parse_poly("-x*y", ctx),
                       });
}

PoissonTensors::PoissonTensors(const Rational& beta)
    : pi1_(PoissonTensor::from_upper_triangle(
          state_ring(),
          {parse_poly("0", state_ctx(beta)), parse_poly("1/2*y", state_ctx(beta)),
           parse_poly("1/2*x", state_ctx(beta))})),
      pi2_(PoissonTensor::from_upper_triangle(
          state_ring(),
          {parse_poly("-2*z", state_ctx(beta)), parse_poly("y", state_ctx(beta)),
           parse_poly("-x", state_ctx(beta))})) {
    if (!beta.is_zero()) {
        ParseContext ctx = state_ctx(beta);
        pibeta_ = PoissonTensor::from_upper_triangle(
            state_ring(),
            {parse_poly("1", ctx), parse_poly("1/(2*beta)*y", ctx),
             parse_poly("1/(2*beta)*x", ctx)});
    }
}

const PoissonTensor& PoissonTensors::pibeta() const {
    if (!pibeta_)
        throw ParameterDomainError("pibeta is undefined at beta = 0");
    return *pibeta_;
}

PoissonTensors poisson_tensors(const Rational& beta) {
    return PoissonTensors(beta);
}

InvariantFunctions::InvariantFunctions(const Rational& beta)
    : h1_(parse_poly("1/4*x^2 - 1/4*y^2", state_ctx(beta))),
      h2_(parse_poly("1/2*x^2 + 1/2*y^2 + z^2", state_ctx(beta))) {
    if (!beta.is_zero()) {
        ParseContext ctx = state_ctx(beta);
        hbeta_ = parse_poly("beta/2*x^2 + beta/2*y^2 + beta*z^2", ctx);
        cbeta_ = parse_poly("1/(4*beta)*x^2 - 1/(4*beta)*y^2 + z", ctx);
    }
}

const MultiPoly& InvariantFunctions::Hbeta() const {
    if (!hbeta_)
        throw ParameterDomainError("Hbeta is undefined at beta = 0");
    return *hbeta_;
}

const MultiPoly& InvariantFunctions::Cbeta() const {
    if (!cbeta_)
        throw ParameterDomainError("Cbeta is undefined at beta = 0");
    return *cbeta_;
}

InvariantFunctions invariant_functions(const Rational& beta) {
    return InvariantFunctions(beta);
}

CanonicalSystem canonical_system(const Rational& beta) {
    require_nonzero_beta(beta, "the canonical system");
    ParseContext ctx(canonical_ring(), {{"beta", beta}});

    MultiPoly H = parse_poly(
        "1/(16*beta)*q1^4 + 1/(16*beta)*p1^4 - 1/(8*beta)*q1^2*p1^2"
        " - 1/2*q1^2*p2 + 1/2*p1^2*p2 + beta/2*q1^2 + beta/2*p1^2 + beta*p2^2",
        ctx);

    VectorField field(canonical_ring(), {
                          parse_poly("1/(4*beta)*p1^3 - 1/(4*beta)*q1^2*p1 + p1*p2 + beta*p1", ctx),
                          parse_poly("-1/2*q1^2 + 1/2*p1^2 + 2*beta*p2", ctx),
                          parse_poly("-1/(4*beta)*q1^3 + 1/(4*beta)*q1*p1^2 + q1*p2 - beta*q1", ctx),
                          parse_poly("0", ctx),
                      });

    // certify field == (dH/dp1, dH/dp2, -dH/dq1, -dH/dq2)
    VectorField hamiltonian_eqs(canonical_ring(), {
                                    H.derivative("p1"),
                                    H.derivative("p2"),
                                    -H.derivative("q1"),
                                    -H.derivative("q2"),
                                });
    if (!(field == hamiltonian_eqs))
        throw std::logic_error("canonical system failed its Hamilton-equations certificate");

    return CanonicalSystem{std::move(H), std::move(field)};
}

PolyMap phi_map(const Rational& beta) {
    require_nonzero_beta(beta, "the realization map");
    ParseContext ctx(canonical_ring(), {{"beta", beta}});
    return PolyMap(canonical_ring(), state_ring(), {
                       parse_poly("q1", ctx),
                       parse_poly("p1", ctx),
                       parse_poly("-1/(4*beta)*q1^2 + 1/(4*beta)*p1^2 + p2", ctx),
                   });
}

JetSystem::JetSystem(const Rational& beta)
    : beta_(beta),
      delta1_(MultiPoly(jet_ring())),
      delta2_(MultiPoly(jet_ring())),
      accel1_(RationalFn(MultiPoly(jet_ring()))),
      accel2_(RationalFn(MultiPoly(jet_ring()))),
      lagrangian_(RationalFn(MultiPoly(jet_ring()))) {
    require_nonzero_beta(beta, "the Newton/Lagrange layer");
    ParseContext ctx(jet_ring(), {{"beta", beta}});

    delta1_ = parse_poly("qdd2*qd2 + 2*beta^2*qdd2 + 4*beta^2*q1*qd1", ctx);
    delta2_ = parse_poly(
        "2*beta*qdd1*qd2 + 4*beta^3*qdd1 - 2*beta*qd1*qdd2"
        " - 1/(2*beta)*q1*qd2^3 - beta*q1*qd2^2 + 2*beta^3*q1*qd2 + 4*beta^5*q1",
        ctx);

    lagrangian_ = parse_expr(
        "1/(4*beta)*qd2^2 - beta/2*q1^2 + 1/(4*beta)*q1^2*qd2"
        " + beta*qd1^2/(qd2 + 2*beta^2)",
        ctx);

    // linear solve of delta1, delta2 for the accelerations
    accel2_ = parse_expr("-4*beta^2*q1*qd1/(qd2 + 2*beta^2)", ctx);
    RationalFn rest = parse_expr(
        "1/(2*beta)*q1*qd2^3 + beta*q1*qd2^2 - 2*beta^3*q1*qd2 - 4*beta^5*q1", ctx);
    RationalFn qd1_factor = parse_expr("2*beta*qd1", ctx);
    RationalFn divisor = parse_expr("2*beta*qd2 + 4*beta^3", ctx);
    accel1_ = (qd1_factor * accel2_ + rest) / divisor;

    onshell_.reserve(jet_ring()->arity());
    for (std::size_t i = 0; i < jet_ring()->arity(); ++i)
        onshell_.push_back(RationalFn(MultiPoly::variable(jet_ring(), i)));
    onshell_[JetQdd1] = accel1_;
    onshell_[JetQdd2] = accel2_;

    if (!onshell(delta1_).is_zero() || !onshell(delta2_).is_zero())
        throw std::logic_error("jet system failed its acceleration certificate");
}

const RingPtr& JetSystem::ring() const {
    return delta1_.ring();
}

RationalFn JetSystem::onshell(const MultiPoly& p) const {
    return substitute(p, onshell_);
}

RationalFn JetSystem::onshell(const RationalFn& r) const {
    return r.substitute(onshell_);
}

JetSystem lagrangian_system(const Rational& beta) {
    return JetSystem(beta);
}

FieldCatalog named_fields(const Rational& beta, const Rational& k1, const Rational& k2) {
    ParseContext ctx(state_ring(), {{"k1", k1}, {"k2", k2}});
    FieldCatalog catalog{
        rikitake_field(beta),
        rikitake_field(Rational(0)),
        VectorField(state_ring(), {parse_poly("x", ctx), parse_poly("y", ctx),
                                   parse_poly("z", ctx)}),
        VectorField(state_ring(), {parse_poly("k1*x + k2*y*z", ctx),
                                   parse_poly("k1*y + k2*x*z", ctx),
                                   parse_poly("k1*z - k2*x*y", ctx)}),
        {},
    };
    if (k1.is_zero())
        catalog.warnings.push_back("master-symmetry hypothesis needs k1 != 0");
    return catalog;
}

} // namespace rikitake
