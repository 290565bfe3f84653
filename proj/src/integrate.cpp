#include "rikitake/integrate.hpp"

#include "rikitake/models.hpp"

#include <cmath>
#include <stdexcept>

namespace rikitake {

std::string_view method_name(Method m) {
    return m == Method::Rk4 ? "rk4" : "midpoint";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "rk4")
        return Method::Rk4;
    if (name == "midpoint")
        return Method::Midpoint;
    return std::nullopt;
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : arity_(p.ring()->arity()) {
    for (const auto& [e, c] : p.terms()) {
        Term term{c.to_double(), {}};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term.powers.emplace_back(static_cast<unsigned>(i), e[i]);
        terms_.push_back(std::move(term));
    }
}

double CompiledPoly::eval(std::span<const double> x) const {
    if (x.size() != arity_)
        throw std::invalid_argument("evaluation point arity mismatch");
    double sum = 0.0;
    for (const Term& t : terms_) {
        double v = t.coeff;
        for (const auto& [var, exp] : t.powers)
            for (unsigned k = 0; k < exp; ++k)
                v *= x[var];
        sum += v;
    }
    return sum;
}

CompiledField::CompiledField(const VectorField& f) {
    components_.reserve(f.dimension());
    for (const MultiPoly& c : f.components())
        components_.emplace_back(c);
}

void CompiledField::eval(std::span<const double> x, std::span<double> out) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        out[i] = components_[i].eval(x);
}

namespace {

NumericState rk4_step(const CompiledField& F, const NumericState& s, double dt) {
    const std::size_t n = F.dimension();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    F.eval(s.coords, k1);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = s.coords[i] + 0.5 * dt * k1[i];
    F.eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = s.coords[i] + 0.5 * dt * k2[i];
    F.eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = s.coords[i] + dt * k3[i];
    F.eval(tmp, k4);

    NumericState next{s.time + dt, s.coords};
    for (std::size_t i = 0; i < n; ++i)
        next.coords[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return next;
}

NumericState midpoint_step(const CompiledField& F, const NumericState& s, double dt,
                           const MidpointOptions& opts) {
    const std::size_t n = F.dimension();
    std::vector<double> y = s.coords, mid(n), fmid(n), next(n);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i)
            mid[i] = 0.5 * (s.coords[i] + y[i]);
        F.eval(mid, fmid);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = s.coords[i] + dt * fmid[i];
            err = std::max(err, std::abs(next[i] - y[i]));
        }
        y = next;
        if (err <= opts.tolerance)
            return NumericState{s.time + dt, std::move(y)};
    }
    throw std::runtime_error("implicit midpoint iteration did not converge");
}

} // namespace

NumericState step(const CompiledField& F, const NumericState& s, double dt, Method method,
                  const MidpointOptions& opts) {
    if (dt == 0.0)
        throw std::invalid_argument("zero step size");
    if (s.coords.size() != F.dimension())
        throw std::invalid_argument("state dimension mismatch");
    return method == Method::Rk4 ? rk4_step(F, s, dt) : midpoint_step(F, s, dt, opts);
}

Trajectory integrate(const CompiledField& F, std::span<const double> x0, double dt,
                     std::size_t n_steps, Method method, std::string system_id,
                     Rational beta, const MidpointOptions& opts) {
    if (n_steps < 1)
        throw std::invalid_argument("need at least one step");

    Trajectory traj{std::move(system_id), std::move(beta), method, dt, {}};
    traj.samples.reserve(n_steps + 1);
    traj.samples.push_back(NumericState{0.0, std::vector<double>(x0.begin(), x0.end())});
    for (std::size_t k = 0; k < n_steps; ++k) {
        NumericState next = step(F, traj.samples.back(), dt, method, opts);
        next.time = static_cast<double>(k + 1) * dt; // avoid accumulated time error
        traj.samples.push_back(std::move(next));
    }
    return traj;
}

DriftReport invariant_drift(const Trajectory& traj, const CompiledPoly& f) {
    if (traj.samples.empty())
        throw std::invalid_argument("empty trajectory");
    if (f.arity() != traj.samples.front().coords.size())
        throw std::invalid_argument("invariant arity does not match trajectory dimension");

    DriftReport report;
    report.series.reserve(traj.samples.size());
    const double f0 = f.eval(traj.samples.front().coords);
    for (const NumericState& s : traj.samples) {
        double dev = f.eval(s.coords) - f0;
        report.series.push_back(dev);
        report.max_abs_dev = std::max(report.max_abs_dev, std::abs(dev));
    }
    report.final_dev = std::abs(report.series.back());
    return report;
}

double conjugacy_gap(const Rational& beta, const std::array<double, 4>& w0, double dt,
                     std::size_t n_steps, Method method) {
    CanonicalSystem canonical = canonical_system(beta); // throws at beta = 0
    PolyMap phi = phi_map(beta);
    CompiledField canonical_field(canonical.field);
    CompiledField reduced_field(rikitake_field(beta));

    std::array<CompiledPoly, 3> phi_comps{CompiledPoly(phi.component(0)),
                                          CompiledPoly(phi.component(1)),
                                          CompiledPoly(phi.component(2))};

    std::array<double, 3> u0;
    for (std::size_t i = 0; i < 3; ++i)
        u0[i] = phi_comps[i].eval(w0);

    Trajectory w = integrate(canonical_field, w0, dt, n_steps, method);
    Trajectory u = integrate(reduced_field, u0, dt, n_steps, method);

    double gap = 0.0;
    for (std::size_t k = 0; k < w.samples.size(); ++k) {
        for (std::size_t i = 0; i < 3; ++i) {
            double mapped = phi_comps[i].eval(w.samples[k].coords);
            gap = std::max(gap, std::abs(mapped - u.samples[k].coords[i]));
        }
    }
    return gap;
}

} // namespace rikitake
