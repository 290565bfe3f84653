#pragma once

#include "rikitake/geometry.hpp"

#include <array>
#include <optional>
#include <string>

namespace rikitake {

enum class Method { Rk4, Midpoint };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct NumericState {
    double time = 0.0;
    std::vector<double> coords;
};

struct Trajectory {
    std::string system_id;
    Rational beta;
    Method method = Method::Rk4;
    double dt = 0.0;
    std::vector<NumericState> samples;
};

// Polynomial flattened to a binary64 term list for the integration loop.
// Evaluation sums coefficient-times-monomial over the canonical term order,
// so results are deterministic.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p);

    std::size_t arity() const { return arity_; }
    double eval(std::span<const double> x) const;

private:
    struct Term {
        double coeff;
        std::vector<std::pair<unsigned, unsigned>> powers; // (variable, exponent)
    };
    std::vector<Term> terms_;
    std::size_t arity_ = 0;
};

class CompiledField {
public:
    explicit CompiledField(const VectorField& f);

    std::size_t dimension() const { return components_.size(); }
    void eval(std::span<const double> x, std::span<double> out) const;

private:
    std::vector<CompiledPoly> components_;
};

struct MidpointOptions {
    double tolerance = 1e-14; // max-norm fixed-point tolerance
    int max_iterations = 50;
};

// One step of classical RK4 or of the implicit midpoint rule (fixed-point
// iteration; throws on non-convergence). dt may be negative but not zero.
NumericState step(const CompiledField& F, const NumericState& s, double dt, Method method,
                  const MidpointOptions& opts = {});

// n_steps + 1 samples with times t0 + k*dt; deterministic.
Trajectory integrate(const CompiledField& F, std::span<const double> x0, double dt,
                     std::size_t n_steps, Method method, std::string system_id = {},
                     Rational beta = Rational(0), const MidpointOptions& opts = {});

struct DriftReport {
    double max_abs_dev = 0.0;
    double final_dev = 0.0;
    std::vector<double> series; // f(x_k) - f(x_0), signed
};

DriftReport invariant_drift(const Trajectory& traj, const CompiledPoly& f);

// Integrates the canonical system from w0 and the reduced system from
// phi(w0) with the same method and step, and returns the max-norm gap
// between phi of the canonical trajectory and the reduced trajectory.
double conjugacy_gap(const Rational& beta, const std::array<double, 4>& w0, double dt,
                     std::size_t n_steps, Method method);

} // namespace rikitake
