#include "rikitake/checks.hpp"
#include "rikitake/integrate.hpp"
#include "rikitake/models.hpp"
#include "rikitake/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::ordered_json;
using namespace rikitake;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

std::optional<Rational> parse_beta(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::vector<double>> parse_x0(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                return std::nullopt;
            values.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (values.empty())
        return std::nullopt;
    return values;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes to the path, or to stdout when the path is empty.
bool write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    return static_cast<bool>(out);
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& beta_text, const std::string& json_path,
               std::uint64_t seed) {
    auto beta = parse_beta(beta_text);
    if (!beta)
        return usage_error("--beta must be a rational like 1, 3/2 or -2 (got '" +
                           beta_text + "')");

    std::vector<CheckResult> results = run_verification(*beta, seed);

    int failed = 0, skipped = 0;
    for (const CheckResult& r : results) {
        std::string residual = r.status == CheckStatus::Skipped ? "-" : r.residual;
        std::printf("%-28s %-8s %s\n", r.name.c_str(),
                    std::string(check_status_name(r.status)).c_str(), residual.c_str());
        failed += r.status == CheckStatus::Fail;
        skipped += r.status == CheckStatus::Skipped;
    }
    std::printf("%zu checks: %zu passed, %d failed, %d skipped\n", results.size(),
                results.size() - failed - skipped, failed, skipped);

    if (!json_path.empty()) {
        ordered_json doc;
        doc["beta"] = beta->str();
        doc["seed"] = seed;
        doc["checks"] = ordered_json::array();
        for (const CheckResult& r : results) {
            ordered_json c;
            c["name"] = r.name;
            c["status"] = r.status == CheckStatus::Pass   ? "pass"
                          : r.status == CheckStatus::Fail ? "fail"
                                                          : "skipped";
            if (r.status == CheckStatus::Skipped)
                c["residual"] = nullptr;
            else
                c["residual"] = r.residual;
            doc["checks"].push_back(std::move(c));
        }
        if (!write_text(json_path, doc.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return kExitFail;
        }
    }
    return all_passed(results) ? kExitPass : kExitFail;
}

// -------------------------------------------------------------- simulate --

struct SimulationSetup {
    CompiledField field;
    std::vector<std::string> invariant_names;
    std::vector<CompiledPoly> invariants;
    std::vector<std::string> coord_names;
};

SimulationSetup make_r3_setup(const Rational& beta) {
    InvariantFunctions inv(beta);
    SimulationSetup setup{CompiledField(rikitake_field(beta)), {}, {}, {"x", "y", "z"}};
    if (beta.is_zero()) {
        setup.invariant_names = {"H1", "H2"};
        setup.invariants.emplace_back(inv.H1());
        setup.invariants.emplace_back(inv.H2());
    } else {
        setup.invariant_names = {"Hbeta", "Cbeta"};
        setup.invariants.emplace_back(inv.Hbeta());
        setup.invariants.emplace_back(inv.Cbeta());
    }
    return setup;
}

SimulationSetup make_r4_setup(const Rational& beta) {
    CanonicalSystem cs = canonical_system(beta);
    SimulationSetup setup{CompiledField(cs.field), {"H", "p2_invariant"}, {},
                          {"q1", "q2", "p1", "p2"}};
    setup.invariants.emplace_back(cs.H);
    setup.invariants.emplace_back(MultiPoly::variable(canonical_ring(), "p2"));
    return setup;
}

std::string trajectory_csv(const Trajectory& traj, const SimulationSetup& setup) {
    std::string csv = "t";
    for (const std::string& name : setup.coord_names)
        csv += "," + name;
    for (const std::string& name : setup.invariant_names)
        csv += "," + name;
    csv += "\n";
    for (const NumericState& s : traj.samples) {
        csv += fmt17(s.time);
        for (double v : s.coords)
            csv += "," + fmt17(v);
        for (const CompiledPoly& f : setup.invariants)
            csv += "," + fmt17(f.eval(s.coords));
        csv += "\n";
    }
    return csv;
}

int cmd_simulate(const std::string& system, const std::string& beta_text,
                 const std::string& x0_text, double dt, long long steps,
                 const std::string& method_text, const std::string& out_path) {
    auto beta = parse_beta(beta_text);
    if (!beta)
        return usage_error("--beta must be a rational (got '" + beta_text + "')");
    auto method = method_from_name(method_text);
    if (!method)
        return usage_error("--method must be rk4 or midpoint");
    auto x0 = parse_x0(x0_text);
    if (!x0)
        return usage_error("--x0 must be a comma-separated list of numbers");
    if (dt == 0.0)
        return usage_error("--dt must be nonzero");
    if (steps < 1)
        return usage_error("--steps must be at least 1");

    std::optional<SimulationSetup> setup;
    if (system == "r3") {
        if (x0->size() != 3)
            return usage_error("r3 needs a 3-component --x0");
        setup.emplace(make_r3_setup(*beta));
    } else if (system == "r4") {
        if (x0->size() != 4)
            return usage_error("r4 needs a 4-component --x0");
        if (beta->is_zero())
            return usage_error("r4 needs beta != 0");
        setup.emplace(make_r4_setup(*beta));
    } else {
        return usage_error("--system must be r3 or r4");
    }

    Trajectory traj = integrate(setup->field, *x0, dt, static_cast<std::size_t>(steps),
                                *method, system, *beta);
    if (!write_text(out_path, trajectory_csv(traj, *setup))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitFail;
    }
    return kExitPass;
}

// --------------------------------------------------------------- analyze --

ordered_json analyze_params(const std::string& system, const Rational& beta,
                            const std::vector<double>& x0, double dt, long long steps,
                            const std::string& method, double tol) {
    ordered_json params;
    if (!system.empty())
        params["system"] = system;
    params["beta"] = beta.str();
    params["x0"] = x0;
    params["dt"] = dt;
    params["steps"] = steps;
    params["method"] = method;
    params["tol"] = tol;
    return params;
}

int emit_analysis(const std::string& mode, ordered_json params, double max_abs, double tol,
                  const std::string& out_path) {
    ordered_json doc;
    doc["mode"] = mode;
    doc["params"] = std::move(params);
    doc["max_abs"] = max_abs;
    doc["pass"] = max_abs <= tol;
    if (!write_text(out_path, doc.dump(2) + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitFail;
    }
    return max_abs <= tol ? kExitPass : kExitFail;
}

int cmd_analyze(const std::string& mode, std::string system, const std::string& beta_text,
                std::string x0_text, double dt, long long steps,
                const std::string& method_text, double tol_in, const std::string& out_path) {
    auto method = method_from_name(method_text);
    if (!method)
        return usage_error("--method must be rk4 or midpoint");
    if (dt == 0.0)
        return usage_error("--dt must be nonzero");
    if (steps < 1)
        return usage_error("--steps must be at least 1");

    if (mode == "drift") {
        if (system.empty())
            system = "r3";
        Rational beta(0);
        if (!beta_text.empty()) {
            auto b = parse_beta(beta_text);
            if (!b)
                return usage_error("--beta must be a rational");
            beta = *b;
        }
        if (x0_text.empty())
            x0_text = system == "r3" ? "1,2,3" : "0.4,0,0.3,0.2";
        auto x0 = parse_x0(x0_text);
        if (!x0)
            return usage_error("--x0 must be a comma-separated list of numbers");

        std::optional<SimulationSetup> setup;
        if (system == "r3") {
            if (x0->size() != 3)
                return usage_error("r3 needs a 3-component --x0");
            setup.emplace(make_r3_setup(beta));
        } else if (system == "r4") {
            if (x0->size() != 4)
                return usage_error("r4 needs a 4-component --x0");
            if (beta.is_zero())
                return usage_error("r4 needs beta != 0");
            setup.emplace(make_r4_setup(beta));
        } else {
            return usage_error("--system must be r3 or r4");
        }
        double tol = tol_in > 0 ? tol_in : 1e-8;

        Trajectory traj = integrate(setup->field, *x0, dt, static_cast<std::size_t>(steps),
                                    *method, system, beta);
        double max_abs = 0.0;
        for (const CompiledPoly& f : setup->invariants)
            max_abs = std::max(max_abs, invariant_drift(traj, f).max_abs_dev);
        return emit_analysis(mode,
                             analyze_params(system, beta, *x0, dt, steps, method_text, tol),
                             max_abs, tol, out_path);
    }

    if (mode == "conjugacy") {
        Rational beta(1);
        if (!beta_text.empty()) {
            auto b = parse_beta(beta_text);
            if (!b)
                return usage_error("--beta must be a rational");
            beta = *b;
        }
        if (beta.is_zero())
            return usage_error("conjugacy needs beta != 0");
        if (x0_text.empty())
            x0_text = "0.4,0,0.3,0.2";
        auto x0 = parse_x0(x0_text);
        if (!x0 || x0->size() != 4)
            return usage_error("conjugacy needs a 4-component --x0");
        double tol = tol_in > 0 ? tol_in : 1e-6;

        std::array<double, 4> w0{(*x0)[0], (*x0)[1], (*x0)[2], (*x0)[3]};
        double gap = conjugacy_gap(beta, w0, dt, static_cast<std::size_t>(steps), *method);
        return emit_analysis(mode, analyze_params("", beta, *x0, dt, steps, method_text, tol),
                             gap, tol, out_path);
    }

    if (mode == "newton-residual") {
        Rational beta(1);
        if (!beta_text.empty()) {
            auto b = parse_beta(beta_text);
            if (!b)
                return usage_error("--beta must be a rational");
            beta = *b;
        }
        if (beta.is_zero())
            return usage_error("newton-residual needs beta != 0");
        if (x0_text.empty())
            x0_text = "0.4,0,0.3,0.2";
        auto x0 = parse_x0(x0_text);
        if (!x0 || x0->size() != 4)
            return usage_error("newton-residual needs a 4-component --x0");
        double tol = tol_in > 0 ? tol_in : 1e-9;

        CanonicalSystem cs = canonical_system(beta);
        JetSystem js = lagrangian_system(beta);

        // exact on-shell second derivatives of q1, q2 along the flow
        auto second_derivative = [&](std::size_t i) {
            MultiPoly g(canonical_ring());
            for (std::size_t j = 0; j < 4; ++j)
                g += cs.field.component(j) * cs.field.component(i).derivative(j);
            return g;
        };
        CompiledField field(cs.field);
        CompiledPoly qdd1(second_derivative(0)), qdd2(second_derivative(1));
        CompiledPoly delta1(js.delta1()), delta2(js.delta2());

        Trajectory traj = integrate(field, *x0, dt, static_cast<std::size_t>(steps),
                                    *method, "r4", beta);
        double max_abs = 0.0;
        std::vector<double> rhs(4), jet(7);
        for (const NumericState& s : traj.samples) {
            field.eval(s.coords, rhs);
            jet[0] = s.time;
            jet[1] = s.coords[0];
            jet[2] = s.coords[1];
            jet[3] = rhs[0];
            jet[4] = rhs[1];
            jet[5] = qdd1.eval(s.coords);
            jet[6] = qdd2.eval(s.coords);
            max_abs = std::max(max_abs, std::abs(delta1.eval(jet)));
            max_abs = std::max(max_abs, std::abs(delta2.eval(jet)));
        }
        return emit_analysis(mode, analyze_params("", beta, *x0, dt, steps, method_text, tol),
                             max_abs, tol, out_path);
    }

    return usage_error("--mode must be drift, conjugacy or newton-residual");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic verification and numeric simulation of a "
                 "Rikitake-type dynamical system"};
    app.require_subcommand(1);

    // verify
    std::string beta_text;
    std::string json_path;
    std::uint64_t seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the symbolic certificate suite");
    verify->add_option("--beta", beta_text, "system parameter as a rational, e.g. 1, 3/2, -2")
        ->required();
    verify->add_option("--json", json_path, "also write a JSON report to this path");
    verify->add_option("--seed", seed, "seed for falsification witness sampling");

    // simulate
    std::string system, x0_text, out_path;
    std::string sim_beta = "0";
    double dt = 1e-3;
    long long steps = 10000;
    std::string method_text = "rk4";
    CLI::App* simulate = app.add_subcommand("simulate", "integrate a trajectory, write CSV");
    simulate->add_option("--system", system, "r3 (reduced) or r4 (canonical)")->required();
    simulate->add_option("--beta", sim_beta, "system parameter (rational)");
    simulate->add_option("--x0", x0_text, "initial state, comma-separated")->required();
    simulate->add_option("--dt", dt, "step size");
    simulate->add_option("--steps", steps, "number of steps");
    simulate->add_option("--method", method_text, "rk4 or midpoint");
    simulate->add_option("--out", out_path, "output CSV path (stdout when omitted)");

    // analyze
    std::string mode, an_system, an_beta, an_x0, an_out;
    double an_dt = 1e-3, an_tol = 0.0;
    long long an_steps = 10000;
    std::string an_method = "rk4";
    CLI::App* analyze =
        app.add_subcommand("analyze", "drift / conjugacy / newton-residual analysis");
    analyze->add_option("--mode", mode, "drift, conjugacy or newton-residual")->required();
    analyze->add_option("--system", an_system, "drift only: r3 or r4");
    analyze->add_option("--beta", an_beta, "system parameter (rational)");
    analyze->add_option("--x0", an_x0, "initial state, comma-separated");
    analyze->add_option("--dt", an_dt, "step size");
    analyze->add_option("--steps", an_steps, "number of steps");
    analyze->add_option("--method", an_method, "rk4 or midpoint");
    analyze->add_option("--tol", an_tol, "pass/fail threshold (defaults per mode)");
    analyze->add_option("--out", an_out, "output JSON path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(beta_text, json_path, seed);
        if (simulate->parsed())
            return cmd_simulate(system, sim_beta, x0_text, dt, steps, method_text, out_path);
        if (analyze->parsed())
            return cmd_analyze(mode, an_system, an_beta, an_x0, an_dt, an_steps, an_method,
                               an_tol, an_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
