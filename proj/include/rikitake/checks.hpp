#pragma once

#include "rikitake/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rikitake {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string residual; // summary text; empty for skipped checks
};

// Runs the full symbolic certificate suite for the given beta. Checks that
// need the beta != 0 layer are reported as skipped when beta = 0. The seed
// only drives the sample-point witnesses attached to falsification checks;
// pass/fail is decided symbolically.
std::vector<CheckResult> run_verification(const Rational& beta, std::uint64_t seed = 0);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace rikitake
