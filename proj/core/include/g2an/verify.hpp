#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/frobenius.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace g2an {

// Inputs handed to a check for one (n, trial) cell: a prebuilt admissible
// point and a deterministic jet. Checks needing more randomness derive it
// from (seed, check_id, n, trial).
struct CheckContext {
    const ParamPoint& point;
    const FrobeniusPoint& fp;
    const Jet2& jet;
    std::uint64_t seed;
    int trial;
    long precision_bits;
};

struct CheckResult {
    BigReal residual;  // |value| of a vanishing expression, or |lhs - rhs|
    BigReal termscale; // scale against which the residual is judged
    BigReal rel;       // residual / termscale; 0 when both vanish
};

CheckResult make_result(const BigReal& residual, const BigReal& termscale);

using CheckFn = std::function<CheckResult(const CheckContext&)>;

struct CheckSpec {
    std::string check_id;
    std::vector<int> n_values;
    int trials = 20;
    double tolerance = 1e-30;
    bool gating = true;
    std::vector<std::string> covers; // operation names, for the coverage meta-test
    CheckFn run;
};

struct ReportEntry {
    std::string check_id;
    int n = 0;
    std::uint64_t seed = 0;
    int trial = 0;
    std::string residual;     // decimal strings, 40 significant digits
    std::string termscale;
    std::string rel_residual;
    double tolerance = 0.0;
    bool gating = true;
    bool passed = true;
    // Failure artifacts: the offending inputs, serialized for replay.
    std::optional<std::string> point_json;
    std::optional<std::string> jet_json;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;
    struct Summary {
        int total = 0;
        int passed = 0;
        int failed = 0;       // gating failures only
        int informational_failed = 0;
        double wall_time_seconds = 0.0;
    } summary;
    std::uint64_t seed = 0;
    long precision_bits = 0;

    bool all_gating_passed() const { return summary.failed == 0; }
};

// Uniform gating tolerance: 1e-30 at >= 256 bits, 1e-12 at 128 bits, decade
// interpolation between.
double default_tolerance(long precision_bits);

// Every identity of the engine as a named, seeded, reproducible check.
std::vector<CheckSpec> default_registry(long precision_bits);

struct SuiteConfig {
    std::uint64_t seed = 42;
    long precision_bits = 256;
    int threads = 1;
    std::optional<double> tolerance_override;  // replaces every gating tolerance
    std::optional<std::vector<int>> n_filter;  // intersected with each check's n range
    int trials_override = 0;                   // 0 keeps each check's own count
};

VerificationReport run_suite(const std::vector<CheckSpec>& registry, const SuiteConfig& cfg);

enum class DerivKind { lame, rotation };

// Central finite difference of h_i (lame; j ignored) or gamma_ij (rotation)
// along u_k, via Newton inversion of t -> u around `base`. Independent of the
// closed-form partials it is used to certify.
BigComplex derivative_oracle(const ParamPoint& base, DerivKind kind, int i, int j, int k);

} // namespace g2an
