#pragma once

// Verification layer: independent oracles (superoperator-route evaluations
// of the metric and the g-entropy, finite-difference Hessians) and the
// seeded trial suites that exercise every identity of the construction.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qig/channel.hpp"
#include "qig/gentropy.hpp"
#include "qig/petz.hpp"
#include "qig/unfold.hpp"

namespace qig {

// One asserted quantity. `abs_error` is |value - reference| for two-sided
// checks and the clipped violation magnitude for one-sided bounds, so
// pass <=> abs_error <= tolerance in both cases.
struct QuantityCheck {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct TrialReport {
    int trial_id = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::string f_name;
    std::string g_name;
    std::vector<QuantityCheck> checks;
    bool pass = true;
};

QuantityCheck make_check(std::string name, double value, double reference, double abs_error,
                         double tolerance);
void finalize_report(TrialReport& report);

// -------------------------------------------------------------------------
// independent oracles

// H_g via the explicit modular superoperator: g applied to the n^2 x n^2
// matrix of L_sigma R_{rho^{-1}} in the vec basis, paired with vec(sqrt(rho)).
// Slow route, used only to cross-check the spectral double sum.
double relative_g_entropy_superop(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  const ConvexG& g);

// Monotone metric via the explicit superoperator (K^f)^{-1} =
// R_rho^{-1} f(L_rho R_{rho^{-1}})^{-1} in the vec basis.
double petz_metric_superop(const DensityMatrix& rho, const TangentVectorS& a,
                           const TangentVectorS& b, const MonotoneF& f);

// Cross-check of the two readings of the pulled-back two-point function:
// the double sum with the p_k spectral weight (as implemented) versus the
// same sum without it, both against the operator-route value.
struct WeightConventionReport {
    double operator_route = 0.0;  // Tr(sqrt(rho) g(...) sqrt(rho)) via superoperator
    double weighted_sum = 0.0;    // sum g(q_j/p_k) p_k |<s_j|r_k>|^2
    double unweighted_sum = 0.0;  // sum g(q_j/p_k) |<s_j|r_k>|^2
};

WeightConventionReport weight_convention_report(const DensityMatrix& rho,
                                                const DensityMatrix& sigma, const ConvexG& g);

// -------------------------------------------------------------------------
// finite differences

// -d2/ds dt of H_g(pi(gamma_x(s)), pi(gamma_y(t))) at s = t = 0 with the
// curves gamma_x(s) = (U exp(is Hx), p + s vx). Four-point central stencil;
// throws StepTooLarge when the simplex leg would leave the faithful region.
double hessian_fd(const UnfoldedPoint& m, const TangentVectorM& x, const TangentVectorM& y,
                  const ConvexG& g, double step);

// -------------------------------------------------------------------------
// trials and suites

// One metric data-processing trial: random faithful state, traceless
// Hermitian tangent, kraus-rank-2 channel of the same dimension.
TrialReport metric_monotonicity_trial(int n, const MonotoneF& f, SplitMix64& rng);

enum class Suite { split, expansion, hessian, monotonicity, fg_bridge, kernel, classical };

const std::vector<std::string>& suite_names();
std::string suite_name(Suite s);
Suite suite_from_name(const std::string& name);  // ConfigError listing valid names

struct SuiteConfig {
    Suite suite = Suite::split;
    std::vector<int> n_values;  // empty -> suite default
    int trials = -1;            // < 0 -> suite default
    std::uint64_t seed = 42;
    double step = 1e-3;  // hessian suite
    double tol = -1.0;   // < 0 -> suite default (primary tolerance)
};

// Deterministic report list; same config -> byte-identical JSON.
std::vector<TrialReport> run_suite(const SuiteConfig& config);

bool all_pass(const std::vector<TrialReport>& reports);
double max_abs_error(const std::vector<TrialReport>& reports);

nlohmann::ordered_json report_to_json(const TrialReport& report);
nlohmann::ordered_json reports_to_json(const std::vector<TrialReport>& reports);
// one row per check; `suite` fills the leading column
std::string reports_to_csv(const std::vector<TrialReport>& reports, const std::string& suite);

// shortest round-trip decimal representation (matches the JSON encoding)
std::string format_double(double x);

// sample_simplex conditioned on min_j p_j >= floor; identity suites compare
// absolute errors at 1e-9..1e-10, which 1/p amplification near the simplex
// boundary would drown in double precision
ProbabilityVector sample_interior_simplex(std::size_t n, SplitMix64& rng, double floor);

}  // namespace qig
