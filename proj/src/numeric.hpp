#pragma once

#include <cstdint>
#include <vector>

#include "tropical.hpp"

namespace zhouval {

// Deterministic Monte-Carlo plan. Identical (seed, stream_count, t_values,
// samples_per_t) reproduce bit-identical estimates regardless of thread
// count: streams are independent counter-seeded generators and stream sums
// are combined in stream order.
struct SamplingPlan {
    unsigned dimension = 1;  // 1 or 2
    std::vector<double> t_values;
    uint64_t samples_per_t = 100000;
    uint64_t seed = 20240901;
    unsigned stream_count = 8;
};

void validate_plan(const SamplingPlan& plan);

struct TEstimate {
    double t = 0;
    double estimate = 0;
    double stderr_est = 0;
    double acceptance_rate = 1.0;
};

struct EstimateReport {
    std::vector<TEstimate> rows;
    double extrapolated = 0;     // a from the a + b/t fit on the 3 largest t
    double fit_residual = 0;
    double exact_reference = 0;  // exact-layer value the limit is checked against
    double relative_deviation = 0;
};

// Monte-Carlo estimate of the ratio
//   integral_{Phi < -t} |f0|^2 e^(-2 phi0) (-psi)  /  ( t * same-mass )
// whose t -> infinity limit is the relative type sigma(psi, Phi). The
// sublevel region is the tropical one {D_Phi > t} (an O(1)-equivalent
// comparison region with polyhedral preimage in log-radial coordinates).
// Requires a certified critical Zhou candidate Phi.
EstimateReport estimate_relative_type_integral(const AnalyticWeight& phi_max,
                                               const AnalyticWeight& psi,
                                               const BackgroundDensity& rho,
                                               const SamplingPlan& plan);

struct MassDecayRow {
    double t = 0;
    double mass = 0;
    double mass_stderr = 0;
    double statistic_raw = 0;   // -log(mass) / (2t)
    double statistic_rate = 0;  // -(log mass(t_i) - log mass(t_{i-1})) / (2 dt); raw at i = 0
    double acceptance_rate = 1.0;
};

struct MassDecayReport {
    std::vector<MassDecayRow> rows;
};

// Sublevel mass decay: the raw statistic tends to 1 with an O(1/t)
// constant offset; the two-point rate statistic removes the offset and is
// the quantity pinned by the acceptance suite. Requires the combined
// jumping number of phi against rho to equal 1 exactly.
MassDecayReport estimate_mass_decay(const AnalyticWeight& phi, const BackgroundDensity& rho,
                                    const SamplingPlan& plan);

struct IntegrabilityBracket {
    Rat lo;  // integrable side
    Rat hi;  // non-integrable side
};

// Brackets the jumping number c^G(phi) by annulus-wise quadrature of
// |G|^2 e^(-2 c phi): shell masses in log-radial shells decay geometrically
// on the integrable side and grow on the other. Fully independent of the
// tropical layer (evaluates the exact weight, not its tropicalization).
// Bisects the given bracket to width <= 2^-7; lo must classify integrable
// and hi non-integrable or kPrecondition is thrown; kBudget when a probe
// stays indeterminate at the maximum shell budget.
IntegrabilityBracket integrability_bisect(const AnalyticWeight& phi, const Polynomial& g,
                                          const Rat& lo, const Rat& hi);

// Shell-sum classification of a single exponent c (exposed for tests).
enum class IntegrabilityClass { kIntegrable, kNonIntegrable, kIndeterminate };
IntegrabilityClass classify_integrability(const AnalyticWeight& phi, const Polynomial& g,
                                          double c);

unsigned numeric_thread_cap();

}  // namespace zhouval
