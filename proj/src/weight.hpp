#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"
#include "simplex_candidates.hpp"

namespace zhouval {

// One generator pair (f_j, a_j) of an analytic-singularity weight.
struct WeightGen {
    Polynomial f;
    Rat a;  // positive
};

// The weight c * log( sum_j |f_j|^(1/a_j) ). This is the only weight class
// the exact layer computes with; the tropical calculus additionally requires
// every generator to be a single monomial (no cancellation locus), and
// refuses anything else.
class AnalyticWeight {
public:
    AnalyticWeight(Rat scale, std::vector<WeightGen> gens);

    const Rat& scale() const { return scale_; }
    const std::vector<WeightGen>& gens() const { return gens_; }
    const VarContextPtr& vars() const { return gens_.front().f.vars(); }
    size_t nvars() const { return vars()->size(); }

    // Every generator vanishes at the origin (the weight tends to -inf).
    bool vanishes_at_origin() const;
    // Every generator is a single monomial.
    bool monomial_supported() const;

    // Tropical profile along a monomial ray: c * min_j trop(f_j, w) / a_j.
    // Defined for arbitrary generators.
    Rat value_on_ray(const RatVec& w) const;

    // The linear forms whose min gives value_on_ray, i.e. scale * alpha / a_j
    // per support point. Throws kDomain unless monomial_supported().
    std::vector<RatVec> tropical_forms() const;

    // Appends (z_k^N, 1) for every variable, realizing max{phi, N log|z|}
    // up to O(1).
    AnalyticWeight truncated(unsigned n) const;

    AnalyticWeight scaled_by(const Rat& lambda) const;

    std::string str() const;

private:
    Rat scale_;
    std::vector<WeightGen> gens_;
};

// The density |f0|^2 e^(-2 phi0) against which Zhou weights are certified.
struct BackgroundDensity {
    std::vector<Polynomial> f0;
    std::optional<AnalyticWeight> phi0;
};

BackgroundDensity unit_background(const VarContextPtr& vars);

// Nonnegative rational direction, not identically zero.
void validate_ray(const RatVec& w);

std::string ray_str(const RatVec& w);

}  // namespace zhouval
