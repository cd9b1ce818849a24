#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weight.hpp"

namespace zhouval {

// Monomial valuation: min over the support of g of <w, alpha>. Throws on the
// zero polynomial.
Rat trop_value(const Polynomial& g, const RatVec& w);

struct RayEval {
    RatVec ray;
    Rat numerator;
    Rat denominator;
};

// sigma(log|g|, phi) over the candidate-ray certificate. `infinite` encodes
// the g = 0 convention.
struct RelativeTypeResult {
    bool infinite = false;
    Rat value;
    std::vector<RatVec> witnesses;
    std::vector<RayEval> certificate;
};

// Relative type of log|g| against phi on C^n near the origin, computed
// exactly as the infimum of trop(g,w)/phi(w) over the standard simplex.
// Both numerator and denominator are piecewise linear on the simplex, so the
// infimum is attained at a vertex of their common linearity refinement;
// vertices where the denominator vanishes are limits of constant-ratio edges
// and never carry the infimum. Requires monomial-supported phi vanishing at
// the origin.
RelativeTypeResult relative_type(const Polynomial& g, const AnalyticWeight& phi);

// Relative type sigma(psi, phi) of one weight against another (same candidate
// machinery, numerator = tropical profile of psi).
RelativeTypeResult relative_type_weight(const AnalyticWeight& psi, const AnalyticWeight& phi);

// Jumping number c^G(phi) = sup{ c : |G|^2 |f0|^2 e^(-2 phi0) e^(-2 c phi)
// integrable near 0 }, exact on monomial-supported weights via the Newton
// polyhedron threshold. A null background means |f0|^2 e^(-2 phi0) = 1.
Rat jumping_number(const AnalyticWeight& phi, const Polynomial& g,
                   const BackgroundDensity* rho = nullptr);

// Throws kPrecondition unless |f0|^2 e^(-2 phi0) is locally integrable.
void require_integrable_background(const BackgroundDensity& rho, size_t nvars);

struct ZhouCertificate {
    bool cond1 = false;     // |z|^(2N) tames the density for some N
    bool cond2 = false;     // density non-integrable against e^(-2 Phi)
    bool critical = false;  // combined jumping number equals 1 exactly
    Rat combined_jumping_number;
    std::string report;
};

// Decides Definition-(1)/(2) of a local Zhou weight exactly on the monomial
// class and the "critical" tightness check that is necessary for (3).
ZhouCertificate certify_zhou_candidate(const AnalyticWeight& phi_candidate,
                                       const BackgroundDensity& rho);

// Concave piecewise-linear function. breakpoints[0] anchors the represented
// range; slopes has one more entry than breakpoints (the two outer slopes
// extend beyond the ends).
struct PiecewiseLinearFn {
    std::vector<Rat> breakpoints;
    std::vector<Rat> values;
    std::vector<Rat> slopes;

    Rat eval(const Rat& t) const;
    const Rat& final_slope() const { return slopes.back(); }
    bool concave() const;
    bool consistent() const;
};

// Tian function Tn(t) = sup{ c : |f0|^2 e^(-2 phi0) e^(2 t psi) e^(-2 c phi)
// integrable } on [t_lo, t_hi], exact via the parametric threshold: for each
// density monomial and candidate ray the admissible c is affine in t, and Tn
// is the lower envelope of those lines.
PiecewiseLinearFn tian_function(const AnalyticWeight& phi, const AnalyticWeight& psi,
                                const BackgroundDensity& rho, const Rat& t_lo, const Rat& t_hi);

// Independent spot evaluation of Tn(t) used to cross-check the envelope.
Rat tian_value_at(const AnalyticWeight& phi, const AnalyticWeight& psi,
                  const BackgroundDensity& rho, const Rat& t);

AnalyticWeight truncate_weight(const AnalyticWeight& phi, unsigned n);

}  // namespace zhouval
