#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curve.hpp"
#include "tropical.hpp"

namespace zhouval {

// Rings the criterion is decided on.
struct ComplexPolyRing {
    VarContextPtr vars;
};
struct RealPolyRing {
    VarContextPtr vars;  // real coordinates; lifted coefficient-identically
};
struct CurveRing {
    MonomialCurve curve;
    CurvePoint point;
};
using InterpolationRing = std::variant<ComplexPolyRing, RealPolyRing, CurveRing>;

// One (f_j, a_j) pair; a = 0 marks the designated f0. Weakly holomorphic
// inputs are truncated series and are accepted only in the curve ring.
struct InterpolationFunction {
    std::variant<Polynomial, TruncatedSeries> f;
    Rat a;
    std::string label;
};

struct InterpolationProblem {
    InterpolationRing ring;
    std::vector<InterpolationFunction> functions;
};

// The valuation witness: a monomial ray on C^n, or the rescaled t-order
// valuation on the curve.
struct RayWitness {
    RatVec weights;  // nu(z^alpha) = <weights, alpha>
};
struct CurveOrderWitness {
    Rat scale;  // nu = ord_pt / scale
    CurvePoint point;
};
using Witness = std::variant<RayWitness, CurveOrderWitness>;

struct FunctionDiagnostic {
    std::string label;
    Rat target_a;
    bool value_infinite = false;
    Rat value_under_witness;  // nu(f_j) under the returned witness
};

struct InterpolationVerdict {
    bool sigma_infinite = false;
    Rat sigma;
    Rat target;                         // sum of the positive a_j
    bool holds = false;                 // sigma == target
    bool indeterminate = false;         // API honesty; unreachable on this class
    bool converse_applicable = false;   // witness gives every coordinate positive value
    std::optional<Witness> witness;
    std::vector<Witness> all_witnesses;
    std::vector<FunctionDiagnostic> diagnostics;
    std::string note;
};

// Decides the criterion sigma(log|F|, phi) = sum a_j with F the product of
// all functions (including f0) and phi built from the a_j > 0 ones; when it
// holds, returns the rescaled minimizing valuation and re-verifies
// nu(f_j) = a_j and nu(f0) = 0 exactly before reporting success.
InterpolationVerdict check_interpolation(const InterpolationProblem& prob);

struct ZeroSetResult {
    bool is_origin_only = false;
    bool origin_in_zero_set = false;
    std::string description;
};

// C^n monomial case: set-cover combinatorics on coordinate subspaces.
// Curve case: common roots of the pullbacks via exact univariate gcd.
ZeroSetResult zero_set_is_origin(const std::vector<Polynomial>& functions,
                                 const InterpolationRing& ring);

// Corollaries for real-coefficient data: the lift P is coefficient-identical.
InterpolationProblem real_lift(const InterpolationProblem& prob);

}  // namespace zhouval
