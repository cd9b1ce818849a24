#pragma once

#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace zhouval {

using RatVec = std::vector<Rat>;

Rat dot(const RatVec& w, const RatVec& v);
Rat dot(const RatVec& w, const Exponents& e);

RatVec to_ratvec(const Exponents& e);

// A tropical polynomial: min of rational linear forms on the nonnegative
// orthant. Piecewise linear, concave, 1-homogeneous.
struct MinForm {
    std::vector<RatVec> forms;
    Rat eval(const RatVec& x) const;
};

// Vertices of the polyhedral subdivision of the standard simplex
// {w >= 0, sum w = 1} cut by the tie hyperplanes <u - v, w> = 0 over pairs
// u, v within each family. Every 0-cell of the common linearity refinement
// of the families' min-functions appears in the result; extra points of the
// simplex may appear and are harmless for min/max evaluation. Deterministic
// lexicographic order.
std::vector<RatVec> simplex_candidates(size_t n, const std::vector<std::vector<RatVec>>& families);

}  // namespace zhouval
