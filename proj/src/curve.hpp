#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polynomial.hpp"

namespace zhouval {

// Exact univariate Laurent polynomial in the normalization parameter t,
// sparse over possibly negative exponents.
using TSeriesTerms = std::map<int64_t, Rat>;

// The germ z1 = t^p, z2 = t^q with gcd(p,q) = 1, p < q; X = {z1^q = z2^p}.
class MonomialCurve {
public:
    MonomialCurve(unsigned p, unsigned q);
    unsigned p() const { return p_; }
    unsigned q() const { return q_; }

    // Frobenius number of the numerical semigroup <p, q>: pq - p - q.
    int64_t frobenius() const;
    bool semigroup_contains(int64_t e) const;

    // Exact pullback f(t^p, t^q); identically zero iff f lies in the ideal
    // (z1^q - z2^p).
    TSeriesTerms pullback(const Polynomial& f) const;

    // Universal denominator z1^m with m = ceil((frobenius + 1) / p): its
    // pullback order clears every semigroup gap.
    Polynomial universal_denominator(const VarContextPtr& vars) const;
    unsigned denominator_power() const;

private:
    unsigned p_, q_;
};

// A curve point: the singular origin (t = 0), a rational t0 != 0, or the
// symbolic tag "a primitive k-th root of unity".
struct OriginPoint {};
struct RationalPoint {
    Rat t0;
};
struct UnitRootPoint {
    unsigned k;
};
using CurvePoint = std::variant<OriginPoint, RationalPoint, UnitRootPoint>;

CurvePoint curve_origin();
CurvePoint curve_point_at(const Rat& t0);       // t0 != 0
CurvePoint curve_point_unit_root(unsigned k);   // primitive k-th root of 1
bool is_origin(const CurvePoint& pt);
std::string curve_point_str(const CurvePoint& pt);

// Extended valuation value: finite integer or +infinity.
struct OrderValue {
    bool infinite = false;
    int64_t value = 0;
};

// t-order of the pullback of f at pt; +infinity iff f is in the defining
// ideal. Orders at a primitive k-th root of unity use exact division by the
// k-th cyclotomic polynomial (rational coefficients force equal multiplicity
// across conjugate roots).
OrderValue pullback_order(const Polynomial& f, const MonomialCurve& x, const CurvePoint& pt);

// Order of a Laurent polynomial in t at the given point.
OrderValue series_order(const TSeriesTerms& s, const CurvePoint& pt);

// Truncated series germ: coefficients are authoritative strictly below the
// truncation order.
struct TruncatedSeries {
    TSeriesTerms coeffs;
    int64_t truncation = 0;
};

TruncatedSeries series_from_terms(TSeriesTerms terms, int64_t truncation);

struct WeakMembership {
    bool in_ring = false;   // germ of O_{X,o}
    bool in_weak = false;   // germ of O^w_{X,o} (any t-germ: no negative exponents)
};

// Requires truncation > Frobenius number, otherwise membership is not
// determined by the visible coefficients.
WeakMembership weakly_holomorphic_membership(const TruncatedSeries& s, const MonomialCurve& x);

// Multiply a truncated series by a polynomial's pullback (exact; truncation
// shifts by the pullback's order floor).
TruncatedSeries series_mul_polynomial(const TruncatedSeries& s, const Polynomial& f,
                                      const MonomialCurve& x);

// t-order at the origin of a truncated series. Throws kPrecondition when all
// visible coefficients vanish (the order is not determined).
int64_t series_origin_order(const TruncatedSeries& s);

// Relative type on the curve: ord(g) / min_j( ord(f_j)/a_j ) at pt.
// Requires g outside the defining ideal and every f_j of finite positive
// order at pt.
Rat relative_type_curve(const Polynomial& g, const std::vector<std::pair<Polynomial, Rat>>& phi,
                        const MonomialCurve& x, const CurvePoint& pt);

// The valuation ord_pt on O_{X,pt}; throws kPrecondition for ideal members.
int64_t curve_valuation(const Polynomial& f, const MonomialCurve& x, const CurvePoint& pt);

}  // namespace zhouval
