#include "curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zhouval {

MonomialCurve::MonomialCurve(unsigned p, unsigned q) : p_(p), q_(q) {
    if (p == 0 || q == 0 || p >= q)
        throw Error(ErrCode::kInvalidArgument, "monomial curve needs 0 < p < q");
    if (std::gcd(p, q) != 1)
        throw Error(ErrCode::kInvalidArgument, "monomial curve needs gcd(p, q) = 1");
}

int64_t MonomialCurve::frobenius() const {
    return static_cast<int64_t>(p_) * q_ - p_ - q_;
}

bool MonomialCurve::semigroup_contains(int64_t e) const {
    if (e < 0) return false;
    if (e > frobenius()) return true;
    for (int64_t j = 0; j * q_ <= e; ++j)
        if ((e - j * q_) % p_ == 0) return true;
    return false;
}

TSeriesTerms MonomialCurve::pullback(const Polynomial& f) const {
    if (f.nvars() != 2)
        throw Error(ErrCode::kInvalidArgument, "curve pullback needs a two-variable polynomial");
    TSeriesTerms out;
    for (const auto& [e, c] : f.terms()) {
        int64_t k = static_cast<int64_t>(e[0]) * p_ + static_cast<int64_t>(e[1]) * q_;
        auto [it, inserted] = out.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

unsigned MonomialCurve::denominator_power() const {
    // Smallest m with m*p > frobenius: all shifted exponents land in <p,q>.
    int64_t f = frobenius();
    return static_cast<unsigned>((f + p_) / p_);
}

Polynomial MonomialCurve::universal_denominator(const VarContextPtr& vars) const {
    if (vars->size() != 2)
        throw Error(ErrCode::kInvalidArgument, "universal denominator lives in two variables");
    return Polynomial::variable(vars, 0, denominator_power());
}

CurvePoint curve_origin() { return OriginPoint{}; }

CurvePoint curve_point_at(const Rat& t0) {
    if (t0.is_zero())
        throw Error(ErrCode::kInvalidArgument, "t = 0 is the origin, not a smooth point");
    return RationalPoint{t0};
}

CurvePoint curve_point_unit_root(unsigned k) {
    if (k == 0) throw Error(ErrCode::kInvalidArgument, "unit-root order must be positive");
    return UnitRootPoint{k};
}

bool is_origin(const CurvePoint& pt) { return std::holds_alternative<OriginPoint>(pt); }

std::string curve_point_str(const CurvePoint& pt) {
    if (std::holds_alternative<OriginPoint>(pt)) return "t=0";
    if (const auto* r = std::get_if<RationalPoint>(&pt)) return "t=" + r->t0.str();
    return "t=primitive " + std::to_string(std::get<UnitRootPoint>(pt).k) + "-th root of 1";
}

namespace {

// Dense integer-exponent polynomial over Rat, lowest degree first, for the
// multiplicity computations. `shift` is the power of t factored out.
struct DensePoly {
    std::vector<Rat> c;  // c[i] is the coefficient of t^i
    int64_t shift = 0;

    bool zero() const { return c.empty(); }
};

DensePoly densify(const TSeriesTerms& s) {
    DensePoly d;
    if (s.empty()) return d;
    d.shift = s.begin()->first;
    int64_t top = s.rbegin()->first;
    d.c.assign(static_cast<size_t>(top - d.shift + 1), Rat(0));
    for (const auto& [e, coef] : s) d.c[static_cast<size_t>(e - d.shift)] = coef;
    return d;
}

// Multiplicity of the root t0 != 0 via repeated exact synthetic division.
int64_t multiplicity_at(DensePoly p, const Rat& t0) {
    int64_t mult = 0;
    while (true) {
        // Evaluate by Horner; stop as soon as t0 is not a root.
        Rat v(0);
        for (size_t i = p.c.size(); i-- > 0;) v = v * t0 + p.c[i];
        if (!v.is_zero()) return mult;
        // Divide by (t - t0): synthetic division from the top.
        std::vector<Rat> qc(p.c.size() - 1, Rat(0));
        Rat carry(0);
        for (size_t i = p.c.size(); i-- > 1;) {
            carry = p.c[i] + carry * t0;
            qc[i - 1] = carry;
        }
        p.c = std::move(qc);
        ++mult;
        if (p.c.empty()) throw Error(ErrCode::kInternal, "division exhausted a nonzero polynomial");
    }
}

// k-th cyclotomic polynomial, integer coefficients, by the recursive exact
// division (t^k - 1) / prod_{d | k, d < k} Phi_d.
std::vector<Rat> cyclotomic(unsigned k);

// Divides a by b; returns false (leaving quot untouched) when the
// remainder is nonzero.
bool divide(const std::vector<Rat>& a, const std::vector<Rat>& b, std::vector<Rat>& quot) {
    if (b.empty() || b.back().is_zero()) throw Error(ErrCode::kInternal, "division by zero poly");
    if (a.size() < b.size()) {
        for (const Rat& x : a)
            if (!x.is_zero()) return false;
        quot.clear();
        return true;
    }
    std::vector<Rat> r = a;
    std::vector<Rat> q(a.size() - b.size() + 1, Rat(0));
    Rat lead_inv = b.back().reciprocal();
    for (size_t i = q.size(); i-- > 0;) {
        Rat f = r[i + b.size() - 1] * lead_inv;
        q[i] = f;
        if (f.is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b[j];
    }
    for (const Rat& x : r)
        if (!x.is_zero()) return false;
    quot = std::move(q);
    return true;
}

std::vector<Rat> cyclotomic(unsigned k) {
    // t^k - 1
    std::vector<Rat> acc(static_cast<size_t>(k) + 1, Rat(0));
    acc[0] = Rat(-1);
    acc[k] = Rat(1);
    for (unsigned d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        std::vector<Rat> phi_d = cyclotomic(d);
        std::vector<Rat> quot;
        if (!divide(acc, phi_d, quot))
            throw Error(ErrCode::kInternal, "cyclotomic division was not exact");
        acc = std::move(quot);
    }
    return acc;
}

int64_t multiplicity_at_unit_root(DensePoly p, unsigned k) {
    std::vector<Rat> phi = cyclotomic(k);
    int64_t mult = 0;
    while (true) {
        std::vector<Rat> quot;
        if (!divide(p.c, phi, quot)) return mult;
        p.c = std::move(quot);
        ++mult;
        bool all_zero = true;
        for (const Rat& x : p.c) all_zero = all_zero && x.is_zero();
        if (all_zero) throw Error(ErrCode::kInternal, "division exhausted a nonzero polynomial");
    }
}

}  // namespace

OrderValue series_order(const TSeriesTerms& s, const CurvePoint& pt) {
    if (s.empty()) return OrderValue{true, 0};
    if (is_origin(pt)) return OrderValue{false, s.begin()->first};
    DensePoly d = densify(s);
    if (const auto* r = std::get_if<RationalPoint>(&pt)) {
        // The t^shift factor is a unit at t0 != 0.
        return OrderValue{false, multiplicity_at(d, r->t0)};
    }
    unsigned k = std::get<UnitRootPoint>(pt).k;
    if (k == 1) return OrderValue{false, multiplicity_at(d, Rat(1))};
    return OrderValue{false, multiplicity_at_unit_root(d, k)};
}

OrderValue pullback_order(const Polynomial& f, const MonomialCurve& x, const CurvePoint& pt) {
    return series_order(x.pullback(f), pt);
}

TruncatedSeries series_from_terms(TSeriesTerms terms, int64_t truncation) {
    TruncatedSeries s;
    for (auto& [e, c] : terms)
        if (!c.is_zero() && e < truncation) s.coeffs.emplace(e, std::move(c));
    s.truncation = truncation;
    return s;
}

WeakMembership weakly_holomorphic_membership(const TruncatedSeries& s, const MonomialCurve& x) {
    if (s.truncation <= x.frobenius())
        throw Error(ErrCode::kPrecondition,
                    "truncation order " + std::to_string(s.truncation) +
                        " does not exceed the Frobenius number " + std::to_string(x.frobenius()));
    WeakMembership m;
    m.in_weak = true;
    m.in_ring = true;
    for (const auto& [e, c] : s.coeffs) {
        if (c.is_zero()) continue;
        if (e < 0) {
            m.in_weak = false;
            m.in_ring = false;
            break;
        }
        if (!(e == 0 || x.semigroup_contains(e))) m.in_ring = false;
    }
    return m;
}

TruncatedSeries series_mul_polynomial(const TruncatedSeries& s, const Polynomial& f,
                                      const MonomialCurve& x) {
    TSeriesTerms fp = x.pullback(f);
    if (fp.empty()) throw Error(ErrCode::kInvalidArgument, "multiplier lies in the defining ideal");
    int64_t f_min = fp.begin()->first;
    TruncatedSeries out;
    out.truncation = s.truncation + f_min;
    for (const auto& [ef, cf] : fp)
        for (const auto& [es, cs] : s.coeffs) {
            int64_t e = ef + es;
            if (e >= out.truncation) continue;
            auto [it, inserted] = out.coeffs.try_emplace(e, cf * cs);
            if (!inserted) {
                it->second += cf * cs;
                if (it->second.is_zero()) out.coeffs.erase(it);
            }
        }
    return out;
}

int64_t series_origin_order(const TruncatedSeries& s) {
    for (const auto& [e, c] : s.coeffs)
        if (!c.is_zero()) return e;
    throw Error(ErrCode::kPrecondition,
                "series order is not determined below the truncation order");
}

Rat relative_type_curve(const Polynomial& g, const std::vector<std::pair<Polynomial, Rat>>& phi,
                        const MonomialCurve& x, const CurvePoint& pt) {
    if (phi.empty()) throw Error(ErrCode::kInvalidArgument, "empty weight on the curve");
    OrderValue og = pullback_order(g, x, pt);
    if (og.infinite)
        throw Error(ErrCode::kPrecondition, "g lies in the defining ideal of the curve");
    bool first = true;
    Rat den;
    for (const auto& [f, a] : phi) {
        if (a.sign() <= 0) throw Error(ErrCode::kInvalidArgument, "weight exponent a_j must be positive");
        OrderValue of = pullback_order(f, x, pt);
        if (of.infinite || of.value <= 0)
            throw Error(ErrCode::kPrecondition,
                        "weight generator '" + f.str() + "' is not singular at " + curve_point_str(pt));
        Rat v = Rat(of.value) / a;
        if (first || v < den) {
            den = v;
            first = false;
        }
    }
    return Rat(og.value) / den;
}

int64_t curve_valuation(const Polynomial& f, const MonomialCurve& x, const CurvePoint& pt) {
    OrderValue o = pullback_order(f, x, pt);
    if (o.infinite)
        throw Error(ErrCode::kPrecondition, "input lies in the defining ideal of the curve");
    return o.value;
}

}  // namespace zhouval
