#include "tropical.hpp"

#include <algorithm>
#include <sstream>

namespace zhouval {

namespace {

// Linear forms gamma + (1,...,1) for gamma in the support of p.
std::vector<RatVec> shifted_support_forms(const Polynomial& p) {
    std::vector<RatVec> out;
    for (const auto& e : p.support()) {
        RatVec v = to_ratvec(e);
        for (Rat& x : v) x += Rat(1);
        out.push_back(std::move(v));
    }
    return out;
}

Rat min_form_value(const std::vector<RatVec>& forms, const RatVec& w) {
    Rat best = dot(w, forms.front());
    for (size_t j = 1; j < forms.size(); ++j) {
        Rat v = dot(w, forms[j]);
        if (v < best) best = v;
    }
    return best;
}

void require_trop_weight(const AnalyticWeight& phi, const char* who) {
    if (!phi.monomial_supported())
        throw Error(ErrCode::kDomain, std::string(who) + ": weight has a non-monomial generator; "
                                                         "outside the exactly-computable class");
    if (!phi.vanishes_at_origin())
        throw Error(ErrCode::kPrecondition,
                    std::string(who) + ": weight does not vanish at the origin");
}

// Combined density exponent offset -D0(x) from phi0, as tropical forms.
// Empty when phi0 is absent or bounded.
std::vector<RatVec> background_forms(const BackgroundDensity& rho) {
    if (!rho.phi0) return {};
    return rho.phi0->tropical_forms();
}

Rat eval_background(const std::vector<RatVec>& d0_forms, const RatVec& w) {
    if (d0_forms.empty()) return Rat(0);
    return min_form_value(d0_forms, w);
}

void validate_background(const BackgroundDensity& rho, size_t nvars) {
    if (rho.f0.empty())
        throw Error(ErrCode::kInvalidArgument, "background density needs at least one f0 component");
    bool nonzero = false;
    for (const auto& f : rho.f0) {
        if (f.nvars() != nvars)
            throw Error(ErrCode::kInvalidArgument, "background f0 variable count mismatch");
        nonzero = nonzero || !f.is_zero();
    }
    if (!nonzero) throw Error(ErrCode::kInvalidArgument, "background f0 is identically zero");
    if (rho.phi0 && !rho.phi0->monomial_supported())
        throw Error(ErrCode::kDomain,
                    "background phi0 has a non-monomial generator; refusing to approximate");
}

}  // namespace

Rat trop_value(const Polynomial& g, const RatVec& w) {
    if (g.is_zero()) throw Error(ErrCode::kInvalidArgument, "tropical value of the zero polynomial");
    if (w.size() != g.nvars()) throw Error(ErrCode::kInvalidArgument, "ray dimension mismatch");
    bool have = false;
    Rat best;
    for (const auto& [e, c] : g.terms()) {
        Rat v = dot(w, e);
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return best;
}

namespace {

RelativeTypeResult ratio_infimum(const std::vector<RatVec>& numer_forms,
                                 const std::vector<RatVec>& denom_forms, size_t n) {
    auto cands = simplex_candidates(n, {numer_forms, denom_forms});
    RelativeTypeResult res;
    bool have = false;
    for (const RatVec& w : cands) {
        Rat num = min_form_value(numer_forms, w);
        Rat den = min_form_value(denom_forms, w);
        res.certificate.push_back({w, num, den});
        if (den.sign() <= 0) continue;  // ratio +inf or a constant-ratio edge limit
        Rat ratio = num / den;
        if (!have || ratio < res.value) {
            res.value = ratio;
            have = true;
        }
    }
    if (!have)
        throw Error(ErrCode::kInternal, "no candidate ray with positive weight value (degenerate weight)");
    for (const auto& ev : res.certificate)
        if (ev.denominator.sign() > 0 && ev.numerator == res.value * ev.denominator)
            res.witnesses.push_back(ev.ray);
    return res;
}

}  // namespace

RelativeTypeResult relative_type(const Polynomial& g, const AnalyticWeight& phi) {
    require_trop_weight(phi, "relative_type");
    if (g.nvars() != phi.nvars()) throw Error(ErrCode::kInvalidArgument, "variable count mismatch");
    if (g.is_zero()) {
        RelativeTypeResult res;
        res.infinite = true;
        return res;
    }
    std::vector<RatVec> numer;
    for (const auto& e : g.support()) numer.push_back(to_ratvec(e));
    return ratio_infimum(numer, phi.tropical_forms(), phi.nvars());
}

RelativeTypeResult relative_type_weight(const AnalyticWeight& psi, const AnalyticWeight& phi) {
    require_trop_weight(phi, "relative_type");
    require_trop_weight(psi, "relative_type (numerator)");
    if (psi.nvars() != phi.nvars()) throw Error(ErrCode::kInvalidArgument, "variable count mismatch");
    return ratio_infimum(psi.tropical_forms(), phi.tropical_forms(), phi.nvars());
}

void require_integrable_background(const BackgroundDensity& rho, size_t nvars) {
    validate_background(rho, nvars);
    auto d0 = background_forms(rho);
    std::vector<std::vector<RatVec>> fams;
    if (!d0.empty()) fams.push_back(d0);
    auto cands = simplex_candidates(nvars, fams);
    for (const auto& f : rho.f0) {
        if (f.is_zero()) continue;
        for (const auto& gamma : f.support()) {
            RatVec shifted = to_ratvec(gamma);
            for (Rat& x : shifted) x += Rat(1);
            for (const RatVec& w : cands) {
                Rat margin = dot(w, shifted) - eval_background(d0, w);
                if (margin.sign() <= 0)
                    throw Error(ErrCode::kPrecondition,
                                "|f0|^2 e^(-2 phi0) is not locally integrable near the origin");
            }
        }
    }
}

Rat jumping_number(const AnalyticWeight& phi, const Polynomial& g, const BackgroundDensity* rho) {
    require_trop_weight(phi, "jumping_number");
    if (g.is_zero()) throw Error(ErrCode::kInvalidArgument, "jumping number of G = 0");
    if (g.nvars() != phi.nvars()) throw Error(ErrCode::kInvalidArgument, "variable count mismatch");

    BackgroundDensity unit = unit_background(phi.vars());
    const BackgroundDensity& bg = rho ? *rho : unit;
    require_integrable_background(bg, phi.nvars());

    auto d_phi = phi.tropical_forms();
    auto d0 = background_forms(bg);
    std::vector<std::vector<RatVec>> fams{d_phi};
    if (!d0.empty()) fams.push_back(d0);
    auto cands = simplex_candidates(phi.nvars(), fams);

    // Torus averaging turns |G f0_i|^2 into the sum of its support
    // monomials, so the threshold is the min over those monomials of the
    // per-monomial Newton threshold.
    bool have = false;
    Rat best;
    for (const auto& f : bg.f0) {
        if (f.is_zero()) continue;
        Polynomial prod = g * f;
        if (prod.is_zero()) continue;
        for (const RatVec& shifted : shifted_support_forms(prod)) {
            for (const RatVec& w : cands) {
                Rat den = min_form_value(d_phi, w);
                if (den.sign() <= 0) continue;
                Rat num = dot(w, shifted) - eval_background(d0, w);
                Rat ratio = num / den;
                if (!have || ratio < best) {
                    best = ratio;
                    have = true;
                }
            }
        }
    }
    if (!have) throw Error(ErrCode::kInternal, "jumping number had no admissible candidate ray");
    return best;
}

ZhouCertificate certify_zhou_candidate(const AnalyticWeight& phi_candidate,
                                       const BackgroundDensity& rho) {
    require_trop_weight(phi_candidate, "certify_zhou_candidate");
    const size_t n = phi_candidate.nvars();
    require_integrable_background(rho, n);

    ZhouCertificate cert;
    std::ostringstream report;

    auto d_phi = phi_candidate.tropical_forms();
    auto d0 = background_forms(rho);
    std::vector<std::vector<RatVec>> fams{d_phi};
    if (!d0.empty()) fams.push_back(d0);
    auto cands = simplex_candidates(n, fams);

    // Condition (1): some |z|^(2N) restores integrability. The radial factor
    // fixes interior directions only, so the criterion is positivity of the
    // N-free exponent on every proper face of the simplex.
    cert.cond1 = true;
    for (const auto& f : rho.f0) {
        if (f.is_zero()) continue;
        for (const RatVec& shifted : shifted_support_forms(f)) {
            for (const RatVec& w : cands) {
                bool boundary = false;
                for (const Rat& x : w) boundary = boundary || x.is_zero();
                if (!boundary) continue;
                Rat margin = dot(w, shifted) - eval_background(d0, w) - min_form_value(d_phi, w);
                if (margin.sign() <= 0) {
                    cert.cond1 = false;
                    report << "condition (1) fails along the boundary direction " << ray_str(w)
                           << "; ";
                }
            }
        }
    }

    Polynomial one = Polynomial::constant(phi_candidate.vars(), Rat(1));
    cert.combined_jumping_number = jumping_number(phi_candidate, one, &rho);
    cert.cond2 = cert.combined_jumping_number <= Rat(1);
    cert.critical = cert.combined_jumping_number == Rat(1);

    report << "combined jumping number = " << cert.combined_jumping_number.str();
    if (!cert.cond2) report << " > 1: density stays integrable, not a Zhou-weight candidate";
    if (cert.cond2 && !cert.critical)
        report << " < 1: non-integrability is slack, candidate is not critical";
    cert.report = report.str();
    return cert;
}

Rat PiecewiseLinearFn::eval(const Rat& t) const {
    size_t i = 0;
    while (i + 1 < breakpoints.size() && breakpoints[i + 1] <= t) ++i;
    if (t < breakpoints.front()) return values.front() - slopes.front() * (breakpoints.front() - t);
    return values[i] + slopes[i + 1] * (t - breakpoints[i]);
}

bool PiecewiseLinearFn::concave() const {
    for (size_t i = 0; i + 1 < slopes.size(); ++i)
        if (slopes[i] < slopes[i + 1]) return false;
    return true;
}

bool PiecewiseLinearFn::consistent() const {
    if (breakpoints.size() != values.size() || slopes.size() != breakpoints.size() + 1) return false;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) return false;
        Rat reach = values[i] + slopes[i + 1] * (breakpoints[i + 1] - breakpoints[i]);
        if (!(reach == values[i + 1])) return false;
    }
    return true;
}

namespace {

struct Line {
    Rat slope;
    Rat intercept;
};

struct TianData {
    std::vector<Line> lines;
    // Largest t at which some phi-free boundary direction forces
    // non-integrability for every c; Tn = -infinity at and below it.
    std::optional<Rat> t_floor;
};

// Lines whose pointwise min is Tn(t), plus the validity floor.
TianData tian_lines(const AnalyticWeight& phi, const AnalyticWeight& psi,
                    const BackgroundDensity& rho) {
    require_trop_weight(phi, "tian_function");
    require_trop_weight(psi, "tian_function (psi)");
    if (phi.nvars() != psi.nvars()) throw Error(ErrCode::kInvalidArgument, "variable count mismatch");
    require_integrable_background(rho, phi.nvars());

    auto d_phi = phi.tropical_forms();
    auto d_psi = psi.tropical_forms();
    auto d0 = background_forms(rho);
    std::vector<std::vector<RatVec>> fams{d_phi, d_psi};
    if (!d0.empty()) fams.push_back(d0);
    auto cands = simplex_candidates(phi.nvars(), fams);

    TianData data;
    for (const auto& f : rho.f0) {
        if (f.is_zero()) continue;
        for (const RatVec& shifted : shifted_support_forms(f)) {
            for (const RatVec& w : cands) {
                Rat den = min_form_value(d_phi, w);
                Rat a = dot(w, shifted) - eval_background(d0, w);
                Rat b = min_form_value(d_psi, w);
                if (den.sign() <= 0) {
                    // phi cannot offset this direction; the twist must keep
                    // the exponent positive on its own, which bounds t below.
                    if (b.sign() > 0) {
                        Rat floor = -a / b;
                        if (!data.t_floor || *data.t_floor < floor) data.t_floor = floor;
                    }
                    continue;
                }
                data.lines.push_back({b / den, a / den});
            }
        }
    }
    if (data.lines.empty()) throw Error(ErrCode::kInternal, "Tian function had no admissible line");
    return data;
}

// Lower envelope of finitely many lines, as a global concave PL function.
// Returns breakpoints (kinks) with the active-line list sorted by slope.
PiecewiseLinearFn lower_envelope(std::vector<Line> lines, const Rat& t_lo, const Rat& t_hi) {
    // For equal slopes only the lowest intercept can be active.
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        if (x.slope != y.slope) return y.slope < x.slope;  // slope descending
        return x.intercept < y.intercept;
    });
    std::vector<Line> uniq;
    for (auto& l : lines)
        if (uniq.empty() || uniq.back().slope != l.slope) uniq.push_back(l);

    // Hull of active lines left to right: slopes strictly decrease, kink
    // positions strictly increase. kinks[i] is the crossing of hull[i] and
    // hull[i+1].
    std::vector<Line> hull;
    std::vector<Rat> kinks;
    auto cross = [](const Line& a, const Line& b) {
        return (b.intercept - a.intercept) / (a.slope - b.slope);
    };
    for (const Line& l : uniq) {
        while (hull.size() >= 2 && cross(hull.back(), l) <= kinks.back()) {
            hull.pop_back();
            kinks.pop_back();
        }
        if (!hull.empty()) kinks.push_back(cross(hull.back(), l));
        hull.push_back(l);
    }

    // Clip to [t_lo, t_hi]. seg_right(t) is the line active just right of t,
    // seg_left(t) just left of it; they differ only when t sits on a kink.
    auto seg_right = [&](const Rat& t) -> size_t {
        size_t i = 0;
        while (i < kinks.size() && kinks[i] <= t) ++i;
        return i;
    };
    auto seg_left = [&](const Rat& t) -> size_t {
        size_t i = 0;
        while (i < kinks.size() && kinks[i] < t) ++i;
        return i;
    };
    auto value = [&](size_t i, const Rat& t) { return hull[i].slope * t + hull[i].intercept; };

    PiecewiseLinearFn fn;
    size_t first = seg_right(t_lo);
    fn.breakpoints.push_back(t_lo);
    fn.values.push_back(value(seg_left(t_lo), t_lo));
    fn.slopes.push_back(hull[seg_left(t_lo)].slope);
    if (t_lo == t_hi) {
        fn.slopes.push_back(hull[first].slope);
        return fn;
    }
    fn.slopes.push_back(hull[first].slope);
    for (size_t i = first; i < kinks.size() && kinks[i] < t_hi; ++i) {
        fn.breakpoints.push_back(kinks[i]);
        fn.values.push_back(value(i, kinks[i]));
        fn.slopes.push_back(hull[i + 1].slope);
    }
    fn.breakpoints.push_back(t_hi);
    fn.values.push_back(value(seg_left(t_hi), t_hi));
    fn.slopes.push_back(hull[seg_right(t_hi)].slope);
    return fn;
}

}  // namespace

PiecewiseLinearFn tian_function(const AnalyticWeight& phi, const AnalyticWeight& psi,
                                const BackgroundDensity& rho, const Rat& t_lo, const Rat& t_hi) {
    if (!(t_lo < t_hi) && !(t_lo == t_hi))
        throw Error(ErrCode::kInvalidArgument, "empty Tian range");
    TianData data = tian_lines(phi, psi, rho);
    if (data.t_floor && !(*data.t_floor < t_lo))
        throw Error(ErrCode::kPrecondition,
                    "Tn(t) = -infinity for t <= " + data.t_floor->str() +
                        ": the twisted density is non-integrable for every exponent there");
    return lower_envelope(std::move(data.lines), t_lo, t_hi);
}

Rat tian_value_at(const AnalyticWeight& phi, const AnalyticWeight& psi,
                  const BackgroundDensity& rho, const Rat& t) {
    TianData data = tian_lines(phi, psi, rho);
    if (data.t_floor && !(*data.t_floor < t))
        throw Error(ErrCode::kPrecondition, "Tn(" + t.str() + ") = -infinity");
    Rat best = data.lines.front().slope * t + data.lines.front().intercept;
    for (size_t i = 1; i < data.lines.size(); ++i) {
        Rat v = data.lines[i].slope * t + data.lines[i].intercept;
        if (v < best) best = v;
    }
    return best;
}

AnalyticWeight truncate_weight(const AnalyticWeight& phi, unsigned n) { return phi.truncated(n); }

}  // namespace zhouval
