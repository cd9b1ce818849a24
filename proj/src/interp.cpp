#include "interp.hpp"

#include <algorithm>
#include <sstream>

namespace zhouval {

namespace {

void validate_functions(const InterpolationProblem& prob) {
    if (prob.functions.empty())
        throw Error(ErrCode::kInvalidArgument, "interpolation problem has no functions");
    size_t zero_a = 0, positive_a = 0;
    for (const auto& fn : prob.functions) {
        if (fn.a.sign() < 0) throw Error(ErrCode::kInvalidArgument, "negative target a_j");
        if (fn.a.is_zero())
            ++zero_a;
        else
            ++positive_a;
    }
    if (zero_a > 1)
        throw Error(ErrCode::kInvalidArgument, "at most one designated f0 (a = 0) is allowed");
    if (positive_a == 0)
        throw Error(ErrCode::kInvalidArgument, "interpolation needs at least one a_j > 0");
}

const Polynomial& as_polynomial(const InterpolationFunction& fn) {
    const Polynomial* p = std::get_if<Polynomial>(&fn.f);
    if (!p)
        throw Error(ErrCode::kDomain,
                    "weakly holomorphic (series) inputs are accepted only on the curve ring");
    return *p;
}

InterpolationVerdict check_on_cn(const InterpolationProblem& prob, const VarContextPtr& vars) {
    InterpolationVerdict verdict;
    std::vector<WeightGen> gens;
    Polynomial big_f = Polynomial::constant(vars, Rat(1));
    Rat target(0);
    for (const auto& fn : prob.functions) {
        const Polynomial& p = as_polynomial(fn);
        if (p.is_zero()) throw Error(ErrCode::kInvalidArgument, "zero function in the problem");
        big_f = big_f * p;
        if (fn.a.sign() > 0) {
            target += fn.a;
            gens.push_back({p, fn.a});
        }
    }
    verdict.target = target;

    for (const auto& g : gens) {
        if (!g.f.vanishes_at_origin()) {
            // phi stays bounded, so log|F| <= c phi + O(1) for every c.
            verdict.sigma_infinite = true;
            verdict.holds = false;
            verdict.note = "generator '" + g.f.str() +
                           "' does not vanish at the origin, so sigma = +infinity > sum(a_j)";
            return verdict;
        }
    }

    AnalyticWeight phi(Rat(1), gens);
    RelativeTypeResult rt = relative_type(big_f, phi);
    if (rt.infinite) throw Error(ErrCode::kInternal, "sigma of a nonzero product came out infinite");
    verdict.sigma = rt.value;
    verdict.holds = (rt.value == target);
    if (!verdict.holds) {
        verdict.note = "sigma = " + rt.value.str() + " exceeds the target " + target.str();
        return verdict;
    }

    // Rescale each minimizing ray so min_j nu(f_j)/a_j = 1, then re-verify
    // the interpolation values exactly rather than trusting the construction.
    for (const RatVec& w_star : rt.witnesses) {
        Rat d = phi.value_on_ray(w_star);
        if (d.sign() <= 0) continue;
        RatVec w(w_star.size());
        for (size_t i = 0; i < w.size(); ++i) w[i] = w_star[i] / d;
        verdict.all_witnesses.push_back(RayWitness{w});
    }
    if (verdict.all_witnesses.empty())
        throw Error(ErrCode::kInternal, "holds verdict without a rescalable witness ray");
    const RayWitness& w = std::get<RayWitness>(verdict.all_witnesses.front());

    bool verified = true;
    for (const auto& fn : prob.functions) {
        const Polynomial& p = as_polynomial(fn);
        FunctionDiagnostic diag;
        diag.label = fn.label.empty() ? p.str() : fn.label;
        diag.target_a = fn.a;
        diag.value_under_witness = trop_value(p, w.weights);
        verdict.diagnostics.push_back(diag);
        verified = verified && (diag.value_under_witness == fn.a);
    }
    if (!verified) {
        verdict.holds = false;
        verdict.note = "witness verification failed: some nu(f_j) != a_j (or nu(f0) != 0)";
        verdict.all_witnesses.clear();
        verdict.diagnostics.clear();
        return verdict;
    }
    verdict.witness = verdict.all_witnesses.front();
    verdict.converse_applicable = true;
    for (const Rat& x : w.weights)
        if (x.sign() <= 0) verdict.converse_applicable = false;
    return verdict;
}

InterpolationVerdict check_on_curve(const InterpolationProblem& prob, const CurveRing& ring) {
    InterpolationVerdict verdict;
    const MonomialCurve& x = ring.curve;
    const CurvePoint& pt = ring.point;

    struct Entry {
        std::string label;
        Rat a;
        int64_t order;
    };
    std::vector<Entry> entries;
    Rat target(0);
    for (const auto& fn : prob.functions) {
        Entry e;
        e.a = fn.a;
        if (const Polynomial* p = std::get_if<Polynomial>(&fn.f)) {
            e.label = fn.label.empty() ? p->str() : fn.label;
            OrderValue o = pullback_order(*p, x, pt);
            if (o.infinite)
                throw Error(ErrCode::kPrecondition,
                            "function '" + e.label + "' lies in the defining ideal");
            e.order = o.value;
        } else {
            if (!is_origin(pt))
                throw Error(ErrCode::kDomain,
                            "series inputs are germs at the origin; smooth points take polynomials");
            const TruncatedSeries& s = std::get<TruncatedSeries>(fn.f);
            e.label = fn.label.empty() ? "series" : fn.label;
            e.order = series_origin_order(s);
            if (e.order < 0)
                throw Error(ErrCode::kPrecondition,
                            "series '" + e.label + "' is not weakly holomorphic (negative order)");
        }
        if (fn.a.sign() > 0) target += fn.a;
        entries.push_back(std::move(e));
    }
    verdict.target = target;

    // ord is a valuation, so ord(F) is the sum of the orders.
    int64_t order_f = 0;
    bool first = true;
    Rat denom;
    for (const auto& e : entries) {
        order_f += e.order;
        if (e.a.sign() > 0) {
            if (e.order <= 0) {
                verdict.sigma_infinite = true;
                verdict.holds = false;
                verdict.note = "generator '" + e.label + "' does not vanish at " +
                               curve_point_str(pt) + ", so sigma = +infinity > sum(a_j)";
                return verdict;
            }
            Rat v = Rat(e.order) / e.a;
            if (first || v < denom) {
                denom = v;
                first = false;
            }
        }
    }
    verdict.sigma = Rat(order_f) / denom;
    verdict.holds = (verdict.sigma == target);
    if (!verdict.holds) {
        verdict.note = "sigma = " + verdict.sigma.str() + " exceeds the target " + target.str();
        return verdict;
    }

    CurveOrderWitness w{denom, pt};
    bool verified = true;
    for (const auto& e : entries) {
        FunctionDiagnostic diag;
        diag.label = e.label;
        diag.target_a = e.a;
        diag.value_under_witness = Rat(e.order) / denom;
        verdict.diagnostics.push_back(diag);
        verified = verified && (diag.value_under_witness == e.a);
    }
    if (!verified) {
        verdict.holds = false;
        verdict.note = "witness verification failed: some nu(f_j) != a_j (or nu(f0) != 0)";
        verdict.diagnostics.clear();
        return verdict;
    }
    verdict.witness = w;
    verdict.all_witnesses.push_back(w);
    VarContextPtr zvars = make_vars({"z1", "z2"});
    verdict.converse_applicable =
        curve_valuation(Polynomial::variable(zvars, 0), x, pt) > 0 &&
        curve_valuation(Polynomial::variable(zvars, 1), x, pt) > 0;
    return verdict;
}

}  // namespace

InterpolationVerdict check_interpolation(const InterpolationProblem& prob) {
    validate_functions(prob);
    if (const auto* cn = std::get_if<ComplexPolyRing>(&prob.ring)) return check_on_cn(prob, cn->vars);
    if (std::holds_alternative<RealPolyRing>(prob.ring)) {
        InterpolationProblem lifted = real_lift(prob);
        InterpolationVerdict verdict = check_interpolation(lifted);
        std::string lift_note = "decided on the coefficient-identical complex lift";
        verdict.note = verdict.note.empty() ? lift_note : lift_note + "; " + verdict.note;
        return verdict;
    }
    return check_on_curve(prob, std::get<CurveRing>(prob.ring));
}

namespace {

void trim_dense(std::vector<Rat>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// a mod b for dense polynomials (lowest degree first), b nonzero.
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    Rat lead_inv = b.back().reciprocal();
    while (a.size() >= b.size()) {
        Rat f = a.back() * lead_inv;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        a.pop_back();
        trim_dense(a);
        if (a.empty()) break;
    }
    return a;
}

// gcd of dense rational polynomials in t, monic result.
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    trim_dense(a);
    trim_dense(b);
    while (!b.empty()) {
        std::vector<Rat> r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat inv = a.back().reciprocal();
        for (Rat& c : a) c *= inv;
    }
    return a;
}

std::vector<Rat> dense_from_terms(const TSeriesTerms& s) {
    std::vector<Rat> v;
    if (s.empty()) return v;
    v.assign(static_cast<size_t>(s.rbegin()->first) + 1, Rat(0));
    for (const auto& [e, c] : s) v[static_cast<size_t>(e)] = c;
    return v;
}

// Rational roots of a dense rational polynomial, by the rational root
// theorem on the integer-cleared form. Only feeds zero-set descriptions;
// returns what fits in machine words and stays silent otherwise.
std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
    std::vector<Rat> roots;
    std::vector<Rat> p = poly;
    trim_dense(p);
    if (p.size() <= 1) return roots;
    auto eval = [&](const Rat& t) {
        Rat v(0);
        for (size_t i = p.size(); i-- > 0;) v = v * t + p[i];
        return v;
    };
    try {
        Rat common(1);
        for (const Rat& c : p) common *= c.denominator();
        std::vector<long> ic;
        for (const Rat& c : p) ic.push_back((c * common).to_long());
        size_t lo = 0;
        while (lo < ic.size() && ic[lo] == 0) ++lo;
        long a0 = std::abs(ic[lo]);
        long an = std::abs(ic.back());
        auto divisors = [](long n) {
            std::vector<long> d;
            for (long i = 1; i * i <= n; ++i)
                if (n % i == 0) {
                    d.push_back(i);
                    if (i != n / i) d.push_back(n / i);
                }
            return d;
        };
        for (long pn : divisors(a0))
            for (long qn : divisors(an))
                for (int sgn : {1, -1}) {
                    Rat cand(sgn * pn, qn);
                    if (eval(cand).is_zero() &&
                        std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
    } catch (const Error&) {
        roots.clear();  // coefficients too large to enumerate candidates
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

ZeroSetResult zero_set_is_origin(const std::vector<Polynomial>& functions,
                                 const InterpolationRing& ring) {
    if (functions.empty()) throw Error(ErrCode::kInvalidArgument, "empty function list");
    ZeroSetResult out;

    if (const auto* cr = std::get_if<CurveRing>(&ring)) {
        const MonomialCurve& x = cr->curve;
        std::vector<std::vector<Rat>> pulls;
        for (const auto& f : functions) {
            TSeriesTerms u = x.pullback(f);
            if (u.empty()) continue;  // f vanishes on all of X: vacuous constraint
            pulls.push_back(dense_from_terms(u));
        }
        if (pulls.empty()) {
            out.is_origin_only = false;
            out.origin_in_zero_set = true;
            out.description = "every function lies in the defining ideal; zero set is all of X";
            return out;
        }
        std::vector<Rat> g = pulls.front();
        for (size_t i = 1; i < pulls.size(); ++i) g = poly_gcd(g, pulls[i]);
        size_t v = 0;
        while (v < g.size() && g[v].is_zero()) ++v;
        out.origin_in_zero_set = v > 0;
        std::vector<Rat> residual(g.begin() + static_cast<long>(v), g.end());
        bool residual_constant = residual.size() <= 1;
        out.is_origin_only = out.origin_in_zero_set && residual_constant;
        std::ostringstream desc;
        if (out.is_origin_only) {
            desc << "common zero set on X is {o}";
        } else {
            desc << "common zero set on X is " << (out.origin_in_zero_set ? "{o" : "{");
            bool first = !out.origin_in_zero_set;
            for (const Rat& r : rational_roots(residual)) {
                if (!first) desc << ", ";
                first = false;
                Rat z1 = r, z2 = r;
                for (unsigned i = 1; i < cr->curve.p(); ++i) z1 *= r;
                for (unsigned i = 1; i < cr->curve.q(); ++i) z2 *= r;
                desc << "(" << z1.str() << "," << z2.str() << ")";
            }
            desc << "}";
            if (residual.size() > 1 && rational_roots(residual).empty())
                desc << " together with irrational common roots of a degree-"
                     << residual.size() - 1 << " factor";
        }
        out.description = desc.str();
        return out;
    }

    // Polynomial-ring cases (the real ring has the same combinatorics).
    const VarContextPtr& vars =
        std::holds_alternative<ComplexPolyRing>(ring) ? std::get<ComplexPolyRing>(ring).vars
                                                      : std::get<RealPolyRing>(ring).vars;
    const size_t n = vars->size();
    std::vector<std::vector<bool>> var_sets;
    for (const auto& f : functions) {
        if (f.is_zero()) throw Error(ErrCode::kInvalidArgument, "zero function in the list");
        if (!f.is_monomial())
            throw Error(ErrCode::kDomain,
                        "zero-set decision on C^n supports monomials only; '" + f.str() +
                            "' is outside that class");
        const Exponents& e = f.terms().begin()->first;
        if (total_degree(e) == 0) {
            out.is_origin_only = false;
            out.origin_in_zero_set = false;
            out.description = "a nonzero constant makes the common zero set empty";
            return out;
        }
        std::vector<bool> mask(n, false);
        for (size_t i = 0; i < n; ++i) mask[i] = e[i] > 0;
        var_sets.push_back(std::move(mask));
    }
    out.origin_in_zero_set = true;
    // {o} alone iff every variable occurs as a pure power: otherwise the
    // z_i-axis with the missing pure power survives in the intersection.
    for (size_t i = 0; i < n; ++i) {
        bool pure = false;
        for (const auto& mask : var_sets) {
            bool only_i = mask[i];
            for (size_t j = 0; j < n && only_i; ++j)
                if (j != i && mask[j]) only_i = false;
            pure = pure || only_i;
        }
        if (!pure) {
            out.is_origin_only = false;
            out.description =
                "common zero set contains the " + vars->names()[i] + "-axis, not just {o}";
            return out;
        }
    }
    out.is_origin_only = true;
    out.description = "common zero set is {o}";
    return out;
}

InterpolationProblem real_lift(const InterpolationProblem& prob) {
    const auto* rr = std::get_if<RealPolyRing>(&prob.ring);
    if (!rr) throw Error(ErrCode::kInvalidArgument, "real_lift expects a real polynomial ring");
    // The lift P is coefficient-identical; rename x<k> to z<k> when the
    // convention applies, otherwise keep the names.
    std::vector<std::string> names = rr->vars->names();
    bool all_x = true;
    for (const auto& nm : names) all_x = all_x && nm.size() >= 2 && nm[0] == 'x';
    if (all_x)
        for (auto& nm : names) nm = "z" + nm.substr(1);
    VarContextPtr zvars = make_vars(names);

    InterpolationProblem lifted;
    lifted.ring = ComplexPolyRing{zvars};
    for (const auto& fn : prob.functions) {
        const Polynomial& p = as_polynomial(fn);
        Polynomial q(zvars);
        for (const auto& [e, c] : p.terms()) q.add_term(e, c);
        lifted.functions.push_back({q, fn.a, fn.label});
    }
    return lifted;
}

}  // namespace zhouval
