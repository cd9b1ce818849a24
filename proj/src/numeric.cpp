#include "numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace zhouval {

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in (0, 1]: never 0, so -log stays finite.
    double open01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
};

uint64_t stream_seed(uint64_t seed, uint64_t t_index, uint64_t stream) {
    SplitMix64 g{seed ^ (0x51f15eedull + t_index * 0x9e3779b97f4a7c15ull)};
    g.next();
    return g.next() ^ (stream * 0xda3e39cb94b95bdbull + 0x6a09e667f3bcc909ull);
}

// Double view of a weight's tropical data plus the exact log-profile.
struct WeightEval {
    double scale = 1.0;
    std::vector<std::vector<double>> forms;  // scale*alpha/a per generator
    std::vector<std::vector<double>> exps;   // alpha/a per generator
    std::vector<double> log_coeff;           // log |coef|^(1/a)

    // Tropical profile D(x) = scale * min_j <alpha_j/a_j, x>.
    double tropical(const double* x, size_t n) const {
        double best = 0;
        bool first = true;
        for (const auto& f : forms) {
            double v = 0;
            for (size_t i = 0; i < n; ++i) v += f[i] * x[i];
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        return best;
    }

    // Exact value of the weight at |z_k| = e^(-x_k):
    // scale * log sum_j |c_j|^(1/a_j) e^(-<alpha_j/a_j, x>), via stable LSE.
    double exact(const double* x, size_t n) const {
        double m = -HUGE_VAL;
        std::vector<double> es(exps.size());
        for (size_t j = 0; j < exps.size(); ++j) {
            double v = log_coeff[j];
            for (size_t i = 0; i < n; ++i) v -= exps[j][i] * x[i];
            es[j] = v;
            m = std::max(m, v);
        }
        double s = 0;
        for (double v : es) s += std::exp(v - m);
        return scale * (m + std::log(s));
    }
};

WeightEval weight_eval(const AnalyticWeight& w) {
    WeightEval ev;
    ev.scale = w.scale().to_double();
    size_t n = w.nvars();
    for (const auto& g : w.gens()) {
        if (!g.f.is_monomial())
            throw Error(ErrCode::kDomain, "numeric layer needs monomial-supported weights");
        const auto& [e, c] = *g.f.terms().begin();
        double inv_a = 1.0 / g.a.to_double();
        std::vector<double> form(n), ex(n);
        for (size_t i = 0; i < n; ++i) {
            ex[i] = e[i] * inv_a;
            form[i] = ev.scale * ex[i];
        }
        ev.forms.push_back(form);
        ev.exps.push_back(ex);
        ev.log_coeff.push_back(std::log(std::fabs(c.to_double())) * inv_a);
    }
    return ev;
}

// One mixture component of the torus-averaged density: the monomial gamma
// of one |f0_i|^2 with weight |coef|^2.
struct DensityComponent {
    std::vector<double> gamma;
    double weight;
};

std::vector<DensityComponent> density_components(const BackgroundDensity& rho, size_t n) {
    std::vector<DensityComponent> comps;
    for (const auto& f : rho.f0) {
        for (const auto& [e, c] : f.terms()) {
            DensityComponent dc;
            dc.gamma.assign(n, 0.0);
            for (size_t i = 0; i < n; ++i) dc.gamma[i] = e[i];
            double cd = c.to_double();
            dc.weight = cd * cd;
            comps.push_back(std::move(dc));
        }
    }
    if (comps.empty()) throw Error(ErrCode::kInvalidArgument, "background density is zero");
    return comps;
}

// Smallest box [m_1,inf) x ... containing the tropical sublevel region
// {D(x) >= t, x >= 0}: only forms supported on a single coordinate bound it.
std::vector<double> bounding_box(const WeightEval& phi, double t, size_t n) {
    std::vector<double> m(n, 0.0);
    for (const auto& f : phi.forms) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i) {
            if (f[i] != 0.0) {
                pure = pure && support < 0;
                support = static_cast<int>(i);
            }
        }
        if (pure && support >= 0) m[support] = std::max(m[support], t / f[support]);
    }
    return m;
}

// Log of the base-measure mass of component gamma over the box, i.e.
// prod_k pi e^(-2(gamma_k+1) m_k) / (gamma_k+1).
double log_base_mass(const DensityComponent& dc, const std::vector<double>& box) {
    double lm = 0;
    for (size_t k = 0; k < box.size(); ++k) {
        double r = dc.gamma[k] + 1.0;
        lm += std::log(M_PI / r) - 2.0 * r * box[k];
    }
    return lm;
}

struct StreamSums {
    double sum_a = 0, sum_b = 0, sum_aa = 0, sum_bb = 0, sum_ab = 0;
    uint64_t accepted = 0, total = 0;
};

// Integrand a = weight * (-psi term or 1), b = weight, where weight is the
// acceptance indicator times e^(-2 phi0). Runs one deterministic stream.
template <typename FnA>
StreamSums run_stream(uint64_t seed, uint64_t count, size_t n,
                      const std::vector<DensityComponent>& comps,
                      const std::vector<double>& comp_cdf, const std::vector<double>& box,
                      const WeightEval& phi, double t, const WeightEval* phi0, FnA&& value_a) {
    SplitMix64 rng{seed};
    StreamSums s;
    double x[4];
    for (uint64_t i = 0; i < count; ++i) {
        // Pick the mixture component, then truncated exponentials per axis.
        double u = rng.open01();
        size_t ci = std::lower_bound(comp_cdf.begin(), comp_cdf.end(), u) - comp_cdf.begin();
        if (ci >= comps.size()) ci = comps.size() - 1;
        const DensityComponent& dc = comps[ci];
        for (size_t k = 0; k < n; ++k)
            x[k] = box[k] - std::log(rng.open01()) / (2.0 * (dc.gamma[k] + 1.0));
        ++s.total;
        if (phi.tropical(x, n) < t) continue;  // rejection outside the sublevel region
        ++s.accepted;
        double w = 1.0;
        if (phi0) w = std::exp(-2.0 * phi0->exact(x, n));
        double a = value_a(x) * w;
        s.sum_a += a;
        s.sum_b += w;
        s.sum_aa += a * a;
        s.sum_bb += w * w;
        s.sum_ab += a * w;
    }
    return s;
}

// Mixture selection probabilities proportional to weight * base mass; the
// common normalization cancels in ratio estimators and is reapplied for
// absolute masses.
struct MixtureInfo {
    std::vector<double> cdf;
    double log_total_mass;  // log sum_gamma weight_gamma * base_mass_gamma
};

MixtureInfo mixture_info(const std::vector<DensityComponent>& comps,
                         const std::vector<double>& box) {
    std::vector<double> logs(comps.size());
    double m = -HUGE_VAL;
    for (size_t i = 0; i < comps.size(); ++i) {
        logs[i] = std::log(comps[i].weight) + log_base_mass(comps[i], box);
        m = std::max(m, logs[i]);
    }
    double total = 0;
    MixtureInfo out;
    for (double l : logs) total += std::exp(l - m);
    out.log_total_mass = m + std::log(total);
    out.cdf.resize(comps.size());
    double acc = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
        acc += std::exp(logs[i] - out.log_total_mass);
        out.cdf[i] = acc;
    }
    out.cdf.back() = 1.0;
    return out;
}

template <typename FnA>
StreamSums run_all_streams(const SamplingPlan& plan, uint64_t t_index, size_t n,
                           const std::vector<DensityComponent>& comps, const MixtureInfo& mix,
                           const std::vector<double>& box, const WeightEval& phi, double t,
                           const WeightEval* phi0, FnA&& value_a) {
    unsigned streams = plan.stream_count;
    uint64_t per = plan.samples_per_t / streams;
    uint64_t extra = plan.samples_per_t % streams;
    std::vector<StreamSums> out(streams);
    unsigned threads = std::min(streams, numeric_thread_cap());
    std::vector<std::thread> pool;
    std::atomic<unsigned> cursor{0};
    auto work = [&]() {
        while (true) {
            unsigned s = cursor.fetch_add(1);
            if (s >= streams) return;
            uint64_t count = per + (s < extra ? 1 : 0);
            out[s] = run_stream(stream_seed(plan.seed, t_index, s), count, n, comps, mix.cdf, box,
                                phi, t, phi0, value_a);
        }
    };
    for (unsigned i = 0; i + 1 < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    StreamSums total;
    for (const StreamSums& s : out) {  // fixed order: bit-identical joins
        total.sum_a += s.sum_a;
        total.sum_b += s.sum_b;
        total.sum_aa += s.sum_aa;
        total.sum_bb += s.sum_bb;
        total.sum_ab += s.sum_ab;
        total.accepted += s.accepted;
        total.total += s.total;
    }
    return total;
}

void fit_inverse_t(EstimateReport& rep) {
    // Least squares of estimate = a + b/t over the three largest t.
    size_t n = rep.rows.size();
    size_t k = std::min<size_t>(3, n);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = n - k; i < n; ++i) {
        double xi = 1.0 / rep.rows[i].t, yi = rep.rows[i].estimate;
        sx += xi;
        sy += yi;
        sxx += xi * xi;
        sxy += xi * yi;
    }
    double kk = static_cast<double>(k);
    double denom = kk * sxx - sx * sx;
    double b = denom != 0 ? (kk * sxy - sx * sy) / denom : 0;
    double a = (sy - b * sx) / kk;
    rep.extrapolated = a;
    double res = 0;
    for (size_t i = n - k; i < n; ++i) {
        double pred = a + b / rep.rows[i].t;
        res += (rep.rows[i].estimate - pred) * (rep.rows[i].estimate - pred);
    }
    rep.fit_residual = std::sqrt(res / kk);
}

}  // namespace

unsigned numeric_thread_cap() {
    const char* env = std::getenv("ZHOUVAL_THREADS");
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!env) return hw;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 256));
}

void validate_plan(const SamplingPlan& plan) {
    if (plan.dimension != 1 && plan.dimension != 2)
        throw Error(ErrCode::kDomain, "numeric verification supports dimensions 1 and 2 only");
    if (plan.t_values.empty()) throw Error(ErrCode::kInvalidArgument, "empty t grid");
    for (size_t i = 0; i < plan.t_values.size(); ++i) {
        if (plan.t_values[i] <= 0)
            throw Error(ErrCode::kInvalidArgument, "t values must be positive");
        if (i > 0 && plan.t_values[i] <= plan.t_values[i - 1])
            throw Error(ErrCode::kInvalidArgument, "t values must be increasing");
    }
    if (plan.samples_per_t < 10000)
        throw Error(ErrCode::kInvalidArgument, "samples_per_t must be at least 10^4");
    if (plan.stream_count < 1) throw Error(ErrCode::kInvalidArgument, "stream_count must be >= 1");
}

EstimateReport estimate_relative_type_integral(const AnalyticWeight& phi_max,
                                               const AnalyticWeight& psi,
                                               const BackgroundDensity& rho,
                                               const SamplingPlan& plan) {
    validate_plan(plan);
    if (phi_max.nvars() != plan.dimension || psi.nvars() != plan.dimension)
        throw Error(ErrCode::kInvalidArgument, "weight dimension does not match the plan");

    ZhouCertificate cert = certify_zhou_candidate(phi_max, rho);
    if (!cert.critical)
        throw Error(ErrCode::kPrecondition,
                    "Phi is not a certified critical Zhou candidate: " + cert.report);
    RelativeTypeResult sigma = relative_type_weight(psi, phi_max);

    const size_t n = plan.dimension;
    WeightEval phi_ev = weight_eval(phi_max);
    WeightEval psi_ev = weight_eval(psi);
    std::optional<WeightEval> phi0_ev;
    if (rho.phi0) phi0_ev = weight_eval(*rho.phi0);
    auto comps = density_components(rho, n);

    EstimateReport rep;
    rep.exact_reference = sigma.value.to_double();
    for (size_t ti = 0; ti < plan.t_values.size(); ++ti) {
        double t = plan.t_values[ti];
        auto box = bounding_box(phi_ev, t, n);
        MixtureInfo mix = mixture_info(comps, box);
        StreamSums s = run_all_streams(
            plan, ti, n, comps, mix, box, phi_ev, t, phi0_ev ? &*phi0_ev : nullptr,
            [&](const double* x) { return -psi_ev.exact(x, n); });
        if (s.accepted < 100)
            throw Error(ErrCode::kBudget,
                        "sampling budget exhausted: acceptance too low at t = " + std::to_string(t));
        double num = s.sum_a / static_cast<double>(s.total);
        double den = s.sum_b / static_cast<double>(s.total);
        double r = num / (t * den);
        // Delta-method standard error of the self-normalized ratio.
        double nn = static_cast<double>(s.total);
        double va = s.sum_aa / nn - num * num;
        double vb = s.sum_bb / nn - den * den;
        double cab = s.sum_ab / nn - num * den;
        double var_r = (va - 2.0 * r * t * cab + r * r * t * t * vb) / (nn * t * t * den * den);
        TEstimate row;
        row.t = t;
        row.estimate = r;
        row.stderr_est = var_r > 0 ? std::sqrt(var_r) : 0.0;
        row.acceptance_rate = static_cast<double>(s.accepted) / static_cast<double>(s.total);
        rep.rows.push_back(row);
    }
    fit_inverse_t(rep);
    rep.relative_deviation = rep.exact_reference != 0
                                 ? std::fabs(rep.extrapolated - rep.exact_reference) /
                                       std::fabs(rep.exact_reference)
                                 : std::fabs(rep.extrapolated);
    return rep;
}

MassDecayReport estimate_mass_decay(const AnalyticWeight& phi, const BackgroundDensity& rho,
                                    const SamplingPlan& plan) {
    validate_plan(plan);
    if (phi.nvars() != plan.dimension)
        throw Error(ErrCode::kInvalidArgument, "weight dimension does not match the plan");
    Polynomial one = Polynomial::constant(phi.vars(), Rat(1));
    Rat combined = jumping_number(phi, one, &rho);
    if (!(combined == Rat(1)))
        throw Error(ErrCode::kPrecondition, "combined jumping number is " + combined.str() +
                                                ", not 1: the decay statistic needs the "
                                                "normalized weight");

    const size_t n = plan.dimension;
    WeightEval phi_ev = weight_eval(phi);
    std::optional<WeightEval> phi0_ev;
    if (rho.phi0) phi0_ev = weight_eval(*rho.phi0);
    auto comps = density_components(rho, n);

    MassDecayReport rep;
    double prev_log_mass = 0;
    for (size_t ti = 0; ti < plan.t_values.size(); ++ti) {
        double t = plan.t_values[ti];
        auto box = bounding_box(phi_ev, t, n);
        MixtureInfo mix = mixture_info(comps, box);
        StreamSums s =
            run_all_streams(plan, ti, n, comps, mix, box, phi_ev, t,
                            phi0_ev ? &*phi0_ev : nullptr, [](const double*) { return 1.0; });
        if (s.accepted == 0)
            throw Error(ErrCode::kBudget,
                        "sampling budget exhausted: no accepted samples at t = " + std::to_string(t));
        double mean = s.sum_b / static_cast<double>(s.total);
        double log_mass = mix.log_total_mass + std::log(mean);
        double nn = static_cast<double>(s.total);
        double vb = s.sum_bb / nn - mean * mean;
        MassDecayRow row;
        row.t = t;
        row.mass = std::exp(log_mass);
        row.mass_stderr = row.mass * (mean > 0 ? std::sqrt(std::max(vb, 0.0) / nn) / mean : 0.0);
        row.statistic_raw = -log_mass / (2.0 * t);
        row.statistic_rate = ti == 0 ? row.statistic_raw
                                     : -(log_mass - prev_log_mass) /
                                           (2.0 * (t - rep.rows[ti - 1].t));
        row.acceptance_rate = static_cast<double>(s.accepted) / static_cast<double>(s.total);
        prev_log_mass = log_mass;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

// Shell-sum machinery for the integrability oracle. Works on the exact
// weight values (log-sum-exp), never the tropical profile.
struct ShellProblem {
    size_t n;
    WeightEval phi;
    std::vector<DensityComponent> terms;  // from |G|^2
    double c;

    // log integrand at x (mixture LSE over the |G|^2 monomials).
    double log_f(const double* x) const {
        double m = -HUGE_VAL;
        for (const auto& tm : terms) {
            double v = std::log(tm.weight);
            for (size_t i = 0; i < n; ++i) v -= 2.0 * (tm.gamma[i] + 1.0) * x[i];
            m = std::max(m, v);
        }
        double s = 0;
        for (const auto& tm : terms) {
            double v = std::log(tm.weight);
            for (size_t i = 0; i < n; ++i) v -= 2.0 * (tm.gamma[i] + 1.0) * x[i];
            s += std::exp(v - m);
        }
        return m + std::log(s) - 2.0 * c * phi.exact(x, n);
    }
};

double lse_accumulate(std::vector<double>& logs) {
    if (logs.empty()) return -HUGE_VAL;
    double m = *std::max_element(logs.begin(), logs.end());
    if (m == -HUGE_VAL) return m;
    double s = 0;
    for (double l : logs) s += std::exp(l - m);
    return m + std::log(s);
}

// E(s, u) along the L1-sphere direction (u, 1-u) scaled by s; convex in u,
// so a ternary search pins the peak of the shell integrand.
double direction_exponent(const ShellProblem& sp, double s, double u) {
    double x[2] = {s * u, s * (1.0 - u)};
    return -sp.log_f(x);
}

double peak_direction(const ShellProblem& sp, double s) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
        double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
        if (direction_exponent(sp, s, a) <= direction_exponent(sp, s, b))
            hi = b;
        else
            lo = a;
    }
    return 0.5 * (lo + hi);
}

// log of the shell mass over {m <= |x|_1 < m+1}. The direction grid is
// uniform plus geometric refinement at the peak, which keeps the relative
// quadrature error scale-free in m (the peak width shrinks like 1/m).
double log_shell_mass(const ShellProblem& sp, double m) {
    const int s_grid = 8;
    std::vector<double> cell_logs;
    if (sp.n == 1) {
        for (int i = 0; i < s_grid; ++i) {
            double s = m + (i + 0.5) / s_grid;
            cell_logs.push_back(sp.log_f(&s) + std::log(1.0 / s_grid));
        }
        return lse_accumulate(cell_logs);
    }
    double u_star = peak_direction(sp, m + 0.5);
    std::vector<double> us;
    for (int i = 0; i <= 32; ++i) us.push_back(i / 32.0);
    for (int j = 1; j <= 34; ++j) {
        double d = std::ldexp(1.0, -j);
        if (u_star - d > 0) us.push_back(u_star - d);
        if (u_star + d < 1) us.push_back(u_star + d);
    }
    us.push_back(u_star);
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());

    for (int i = 0; i < s_grid; ++i) {
        double s = m + (i + 0.5) / s_grid;
        double ds = 1.0 / s_grid;
        // Trapezoid in u on the refined grid; jacobian of x = s(u, 1-u) is s.
        std::vector<double> fl(us.size());
        for (size_t k = 0; k < us.size(); ++k) {
            double x[2] = {s * us[k], s * (1.0 - us[k])};
            fl[k] = sp.log_f(x);
        }
        for (size_t k = 0; k + 1 < us.size(); ++k) {
            double du = us[k + 1] - us[k];
            double pair = std::max(fl[k], fl[k + 1]) +
                          std::log1p(std::exp(-std::fabs(fl[k] - fl[k + 1])));
            cell_logs.push_back(pair + std::log(0.5 * du * s * ds));
        }
    }
    return lse_accumulate(cell_logs);
}

// Least-squares fit of log M_m = a + b m + k log m over the trailing
// window; the log-m term absorbs the polynomial shell prefactor so b tracks
// the pure geometric rate -2 mu(c).
double fitted_rate(const std::vector<double>& logs, int lo, int hi) {
    double mm = 0, ml = 0;
    int k = hi - lo;
    for (int m = lo; m < hi; ++m) {
        mm += m;
        ml += std::log(static_cast<double>(m));
    }
    mm /= k;
    ml /= k;
    // Normal equations for centered basis {m - mean, log m - mean}.
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0, ybar = 0;
    for (int m = lo; m < hi; ++m) ybar += logs[m - 1];
    ybar /= k;
    for (int m = lo; m < hi; ++m) {
        double u = m - mm;
        double v = std::log(static_cast<double>(m)) - ml;
        double y = logs[m - 1] - ybar;
        s11 += u * u;
        s12 += u * v;
        s22 += v * v;
        r1 += u * y;
        r2 += v * y;
    }
    double det = s11 * s22 - s12 * s12;
    if (det == 0) return (s11 != 0) ? r1 / s11 : 0.0;
    return (r1 * s22 - r2 * s12) / det;
}

IntegrabilityClass classify(const ShellProblem& sp) {
    // Escalating shell budget; the margin covers the O(1/m) terms the
    // three-parameter fit does not absorb.
    const int budgets[] = {600, 1800};
    const double margins[] = {3e-4, 1e-4};
    for (int round = 0; round < 2; ++round) {
        int m_max = budgets[round];
        std::vector<double> logs;
        logs.reserve(m_max);
        for (int m = 1; m <= m_max; ++m) logs.push_back(log_shell_mass(sp, m));
        double slope = fitted_rate(logs, m_max / 3, m_max);
        if (slope < -margins[round]) return IntegrabilityClass::kIntegrable;
        if (slope > margins[round]) return IntegrabilityClass::kNonIntegrable;
    }
    return IntegrabilityClass::kIndeterminate;
}

ShellProblem make_shell_problem(const AnalyticWeight& phi, const Polynomial& g, double c) {
    if (phi.nvars() > 2)
        throw Error(ErrCode::kDomain, "integrability oracle supports dimensions 1 and 2 only");
    if (g.is_zero()) throw Error(ErrCode::kInvalidArgument, "integrability of G = 0");
    ShellProblem sp{phi.nvars(), weight_eval(phi), {}, c};
    for (const auto& [e, coef] : g.terms()) {
        DensityComponent dc;
        dc.gamma.assign(phi.nvars(), 0.0);
        for (size_t i = 0; i < phi.nvars(); ++i) dc.gamma[i] = e[i];
        double cd = coef.to_double();
        dc.weight = cd * cd;
        sp.terms.push_back(std::move(dc));
    }
    return sp;
}

}  // namespace

IntegrabilityClass classify_integrability(const AnalyticWeight& phi, const Polynomial& g,
                                          double c) {
    return classify(make_shell_problem(phi, g, c));
}

IntegrabilityBracket integrability_bisect(const AnalyticWeight& phi, const Polynomial& g,
                                          const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error(ErrCode::kInvalidArgument, "empty bracket");
    auto cls = [&](const Rat& c) { return classify_integrability(phi, g, c.to_double()); };
    if (cls(lo) != IntegrabilityClass::kIntegrable)
        throw Error(ErrCode::kPrecondition, "bracket lower end " + lo.str() +
                                                " did not classify as integrable");
    if (cls(hi) != IntegrabilityClass::kNonIntegrable)
        throw Error(ErrCode::kPrecondition, "bracket upper end " + hi.str() +
                                                " did not classify as non-integrable");
    IntegrabilityBracket b{lo, hi};
    const Rat width_target(1, 128);
    while (width_target < b.hi - b.lo) {
        Rat mid = (b.lo + b.hi) / Rat(2);
        IntegrabilityClass c = cls(mid);
        if (c == IntegrabilityClass::kIndeterminate) {
            // The midpoint can sit on the threshold; a quarter-step probe
            // keeps the bracket valid either way.
            Rat shifted = mid - (b.hi - b.lo) / Rat(8);
            c = cls(shifted);
            if (c == IntegrabilityClass::kIndeterminate)
                throw Error(ErrCode::kBudget,
                            "indeterminate shell growth near c = " + mid.str() +
                                " within the shell budget");
            mid = shifted;
        }
        if (c == IntegrabilityClass::kIntegrable)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return b;
}

}  // namespace zhouval
