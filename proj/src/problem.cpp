#include "problem.hpp"

#include <functional>
#include <sstream>

namespace zhouval {

using nlohmann::json;

const char* const kToolVersion = "0.1.0";

std::string rat_pq(const Rat& r) { return r.numerator().str() + "/" + r.denominator().str(); }

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw Error(ErrCode::kSyntax, "problem file: " + where + ": " + what);
}

Rat json_rat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    schema_error(where, "expected an integer or a \"p/q\" string");
}

VarContextPtr ring_vars(const InterpolationRing& ring) {
    if (const auto* c = std::get_if<ComplexPolyRing>(&ring)) return c->vars;
    if (const auto* r = std::get_if<RealPolyRing>(&ring)) return r->vars;
    return make_vars({"z1", "z2"});
}

CurvePoint parse_point(const json& j) {
    if (!j.is_object()) schema_error("point", "expected an object");
    std::string type = j.value("type", "");
    if (type == "origin") return curve_origin();
    if (type == "t") return curve_point_at(json_rat(j.at("value"), "point.value"));
    if (type == "unit_root") return curve_point_unit_root(j.at("k").get<unsigned>());
    schema_error("point.type", "expected origin | t | unit_root, got '" + type + "'");
}

AnalyticWeight parse_weight(const json& j, const VarContextPtr& vars, const std::string& where) {
    if (!j.is_object()) schema_error(where, "expected an object");
    Rat scale(1);
    if (j.contains("scale")) scale = json_rat(j.at("scale"), where + ".scale");
    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        schema_error(where, "needs a nonempty generators array");
    std::vector<WeightGen> gens;
    for (const auto& g : j.at("generators")) {
        if (!g.is_object() || !g.contains("expr"))
            schema_error(where + ".generators", "each generator needs {expr, a}");
        Polynomial f = parse_polynomial(g.at("expr").get<std::string>(), vars);
        Rat a = g.contains("a") ? json_rat(g.at("a"), where + ".generators.a") : Rat(1);
        gens.push_back({std::move(f), std::move(a)});
    }
    return AnalyticWeight(std::move(scale), std::move(gens));
}

BackgroundDensity parse_background(const json& j, const VarContextPtr& vars) {
    BackgroundDensity rho;
    if (j.contains("f0")) {
        for (const auto& e : j.at("f0"))
            rho.f0.push_back(parse_polynomial(e.get<std::string>(), vars));
    }
    if (rho.f0.empty()) rho.f0.push_back(Polynomial::constant(vars, Rat(1)));
    if (j.contains("phi0")) rho.phi0 = parse_weight(j.at("phi0"), vars, "background.phi0");
    return rho;
}

}  // namespace

Problem parse_problem_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrCode::kSyntax, std::string("problem file: ") + e.what(), e.byte);
    }
    if (!j.is_object()) schema_error("$", "top level must be an object");
    if (!j.contains("ring")) schema_error("$", "missing ring descriptor");
    const json& ring = j.at("ring");
    std::string rtype = ring.value("type", "");

    Problem p;
    if (rtype == "polynomial_complex" || rtype == "polynomial_real") {
        if (!ring.contains("variables") || !ring.at("variables").is_array() ||
            ring.at("variables").empty())
            schema_error("ring.variables", "needs a nonempty array of names");
        std::vector<std::string> names;
        for (const auto& v : ring.at("variables")) names.push_back(v.get<std::string>());
        VarContextPtr vars = make_vars(std::move(names));
        if (rtype == "polynomial_complex")
            p.ring = ComplexPolyRing{vars};
        else
            p.ring = RealPolyRing{vars};
        if (j.contains("point")) {
            const json& pt = j.at("point");
            if (!(pt.is_object() && pt.value("type", "") == "origin"))
                schema_error("point", "polynomial rings are studied at the origin only");
        }
    } else if (rtype == "monomial_curve") {
        unsigned cp = ring.value("p", 0u), cq = ring.value("q", 0u);
        CurvePoint pt = j.contains("point") ? parse_point(j.at("point")) : curve_origin();
        p.ring = CurveRing{MonomialCurve(cp, cq), pt};
    } else {
        schema_error("ring.type",
                     "expected polynomial_complex | polynomial_real | monomial_curve, got '" +
                         rtype + "'");
    }

    VarContextPtr vars = ring_vars(p.ring);
    if (j.contains("functions")) {
        if (!j.at("functions").is_array()) schema_error("functions", "expected an array");
        for (const auto& fj : j.at("functions")) {
            if (!fj.is_object() || !fj.contains("expr"))
                schema_error("functions", "each entry needs {expr, a}");
            Polynomial f = parse_polynomial(fj.at("expr").get<std::string>(), vars);
            Rat a = fj.contains("a") ? json_rat(fj.at("a"), "functions.a") : Rat(1);
            p.functions.push_back(
                {std::move(f), std::move(a), fj.value("label", fj.at("expr").get<std::string>())});
        }
    }
    if (j.contains("weight")) p.weight = parse_weight(j.at("weight"), vars, "weight");
    if (j.contains("g")) p.numerator = parse_polynomial(j.at("g").get<std::string>(), vars);
    if (j.contains("psi")) p.psi = parse_weight(j.at("psi"), vars, "psi");
    if (j.contains("background")) p.background = parse_background(j.at("background"), vars);
    if (j.contains("t_range")) {
        const json& tr = j.at("t_range");
        if (!tr.is_array() || tr.size() != 2) schema_error("t_range", "expected [lo, hi]");
        p.t_range = {json_rat(tr[0], "t_range[0]"), json_rat(tr[1], "t_range[1]")};
    }
    if (j.contains("truncate_N")) p.truncate_n = j.at("truncate_N").get<unsigned>();
    if (j.contains("bracket")) {
        const json& br = j.at("bracket");
        if (!br.is_array() || br.size() != 2) schema_error("bracket", "expected [lo, hi]");
        p.bracket = {json_rat(br[0], "bracket[0]"), json_rat(br[1], "bracket[1]")};
    }
    if (j.contains("plan")) {
        const json& pl = j.at("plan");
        SamplingPlan plan;
        plan.dimension = pl.value("dimension", static_cast<unsigned>(vars->size()));
        if (pl.contains("t_values"))
            for (const auto& t : pl.at("t_values")) plan.t_values.push_back(t.get<double>());
        else
            plan.t_values = {4, 6, 8, 10};
        plan.samples_per_t = pl.value("samples_per_t", static_cast<uint64_t>(100000));
        plan.stream_count = pl.value("stream_count", 8u);
        plan.seed = pl.value("seed", plan.seed);
        p.plan = plan;
        p.plan_kind = pl.value("kind", "integral");
        if (p.plan_kind != "integral" && p.plan_kind != "mass_decay")
            schema_error("plan.kind", "expected integral | mass_decay");
    }
    return p;
}

RunOptions parse_options_json(const std::string& text) {
    RunOptions opt;
    if (text.empty()) return opt;
    json j = json::parse(text, nullptr, true);
    if (j.contains("seed")) opt.seed = j.at("seed").get<uint64_t>();
    if (j.contains("samples")) opt.samples = j.at("samples").get<uint64_t>();
    if (j.contains("t_max")) opt.t_max = j.at("t_max").get<double>();
    if (j.contains("oracle")) opt.with_oracle = j.at("oracle").get<bool>();
    return opt;
}

namespace {

json report_shell(const std::string& command) {
    json r;
    r["schema_version"] = 1;
    r["tool"] = "zhouval";
    r["tool_version"] = kToolVersion;
    r["command"] = command;
    r["results"] = json::object();
    r["provenance"] = json::object();
    return r;
}

json ray_json(const RatVec& w) {
    json a = json::array();
    for (const Rat& x : w) a.push_back(rat_pq(x));
    return a;
}

json certificate_json(const RelativeTypeResult& rt) {
    json a = json::array();
    for (const auto& ev : rt.certificate) {
        json e;
        e["ray"] = ray_json(ev.ray);
        e["numerator"] = rat_pq(ev.numerator);
        e["denominator"] = rat_pq(ev.denominator);
        a.push_back(std::move(e));
    }
    return a;
}

const AnalyticWeight& require_weight(const Problem& p, const char* cmd) {
    if (!p.weight)
        throw Error(ErrCode::kInvalidArgument, std::string(cmd) + " needs a \"weight\" descriptor");
    return *p.weight;
}

std::vector<std::pair<Polynomial, Rat>> curve_weight_pairs(const AnalyticWeight& w) {
    std::vector<std::pair<Polynomial, Rat>> out;
    for (const auto& g : w.gens()) out.emplace_back(g.f, g.a);
    return out;
}

// Coarse rational-grid lower-envelope scan of the simplex; an independent
// sanity oracle for sigma (the grid min can only sit above the exact inf).
json grid_oracle_json(const Polynomial& g, const AnalyticWeight& phi, const Rat& sigma) {
    const long res = 48;
    bool have = false;
    Rat best;
    const size_t n = phi.nvars();
    std::vector<long> idx(n, 0);
    // Enumerate lattice points of the simplex at resolution res.
    std::function<void(size_t, long)> rec = [&](size_t k, long left) {
        if (k + 1 == n) {
            idx[k] = left;
            RatVec w(n);
            for (size_t i = 0; i < n; ++i) w[i] = Rat(idx[i], res);
            Rat den = phi.value_on_ray(w);
            if (den.sign() > 0) {
                Rat v = trop_value(g, w) / den;
                if (!have || v < best) {
                    best = v;
                    have = true;
                }
            }
            return;
        }
        for (long i = 0; i <= left; ++i) {
            idx[k] = i;
            rec(k + 1, left - i);
        }
    };
    rec(0, res);
    json o;
    o["kind"] = "rational_grid";
    o["resolution"] = res;
    o["grid_min"] = have ? rat_pq(best) : "none";
    o["consistent"] = have && sigma <= best;
    return o;
}

}  // namespace

json run_sigma(const Problem& p, const RunOptions& opt) {
    json rep = report_shell("sigma");
    json& res = rep["results"];

    if (!p.functions.empty() && !p.numerator) {
        // Interpolation-style data: sigma of log|F| against the phi the
        // functions generate; shares the computation with run_interpolate.
        InterpolationProblem ip{p.ring, p.functions};
        InterpolationVerdict v = check_interpolation(ip);
        res["mode"] = "interpolation_data";
        res["sigma"] = v.sigma_infinite ? json("inf") : json(rat_pq(v.sigma));
        res["target"] = rat_pq(v.target);
        if (!v.note.empty()) res["note"] = v.note;
        rep["provenance"]["sigma"] = "exact";
        return rep;
    }

    if (!p.numerator) throw Error(ErrCode::kInvalidArgument, "sigma needs \"g\" or \"functions\"");
    const AnalyticWeight& phi = require_weight(p, "sigma");
    if (const auto* cr = std::get_if<CurveRing>(&p.ring)) {
        Rat sigma = relative_type_curve(*p.numerator, curve_weight_pairs(phi), cr->curve, cr->point);
        res["mode"] = "curve";
        res["point"] = curve_point_str(cr->point);
        res["sigma"] = rat_pq(sigma);
    } else {
        RelativeTypeResult rt = relative_type(*p.numerator, phi);
        res["mode"] = "ambient";
        res["sigma"] = rt.infinite ? json("inf") : json(rat_pq(rt.value));
        json ws = json::array();
        for (const auto& w : rt.witnesses) ws.push_back(ray_json(w));
        res["witnesses"] = ws;
        res["certificate"] = certificate_json(rt);
        if (opt.with_oracle && !rt.infinite)
            res["oracle"] = grid_oracle_json(*p.numerator, phi, rt.value);
    }
    rep["provenance"]["sigma"] = "exact";
    return rep;
}

json run_lct(const Problem& p, const RunOptions& opt) {
    json rep = report_shell("lct");
    json& res = rep["results"];
    AnalyticWeight phi = require_weight(p, "lct");
    if (p.truncate_n) phi = phi.truncated(*p.truncate_n);
    VarContextPtr vars = ring_vars(p.ring);
    Polynomial g = p.numerator ? *p.numerator : Polynomial::constant(vars, Rat(1));
    const BackgroundDensity* rho = p.background ? &*p.background : nullptr;
    Rat c = jumping_number(phi, g, rho);
    res["jumping_number"] = rat_pq(c);
    rep["provenance"]["jumping_number"] = "exact";
    if (opt.with_oracle) {
        if (rho)
            throw Error(ErrCode::kDomain,
                        "integrability oracle runs on the unit background only");
        Rat lo = p.bracket ? p.bracket->first : c / Rat(4);
        Rat hi = p.bracket ? p.bracket->second : c * Rat(4);
        IntegrabilityBracket br = integrability_bisect(phi, g, lo, hi);
        json o;
        o["bracket_lo"] = rat_pq(br.lo);
        o["bracket_hi"] = rat_pq(br.hi);
        o["width_at_most"] = "1/128";
        o["contains_exact_value"] = (br.lo <= c && c <= br.hi);
        res["oracle"] = o;
        rep["provenance"]["oracle"] = "estimated";
    }
    return rep;
}

json run_tian(const Problem& p, const RunOptions&) {
    json rep = report_shell("tian");
    json& res = rep["results"];
    const AnalyticWeight& phi = require_weight(p, "tian");
    if (!p.psi) throw Error(ErrCode::kInvalidArgument, "tian needs a \"psi\" descriptor");
    VarContextPtr vars = ring_vars(p.ring);
    BackgroundDensity rho = p.background ? *p.background : unit_background(vars);
    Rat lo(0), hi(4);
    if (p.t_range) {
        lo = p.t_range->first;
        hi = p.t_range->second;
    }
    PiecewiseLinearFn fn = tian_function(phi, *p.psi, rho, lo, hi);
    json bp = json::array(), vals = json::array(), slopes = json::array();
    for (const auto& t : fn.breakpoints) bp.push_back(rat_pq(t));
    for (const auto& v : fn.values) vals.push_back(rat_pq(v));
    for (const auto& s : fn.slopes) slopes.push_back(rat_pq(s));
    res["breakpoints"] = bp;
    res["values"] = vals;
    res["slopes"] = slopes;
    res["concave"] = fn.concave();
    rep["provenance"]["tian"] = "exact";
    return rep;
}

json run_interpolate(const Problem& p, const RunOptions& opt) {
    json rep = report_shell("interpolate");
    json& res = rep["results"];
    if (p.functions.empty())
        throw Error(ErrCode::kInvalidArgument, "interpolate needs a \"functions\" array");
    InterpolationProblem ip{p.ring, p.functions};
    InterpolationVerdict v = check_interpolation(ip);
    res["holds"] = v.holds;
    res["sigma"] = v.sigma_infinite ? json("inf") : json(rat_pq(v.sigma));
    res["target"] = rat_pq(v.target);
    res["indeterminate"] = v.indeterminate;
    res["converse_applicable"] = v.converse_applicable;
    if (!v.note.empty()) res["note"] = v.note;
    if (const auto* cr = std::get_if<CurveRing>(&p.ring); cr && !v.holds && !v.sigma_infinite) {
        // The criterion is local; when the functions share zeros away from
        // this point, the quotient-ring question can still succeed there.
        std::vector<Polynomial> fs;
        bool all_polys = true;
        for (const auto& fn : p.functions) {
            if (const Polynomial* q = std::get_if<Polynomial>(&fn.f))
                fs.push_back(*q);
            else
                all_polys = false;
        }
        if (all_polys) {
            ZeroSetResult z = zero_set_is_origin(fs, p.ring);
            if (!z.is_origin_only)
                res["quotient_ring_note"] =
                    "the criterion fails at " + curve_point_str(cr->point) +
                    " only; a valuation on the quotient ring may still interpolate at another "
                    "common zero (" + z.description + ")";
        }
    }
    if (v.witness) {
        json w;
        if (const auto* rw = std::get_if<RayWitness>(&*v.witness)) {
            w["kind"] = "monomial_ray";
            w["weights"] = ray_json(rw->weights);
        } else {
            const auto& cw = std::get<CurveOrderWitness>(*v.witness);
            w["kind"] = "curve_order";
            w["point"] = curve_point_str(cw.point);
            w["order_scale"] = rat_pq(cw.scale);
        }
        res["witness"] = w;
        json diag = json::array();
        for (const auto& d : v.diagnostics) {
            json e;
            e["function"] = d.label;
            e["target_a"] = rat_pq(d.target_a);
            e["value"] = rat_pq(d.value_under_witness);
            diag.push_back(std::move(e));
        }
        res["diagnostics"] = diag;
    }
    if (opt.with_oracle) {
        // Independent cross-checks: a rational grid scan on C^n, the direct
        // order recomputation on curves.
        if (const auto* cn = std::get_if<ComplexPolyRing>(&p.ring)) {
            if (!v.sigma_infinite) {
                Polynomial big_f = Polynomial::constant(cn->vars, Rat(1));
                std::vector<WeightGen> gens;
                for (const auto& fn : p.functions) {
                    const Polynomial& q = std::get<Polynomial>(fn.f);
                    big_f = big_f * q;
                    if (fn.a.sign() > 0) gens.push_back({q, fn.a});
                }
                res["oracle"] = grid_oracle_json(big_f, AnalyticWeight(Rat(1), gens), v.sigma);
                rep["provenance"]["oracle"] = "exact-grid";
            }
        } else if (const auto* cr = std::get_if<CurveRing>(&p.ring)) {
            // ord(F) must equal the sum of the per-function orders.
            int64_t sum = 0;
            Polynomial big_f = Polynomial::constant(make_vars({"z1", "z2"}), Rat(1));
            bool polys = true;
            for (const auto& fn : p.functions) {
                if (const Polynomial* q = std::get_if<Polynomial>(&fn.f)) {
                    sum += curve_valuation(*q, cr->curve, cr->point);
                    big_f = big_f * *q;
                } else {
                    polys = false;
                }
            }
            if (polys) {
                json o;
                o["kind"] = "order_additivity";
                o["order_of_product"] = curve_valuation(big_f, cr->curve, cr->point);
                o["sum_of_orders"] = sum;
                o["consistent"] = o["order_of_product"] == o["sum_of_orders"];
                res["oracle"] = o;
                rep["provenance"]["oracle"] = "exact-order";
            }
        }
    }
    rep["provenance"]["sigma"] = "exact";
    rep["provenance"]["holds"] = "exact";
    return rep;
}

json run_zeroset(const Problem& p, const RunOptions&) {
    json rep = report_shell("zeroset");
    json& res = rep["results"];
    if (p.functions.empty())
        throw Error(ErrCode::kInvalidArgument, "zeroset needs a \"functions\" array");
    std::vector<Polynomial> fs;
    for (const auto& fn : p.functions) {
        const Polynomial* q = std::get_if<Polynomial>(&fn.f);
        if (!q) throw Error(ErrCode::kDomain, "zeroset takes polynomial functions");
        fs.push_back(*q);
    }
    ZeroSetResult z = zero_set_is_origin(fs, p.ring);
    res["is_origin_only"] = z.is_origin_only;
    res["origin_in_zero_set"] = z.origin_in_zero_set;
    res["description"] = z.description;
    rep["provenance"]["zeroset"] = "exact";
    return rep;
}

json run_denominator(const Problem& p, const RunOptions&) {
    json rep = report_shell("denominator");
    json& res = rep["results"];
    const auto* cr = std::get_if<CurveRing>(&p.ring);
    if (!cr) throw Error(ErrCode::kInvalidArgument, "denominator needs a monomial_curve ring");
    VarContextPtr vars = make_vars({"z1", "z2"});
    res["p"] = cr->curve.p();
    res["q"] = cr->curve.q();
    res["frobenius"] = cr->curve.frobenius();
    res["denominator"] = cr->curve.universal_denominator(vars).str();
    rep["provenance"]["denominator"] = "exact";
    return rep;
}

json run_verify_integral(const Problem& p, const RunOptions& opt) {
    json rep = report_shell("verify-integral");
    json& res = rep["results"];
    const AnalyticWeight& phi = require_weight(p, "verify-integral");
    VarContextPtr vars = ring_vars(p.ring);
    BackgroundDensity rho = p.background ? *p.background : unit_background(vars);
    if (!p.plan) throw Error(ErrCode::kInvalidArgument, "verify-integral needs a \"plan\"");
    SamplingPlan plan = *p.plan;
    if (opt.seed) plan.seed = *opt.seed;
    if (opt.samples) plan.samples_per_t = *opt.samples;
    if (opt.t_max) {
        std::vector<double> ts;
        for (double t : plan.t_values)
            if (t <= *opt.t_max) ts.push_back(t);
        if (ts.empty()) throw Error(ErrCode::kInvalidArgument, "t_max removed every t value");
        plan.t_values = ts;
    }
    rep["seed"] = plan.seed;
    res["kind"] = p.plan_kind;

    if (p.plan_kind == "mass_decay") {
        MassDecayReport md = estimate_mass_decay(phi, rho, plan);
        json rows = json::array();
        for (const auto& r : md.rows) {
            json e;
            e["t"] = r.t;
            e["mass"] = r.mass;
            e["mass_stderr"] = r.mass_stderr;
            e["statistic_raw"] = r.statistic_raw;
            e["statistic_rate"] = r.statistic_rate;
            e["acceptance_rate"] = r.acceptance_rate;
            rows.push_back(std::move(e));
        }
        res["rows"] = rows;
        rep["provenance"]["rows"] = "monte-carlo";
        return rep;
    }

    if (!p.psi) throw Error(ErrCode::kInvalidArgument, "verify-integral needs a \"psi\"");
    EstimateReport er = estimate_relative_type_integral(phi, *p.psi, rho, plan);
    json rows = json::array();
    for (const auto& r : er.rows) {
        json e;
        e["t"] = r.t;
        e["estimate"] = r.estimate;
        e["stderr"] = r.stderr_est;
        e["exact"] = er.exact_reference;
        e["acceptance_rate"] = r.acceptance_rate;
        rows.push_back(std::move(e));
    }
    res["rows"] = rows;
    res["extrapolated"] = er.extrapolated;
    res["fit_residual"] = er.fit_residual;
    res["exact_sigma"] = er.exact_reference;
    res["relative_deviation"] = er.relative_deviation;
    rep["provenance"]["rows"] = "monte-carlo";
    rep["provenance"]["exact_sigma"] = "exact";
    return rep;
}

}  // namespace zhouval
