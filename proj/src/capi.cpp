#include "zhouval.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "curve.hpp"
#include "problem.hpp"
#include "tropical.hpp"

using namespace zhouval;

namespace {

thread_local std::string g_last_error;
thread_local size_t g_last_position = 0;

zv_status status_of(ErrCode c) {
    switch (c) {
        case ErrCode::kInvalidArgument: return ZV_ERR_INVALID_ARGUMENT;
        case ErrCode::kSyntax: return ZV_ERR_SYNTAX;
        case ErrCode::kDomain: return ZV_ERR_DOMAIN;
        case ErrCode::kPrecondition: return ZV_ERR_PRECONDITION;
        case ErrCode::kBudget: return ZV_ERR_BUDGET;
        case ErrCode::kInternal: return ZV_ERR_INTERNAL;
    }
    return ZV_ERR_INTERNAL;
}

template <typename Fn>
zv_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        g_last_position = 0;
        fn();
        return ZV_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        g_last_position = e.position();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ZV_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

zv_status require(bool ok, const char* msg) {
    if (ok) return ZV_OK;
    g_last_error = msg;
    g_last_position = 0;
    return ZV_ERR_INVALID_ARGUMENT;
}

CurvePoint parse_point_spec(const std::string& spec) {
    if (spec == "origin") return curve_origin();
    if (spec.rfind("t=", 0) == 0) return curve_point_at(Rat::parse(spec.substr(2)));
    if (spec.rfind("unit_root:", 0) == 0) {
        long k = Rat::parse(spec.substr(10)).to_long();
        if (k <= 0) throw Error(ErrCode::kInvalidArgument, "unit-root order must be positive");
        return curve_point_unit_root(static_cast<unsigned>(k));
    }
    throw Error(ErrCode::kSyntax, "point spec must be origin | t=<rational> | unit_root:<k>");
}

}  // namespace

struct zv_poly {
    Polynomial value;
};
struct zv_weight {
    AnalyticWeight value;
};
struct zv_sigma_result {
    RelativeTypeResult value;
};
struct zv_curve {
    MonomialCurve value;
};
struct zv_problem {
    Problem value;
};

namespace {

template <nlohmann::json (*Runner)(const Problem&, const RunOptions&)>
zv_status run_command(const zv_problem* p, const char* options_json, char** report_json) {
    if (zv_status s = require(p && report_json, "null argument")) return s;
    return guarded([&] {
        RunOptions opt = parse_options_json(options_json ? options_json : "");
        *report_json = dup_string(Runner(p->value, opt).dump(2));
    });
}

}  // namespace

extern "C" {

const char* zv_version(void) { return kToolVersion; }

const char* zv_status_name(zv_status s) {
    switch (s) {
        case ZV_OK: return "ok";
        case ZV_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case ZV_ERR_SYNTAX: return "syntax-error";
        case ZV_ERR_DOMAIN: return "unsupported-class";
        case ZV_ERR_PRECONDITION: return "precondition-failed";
        case ZV_ERR_BUDGET: return "budget-exhausted";
        case ZV_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* zv_last_error(void) { return g_last_error.c_str(); }
size_t zv_last_error_position(void) { return g_last_position; }
void zv_string_free(char* s) { std::free(s); }

zv_status zv_poly_parse(const char* text, const char* const* variables, size_t nvars,
                        zv_poly** out) {
    if (zv_status s = require(text && variables && nvars > 0 && out, "null argument")) return s;
    return guarded([&] {
        std::vector<std::string> names(variables, variables + nvars);
        *out = new zv_poly{parse_polynomial(text, make_vars(std::move(names)))};
    });
}

zv_status zv_poly_print(const zv_poly* p, char** out) {
    if (zv_status s = require(p && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(p->value.str()); });
}

zv_status zv_poly_mul(const zv_poly* a, const zv_poly* b, zv_poly** out) {
    if (zv_status s = require(a && b && out, "null argument")) return s;
    return guarded([&] { *out = new zv_poly{a->value * b->value}; });
}

zv_status zv_poly_newton(const zv_poly* p, char** json_out) {
    if (zv_status s = require(p && json_out, "null argument")) return s;
    return guarded([&] {
        NewtonData nd = newton_data(p->value);
        nlohmann::json j;
        auto pts = [](const std::vector<Exponents>& es) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& e : es) a.push_back(e);
            return a;
        };
        j["support"] = pts(nd.support);
        j["vertices"] = pts(nd.vertices);
        *json_out = dup_string(j.dump());
    });
}

void zv_poly_free(zv_poly* p) { delete p; }

zv_status zv_weight_new(const char* scale, const zv_poly* const* generators,
                        const char* const* a, size_t count, zv_weight** out) {
    if (zv_status s = require(scale && generators && a && count > 0 && out, "null argument"))
        return s;
    return guarded([&] {
        std::vector<WeightGen> gens;
        for (size_t i = 0; i < count; ++i) {
            if (!generators[i] || !a[i]) throw Error(ErrCode::kInvalidArgument, "null generator");
            gens.push_back({generators[i]->value, Rat::parse(a[i])});
        }
        *out = new zv_weight{AnalyticWeight(Rat::parse(scale), std::move(gens))};
    });
}

zv_status zv_weight_truncate(const zv_weight* w, unsigned n, zv_weight** out) {
    if (zv_status s = require(w && out, "null argument")) return s;
    return guarded([&] { *out = new zv_weight{w->value.truncated(n)}; });
}

void zv_weight_free(zv_weight* w) { delete w; }

zv_status zv_relative_type(const zv_poly* g, const zv_weight* phi, zv_sigma_result** out) {
    if (zv_status s = require(g && phi && out, "null argument")) return s;
    return guarded([&] { *out = new zv_sigma_result{relative_type(g->value, phi->value)}; });
}

zv_status zv_sigma_value(const zv_sigma_result* r, char** out) {
    if (zv_status s = require(r && out, "null argument")) return s;
    return guarded([&] {
        *out = dup_string(r->value.infinite ? std::string("inf") : rat_pq(r->value.value));
    });
}

size_t zv_sigma_witness_count(const zv_sigma_result* r) {
    return r ? r->value.witnesses.size() : 0;
}

zv_status zv_sigma_witness(const zv_sigma_result* r, size_t index, char** json_out) {
    if (zv_status s = require(r && json_out, "null argument")) return s;
    if (zv_status s = require(index < r->value.witnesses.size(), "witness index out of range"))
        return s;
    return guarded([&] {
        nlohmann::json a = nlohmann::json::array();
        for (const Rat& x : r->value.witnesses[index]) a.push_back(rat_pq(x));
        *json_out = dup_string(a.dump());
    });
}

void zv_sigma_result_free(zv_sigma_result* r) { delete r; }

zv_status zv_jumping_number(const zv_weight* phi, const zv_poly* g, char** out) {
    if (zv_status s = require(phi && g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(rat_pq(jumping_number(phi->value, g->value))); });
}

zv_status zv_curve_new(unsigned p, unsigned q, zv_curve** out) {
    if (zv_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] { *out = new zv_curve{MonomialCurve(p, q)}; });
}

zv_status zv_curve_order(const zv_curve* x, const zv_poly* f, const char* point_spec,
                         char** out) {
    if (zv_status s = require(x && f && point_spec && out, "null argument")) return s;
    return guarded([&] {
        OrderValue o = pullback_order(f->value, x->value, parse_point_spec(point_spec));
        *out = dup_string(o.infinite ? std::string("inf") : std::to_string(o.value));
    });
}

zv_status zv_curve_denominator(const zv_curve* x, char** poly_out) {
    if (zv_status s = require(x && poly_out, "null argument")) return s;
    return guarded([&] {
        *poly_out = dup_string(x->value.universal_denominator(make_vars({"z1", "z2"})).str());
    });
}

void zv_curve_free(zv_curve* x) { delete x; }

zv_status zv_problem_from_json(const char* json_text, zv_problem** out) {
    if (zv_status s = require(json_text && out, "null argument")) return s;
    return guarded([&] { *out = new zv_problem{parse_problem_json(json_text)}; });
}

void zv_problem_free(zv_problem* p) { delete p; }

zv_status zv_run_sigma(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_sigma>(p, options_json, report_json);
}
zv_status zv_run_lct(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_lct>(p, options_json, report_json);
}
zv_status zv_run_tian(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_tian>(p, options_json, report_json);
}
zv_status zv_run_interpolate(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_interpolate>(p, options_json, report_json);
}
zv_status zv_run_zeroset(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_zeroset>(p, options_json, report_json);
}
zv_status zv_run_denominator(const zv_problem* p, const char* options_json, char** report_json) {
    return run_command<run_denominator>(p, options_json, report_json);
}
zv_status zv_run_verify_integral(const zv_problem* p, const char* options_json,
                                 char** report_json) {
    return run_command<run_verify_integral>(p, options_json, report_json);
}

}  // extern "C"
