// zhouval: batch front end for the exact valuation invariants and their
// Monte-Carlo verification. Talks to the core exclusively through the C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zhouval.h"

namespace {

using nlohmann::json;

struct CliOptions {
    std::string format = "human";
    uint64_t seed = 0;
    bool seed_set = false;
    uint64_t samples = 0;
    bool samples_set = false;
    double t_max = 0;
    bool t_max_set = false;
    bool oracle = false;
    bool quiet = false;
};

int exit_code_for(zv_status s) {
    switch (s) {
        case ZV_OK: return 0;
        case ZV_ERR_SYNTAX:
        case ZV_ERR_INVALID_ARGUMENT: return 2;
        case ZV_ERR_DOMAIN:
        case ZV_ERR_PRECONDITION: return 3;
        case ZV_ERR_BUDGET: return 4;
        case ZV_ERR_INTERNAL: return 5;
    }
    return 5;
}

int fail(zv_status s) {
    std::cerr << "error (" << zv_status_name(s) << "): " << zv_last_error();
    if (zv_last_error_position() > 0) std::cerr << " [position " << zv_last_error_position() << "]";
    std::cerr << "\n";
    return exit_code_for(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("problem file", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string options_json(const CliOptions& o) {
    json j = json::object();
    if (o.seed_set) j["seed"] = o.seed;
    if (o.samples_set) j["samples"] = o.samples;
    if (o.t_max_set) j["t_max"] = o.t_max;
    if (o.oracle) j["oracle"] = true;
    return j.dump();
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void human_kv(const std::string& k, const json& v) {
    std::cout << "  " << k << ": ";
    if (v.is_string())
        std::cout << v.get<std::string>();
    else if (v.is_number_float())
        std::cout << fmt_double(v.get<double>());
    else
        std::cout << v.dump();
    std::cout << "\n";
}

void render_human(const json& rep, bool quiet) {
    const json& res = rep.at("results");
    if (!quiet) {
        std::cout << rep.at("command").get<std::string>() << " (zhouval "
                  << rep.at("tool_version").get<std::string>() << ")\n";
        if (rep.contains("seed")) std::cout << "  seed: " << rep.at("seed").get<uint64_t>() << "\n";
    }
    for (const auto& [k, v] : res.items()) {
        if (k == "rows") {
            for (const auto& row : v) {
                std::cout << "  ";
                bool first = true;
                auto cell = [&](const std::string& ck, const json& cv) {
                    if (!first) std::cout << "  ";
                    first = false;
                    std::cout << ck << "="
                              << (cv.is_number_float() ? fmt_double(cv.get<double>()) : cv.dump());
                };
                if (row.contains("t")) cell("t", row.at("t"));
                for (const auto& [ck, cv] : row.items())
                    if (ck != "t") cell(ck, cv);
                std::cout << "\n";
            }
            continue;
        }
        human_kv(k, v);
    }
}

void render_csv(const json& rep) {
    const json& res = rep.at("results");
    std::string cmd = rep.at("command").get<std::string>();
    if (cmd == "tian") {
        std::cout << "t,value,slope_right\n";
        const auto& bp = res.at("breakpoints");
        const auto& vals = res.at("values");
        const auto& slopes = res.at("slopes");
        for (size_t i = 0; i < bp.size(); ++i)
            std::cout << bp[i].get<std::string>() << "," << vals[i].get<std::string>() << ","
                      << slopes[i + 1].get<std::string>() << "\n";
        return;
    }
    if (cmd == "verify-integral" && res.contains("rows")) {
        if (res.at("kind") == "mass_decay") {
            std::cout << "t,mass,mass_stderr,statistic_raw,statistic_rate\n";
            for (const auto& r : res.at("rows"))
                std::cout << fmt_double(r.at("t").get<double>()) << ","
                          << fmt_double(r.at("mass").get<double>()) << ","
                          << fmt_double(r.at("mass_stderr").get<double>()) << ","
                          << fmt_double(r.at("statistic_raw").get<double>()) << ","
                          << fmt_double(r.at("statistic_rate").get<double>()) << "\n";
            return;
        }
        std::cout << "t,estimate,stderr,exact\n";
        for (const auto& r : res.at("rows"))
            std::cout << fmt_double(r.at("t").get<double>()) << ","
                      << fmt_double(r.at("estimate").get<double>()) << ","
                      << fmt_double(r.at("stderr").get<double>()) << ","
                      << fmt_double(r.at("exact").get<double>()) << "\n";
        return;
    }
    throw CLI::ValidationError("--format", "csv output is defined for tian and verify-integral");
}

using Runner = zv_status (*)(const zv_problem*, const char*, char**);

int run(Runner runner, const std::string& path, const CliOptions& opts) {
    std::string text = read_file(path);
    zv_problem* prob = nullptr;
    zv_status s = zv_problem_from_json(text.c_str(), &prob);
    if (s != ZV_OK) return fail(s);
    char* report = nullptr;
    s = runner(prob, options_json(opts).c_str(), &report);
    zv_problem_free(prob);
    if (s != ZV_OK) return fail(s);
    json rep = json::parse(report);
    zv_string_free(report);
    if (opts.format == "json")
        std::cout << rep.dump(2) << "\n";
    else if (opts.format == "csv")
        render_csv(rep);
    else
        render_human(rep, opts.quiet);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zhouval: exact relative types, jumping numbers, Tian functions, curve "
                 "valuations and the valuative interpolation criterion"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    auto* seed_opt = app.add_option("--seed", opts.seed, "Seed for the numeric subcommands");
    auto* samples_opt = app.add_option("--samples", opts.samples, "Samples per t value");
    auto* tmax_opt = app.add_option("--t-max", opts.t_max, "Drop plan t values above this");
    app.add_flag("--oracle", opts.oracle, "Co-run the independent oracles and attach agreement");
    app.add_flag("--quiet", opts.quiet, "Suppress informational lines in human output");

    struct Sub {
        const char* name;
        const char* help;
        Runner runner;
    };
    const Sub subs[] = {
        {"sigma", "Relative type sigma(log|g|, phi) or sigma of interpolation data", zv_run_sigma},
        {"lct", "Jumping number / log canonical threshold of a weight", zv_run_lct},
        {"tian", "Tian function breakpoints on a t range", zv_run_tian},
        {"interpolate", "Decide the valuative interpolation criterion with witnesses",
         zv_run_interpolate},
        {"verify-integral", "Monte-Carlo verification of the integral formula / mass decay",
         zv_run_verify_integral},
        {"denominator", "Universal denominator of a monomial curve", zv_run_denominator},
        {"zeroset", "Decide whether the common zero set is exactly {o}", zv_run_zeroset},
    };

    std::string path;
    Runner chosen = nullptr;
    for (const Sub& sub : subs) {
        CLI::App* sc = app.add_subcommand(sub.name, sub.help);
        sc->add_option("problem", path, "Problem file (JSON)")->required();
        Runner r = sub.runner;
        sc->callback([&chosen, r] { chosen = r; });
    }

    CLI11_PARSE(app, argc, argv);
    opts.seed_set = seed_opt->count() > 0;
    opts.samples_set = samples_opt->count() > 0;
    opts.t_max_set = tmax_opt->count() > 0;

    try {
        return run(chosen, path, opts);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
