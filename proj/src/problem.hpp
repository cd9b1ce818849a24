#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "interp.hpp"
#include "numeric.hpp"

namespace zhouval {

// A parsed problem file: the ring/point describe where invariants live, the
// optional pieces feed the individual commands.
struct Problem {
    InterpolationRing ring;
    std::vector<InterpolationFunction> functions;
    std::optional<AnalyticWeight> weight;  // phi
    std::optional<Polynomial> numerator;   // g / G
    std::optional<AnalyticWeight> psi;
    std::optional<BackgroundDensity> background;
    std::optional<std::pair<Rat, Rat>> t_range;
    std::optional<unsigned> truncate_n;
    std::optional<SamplingPlan> plan;
    std::string plan_kind = "integral";  // or "mass_decay"
    std::optional<std::pair<Rat, Rat>> bracket;
};

// Command options shared by the run_* entry points.
struct RunOptions {
    std::optional<uint64_t> seed;
    std::optional<uint64_t> samples;
    std::optional<double> t_max;
    bool with_oracle = false;
};

Problem parse_problem_json(const std::string& text);
RunOptions parse_options_json(const std::string& text);

nlohmann::json run_sigma(const Problem& p, const RunOptions& opt);
nlohmann::json run_lct(const Problem& p, const RunOptions& opt);
nlohmann::json run_tian(const Problem& p, const RunOptions& opt);
nlohmann::json run_interpolate(const Problem& p, const RunOptions& opt);
nlohmann::json run_zeroset(const Problem& p, const RunOptions& opt);
nlohmann::json run_denominator(const Problem& p, const RunOptions& opt);
nlohmann::json run_verify_integral(const Problem& p, const RunOptions& opt);

// Exact rationals in reports are always "num/den" strings.
std::string rat_pq(const Rat& r);

extern const char* const kToolVersion;

}  // namespace zhouval
