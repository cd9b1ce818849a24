#include "weight.hpp"

#include <sstream>

namespace zhouval {

AnalyticWeight::AnalyticWeight(Rat scale, std::vector<WeightGen> gens)
    : scale_(std::move(scale)), gens_(std::move(gens)) {
    if (scale_.sign() <= 0) throw Error(ErrCode::kInvalidArgument, "weight scale must be positive");
    if (gens_.empty()) throw Error(ErrCode::kInvalidArgument, "weight needs at least one generator");
    for (const auto& g : gens_) {
        if (g.f.is_zero()) throw Error(ErrCode::kInvalidArgument, "zero weight generator");
        if (g.a.sign() <= 0)
            throw Error(ErrCode::kInvalidArgument, "weight exponent a_j must be positive");
        if (!(*g.f.vars() == *vars()))
            throw Error(ErrCode::kInvalidArgument, "variable-context mismatch among weight generators");
    }
}

bool AnalyticWeight::vanishes_at_origin() const {
    for (const auto& g : gens_)
        if (!g.f.vanishes_at_origin()) return false;
    return true;
}

bool AnalyticWeight::monomial_supported() const {
    for (const auto& g : gens_)
        if (!g.f.is_monomial()) return false;
    return true;
}

Rat AnalyticWeight::value_on_ray(const RatVec& w) const {
    bool first = true;
    Rat best;
    for (const auto& g : gens_) {
        Rat t;
        bool have = false;
        for (const auto& [e, c] : g.f.terms()) {
            Rat v = dot(w, e);
            if (!have || v < t) {
                t = v;
                have = true;
            }
        }
        t = t / g.a;
        if (first || t < best) {
            best = t;
            first = false;
        }
    }
    return scale_ * best;
}

std::vector<RatVec> AnalyticWeight::tropical_forms() const {
    std::vector<RatVec> forms;
    for (const auto& g : gens_) {
        if (!g.f.is_monomial())
            throw Error(ErrCode::kDomain,
                        "unsupported weight class: generator '" + g.f.str() +
                            "' is not a monomial, so the tropical profile is not exact");
        const Exponents& e = g.f.terms().begin()->first;
        RatVec form(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            form[i] = scale_ * Rat(static_cast<long>(e[i])) / g.a;
        forms.push_back(std::move(form));
    }
    return forms;
}

AnalyticWeight AnalyticWeight::truncated(unsigned n) const {
    if (n < 1) throw Error(ErrCode::kInvalidArgument, "truncation order must be >= 1");
    std::vector<WeightGen> gens = gens_;
    for (size_t k = 0; k < nvars(); ++k)
        gens.push_back({Polynomial::variable(vars(), k, n), Rat(1)});
    return AnalyticWeight(scale_, std::move(gens));
}

AnalyticWeight AnalyticWeight::scaled_by(const Rat& lambda) const {
    return AnalyticWeight(scale_ * lambda, gens_);
}

std::string AnalyticWeight::str() const {
    std::ostringstream os;
    if (!(scale_ == Rat(1))) os << scale_ << "*";
    os << "log(";
    bool first = true;
    for (const auto& g : gens_) {
        if (!first) os << " + ";
        first = false;
        os << "|" << g.f.str() << "|";
        if (!(g.a == Rat(1))) os << "^(1/" << g.a.str() << ")";
    }
    os << ")";
    return os.str();
}

BackgroundDensity unit_background(const VarContextPtr& vars) {
    return BackgroundDensity{{Polynomial::constant(vars, Rat(1))}, std::nullopt};
}

void validate_ray(const RatVec& w) {
    if (w.empty()) throw Error(ErrCode::kInvalidArgument, "empty ray");
    bool positive = false;
    for (const Rat& x : w) {
        if (x.sign() < 0) throw Error(ErrCode::kInvalidArgument, "ray with a negative component");
        if (x.sign() > 0) positive = true;
    }
    if (!positive) throw Error(ErrCode::kInvalidArgument, "zero ray");
}

std::string ray_str(const RatVec& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << w[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace zhouval
