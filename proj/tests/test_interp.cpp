#include <doctest.h>

#include "interp.hpp"
#include "test_util.hpp"

using namespace zhouval;
using zvtest::Gen;

namespace {

auto vars = make_vars({"z1", "z2"});
Polynomial P(const char* s) { return parse_polynomial(s, vars); }

InterpolationProblem cusp_problem(const CurvePoint& pt) {
    InterpolationProblem prob;
    prob.ring = CurveRing{MonomialCurve(2, 3), pt};
    for (const char* s : {"z1*(z1-1)", "z1*(z2-1)", "z2*(z1-1)", "z2*(z2-1)", "z1*z2*(z1-1)",
                          "z1*z2*(z2-1)"})
        prob.functions.push_back({P(s), Rat(1), s});
    return prob;
}

InterpolationProblem cn_problem(std::vector<std::pair<const char*, Rat>> fns) {
    InterpolationProblem prob;
    prob.ring = ComplexPolyRing{vars};
    for (auto& [s, a] : fns) prob.functions.push_back({P(s), a, s});
    return prob;
}

}  // namespace

TEST_CASE("cusp: interpolation holds at the smooth point") {
    InterpolationVerdict v = check_interpolation(cusp_problem(curve_point_at(Rat(1))));
    CHECK(v.holds);
    CHECK(v.sigma == Rat(6));
    CHECK(v.target == Rat(6));
    REQUIRE(v.witness.has_value());
    const auto& w = std::get<CurveOrderWitness>(*v.witness);
    CHECK(w.scale == Rat(1));
    REQUIRE(v.diagnostics.size() == 6);
    for (const auto& d : v.diagnostics) CHECK(d.value_under_witness == Rat(1));
    // the order valuation at t=1 gives every coordinate value 0
    CHECK_FALSE(v.converse_applicable);
}

TEST_CASE("cusp: interpolation fails at the singular origin") {
    InterpolationVerdict v = check_interpolation(cusp_problem(curve_origin()));
    CHECK_FALSE(v.holds);
    CHECK(v.sigma == Rat(10));
    CHECK(v.target == Rat(6));
    CHECK(v.sigma > v.target);
    CHECK_FALSE(v.indeterminate);
}

TEST_CASE("coordinate monomials interpolate on C^2") {
    InterpolationVerdict v = check_interpolation(cn_problem({{"z1", Rat(1)}, {"z2", Rat(1)}}));
    CHECK(v.holds);
    CHECK(v.sigma == Rat(2));
    REQUIRE(v.witness.has_value());
    const auto& w = std::get<RayWitness>(*v.witness);
    CHECK(w.weights == RatVec{Rat(1), Rat(1)});
    CHECK(v.converse_applicable);
}

TEST_CASE("forced inequality: nu(z1 z2) >= nu(z1) blocks interpolation") {
    // any valuation gives nu(z1 z2) >= nu(z1) = 2 > 1, so no witness exists
    InterpolationVerdict v = check_interpolation(cn_problem({{"z1*z2", Rat(1)}, {"z1", Rat(2)}}));
    CHECK_FALSE(v.holds);
    CHECK(v.sigma == Rat(4));
    CHECK(v.target == Rat(3));
}

TEST_CASE("an f0 participates in F without entering phi") {
    InterpolationVerdict v = check_interpolation(
        cn_problem({{"1 + z1", Rat(0)}, {"z1", Rat(1)}, {"z2", Rat(1)}}));
    CHECK(v.holds);
    for (const auto& d : v.diagnostics)
        if (d.target_a.is_zero()) CHECK(d.value_under_witness == Rat(0));

    // an f0 vanishing on every witness direction breaks the equality
    InterpolationVerdict bad = check_interpolation(
        cn_problem({{"z1 + z2", Rat(0)}, {"z1", Rat(1)}, {"z2", Rat(1)}}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.sigma > bad.target);
}

TEST_CASE("non-vanishing generator forces sigma = +infinity") {
    InterpolationVerdict v = check_interpolation(cn_problem({{"z1 + 1", Rat(1)}, {"z2", Rat(1)}}));
    CHECK(v.sigma_infinite);
    CHECK_FALSE(v.holds);
    CHECK(v.note.find("infinity") != std::string::npos);
}

TEST_CASE("sigma >= target on random monomial instances, witnesses sound") {
    Gen gen(606);
    for (int i = 0; i < 120; ++i) {
        InterpolationProblem prob;
        prob.ring = ComplexPolyRing{vars};
        int k = static_cast<int>(gen.range(1, 4));
        for (int j = 0; j < k; ++j)
            prob.functions.push_back({gen.monomial(vars, 4, true), gen.positive_rat(4, 2), ""});
        InterpolationVerdict v = check_interpolation(prob);
        REQUIRE_FALSE(v.sigma_infinite);
        CHECK(v.sigma >= v.target);
        if (v.holds) {
            REQUIRE(v.witness.has_value());
            const auto& w = std::get<RayWitness>(*v.witness);
            for (size_t j = 0; j < prob.functions.size(); ++j)
                CHECK(trop_value(std::get<Polynomial>(prob.functions[j].f), w.weights) ==
                      prob.functions[j].a);
        }
    }
}

TEST_CASE("when the zero set is {o} and the criterion fails, no ray witnesses") {
    // zero set of {z1^2, z2} is {o}; targets (1, 1) force nu(z1) = 1/2 on a
    // candidate ray while sigma stays strictly above the target.
    InterpolationProblem prob = cn_problem({{"z1^2", Rat(1)}, {"z2", Rat(1)}, {"z1*z2", Rat(1)}});
    InterpolationVerdict v = check_interpolation(prob);
    std::vector<Polynomial> fs;
    for (const auto& f : prob.functions) fs.push_back(std::get<Polynomial>(f.f));
    CHECK(zero_set_is_origin(fs, prob.ring).is_origin_only);
    if (!v.holds) {
        // exhaustive search over certificate rays: no rescaling hits all targets
        AnalyticWeight phi(Rat(1), {{P("z1^2"), Rat(1)}, {P("z2"), Rat(1)}, {P("z1*z2"), Rat(1)}});
        Polynomial big_f = P("z1^2") * P("z2") * P("z1*z2");
        for (const auto& ev : relative_type(big_f, phi).certificate) {
            if (ev.denominator.sign() <= 0) continue;
            bool consistent = true;
            Rat lambda;
            bool first = true;
            for (const auto& fn : prob.functions) {
                Rat tv = trop_value(std::get<Polynomial>(fn.f), ev.ray);
                if (tv.is_zero()) {
                    consistent = false;
                    break;
                }
                Rat need = fn.a / tv;
                if (first) {
                    lambda = need;
                    first = false;
                } else if (!(need == lambda)) {
                    consistent = false;
                    break;
                }
            }
            CHECK_FALSE(consistent);
        }
    }
}

TEST_CASE("zero sets: monomial combinatorics and curve gcd") {
    CHECK(zero_set_is_origin({P("z1"), P("z2")}, ComplexPolyRing{vars}).is_origin_only);
    ZeroSetResult axis = zero_set_is_origin({P("z1*z2"), P("z1")}, ComplexPolyRing{vars});
    CHECK_FALSE(axis.is_origin_only);
    CHECK(axis.description.find("axis") != std::string::npos);
    CHECK(zero_set_is_origin({P("z1^3"), P("z2^2")}, ComplexPolyRing{vars}).is_origin_only);
    CHECK_FALSE(zero_set_is_origin({P("5")}, ComplexPolyRing{vars}).origin_in_zero_set);
    CHECK_THROWS_AS(zero_set_is_origin({P("z1 + z2")}, ComplexPolyRing{vars}), Error);

    InterpolationProblem cusp = cusp_problem(curve_origin());
    std::vector<Polynomial> fs;
    for (const auto& f : cusp.functions) fs.push_back(std::get<Polynomial>(f.f));
    ZeroSetResult z = zero_set_is_origin(fs, cusp.ring);
    CHECK_FALSE(z.is_origin_only);
    CHECK(z.origin_in_zero_set);
    CHECK(z.description.find("(1,1)") != std::string::npos);

    CHECK(zero_set_is_origin({P("z1"), P("z2")}, cusp.ring).is_origin_only);

    // common zeros away from the origin only
    ZeroSetResult smooth = zero_set_is_origin({P("z1 - 1"), P("z2 - 1")}, cusp.ring);
    CHECK_FALSE(smooth.is_origin_only);
    CHECK_FALSE(smooth.origin_in_zero_set);
    CHECK(smooth.description.find("(1,1)") != std::string::npos);

    // a function in the defining ideal constrains nothing
    ZeroSetResult ideal =
        zero_set_is_origin({P("z1^3 - z2^2"), P("z1"), P("z2")}, cusp.ring);
    CHECK(ideal.is_origin_only);
    ZeroSetResult all_ideal = zero_set_is_origin({P("z1^3 - z2^2")}, cusp.ring);
    CHECK_FALSE(all_ideal.is_origin_only);
}

TEST_CASE("real problems lift coefficient-identically") {
    auto xvars = make_vars({"x1", "x2"});
    InterpolationProblem prob;
    prob.ring = RealPolyRing{xvars};
    prob.functions.push_back({parse_polynomial("x1^2 + x2^2", xvars), Rat(1), ""});
    prob.functions.push_back({parse_polynomial("x1^3 - x2^2", xvars), Rat(0), ""});
    InterpolationProblem lifted = real_lift(prob);
    const auto* cn = std::get_if<ComplexPolyRing>(&lifted.ring);
    REQUIRE(cn != nullptr);
    CHECK(cn->vars->names() == std::vector<std::string>{"z1", "z2"});
    CHECK(std::get<Polynomial>(lifted.functions[0].f) == P("z1^2 + z2^2"));
    CHECK(std::get<Polynomial>(lifted.functions[1].f) == P("z1^3 - z2^2"));

    // the verdict of the real problem is the verdict of the lift, with the
    // same sigma and target
    InterpolationProblem real_mono;
    real_mono.ring = RealPolyRing{xvars};
    real_mono.functions.push_back({parse_polynomial("x1", xvars), Rat(1), ""});
    real_mono.functions.push_back({parse_polynomial("x2", xvars), Rat(1), ""});
    InterpolationVerdict rv = check_interpolation(real_mono);
    InterpolationVerdict cv = check_interpolation(real_lift(real_mono));
    CHECK(rv.holds == cv.holds);
    CHECK(rv.sigma == cv.sigma);
    CHECK(rv.target == cv.target);
    CHECK(rv.note.find("lift") != std::string::npos);
}

TEST_CASE("real cusp data reproduces the complex verdict on the curve") {
    // The lift P is coefficient-identical, so real-coefficient cusp data is
    // decided by the same curve computation.
    InterpolationVerdict v = check_interpolation(cusp_problem(curve_point_at(Rat(1))));
    CHECK(v.holds);
    CHECK(v.sigma == Rat(6));
}

TEST_CASE("series functions route through the curve ring only") {
    InterpolationProblem prob;
    prob.ring = ComplexPolyRing{vars};
    prob.functions.push_back({series_from_terms({{1, Rat(1)}}, 8), Rat(1), "t"});
    CHECK_THROWS_AS(check_interpolation(prob), Error);

    // weakly holomorphic generator t on the cusp: order 1, so sigma matches
    // a single-function target exactly
    InterpolationProblem ok;
    ok.ring = CurveRing{MonomialCurve(2, 3), curve_origin()};
    ok.functions.push_back({series_from_terms({{1, Rat(1)}}, 8), Rat(1), "t"});
    InterpolationVerdict v = check_interpolation(ok);
    CHECK(v.holds);
    CHECK(v.sigma == Rat(1));
}

TEST_CASE("problem validation") {
    InterpolationProblem two_f0 = cn_problem({{"z1", Rat(0)}, {"z2", Rat(0)}, {"z1", Rat(1)}});
    CHECK_THROWS_AS(check_interpolation(two_f0), Error);
    InterpolationProblem no_positive = cn_problem({{"z1", Rat(0)}});
    CHECK_THROWS_AS(check_interpolation(no_positive), Error);
    InterpolationProblem empty;
    empty.ring = ComplexPolyRing{vars};
    CHECK_THROWS_AS(check_interpolation(empty), Error);
}
