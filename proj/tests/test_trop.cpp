#include <doctest.h>

#include <functional>

#include "test_util.hpp"
#include "tropical.hpp"

using namespace zhouval;
using zvtest::Gen;

namespace {

auto vars2 = make_vars({"z1", "z2"});
auto vars1 = make_vars({"z1"});

Polynomial P2(const char* s) { return parse_polynomial(s, vars2); }
Polynomial P1(const char* s) { return parse_polynomial(s, vars1); }

AnalyticWeight W(std::vector<std::pair<const char*, Rat>> gens, Rat scale = Rat(1)) {
    std::vector<WeightGen> g;
    for (auto& [expr, a] : gens) g.push_back({P2(expr), a});
    return AnalyticWeight(scale, std::move(g));
}

// Independent oracle: scan the ratio trop(g)/phi over a rational lattice of
// the simplex. Never goes below the exact infimum, and hits it whenever a
// minimizing ray lies on the lattice.
Rat grid_oracle(const Polynomial& g, const AnalyticWeight& phi, long resolution) {
    const size_t n = phi.nvars();
    bool have = false;
    Rat best;
    std::vector<long> idx(n, 0);
    std::function<void(size_t, long)> rec = [&](size_t k, long left) {
        if (k + 1 == n) {
            idx[k] = left;
            RatVec w(n);
            for (size_t i = 0; i < n; ++i) w[i] = Rat(idx[i], resolution);
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
    rec(0, resolution);
    REQUIRE(have);
    return best;
}

}  // namespace

TEST_CASE("tropical values of polynomials") {
    Polynomial cusp = P2("z1^3 - z2^2");
    CHECK(trop_value(cusp, {Rat(1), Rat(1)}) == Rat(2));
    CHECK(trop_value(cusp, {Rat(2), Rat(3)}) == Rat(6));
    CHECK(trop_value(P2("5"), {Rat(3), Rat(7)}) == Rat(0));
    CHECK_THROWS_AS(trop_value(Polynomial::zero(vars2), {Rat(1), Rat(1)}), Error);
}

TEST_CASE("weight values along rays") {
    CHECK(W({{"z1", Rat(1)}, {"z2", Rat(1)}}).value_on_ray({Rat(1), Rat(2)}) == Rat(1));
    CHECK(W({{"z1", Rat(1)}, {"z2", Rat(2)}}).value_on_ray({Rat(1), Rat(1)}) == Rat(1, 2));
    CHECK(W({{"z1", Rat(1)}}, Rat(3)).value_on_ray({Rat(2), Rat(0)}) == Rat(6));
}

TEST_CASE("relative types match the grid oracle") {
    AnalyticWeight phi = W({{"z1", Rat(1)}, {"z2", Rat(1)}});

    RelativeTypeResult r = relative_type(P2("z1*z2"), phi);
    CHECK(r.value == Rat(2));
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK(grid_oracle(P2("z1*z2"), phi, 60) == Rat(2));

    CHECK(relative_type(P2("z1^4*z2^4"), phi).value == Rat(8));
    CHECK(grid_oracle(P2("z1^4*z2^4"), phi, 60) == Rat(8));

    RelativeTypeResult rc = relative_type(P2("z1^3 - z2^2"), phi);
    CHECK(rc.value == Rat(2));
    CHECK(rc.witnesses.front() == RatVec{Rat(1, 2), Rat(1, 2)});
    // the other tie ray (2/5, 3/5) evaluates to 3, not the minimum
    bool saw_tie = false;
    for (const auto& ev : rc.certificate)
        if (ev.ray == RatVec{Rat(2, 5), Rat(3, 5)}) {
            saw_tie = true;
            CHECK(ev.numerator / ev.denominator == Rat(3));
        }
    CHECK(saw_tie);

    AnalyticWeight phi_sq = W({{"z1^2", Rat(1)}, {"z2^2", Rat(1)}});
    CHECK(relative_type(P2("z1"), phi_sq).value == Rat(1, 2));
    CHECK(grid_oracle(P2("z1"), phi_sq, 60) == Rat(1, 2));
}

TEST_CASE("grid refinement never undercuts the exact value") {
    Gen gen(314);
    for (int i = 0; i < 25; ++i) {
        std::vector<WeightGen> gens;
        int k = static_cast<int>(gen.range(1, 3));
        for (int j = 0; j < k; ++j) gens.push_back({gen.monomial(vars2, 4, true), gen.positive_rat(3, 2)});
        AnalyticWeight phi(gen.positive_rat(3, 1), gens);
        Polynomial g = gen.poly(vars2, 4, 5);
        if (g.is_zero()) continue;
        Rat exact = relative_type(g, phi).value;
        for (long res : {24L, 48L, 96L}) CHECK(exact <= grid_oracle(g, phi, res));
    }
}

TEST_CASE("three variables: arrangement vertices in the triangle") {
    auto vars3 = make_vars({"z1", "z2", "z3"});
    auto P3 = [&](const char* s) { return parse_polynomial(s, vars3); };
    AnalyticWeight phi(Rat(1), {{P3("z1"), Rat(1)}, {P3("z2"), Rat(1)}, {P3("z3"), Rat(1)}});
    RelativeTypeResult r = relative_type(P3("z1*z2*z3"), phi);
    CHECK(r.value == Rat(3));
    CHECK(std::find(r.witnesses.begin(), r.witnesses.end(),
                    RatVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)}) != r.witnesses.end());

    CHECK(jumping_number(phi, P3("1")) == Rat(3));
    AnalyticWeight phi2(Rat(1), {{P3("z1^2"), Rat(1)}, {P3("z2^2"), Rat(1)}, {P3("z3^2"), Rat(1)}});
    CHECK(jumping_number(phi2, P3("1")) == Rat(3, 2));

    // certified three-variable candidate: log(|z1|^3 + |z2|^3 + |z3|^3)
    AnalyticWeight zhou3(Rat(1), {{P3("z1"), Rat(1, 3)}, {P3("z2"), Rat(1, 3)}, {P3("z3"), Rat(1, 3)}});
    BackgroundDensity unit3 = unit_background(vars3);
    CHECK(certify_zhou_candidate(zhou3, unit3).critical);
    Gen gen(2718);
    for (int i = 0; i < 30; ++i) {
        Polynomial g = gen.monomial(vars3, 5);
        CHECK(jumping_number(zhou3, g) == relative_type(g, zhou3).value + Rat(1));
    }
    // grid cross-check in the triangle
    for (int i = 0; i < 10; ++i) {
        Polynomial g = gen.poly(vars3, 4, 4);
        if (g.is_zero()) continue;
        Rat exact = relative_type(g, phi2).value;
        CHECK(exact <= grid_oracle(g, phi2, 24));
        CHECK(exact <= grid_oracle(g, phi2, 48));
    }
}

TEST_CASE("monomial valuation axioms (property suite)") {
    Gen gen(555);
    for (int i = 0; i < 1000; ++i) {
        RatVec w = gen.ray(2);
        Polynomial f = gen.poly(vars2), g = gen.poly(vars2);
        CHECK(trop_value(f * g, w) == trop_value(f, w) + trop_value(g, w));
        Polynomial s = f + g;
        if (!s.is_zero()) {
            Rat m = std::min(trop_value(f, w), trop_value(g, w));
            CHECK(trop_value(s, w) >= m);
        }
        CHECK(trop_value(Polynomial::constant(vars2, gen.positive_rat()), w) == Rat(0));
    }
}

TEST_CASE("degenerate boundary faces: exact values where both sides vanish") {
    // phi = log|z1| in two variables vanishes along the whole w1 = 0 face of
    // the simplex; the ratio is still constant along segments into that face
    // and the infimum lives at the positive-denominator vertices.
    AnalyticWeight phi(Rat(1), {{P2("z1"), Rat(1)}});
    CHECK(relative_type(P2("z1"), phi).value == Rat(1));
    CHECK(relative_type(P2("z1^2"), phi).value == Rat(2));
    CHECK(relative_type(P2("z1*z2"), phi).value == Rat(1));
    CHECK(relative_type(P2("z2"), phi).value == Rat(0));
    CHECK(grid_oracle(P2("z1*z2"), phi, 60) == Rat(1));
}

TEST_CASE("relative type guards") {
    AnalyticWeight phi = W({{"z1", Rat(1)}, {"z2", Rat(1)}});
    CHECK(relative_type(Polynomial::zero(vars2), phi).infinite);

    // non-monomial generator: outside the exactly-computable class
    AnalyticWeight bad(Rat(1), {{P2("z1 - z2"), Rat(1)}});
    CHECK_THROWS_AS(relative_type(P2("z1"), bad), Error);
    try {
        relative_type(P2("z1"), bad);
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::kDomain);
    }

    // weight not vanishing at the origin
    AnalyticWeight flat(Rat(1), {{P2("z1 + 1"), Rat(1)}});
    CHECK_THROWS_AS(relative_type(P2("z1"), flat), Error);
}

TEST_CASE("jumping numbers: frozen dual-oracle values") {
    AnalyticWeight phi23 = W({{"z1^2", Rat(1)}, {"z2^3", Rat(1)}});
    CHECK(jumping_number(phi23, P2("1")) == Rat(5, 6));
    CHECK(jumping_number(phi23, P2("z1*z2")) == Rat(5, 3));
    AnalyticWeight phiz(Rat(1), {{P1("z1"), Rat(1)}});
    CHECK(jumping_number(phiz, P1("1")) == Rat(1));
    CHECK_THROWS_AS(jumping_number(phi23, Polynomial::zero(vars2)), Error);
}

TEST_CASE("jumping number of a sum is the min over its monomials") {
    AnalyticWeight phi23 = W({{"z1^2", Rat(1)}, {"z2^3", Rat(1)}});
    Rat c1 = jumping_number(phi23, P2("z1"));
    Rat c2 = jumping_number(phi23, P2("z2"));
    CHECK(c1 == Rat(4, 3));
    CHECK(c2 == Rat(7, 6));
    CHECK(jumping_number(phi23, P2("z1 + z2")) == std::min(c1, c2));
    // a unit factor does not change the threshold
    CHECK(jumping_number(phi23, P2("1 + z1")) == jumping_number(phi23, P2("1")));
}

TEST_CASE("zhou candidate certification") {
    BackgroundDensity unit = unit_background(vars2);
    ZhouCertificate a = certify_zhou_candidate(W({{"z1^2", Rat(1)}, {"z2^2", Rat(1)}}), unit);
    CHECK(a.cond1);
    CHECK(a.cond2);
    CHECK(a.critical);
    CHECK(a.combined_jumping_number == Rat(1));

    ZhouCertificate b = certify_zhou_candidate(W({{"z1", Rat(1)}, {"z2", Rat(1)}}), unit);
    CHECK_FALSE(b.cond2);
    CHECK(b.combined_jumping_number == Rat(2));

    BackgroundDensity unit1 = unit_background(vars1);
    ZhouCertificate c =
        certify_zhou_candidate(AnalyticWeight(Rat(1), {{P1("z1"), Rat(1)}}), unit1);
    CHECK(c.cond1);
    CHECK(c.cond2);
    CHECK(c.critical);

    // too singular along a boundary direction: |z|^(2N) cannot rescue it
    ZhouCertificate d = certify_zhou_candidate(W({{"z1^10", Rat(1)}}), unit);
    CHECK_FALSE(d.cond1);

    // a generator covering the other axis restores (1) even at high order,
    // while the jumping number 6/5 > 1 still rules out (2)
    ZhouCertificate e = certify_zhou_candidate(W({{"z1^5", Rat(1)}, {"z2", Rat(1)}}), unit);
    CHECK(e.cond1);
    CHECK_FALSE(e.cond2);
    CHECK(e.combined_jumping_number == Rat(6, 5));
}

TEST_CASE("background densities fold into the threshold") {
    AnalyticWeight phi = W({{"z1^2", Rat(1)}, {"z2^2", Rat(1)}});
    BackgroundDensity rho{{P2("z1")}, std::nullopt};
    // |f0|^2 |G|^2 with f0 = z1, G = 1 is the same density as G = z1 alone
    CHECK(jumping_number(phi, P2("1"), &rho) == jumping_number(phi, P2("z1")));

    // phi0 with non-integrable pairing is refused
    BackgroundDensity bad{{P2("1")}, AnalyticWeight(Rat(2), {{P2("z1"), Rat(1)}, {P2("z2"), Rat(1)}})};
    CHECK_THROWS_AS(jumping_number(phi, P2("1"), &bad), Error);
}

TEST_CASE("tian functions: closed forms and consistency") {
    BackgroundDensity unit = unit_background(vars2);
    AnalyticWeight phi = W({{"z1^2", Rat(1)}, {"z2^2", Rat(1)}});
    AnalyticWeight psi = W({{"z1*z2", Rat(1)}});

    PiecewiseLinearFn tn = tian_function(phi, psi, unit, Rat(0), Rat(4));
    CHECK(tn.consistent());
    CHECK(tn.concave());
    CHECK(tn.eval(Rat(0)) == Rat(1));
    for (long k : {1L, 2L, 3L, 4L}) CHECK(tn.eval(Rat(k)) == Rat(1) + Rat(k));
    CHECK(tn.final_slope() == Rat(1));

    // envelope agrees with independent spot evaluations
    for (long num = 0; num <= 8; ++num) {
        Rat t(num, 2);
        CHECK(tn.eval(t) == tian_value_at(phi, psi, unit, t));
    }

    // one-variable: Tn(t) = 1 + t
    BackgroundDensity unit1 = unit_background(vars1);
    AnalyticWeight phi1(Rat(1), {{P1("z1"), Rat(1)}});
    PiecewiseLinearFn tn1 = tian_function(phi1, phi1, unit1, Rat(0), Rat(2));
    CHECK(tn1.eval(Rat(1, 2)) == Rat(3, 2));
    CHECK(tn1.eval(Rat(2)) == Rat(3));

    // the zero-twist column is the plain jumping number of the density
    BackgroundDensity rho{{P2("z1*z2")}, std::nullopt};
    CHECK(tian_value_at(phi, psi, rho, Rat(0)) == jumping_number(phi, P2("z1*z2")));

    // integer twists collapse to jumping numbers of powers: e^(2t psi) with
    // psi = log|g| is |g^t|^2, an independent route through the same value
    AnalyticWeight phi23 = W({{"z1^2", Rat(1)}, {"z2^3", Rat(1)}});
    Polynomial g = P2("z1*z2");
    Polynomial g_pow = Polynomial::constant(vars2, Rat(1));
    for (long t = 1; t <= 3; ++t) {
        g_pow = g_pow * g;
        CHECK(tian_value_at(phi23, psi, unit, Rat(t)) == jumping_number(phi23, g_pow));
    }
}

TEST_CASE("certificates carry valid rays and determine the value") {
    AnalyticWeight phi = W({{"z1^2", Rat(1)}, {"z2^3", Rat(1)}});
    RelativeTypeResult r = relative_type(P2("z1^3 - z2^2"), phi);
    CHECK(!r.certificate.empty());
    bool have = false;
    Rat min_ratio;
    for (const auto& ev : r.certificate) {
        validate_ray(ev.ray);  // nonnegative, not identically zero
        Rat sum(0);
        for (const Rat& x : ev.ray) sum += x;
        CHECK(sum == Rat(1));  // candidates live on the standard simplex
        if (ev.denominator.sign() > 0) {
            Rat ratio = ev.numerator / ev.denominator;
            if (!have || ratio < min_ratio) min_ratio = ratio;
            have = true;
        }
    }
    REQUIRE(have);
    CHECK(r.value == min_ratio);
    for (const auto& w : r.witnesses)
        CHECK(trop_value(P2("z1^3 - z2^2"), w) == r.value * phi.value_on_ray(w));
}

TEST_CASE("tian linearity and slope for certified candidates") {
    BackgroundDensity unit = unit_background(vars2);
    // simplex-type certified weights: log(|z1|^b1 + |z2|^b2), 1/b1 + 1/b2 = 1
    std::vector<AnalyticWeight> family = {
        W({{"z1", Rat(1, 2)}, {"z2", Rat(1, 2)}}),          // b = (2, 2)
        W({{"z1", Rat(1, 3)}, {"z2", Rat(2, 3)}}),          // b = (3, 3/2)
        W({{"z1", Rat(1, 4)}, {"z2", Rat(3, 4)}, {"z2", Rat(1, 4)}}),  // b = (4, 4/3) + redundant
    };
    std::vector<AnalyticWeight> psis = {W({{"z1*z2", Rat(1)}}),
                                        W({{"z1", Rat(1)}, {"z2", Rat(1)}}),
                                        W({{"z1^3*z2", Rat(1)}, {"z2^2", Rat(1)}})};
    for (const auto& phi : family) {
        REQUIRE(certify_zhou_candidate(phi, unit).critical);
        for (const auto& psi : psis) {
            Rat sigma = relative_type_weight(psi, phi).value;
            PiecewiseLinearFn tn = tian_function(phi, psi, unit, Rat(0), Rat(8));
            Rat tn0 = tn.eval(Rat(0));
            CHECK(tn0 == Rat(1));
            for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2), Rat(4)})
                CHECK(tn.eval(t) == tn0 + sigma * t);
            CHECK(tn.final_slope() == sigma);
            CHECK(tn.slopes[1] > Rat(0));  // strictly increasing near 0
        }
    }
}

TEST_CASE("Tian negative twists: exact values above the validity floor") {
    BackgroundDensity unit = unit_background(vars2);
    AnalyticWeight phi = W({{"z1^2", Rat(1)}, {"z2^2", Rat(1)}});
    AnalyticWeight psi(Rat(1), {{P2("z1"), Rat(1)}});
    // along the z2-axis the twist |z1|^(2t) must keep the density
    // integrable by itself, which holds only for t > -1
    CHECK_THROWS_AS(tian_function(phi, psi, unit, Rat(-2), Rat(0)), Error);
    CHECK_THROWS_AS(tian_value_at(phi, psi, unit, Rat(-1)), Error);
    PiecewiseLinearFn tn = tian_function(phi, psi, unit, Rat(-1, 2), Rat(2));
    CHECK(tn.eval(Rat(-1, 2)) == Rat(3, 4));
    CHECK(tn.eval(Rat(0)) == Rat(1));
    CHECK(tn.concave());
}

TEST_CASE("Tian strict increase needs the radial integrability hypothesis") {
    BackgroundDensity unit = unit_background(vars2);
    AnalyticWeight psi(Rat(1), {{P2("z1"), Rat(1)}});

    // |z|^(2N) e^(-2 Tn(0) phi) is integrable for phi = log(|z1^2|+|z2^3|),
    // and the zero-slope boundary lines are then never active at t = 0.
    AnalyticWeight good = W({{"z1^2", Rat(1)}, {"z2^3", Rat(1)}});
    PiecewiseLinearFn tn = tian_function(good, psi, unit, Rat(0), Rat(4));
    CHECK(tn.slopes[1] > Rat(0));

    // For phi = log|z1 z2| no power of |z| restores integrability along the
    // axes, and the twist by |z1| indeed buys nothing: Tn stays flat.
    AnalyticWeight axes(Rat(1), {{P2("z1*z2"), Rat(1)}});
    PiecewiseLinearFn flat = tian_function(axes, psi, unit, Rat(0), Rat(4));
    CHECK(flat.eval(Rat(0)) == Rat(1));
    CHECK(flat.eval(Rat(4)) == Rat(1));
}

TEST_CASE("ambient sigma of the full cusp product is 8") {
    // support of the six-factor product is dominated by (4,4), so the
    // ambient type against log(|z1|+|z2|) is 8, strictly above the curve
    // target 6 and below the curve value 10.
    Polynomial f = Polynomial::constant(vars2, Rat(1));
    for (const char* s : {"z1*(z1-1)", "z1*(z2-1)", "z2*(z1-1)", "z2*(z2-1)", "z1*z2*(z1-1)",
                          "z1*z2*(z2-1)"})
        f = f * P2(s);
    AnalyticWeight phi = W({{"z1", Rat(1)}, {"z2", Rat(1)}});
    CHECK(relative_type(f, phi).value == Rat(8));
}

TEST_CASE("truncation: construction and threshold law") {
    AnalyticWeight phi(Rat(1), {{P2("z1"), Rat(1)}});
    AnalyticWeight t4 = phi.truncated(4);
    REQUIRE(t4.gens().size() == 3);
    CHECK(t4.gens()[1].f == P2("z1^4"));
    CHECK(t4.gens()[2].f == P2("z2^4"));
    CHECK(t4.gens()[1].a == Rat(1));

    for (unsigned n = 1; n <= 8; ++n)
        CHECK(jumping_number(phi.truncated(n), P2("1")) == Rat(1) + Rat(1, n));
}

TEST_CASE("truncation only raises relative types") {
    Gen gen(88);
    for (int i = 0; i < 50; ++i) {
        std::vector<WeightGen> gens;
        int k = static_cast<int>(gen.range(1, 3));
        for (int j = 0; j < k; ++j) gens.push_back({gen.monomial(vars2, 4, true), gen.positive_rat(3, 2)});
        AnalyticWeight phi(Rat(1), gens);
        Polynomial g = gen.poly(vars2, 3, 4);
        if (g.is_zero()) continue;
        Rat base = relative_type(g, phi).value;
        for (unsigned n : {1u, 2u, 8u})
            CHECK(relative_type(g, phi.truncated(n)).value >= base);
    }
}

TEST_CASE("scaling covariance of sigma and jumping numbers") {
    Gen gen(4242);
    for (int i = 0; i < 50; ++i) {
        std::vector<WeightGen> gens;
        int k = static_cast<int>(gen.range(1, 3));
        for (int j = 0; j < k; ++j) gens.push_back({gen.monomial(vars2, 4, true), gen.positive_rat(3, 2)});
        AnalyticWeight phi(Rat(1), gens);
        Polynomial g = gen.poly(vars2, 3, 4);
        if (g.is_zero()) continue;
        Rat lambda = gen.positive_rat(5, 3);
        CHECK(relative_type(g, phi.scaled_by(lambda)).value ==
              relative_type(g, phi).value / lambda);
        CHECK(jumping_number(phi.scaled_by(lambda), g) == jumping_number(phi, g) / lambda);
    }
}

TEST_CASE("valuation-jumping identity for certified candidates") {
    BackgroundDensity unit = unit_background(vars2);
    AnalyticWeight phi = W({{"z1", Rat(1, 2)}, {"z2", Rat(1, 2)}});
    REQUIRE(certify_zhou_candidate(phi, unit).critical);
    Gen gen(31337);
    for (int i = 0; i < 60; ++i) {
        Polynomial g = gen.monomial(vars2, 7);
        CHECK(jumping_number(phi, g) == relative_type(g, phi).value + Rat(1));
    }
}
