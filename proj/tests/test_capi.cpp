// Exercises the public C surface through the shared library only.

#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "zhouval.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    zv_string_free(s);
    return out;
}

const char* kVars2[] = {"z1", "z2"};

struct PolyHandle {
    zv_poly* p = nullptr;
    PolyHandle(const char* text, const char* const* vars, size_t n) {
        REQUIRE(zv_poly_parse(text, vars, n, &p) == ZV_OK);
    }
    ~PolyHandle() { zv_poly_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(zv_version()) == "0.1.0");
    CHECK(std::string(zv_status_name(ZV_ERR_DOMAIN)) == "unsupported-class");
}

TEST_CASE("polynomial parse/print/mul/newton through the C API") {
    PolyHandle a("z1^3 - z2^2", kVars2, 2);
    char* text = nullptr;
    REQUIRE(zv_poly_print(a.p, &text) == ZV_OK);
    CHECK(take(text) == "z1^3 - z2^2");

    PolyHandle b("z1 + 1", kVars2, 2);
    zv_poly* prod = nullptr;
    REQUIRE(zv_poly_mul(a.p, b.p, &prod) == ZV_OK);
    char* ptext = nullptr;
    REQUIRE(zv_poly_print(prod, &ptext) == ZV_OK);
    CHECK(take(ptext) == "z1^4 + z1^3 - z1*z2^2 - z2^2");
    zv_poly_free(prod);

    char* nj = nullptr;
    REQUIRE(zv_poly_newton(a.p, &nj) == ZV_OK);
    auto j = nlohmann::json::parse(take(nj));
    CHECK(j["vertices"].size() == 2);

    zv_poly* bad = nullptr;
    CHECK(zv_poly_parse("z1^(-1)", kVars2, 2, &bad) == ZV_ERR_SYNTAX);
    CHECK(std::string(zv_last_error()).find("negative exponent") != std::string::npos);
    CHECK(zv_last_error_position() > 0);
    CHECK(zv_poly_parse(nullptr, kVars2, 2, &bad) == ZV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("weights, relative types and jumping numbers through the C API") {
    PolyHandle z1("z1", kVars2, 2), z2("z2", kVars2, 2), g("z1*z2", kVars2, 2);
    const zv_poly* gens[] = {z1.p, z2.p};
    const char* as[] = {"1", "1"};
    zv_weight* phi = nullptr;
    REQUIRE(zv_weight_new("1", gens, as, 2, &phi) == ZV_OK);

    zv_sigma_result* r = nullptr;
    REQUIRE(zv_relative_type(g.p, phi, &r) == ZV_OK);
    char* val = nullptr;
    REQUIRE(zv_sigma_value(r, &val) == ZV_OK);
    CHECK(take(val) == "2/1");
    REQUIRE(zv_sigma_witness_count(r) == 1);
    char* w = nullptr;
    REQUIRE(zv_sigma_witness(r, 0, &w) == ZV_OK);
    CHECK(nlohmann::json::parse(take(w)) == nlohmann::json::array({"1/2", "1/2"}));
    CHECK(zv_sigma_witness(r, 5, &w) == ZV_ERR_INVALID_ARGUMENT);
    zv_sigma_result_free(r);

    char* c = nullptr;
    REQUIRE(zv_jumping_number(phi, g.p, &c) == ZV_OK);
    CHECK(take(c) == "4/1");  // (2,2) meets t * {x + y >= 1} at t = 4

    zv_weight* truncated = nullptr;
    REQUIRE(zv_weight_truncate(phi, 4, &truncated) == ZV_OK);
    zv_weight_free(truncated);

    // non-monomial generator refused with the domain status
    PolyHandle diff("z1 - z2", kVars2, 2);
    const zv_poly* bad_gens[] = {diff.p};
    const char* bad_as[] = {"1"};
    zv_weight* bad = nullptr;
    REQUIRE(zv_weight_new("1", bad_gens, bad_as, 1, &bad) == ZV_OK);
    zv_sigma_result* r2 = nullptr;
    CHECK(zv_relative_type(g.p, bad, &r2) == ZV_ERR_DOMAIN);
    zv_weight_free(bad);
    zv_weight_free(phi);
}

TEST_CASE("curves through the C API") {
    zv_curve* x = nullptr;
    REQUIRE(zv_curve_new(2, 3, &x) == ZV_OK);

    PolyHandle f("z1^3 - z2^2", kVars2, 2);
    char* o = nullptr;
    REQUIRE(zv_curve_order(x, f.p, "origin", &o) == ZV_OK);
    CHECK(take(o) == "inf");

    PolyHandle z1("z1", kVars2, 2);
    REQUIRE(zv_curve_order(x, z1.p, "origin", &o) == ZV_OK);
    CHECK(take(o) == "2");
    PolyHandle shifted("z1 - 1", kVars2, 2);
    REQUIRE(zv_curve_order(x, shifted.p, "t=1", &o) == ZV_OK);
    CHECK(take(o) == "1");
    PolyHandle z2m1("z2 - 1", kVars2, 2);
    REQUIRE(zv_curve_order(x, z2m1.p, "unit_root:3", &o) == ZV_OK);
    CHECK(take(o) == "1");
    CHECK(zv_curve_order(x, z1.p, "t=0", &o) == ZV_ERR_INVALID_ARGUMENT);

    char* d = nullptr;
    REQUIRE(zv_curve_denominator(x, &d) == ZV_OK);
    CHECK(take(d) == "z1");
    zv_curve_free(x);

    zv_curve* bad = nullptr;
    CHECK(zv_curve_new(2, 4, &bad) == ZV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("batch problems through the C API") {
    const char* problem = R"({
      "ring": {"type": "polynomial_complex", "variables": ["z1", "z2"]},
      "g": "z1*z2",
      "weight": {"generators": [{"expr": "z1", "a": 1}, {"expr": "z2", "a": 1}]}
    })";
    zv_problem* p = nullptr;
    REQUIRE(zv_problem_from_json(problem, &p) == ZV_OK);
    char* rep = nullptr;
    REQUIRE(zv_run_sigma(p, nullptr, &rep) == ZV_OK);
    auto j = nlohmann::json::parse(take(rep));
    CHECK(j["results"]["sigma"] == "2/1");
    zv_problem_free(p);

    zv_problem* bad = nullptr;
    CHECK(zv_problem_from_json("{", &bad) == ZV_ERR_SYNTAX);
    CHECK(zv_problem_from_json(R"({"ring": {"type": "nope"}})", &bad) == ZV_ERR_SYNTAX);
}
