#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "lndkit.h"

namespace {

using nlohmann::json;

struct Str {
    char* s = nullptr;
    ~Str() { lndkit_string_free(s); }
    std::string view() const { return s ? s : ""; }
};

lndkit_poly* poly(const char* text) {
    lndkit_poly* p = nullptr;
    REQUIRE(lndkit_poly_parse(text, &p) == LNDKIT_OK);
    return p;
}

lndkit_derivation* deriv(const char* p, const char* q) {
    lndkit_poly* pp = poly(p);
    lndkit_poly* qq = poly(q);
    lndkit_derivation* d = nullptr;
    REQUIRE(lndkit_derivation_new(pp, qq, &d) == LNDKIT_OK);
    lndkit_poly_free(pp);
    lndkit_poly_free(qq);
    return d;
}

}  // namespace

TEST_CASE("parse, print, free") {
    lndkit_poly* p = poly(" y + x ");
    Str s;
    CHECK(lndkit_poly_str(p, &s.s) == LNDKIT_OK);
    CHECK(s.view() == "x + y");
    lndkit_poly_free(p);

    lndkit_poly* bad = nullptr;
    CHECK(lndkit_poly_parse("x + + y", &bad) == LNDKIT_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(lndkit_last_error_position() == 4);
    CHECK(std::string(lndkit_last_error_message()).find("expected") != std::string::npos);
}

TEST_CASE("null arguments are rejected without crashing") {
    lndkit_poly* out = nullptr;
    CHECK(lndkit_poly_parse(nullptr, &out) == LNDKIT_ERR_INVALID_ARGUMENT);
    CHECK(lndkit_poly_parse("x", nullptr) == LNDKIT_ERR_INVALID_ARGUMENT);
    Str s;
    CHECK(lndkit_poly_str(nullptr, &s.s) == LNDKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("derivation calculus through the C surface") {
    lndkit_derivation* a = deriv("1", "0");
    lndkit_derivation* b = deriv("0", "x");
    lndkit_derivation* br = nullptr;
    REQUIRE(lndkit_bracket(a, b, &br) == LNDKIT_OK);
    Str p, q;
    REQUIRE(lndkit_derivation_parts(br, &p.s, &q.s) == LNDKIT_OK);
    CHECK(p.view() == "0");
    CHECK(q.view() == "1");

    lndkit_poly* h = poly("x^2 - 2*y");
    lndkit_poly* img = nullptr;
    lndkit_derivation* d = deriv("1", "x");
    REQUIRE(lndkit_apply(d, h, &img) == LNDKIT_OK);
    Str istr;
    REQUIRE(lndkit_poly_str(img, &istr.s) == LNDKIT_OK);
    CHECK(istr.view() == "0");

    lndkit_poly* dv = nullptr;
    REQUIRE(lndkit_divergence(d, &dv) == LNDKIT_OK);
    Str dstr;
    REQUIRE(lndkit_poly_str(dv, &dstr.s) == LNDKIT_OK);
    CHECK(dstr.view() == "0");

    lndkit_derivation* jd = nullptr;
    REQUIRE(lndkit_jacobian_derivation(h, &jd) == LNDKIT_OK);
    Str jp, jq;
    REQUIRE(lndkit_derivation_parts(jd, &jp.s, &jq.s) == LNDKIT_OK);
    CHECK(jp.view() == "2");
    CHECK(jq.view() == "2*x");

    lndkit_poly_free(h);
    lndkit_poly_free(img);
    lndkit_poly_free(dv);
    lndkit_derivation_free(a);
    lndkit_derivation_free(b);
    lndkit_derivation_free(br);
    lndkit_derivation_free(d);
    lndkit_derivation_free(jd);
}

TEST_CASE("nilpotency verdicts as data") {
    lndkit_derivation* d = deriv("1", "x");
    Str out;
    int flag = -1;
    REQUIRE(lndkit_is_lnd(d, &out.s, &flag) == LNDKIT_OK);
    CHECK(flag == 1);
    json j = json::parse(out.view());
    CHECK(j["is_lnd"] == true);
    CHECK(j["form"]["a"] == "x^2 - 2*y");
    CHECK(j["index_x"] == 2);
    CHECK(j["index_y"] == 3);
    lndkit_derivation_free(d);

    lndkit_derivation* bad = deriv("0", "y");
    Str out2;
    int flag2 = -1;
    REQUIRE(lndkit_is_lnd(bad, &out2.s, &flag2) == LNDKIT_OK);
    CHECK(flag2 == 0);
    json j2 = json::parse(out2.view());
    CHECK(j2["reason"] == "NonzeroDivergence");
    lndkit_derivation_free(bad);
}

TEST_CASE("kernel and certificate entry points") {
    lndkit_derivation* d = deriv("1", "x");
    Str g;
    REQUIRE(lndkit_kernel_generator(d, 0, &g.s) == LNDKIT_OK);
    CHECK(g.view() == "x^2 - 2*y");
    Str cert;
    REQUIRE(lndkit_rentschler(d, &cert.s) == LNDKIT_OK);
    json j = json::parse(cert.view());
    CHECK(j["a"] == "x^2 - 2*y");
    CHECK(j["f"] == "1/2*t");
    CHECK(j["mate"] == "x");
    lndkit_derivation_free(d);

    lndkit_derivation* bad = deriv("x", "0");
    Str none;
    CHECK(lndkit_rentschler(bad, &none.s) == LNDKIT_ERR_NOT_LOCALLY_NILPOTENT);
    CHECK(std::string(lndkit_last_error_message()).find("witness") != std::string::npos);
    lndkit_derivation_free(bad);
}

TEST_CASE("automorphism round trip and conjugation") {
    lndkit_derivation* d = deriv("0", "x^2");
    Str tri;
    const lndkit_derivation* gens[] = {d};
    REQUIRE(lndkit_triangularize(gens, 1, &tri.s) == LNDKIT_OK);
    json j = json::parse(tri.view());
    CHECK(j["verified"] == true);

    lndkit_aut* theta = nullptr;
    REQUIRE(lndkit_aut_from_json(j["theta"].dump().c_str(), &theta) == LNDKIT_OK);
    lndkit_aut* inv = nullptr;
    REQUIRE(lndkit_aut_inverse(theta, &inv) == LNDKIT_OK);
    lndkit_aut* round = nullptr;
    REQUIRE(lndkit_aut_compose(theta, inv, &round) == LNDKIT_OK);
    lndkit_poly* x = poly("x");
    lndkit_poly* back = nullptr;
    REQUIRE(lndkit_aut_apply(round, x, &back) == LNDKIT_OK);
    Str s;
    REQUIRE(lndkit_poly_str(back, &s.s) == LNDKIT_OK);
    CHECK(s.view() == "x");

    lndkit_derivation* conj = nullptr;
    REQUIRE(lndkit_aut_conjugate(theta, d, &conj) == LNDKIT_OK);
    Str cp, cq;
    REQUIRE(lndkit_derivation_parts(conj, &cp.s, &cq.s) == LNDKIT_OK);

    int ok = -1;
    Str check;
    REQUIRE(lndkit_verify_conjugation(theta, gens, 1, &check.s, &ok) == LNDKIT_OK);
    CHECK(ok == 1);

    CHECK(lndkit_aut_from_json("{ nope", &theta) == LNDKIT_ERR_PARSE);

    lndkit_poly_free(x);
    lndkit_poly_free(back);
    lndkit_derivation_free(d);
    lndkit_derivation_free(conj);
    lndkit_aut_free(theta);
    lndkit_aut_free(inv);
    lndkit_aut_free(round);
}

TEST_CASE("rectify over the C surface") {
    lndkit_poly* a = poly("x + (y + x^3)^2");
    Str out;
    int is_coord = -1;
    REQUIRE(lndkit_rectify(a, &out.s, &is_coord) == LNDKIT_OK);
    CHECK(is_coord == 1);
    json j = json::parse(out.view());
    CHECK(j["mate"] == "x^3 + y");
    lndkit_poly_free(a);

    lndkit_poly* no = poly("x*y");
    Str out2;
    int c2 = -1;
    REQUIRE(lndkit_rectify(no, &out2.s, &c2) == LNDKIT_OK);
    CHECK(c2 == 0);
    json j2 = json::parse(out2.view());
    CHECK(j2["stage"] == "leading form is not a power of a linear form");
    lndkit_poly_free(no);

    lndkit_poly* c = poly("5");
    Str out3;
    int c3 = -1;
    CHECK(lndkit_rectify(c, &out3.s, &c3) == LNDKIT_ERR_CONSTANT_INPUT);
    lndkit_poly_free(c);
}

TEST_CASE("closure and fuzz entry points") {
    lndkit_derivation* a = deriv("1", "0");
    lndkit_derivation* b = deriv("0", "x^2");
    const lndkit_derivation* gens[] = {a, b};
    Str out;
    REQUIRE(lndkit_closure(gens, 2, 0, &out.s) == LNDKIT_OK);
    json j = json::parse(out.view());
    CHECK(j["dimension"] == 4);
    CHECK(j["series"]["class"] == 3);
    lndkit_derivation_free(a);
    lndkit_derivation_free(b);

    Str fz;
    int pass = -1;
    REQUIRE(lndkit_fuzz(5, 10, 2, 3, &fz.s, &pass) == LNDKIT_OK);
    CHECK(pass == 1);
    json fj = json::parse(fz.view());
    CHECK(fj["pass"] == true);
}
