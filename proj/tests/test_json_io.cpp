#include <doctest.h>

#include "json_io.hpp"
#include "test_util.hpp"

using namespace lndkit;
using testutil::D;
using testutil::P;

static PolyAut sample_aut() {
    return PolyAut({AffineLinear{rat(2), rat(0), rat(1), rat(1), rat(-3, 2), rat(0)},
                    ShearX{rat(1, 3), 2}, AffineLinear::swap_xy(), ShearY{rat(-2), 5}});
}

TEST_CASE("automorphism documents round-trip exactly") {
    PolyAut theta = sample_aut();
    Json j = aut_to_json(theta);
    CHECK(j["format"] == "lndkit.aut/1");
    CHECK(j["chain"].size() == 4);
    CHECK(j["chain"][0]["kind"] == "affine");
    CHECK(j["chain"][1]["kind"] == "shear-x");
    CHECK(j["chain"][1]["coeff"] == "1/3");
    CHECK(j["chain"][1]["power"] == 2);
    CHECK(j["chain"][3]["kind"] == "shear-y");
    CHECK(j["x"] == theta.image_x().str());

    PolyAut back = aut_from_json(j);
    CHECK(back.image_x() == theta.image_x());
    CHECK(back.image_y() == theta.image_y());
    CHECK(back.chain().size() == theta.chain().size());
    // serialized form is deterministic
    CHECK(aut_to_json(back).dump() == j.dump());

    PolyAut textual = aut_from_json_text(j.dump());
    CHECK(textual.image_x() == theta.image_x());
}

TEST_CASE("identity document") {
    Json j = aut_to_json(PolyAut::identity());
    CHECK(j["chain"].empty());
    CHECK(j["x"] == "x");
    CHECK(j["y"] == "y");
    PolyAut back = aut_from_json(j);
    CHECK(back.is_identity_chain());
}

TEST_CASE("stored coordinate images are cross-checked") {
    Json j = aut_to_json(sample_aut());
    j["x"] = "x + 1";  // tamper
    CHECK_THROWS_AS(aut_from_json(j), Error);
    Json k = aut_to_json(sample_aut());
    k["y"] = "not a poly [";
    CHECK_THROWS_AS(aut_from_json(k), Error);
    // dropping the redundant fields is allowed
    Json m = aut_to_json(sample_aut());
    m.erase("x");
    m.erase("y");
    CHECK_NOTHROW(aut_from_json(m));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(aut_from_json(Json::array()), Error);
    CHECK_THROWS_AS(aut_from_json(Json{{"format", "other/9"}}), Error);
    CHECK_THROWS_AS(aut_from_json(Json{{"format", "lndkit.aut/1"}}), Error);

    Json bad_kind = aut_to_json(PolyAut::identity());
    bad_kind["chain"].push_back(Json{{"kind", "rotation"}});
    CHECK_THROWS_AS(aut_from_json(bad_kind), Error);

    Json bad_rat = aut_to_json(PolyAut::identity());
    bad_rat["chain"].push_back(Json{{"kind", "shear-x"}, {"coeff", "one"}, {"power", 1}});
    CHECK_THROWS_AS(aut_from_json(bad_rat), Error);

    Json bad_pow = aut_to_json(PolyAut::identity());
    bad_pow["chain"].push_back(Json{{"kind", "shear-y"}, {"coeff", "1"}, {"power", 0}});
    CHECK_THROWS_AS(aut_from_json(bad_pow), Error);
    bad_pow["chain"][0]["power"] = 2000000;
    CHECK_THROWS_AS(aut_from_json(bad_pow), Error);

    Json singular = aut_to_json(PolyAut::identity());
    singular["chain"].push_back(Json{{"kind", "affine"}, {"a", "1"}, {"b", "1"}, {"c", "1"},
                                     {"d", "1"}, {"e", "0"}, {"f", "0"}});
    CHECK_THROWS_AS(aut_from_json(singular), Error);

    try {
        aut_from_json_text("{ not json");
        FAIL("expected parse failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("derivation and certificate payloads") {
    Json d = derivation_to_json(D("x^2 - 2*y", "0"));
    CHECK(d["p"] == "x^2 - 2*y");
    CHECK(d["q"] == "0");

    LndVerdict v = is_locally_nilpotent(D("1", "x"));
    Json jv = verdict_to_json(v);
    CHECK(jv["is_lnd"] == true);
    CHECK(jv["index_x"] == 2);
    CHECK(jv["index_y"] == 3);
    CHECK(jv["form"]["a"] == "x^2 - 2*y");
    CHECK(jv["form"]["f"] == "1/2*t");
    CHECK(jv["form"]["mate"] == "x");

    LndVerdict w = is_locally_nilpotent(D("0", "y"));
    Json jw = verdict_to_json(w);
    CHECK(jw["is_lnd"] == false);
    CHECK(jw["reason"] == "NonzeroDivergence");
}

TEST_CASE("closure and series payloads") {
    ClosureReport r = lie_closure({Derivation::ddx(), D("0", "x^2")});
    Json j = closure_to_json(r);
    CHECK(j["dimension"] == 4);
    CHECK(j["capped"] == false);
    CHECK(j["basis"].size() == 4);
    CHECK(j["basis"][0]["q"] == "x^2");

    SeriesReport s = lower_central_series(r.basis);
    Json js = series_to_json(s);
    CHECK(js["dims"] == Json::array({4, 2, 1, 0}));
    CHECK(js["nilpotent"] == true);
    CHECK(js["class"] == 3);
}

TEST_CASE("triangularization payload") {
    auto r = triangularize({D("y^2", "0")});
    Json j = triangularization_to_json(r);
    CHECK(j["case"] == "rank-one-abelian");
    CHECK(j["verified"] == true);
    CHECK(j["theta"]["format"] == "lndkit.aut/1");
    CHECK(j["images"][0]["q"] == "x^2");
    // the embedded map reloads and reproduces the images
    PolyAut theta = aut_from_json(j["theta"]);
    CHECK(theta.conjugate(D("y^2", "0")) == r.images[0]);
}
