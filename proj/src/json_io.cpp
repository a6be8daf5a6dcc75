#include "json_io.hpp"

#include "error.hpp"
#include "parser.hpp"

namespace lndkit {

namespace {

constexpr uint64_t kMaxShearPower = 1u << 20;

Json elementary_to_json(const ElementaryMap& e) {
    Json j;
    if (const auto* a = std::get_if<AffineLinear>(&e)) {
        j["kind"] = "affine";
        j["a"] = rat_to_string(a->a);
        j["b"] = rat_to_string(a->b);
        j["c"] = rat_to_string(a->c);
        j["d"] = rat_to_string(a->d);
        j["e"] = rat_to_string(a->e);
        j["f"] = rat_to_string(a->f);
    } else if (const auto* sx = std::get_if<ShearX>(&e)) {
        j["kind"] = "shear-x";
        j["coeff"] = rat_to_string(sx->c);
        j["power"] = sx->k;
    } else {
        const auto& sy = std::get<ShearY>(e);
        j["kind"] = "shear-y";
        j["coeff"] = rat_to_string(sy.c);
        j["power"] = sy.k;
    }
    return j;
}

[[noreturn]] void bad(const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "automorphism document: " + what);
}

Rat get_rat(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) bad(std::string("missing rational field '") + key + "'");
    Rat out;
    if (!rat_from_string(j[key].get<std::string>(), out))
        bad(std::string("field '") + key + "' is not a rational");
    return out;
}

uint32_t get_power(const Json& j) {
    if (!j.contains("power") || !j["power"].is_number_integer())
        bad("missing integer field 'power'");
    int64_t k = j["power"].get<int64_t>();
    if (k < 1 || k > static_cast<int64_t>(kMaxShearPower)) bad("'power' out of range");
    return static_cast<uint32_t>(k);
}

ElementaryMap elementary_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        bad("chain entry is not a tagged object");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "affine") {
        AffineLinear a{get_rat(j, "a"), get_rat(j, "b"), get_rat(j, "c"),
                       get_rat(j, "d"), get_rat(j, "e"), get_rat(j, "f")};
        if (sgn(a.det()) == 0) bad("affine entry is singular");
        return a;
    }
    if (kind == "shear-x") return ShearX{get_rat(j, "coeff"), get_power(j)};
    if (kind == "shear-y") return ShearY{get_rat(j, "coeff"), get_power(j)};
    bad("unknown chain entry kind '" + kind + "'");
}

}  // namespace

Json aut_to_json(const PolyAut& theta) {
    Json j;
    j["format"] = kAutFormat;
    j["chain"] = Json::array();
    for (const auto& e : theta.chain()) j["chain"].push_back(elementary_to_json(e));
    j["x"] = theta.image_x().str();
    j["y"] = theta.image_y().str();
    return j;
}

PolyAut aut_from_json(const Json& j) {
    if (!j.is_object()) bad("not an object");
    if (!j.contains("format") || j["format"] != kAutFormat) bad("unsupported format tag");
    if (!j.contains("chain") || !j["chain"].is_array()) bad("missing chain array");
    std::vector<ElementaryMap> chain;
    chain.reserve(j["chain"].size());
    for (const auto& entry : j["chain"]) chain.push_back(elementary_from_json(entry));
    PolyAut theta(std::move(chain));
    // the stored images are redundant; when present they must agree
    if (j.contains("x")) {
        if (!j["x"].is_string() || parse_poly(j["x"].get<std::string>()) != theta.image_x())
            bad("stored image of x disagrees with the chain");
    }
    if (j.contains("y")) {
        if (!j["y"].is_string() || parse_poly(j["y"].get<std::string>()) != theta.image_y())
            bad("stored image of y disagrees with the chain");
    }
    return theta;
}

PolyAut aut_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::ParseError, "automorphism document is not valid JSON");
    return aut_from_json(j);
}

Json derivation_to_json(const Derivation& d) {
    Json j;
    j["p"] = d.p.str();
    j["q"] = d.q.str();
    return j;
}

Json rentschler_to_json(const RentschlerForm& f) {
    Json j;
    j["a"] = f.a.str();
    j["f"] = f.f.str();
    j["mate"] = f.witness_mate.str();
    return j;
}

Json verdict_to_json(const LndVerdict& v) {
    Json j;
    j["is_lnd"] = v.is_lnd;
    if (v.is_lnd) {
        if (v.form) j["form"] = rentschler_to_json(*v.form);
        j["index_x"] = v.index_x;
        j["index_y"] = v.index_y;
    } else {
        j["reason"] = lnd_reason_name(v.reason);
        j["witness"] = v.witness.str();
        if (v.reason == LndVerdict::Reason::EigenvectorFound)
            j["eigenvalue"] = rat_to_string(v.eigenvalue);
    }
    return j;
}

Json closure_to_json(const ClosureReport& r) {
    Json j;
    j["dimension"] = r.dimension;
    j["rounds"] = r.rounds;
    j["capped"] = r.capped;
    j["basis"] = Json::array();
    for (const auto& d : r.basis.basis) j["basis"].push_back(derivation_to_json(d));
    return j;
}

Json series_to_json(const SeriesReport& r) {
    Json j;
    j["dims"] = r.dims;
    j["nilpotent"] = r.nilpotent;
    j["class"] = r.nilpotency_class;
    return j;
}

Json conjugation_check_to_json(const ConjugationCheck& c) {
    Json j;
    j["images"] = Json::array();
    for (const auto& d : c.images) j["images"].push_back(derivation_to_json(d));
    j["all_triangular"] = c.all_triangular;
    j["closure_uncapped"] = c.closure_uncapped;
    j["nilpotent"] = c.nilpotent;
    j["closure"] = closure_to_json(c.closure);
    j["ok"] = c.ok();
    return j;
}

Json triangularization_to_json(const TriangularizationResult& r) {
    Json j;
    j["case"] = tri_case_name(r.kind);
    j["theta"] = aut_to_json(r.theta);
    j["images"] = Json::array();
    for (const auto& d : r.images) j["images"].push_back(derivation_to_json(d));
    j["closure"] = closure_to_json(r.closure);
    j["verified"] = r.verified;
    return j;
}

}  // namespace lndkit
