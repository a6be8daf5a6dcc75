#pragma once

#include <json.hpp>

#include <string>

#include "automorphism.hpp"
#include "liealgebra.hpp"
#include "lnd.hpp"
#include "triangularize.hpp"

namespace lndkit {

// nlohmann's default map keeps object keys sorted, so every document
// serializes the same way regardless of construction order.
using Json = nlohmann::json;

inline constexpr const char* kAutFormat = "lndkit.aut/1";

Json aut_to_json(const PolyAut& theta);

// Accepts only documents produced by aut_to_json (format tag included).
// Throws InvalidArgument on malformed documents.
PolyAut aut_from_json(const Json& j);
PolyAut aut_from_json_text(const std::string& text);

Json derivation_to_json(const Derivation& d);
Json rentschler_to_json(const RentschlerForm& f);
Json verdict_to_json(const LndVerdict& v);
Json closure_to_json(const ClosureReport& r);
Json series_to_json(const SeriesReport& r);
Json conjugation_check_to_json(const ConjugationCheck& c);
Json triangularization_to_json(const TriangularizationResult& r);

}  // namespace lndkit
