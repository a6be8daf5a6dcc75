#pragma once

#include <optional>
#include <string>

#include "automorphism.hpp"

namespace lndkit {

struct RectifyFailure {
    std::string stage;
    Poly witness;  // the transformed polynomial at the point of failure
};

struct RectifyOutcome {
    std::optional<PolyAut> aut;  // theta with theta(a) = x
    Poly mate;                   // theta^{-1}(y), so (a, mate) is a coordinate pair
    std::optional<RectifyFailure> failure;
    bool ok() const { return aut.has_value(); }
};

// Decides whether a is a coordinate of Q[x,y] by degree peak reduction
// and, when it is, produces the automorphism sending it to x.
// Throws ConstantInput for constant a; non-coordinates come back as a
// failure value, not an exception.
RectifyOutcome rectify_coordinate(const Poly& a);

// For a coordinate pair (jacobian_det(a, c) a nonzero constant) returns
// theta with theta(a) = x and theta(c) = y.
// Throws JacobianNotConstant or NotCoordinate.
PolyAut rectify_pair(const Poly& a, const Poly& c);

}  // namespace lndkit
