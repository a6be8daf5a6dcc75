#pragma once

#include <vector>

#include "automorphism.hpp"
#include "liealgebra.hpp"
#include "lnd.hpp"

namespace lndkit {

// D(x) constant and D(y) a polynomial in x alone.
bool is_triangular(const Derivation& d);

// Two commuting derivations with nonzero Wronskian, together with their
// kernel generators; jacobian_det(a, c) is a nonzero constant, so (a, c)
// is a coordinate pair.
struct CommutingPair {
    Derivation d1, d2;  // kernels K[a] and K[c] respectively
    Poly a, c;
};

// Scans a rank-2 span for an independent commuting pair, repairing a
// dependent bracket chain when needed. Throws RankDeficient when the
// span has rank below 2, CapExceeded when a bracket chain fails to
// terminate, NotLndError when an element forced into the algebra is not
// locally nilpotent, Degenerate when an internal invariant breaks.
CommutingPair commuting_independent_pair(const LieBasis& span0);

struct LinearSquareForm {
    Poly linear;  // x + r*y, or y
    Rat scale;
};

// Writes a homogeneous quadratic as scale * linear^2.
// Throws InvalidArgument unless h is homogeneous of degree 2, and
// NotASquare when the discriminant is nonzero.
LinearSquareForm linear_square_form(const Poly& h);

enum class TriCase { Zero, RankOneAbelian, RankTwoAbelian, RankTwoNonabelian };
const char* tri_case_name(TriCase c);

// Pure recheck of a claimed conjugation: conjugates each derivation by
// theta and tests that the images generate a bracket-closed nilpotent
// algebra of triangular derivations. Uses nothing about how theta was
// constructed.
struct ConjugationCheck {
    std::vector<Derivation> images;
    bool all_triangular = false;
    bool closure_uncapped = false;
    bool nilpotent = false;
    ClosureReport closure;
    bool ok() const { return all_triangular && closure_uncapped && nilpotent; }
};

ConjugationCheck verify_conjugation(const PolyAut& theta, const std::vector<Derivation>& originals);

struct TriangularizationResult {
    PolyAut theta;
    std::vector<Derivation> images;  // theta-conjugates of the inputs
    TriCase kind = TriCase::Zero;
    ClosureReport closure;  // bracket closure of the conjugated span
    bool verified = false;
};

// One automorphism conjugating every generator, hence the whole
// generated Lie algebra, to triangular form. Throws NotLndError when a
// generator or an element of the generated algebra is not locally
// nilpotent; other codes mirror the helpers above.
TriangularizationResult triangularize(const std::vector<Derivation>& generators);

}  // namespace lndkit
