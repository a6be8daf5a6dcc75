#pragma once

#include <optional>
#include <string>

#include "derivation.hpp"
#include "error.hpp"
#include "unipoly.hpp"

namespace lndkit {

// Certificate for a locally nilpotent derivation: D = f'(a) * D_a with a
// a coordinate and witness_mate completing it to a coordinate pair.
struct RentschlerForm {
    Poly a;
    UniPoly f;
    Poly witness_mate;
};

struct LndVerdict {
    enum class Reason {
        None,
        NonzeroDivergence,
        EigenvectorFound,
        KernelGeneratorNotCoordinate,
        HamiltonianNotComposite,
    };

    bool is_lnd = false;
    std::optional<RentschlerForm> form;  // present for every LND verdict
    int index_x = 0, index_y = 0;        // least n with D^n(x) = 0 resp. D^n(y) = 0

    Reason reason = Reason::None;
    Poly witness;    // eigencoordinate, or the non-coordinate kernel generator
    Rat eigenvalue;  // for EigenvectorFound
};

const char* lnd_reason_name(LndVerdict::Reason r);

// Thrown when a derivation that the caller needed to be locally
// nilpotent is not; carries the offending derivation plus the verdict
// reason so reports can name the culprit.
class NotLndError : public Error {
public:
    NotLndError(Derivation culprit, LndVerdict::Reason reason, const std::string& detail)
        : Error(ErrorCode::NotLocallyNilpotent, detail),
          culprit_(std::move(culprit)),
          reason_(reason) {}

    const Derivation& culprit() const { return culprit_; }
    LndVerdict::Reason reason() const { return reason_; }

private:
    Derivation culprit_;
    LndVerdict::Reason reason_;
};

// Minimal-degree nonconstant polynomial annihilated by D, normalized to
// leading coefficient 1 and zero constant term. Divergence-free inputs
// go through Hamiltonian decomposition; the rest through a per-degree
// null-space search up to the bound.
// Throws InvalidArgument (zero derivation), NoKernelElementWithinBound.
Poly kernel_generator(const Derivation& D, int degree_bound);

int default_kernel_bound(const Derivation& D);

LndVerdict is_locally_nilpotent(const Derivation& D);

// Throws NotLndError for non-LND input, InvalidArgument for the zero
// derivation.
RentschlerForm rentschler_decompose(const Derivation& D);

}  // namespace lndkit
