#pragma once

#include <optional>
#include <vector>

#include "derivation.hpp"

namespace lndkit {

// Scalar-linearly-independent derivations in reduced echelon form over
// the coordinate order (higher grlex monomial first, p-slot before
// q-slot), so a subspace always reduces to the same basis.
struct LieBasis {
    std::vector<Derivation> basis;
    // structure[i][j] = coordinates of [basis_i, basis_j] in the basis;
    // filled only once the basis is bracket-closed
    std::vector<std::vector<std::vector<Rat>>> structure;

    size_t dimension() const { return basis.size(); }
    bool has_structure() const { return !structure.empty(); }
};

struct ClosureReport {
    LieBasis basis;
    int dimension = 0;
    int rounds = 0;
    bool capped = false;
};

LieBasis span_reduce(const std::vector<Derivation>& list);

// Coordinates of d in the reduced basis, or nullopt when d lies outside
// the span.
std::optional<std::vector<Rat>> coordinates_in(const LieBasis& b, Derivation d);
bool in_span(const LieBasis& b, const Derivation& d);

constexpr int kDefaultDimCap = 64;

ClosureReport lie_closure(const std::vector<Derivation>& generators, int dim_cap = kDefaultDimCap);

// 0 for the empty basis, 1 when all pairwise Wronskians vanish, else 2.
int rank_over_ring(const LieBasis& b);

struct SeriesReport {
    std::vector<int> dims;  // dim L, dim [L,L], ... until 0 or stabilization
    bool nilpotent = false;
    int nilpotency_class = 0;
};

// Lower central series computed on structure constants.
// Throws NotClosed when the basis has no structure table.
SeriesReport lower_central_series(const LieBasis& b);

// Random planes inside the algebra: every sampled 2-dimensional
// subspace that happens to be bracket-closed must be abelian.
struct PlaneSpotCheck {
    int sampled = 0;
    int closed_planes = 0;
    int abelian_closed_planes = 0;
    bool consistent() const { return closed_planes == abelian_closed_planes; }
};

PlaneSpotCheck abelian_plane_spotcheck(const LieBasis& b, uint64_t seed, int samples);

}  // namespace lndkit
