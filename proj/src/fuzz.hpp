#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "derivation.hpp"
#include "json_io.hpp"
#include "rng.hpp"

namespace lndkit {

// total degree <= max_degree, numerators within +-coeff_bound,
// denominators within den_bound; may come out zero
Poly random_poly(Rng& rng, int max_degree, long coeff_bound, long den_bound = 1);
Poly random_nonzero_poly(Rng& rng, int max_degree, long coeff_bound, long den_bound = 1);
Derivation random_derivation(Rng& rng, int max_degree, long coeff_bound, long den_bound = 1);

PolyAut random_tame_aut(Rng& rng, int max_chain, int max_shear_power, long coeff_bound);

// generators of the form c*d/dx + q(x)*d/dy
std::vector<Derivation> random_triangular_generators(Rng& rng, int max_count, int max_degree,
                                                     long coeff_bound);

// a fixed non-nilpotent derivation, varied by draw
Derivation sample_bad_derivation(Rng& rng);

// Greedy shrinker: drops terms and simplifies coefficients one change at
// a time while the case keeps failing. `fails` returns true when the
// inputs still exhibit the failure.
std::vector<Poly> shrink_inputs(std::vector<Poly> inputs,
                                const std::function<bool(const std::vector<Poly>&)>& fails);

struct FuzzConfig {
    uint64_t seed = 0;
    int identity_cases = 100;
    int recovery_cases = 10;
    int max_degree = 3;
    long coeff_bound = 9;
};

struct PropertyReport {
    std::string name;
    int cases = 0;
    int failures = 0;
    int expected_negatives = 0;
    Json counterexample;  // first failure, shrunk; null otherwise
};

struct FuzzReport {
    uint64_t seed = 0;
    std::vector<PropertyReport> properties;
    bool pass() const;
};

FuzzReport run_fuzz(const FuzzConfig& config);
Json fuzz_report_to_json(const FuzzReport& r);

}  // namespace lndkit
