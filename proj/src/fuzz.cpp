#include "fuzz.hpp"

#include <utility>

#include "error.hpp"
#include "triangularize.hpp"

namespace lndkit {

Poly random_poly(Rng& rng, int max_degree, long coeff_bound, long den_bound) {
    int terms = static_cast<int>(rng.range(0, 5));
    Poly out;
    for (int t = 0; t < terms; ++t) {
        uint32_t dx = static_cast<uint32_t>(rng.range(0, max_degree));
        uint32_t dy = static_cast<uint32_t>(rng.range(0, max_degree - static_cast<long>(dx)));
        Rat c = rng.rational(-coeff_bound, coeff_bound, den_bound);
        if (sgn(c) == 0) continue;
        out += Poly::monomial({dx, dy}, c);
    }
    return out;
}

Poly random_nonzero_poly(Rng& rng, int max_degree, long coeff_bound, long den_bound) {
    while (true) {
        Poly p = random_poly(rng, max_degree, coeff_bound, den_bound);
        if (!p.is_zero()) return p;
    }
}

Derivation random_derivation(Rng& rng, int max_degree, long coeff_bound, long den_bound) {
    return {random_poly(rng, max_degree, coeff_bound, den_bound),
            random_poly(rng, max_degree, coeff_bound, den_bound)};
}

PolyAut random_tame_aut(Rng& rng, int max_chain, int max_shear_power, long coeff_bound) {
    int len = static_cast<int>(rng.range(1, max_chain));
    std::vector<ElementaryMap> chain;
    chain.reserve(len);
    for (int i = 0; i < len; ++i) {
        switch (rng.below(3)) {
            case 0: {
                AffineLinear a;
                do {
                    a.a = rng.rational(-coeff_bound, coeff_bound);
                    a.b = rng.rational(-coeff_bound, coeff_bound);
                    a.c = rng.rational(-coeff_bound, coeff_bound);
                    a.d = rng.rational(-coeff_bound, coeff_bound);
                } while (sgn(a.det()) == 0);
                a.e = rng.rational(-coeff_bound, coeff_bound);
                a.f = rng.rational(-coeff_bound, coeff_bound);
                chain.push_back(a);
                break;
            }
            case 1:
                chain.push_back(ShearX{rng.nonzero_rational(-coeff_bound, coeff_bound),
                                       static_cast<uint32_t>(rng.range(1, max_shear_power))});
                break;
            default:
                chain.push_back(ShearY{rng.nonzero_rational(-coeff_bound, coeff_bound),
                                       static_cast<uint32_t>(rng.range(1, max_shear_power))});
        }
    }
    return PolyAut(std::move(chain));
}

std::vector<Derivation> random_triangular_generators(Rng& rng, int max_count, int max_degree,
                                                     long coeff_bound) {
    int count = static_cast<int>(rng.range(1, max_count));
    std::vector<Derivation> gens;
    gens.reserve(count);
    for (int i = 0; i < count; ++i) {
        Poly q;
        int terms = static_cast<int>(rng.range(0, 3));
        for (int t = 0; t < terms; ++t) {
            uint32_t dx = static_cast<uint32_t>(rng.range(0, max_degree));
            Rat c = rng.rational(-coeff_bound, coeff_bound);
            if (sgn(c) != 0) q += Poly::monomial({dx, 0}, c);
        }
        gens.push_back({Poly::constant(rng.rational(-3, 3)), q});
    }
    return gens;
}

Derivation sample_bad_derivation(Rng& rng) {
    Poly x = Poly::var(Var::X), y = Poly::var(Var::Y);
    switch (rng.below(4)) {
        case 0: return {x, Poly()};                 // x d/dx
        case 1: return {Poly(), y};                 // y d/dy
        case 2: return {x, y.scaled(rat(-1))};      // x d/dx - y d/dy
        default: return {y, x};                     // y d/dx + x d/dy
    }
}

std::vector<Poly> shrink_inputs(std::vector<Poly> inputs,
                                const std::function<bool(const std::vector<Poly>&)>& fails) {
    bool changed = true;
    int budget = 2000;
    while (changed && budget > 0) {
        changed = false;
        // drop one term somewhere
        for (size_t i = 0; i < inputs.size() && budget > 0; ++i) {
            auto terms = inputs[i].terms();
            for (size_t t = 0; t < terms.size() && budget > 0; ++t) {
                --budget;
                std::vector<Poly> candidate = inputs;
                candidate[i] = inputs[i] - Poly::monomial(terms[t].m, terms[t].c);
                if (fails(candidate)) {
                    inputs = std::move(candidate);
                    changed = true;
                    break;
                }
            }
        }
        // simplify one coefficient to 1
        for (size_t i = 0; i < inputs.size() && budget > 0; ++i) {
            auto terms = inputs[i].terms();
            for (size_t t = 0; t < terms.size() && budget > 0; ++t) {
                if (terms[t].c == 1) continue;
                --budget;
                std::vector<Poly> candidate = inputs;
                candidate[i] = inputs[i] + Poly::monomial(terms[t].m, rat(1) - terms[t].c);
                if (fails(candidate)) {
                    inputs = std::move(candidate);
                    changed = true;
                    break;
                }
            }
        }
    }
    return inputs;
}

namespace {

Json polys_json(const std::vector<Poly>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(p.str());
    return arr;
}

// runs one identity property; inputs drawn per case, checker returns
// true on success
void run_identity(PropertyReport& rep, int cases, uint64_t seed, int n_inputs, int max_degree,
                  long coeff_bound,
                  const std::function<bool(const std::vector<Poly>&)>& holds) {
    Rng rng(seed);
    rep.cases = cases;
    rep.counterexample = nullptr;
    for (int i = 0; i < cases; ++i) {
        std::vector<Poly> in;
        in.reserve(n_inputs);
        for (int k = 0; k < n_inputs; ++k)
            in.push_back(random_poly(rng, max_degree, coeff_bound, coeff_bound));
        if (holds(in)) continue;
        ++rep.failures;
        if (rep.counterexample.is_null()) {
            auto shrunk = shrink_inputs(in, [&](const std::vector<Poly>& c) { return !holds(c); });
            rep.counterexample = Json{{"case", i}, {"inputs", polys_json(shrunk)}};
        }
    }
}

bool bracket_of_hamiltonian_fields_holds(const std::vector<Poly>& in) {
    const Poly &f = in[0], &g = in[1];
    Derivation lhs = bracket(jacobian_derivation(f), jacobian_derivation(g));
    return lhs == jacobian_derivation(jacobian_det(f, g));
}

bool scaled_bracket_expansion_holds(const std::vector<Poly>& in) {
    const Poly &a = in[0], &b = in[1];
    Derivation d1{in[2], in[3]}, d2{in[4], in[5]};
    Derivation lhs = bracket(d1.scaled_by(a), d2.scaled_by(b));
    Derivation rhs = bracket(d1, d2).scaled_by(a * b) + d2.scaled_by(a * apply(d1, b)) -
                     d1.scaled_by(b * apply(d2, a));
    return lhs == rhs;
}

bool iterated_bracket_power_rule_holds(const std::vector<Poly>& in) {
    const Poly &f = in[0], &g = in[1];
    Derivation dg = jacobian_derivation(g);
    Derivation cur = jacobian_derivation(f);
    Poly pow = f;
    for (int k = 1; k <= 5; ++k) {
        cur = bracket(cur, dg);
        pow = apply(dg, pow);
        Rat sign = (k % 2 == 0) ? rat(1) : rat(-1);
        if (!(cur == jacobian_derivation(pow.scaled(sign)))) return false;
    }
    return true;
}

struct RecoveryCase {
    std::vector<Derivation> generators;
    PolyAut aut;
    bool injected = false;
};

Json recovery_case_json(const RecoveryCase& c, const std::string& outcome) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(derivation_to_json(g));
    return Json{{"generators", gens},
                {"theta", aut_to_json(c.aut)},
                {"injected", c.injected},
                {"outcome", outcome}};
}

// "" on success (or expected rejection), otherwise a description
std::string recovery_outcome(const RecoveryCase& c) {
    std::vector<Derivation> conj;
    conj.reserve(c.generators.size());
    for (const auto& g : c.generators) conj.push_back(c.aut.conjugate(g));
    try {
        TriangularizationResult res = triangularize(conj);
        if (c.injected) return "triangularized an algebra with a planted bad generator";
        if (!res.verified) return "result not verified";
        return "";
    } catch (const NotLndError&) {
        if (c.injected) return "";
        return "rejected a genuinely triangularizable algebra";
    } catch (const Error& err) {
        return std::string("error ") + error_code_name(err.code()) + ": " + err.what();
    }
}

void run_recovery(PropertyReport& rep, const FuzzConfig& cfg, uint64_t seed) {
    Rng rng(seed);
    rep.cases = cfg.recovery_cases;
    rep.counterexample = nullptr;
    for (int i = 0; i < cfg.recovery_cases; ++i) {
        RecoveryCase c;
        c.generators = random_triangular_generators(rng, 4, cfg.max_degree, 3);
        c.aut = random_tame_aut(rng, 3, 3, 2);
        c.injected = rng.chance(1, 5);
        if (c.injected) c.generators.push_back(sample_bad_derivation(rng));
        std::string outcome = recovery_outcome(c);
        if (outcome.empty()) {
            if (c.injected) ++rep.expected_negatives;
            continue;
        }
        ++rep.failures;
        if (rep.counterexample.is_null()) {
            // shrink by dropping generators, then truncating the chain
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t k = 0; k < c.generators.size(); ++k) {
                    RecoveryCase cand = c;
                    cand.generators.erase(cand.generators.begin() + k);
                    if (!recovery_outcome(cand).empty()) {
                        c = std::move(cand);
                        changed = true;
                        break;
                    }
                }
                if (!changed && !c.aut.chain().empty()) {
                    RecoveryCase cand = c;
                    auto chain = cand.aut.chain();
                    chain.pop_back();
                    cand.aut = PolyAut(chain);
                    if (!recovery_outcome(cand).empty()) {
                        c = std::move(cand);
                        changed = true;
                    }
                }
            }
            rep.counterexample = recovery_case_json(c, recovery_outcome(c));
        }
    }
}

}  // namespace

bool FuzzReport::pass() const {
    for (const auto& p : properties)
        if (p.failures != 0) return false;
    return true;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
    FuzzReport out;
    out.seed = cfg.seed;
    out.properties.resize(4);

    out.properties[0].name = "bracket-of-hamiltonian-fields";
    run_identity(out.properties[0], cfg.identity_cases, cfg.seed ^ 0xa5a5a5a5ULL, 2,
                 cfg.max_degree, cfg.coeff_bound, bracket_of_hamiltonian_fields_holds);

    out.properties[1].name = "scaled-bracket-expansion";
    run_identity(out.properties[1], cfg.identity_cases, cfg.seed ^ 0x5a5a5a5aULL, 6,
                 cfg.max_degree, cfg.coeff_bound, scaled_bracket_expansion_holds);

    out.properties[2].name = "iterated-bracket-power-rule";
    run_identity(out.properties[2], cfg.identity_cases, cfg.seed ^ 0x3c3c3c3cULL, 2,
                 cfg.max_degree, cfg.coeff_bound, iterated_bracket_power_rule_holds);

    out.properties[3].name = "triangular-recovery";
    run_recovery(out.properties[3], cfg, cfg.seed ^ 0xc3c3c3c3ULL);

    return out;
}

Json fuzz_report_to_json(const FuzzReport& r) {
    Json props = Json::array();
    for (const auto& p : r.properties) {
        Json j;
        j["name"] = p.name;
        j["cases"] = p.cases;
        j["failures"] = p.failures;
        j["expected_negatives"] = p.expected_negatives;
        if (!p.counterexample.is_null()) j["counterexample"] = p.counterexample;
        props.push_back(std::move(j));
    }
    return Json{{"seed", r.seed}, {"properties", std::move(props)}, {"pass", r.pass()}};
}

}  // namespace lndkit
