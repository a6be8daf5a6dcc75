#include "liealgebra.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"
#include "rng.hpp"

namespace lndkit {

namespace {

// coordinate keys order the p-slot of a monomial above its q-slot
uint64_t coord_key(uint64_t mono_key, bool in_p) {
    return (mono_key << 1) | (in_p ? 1u : 0u);
}

// highest nonzero coordinate of a derivation, 0 when d = 0
bool leading_coord(const Derivation& d, uint64_t& key, Rat& coeff) {
    bool have = false;
    if (!d.p.is_zero()) {
        key = coord_key(d.p.leading_term().m.grlex_key(), true);
        coeff = d.p.leading_coeff();
        have = true;
    }
    if (!d.q.is_zero()) {
        uint64_t kq = coord_key(d.q.leading_term().m.grlex_key(), false);
        if (!have || kq > key) {
            key = kq;
            coeff = d.q.leading_coeff();
        }
        have = true;
    }
    return have;
}

Rat coord_value(const Derivation& d, uint64_t key) {
    Monomial m{static_cast<uint32_t>((key >> 1) & 0xffffffffULL), 0};
    uint32_t total = static_cast<uint32_t>(key >> 33);
    m.dy = total - m.dx;
    return (key & 1) ? d.p.coeff(m) : d.q.coeff(m);
}

class SpanReducer {
public:
    // keeps rows fully reduced; returns true when d was independent
    bool add(Derivation d) {
        if (!reduce(d)) return false;
        uint64_t key;
        Rat lead;
        leading_coord(d, key, lead);
        d = d.scaled(rat(1) / lead);
        for (auto& [k, row] : rows_) {
            Rat c = coord_value(row, key);
            if (sgn(c) != 0) row = row - d.scaled(c);
        }
        rows_.emplace_back(key, std::move(d));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        return true;
    }

    // eliminates against the rows; returns false when d reduced to zero
    bool reduce(Derivation& d) const {
        // rows are monic at their pivot and zero at every other pivot, so one
        // pass clears all pivot coordinates of d, not just leading ones
        for (const auto& [key, row] : rows_) {
            Rat c = coord_value(d, key);
            if (sgn(c) != 0) d = d - row.scaled(c);
        }
        uint64_t key;
        Rat lead;
        return leading_coord(d, key, lead);
    }

    std::vector<Derivation> rows() const {
        std::vector<Derivation> out;
        out.reserve(rows_.size());
        for (const auto& [k, row] : rows_) out.push_back(row);
        return out;
    }

    size_t size() const { return rows_.size(); }

private:
    std::vector<std::pair<uint64_t, Derivation>> rows_;  // pivot key descending
};

void fill_structure(LieBasis& b) {
    size_t n = b.basis.size();
    b.structure.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto c = coordinates_in(b, bracket(b.basis[i], b.basis[j]));
            if (!c) throw Error(ErrorCode::NotClosed, "bracket escapes the basis span");
            for (size_t k = 0; k < n; ++k) {
                b.structure[i][j][k] = (*c)[k];
                b.structure[j][i][k] = -(*c)[k];
            }
        }
}

}  // namespace

LieBasis span_reduce(const std::vector<Derivation>& list) {
    SpanReducer red;
    for (const auto& d : list) red.add(d);
    LieBasis b;
    b.basis = red.rows();
    return b;
}

std::optional<std::vector<Rat>> coordinates_in(const LieBasis& b, Derivation d) {
    std::vector<Rat> coords(b.basis.size());
    uint64_t key;
    Rat lead;
    while (leading_coord(d, key, lead)) {
        bool hit = false;
        for (size_t i = 0; i < b.basis.size(); ++i) {
            uint64_t bk;
            Rat bl;
            leading_coord(b.basis[i], bk, bl);
            if (bk == key) {
                Rat c = lead / bl;
                coords[i] += c;
                d = d - b.basis[i].scaled(c);
                hit = true;
                break;
            }
        }
        if (!hit) return std::nullopt;
    }
    return coords;
}

bool in_span(const LieBasis& b, const Derivation& d) { return coordinates_in(b, d).has_value(); }

ClosureReport lie_closure(const std::vector<Derivation>& generators, int dim_cap) {
    if (dim_cap < 1) throw Error(ErrorCode::InvalidArgument, "dimension cap must be at least 1");
    ClosureReport report;

    SpanReducer red;
    std::vector<Derivation> elems;  // independent representatives, insertion order
    for (const auto& g : generators)
        if (red.add(g)) elems.push_back(g);

    size_t frontier_begin = 0;
    while (frontier_begin < elems.size() && !report.capped) {
        size_t frontier_end = elems.size();
        ++report.rounds;
        for (size_t j = frontier_begin; j < frontier_end && !report.capped; ++j)
            for (size_t i = 0; i < j && !report.capped; ++i) {
                Derivation br = bracket(elems[i], elems[j]);
                if (red.add(br)) {
                    elems.push_back(std::move(br));
                    if (red.size() > static_cast<size_t>(dim_cap)) report.capped = true;
                }
            }
        frontier_begin = frontier_end;
    }

    report.basis.basis = red.rows();
    report.dimension = static_cast<int>(report.basis.dimension());
    if (!report.capped && report.dimension > 0) fill_structure(report.basis);
    return report;
}

int rank_over_ring(const LieBasis& b) {
    if (b.basis.empty()) return 0;
    for (size_t i = 0; i < b.basis.size(); ++i)
        for (size_t j = i + 1; j < b.basis.size(); ++j)
            if (!wronskian(b.basis[i], b.basis[j]).is_zero()) return 2;
    return 1;
}

namespace {

// echelon reduction of coordinate vectors over Q^n
class VecReducer {
public:
    bool add(std::vector<Rat> v) {
        while (true) {
            size_t lead = v.size();
            for (size_t i = 0; i < v.size(); ++i)
                if (sgn(v[i]) != 0) {
                    lead = i;
                    break;
                }
            if (lead == v.size()) return false;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                Rat inv = rat(1) / v[lead];
                for (auto& x : v) x *= inv;
                rows_.emplace(lead, std::move(v));
                return true;
            }
            Rat c = v[lead];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= c * it->second[i];
        }
    }
    size_t size() const { return rows_.size(); }
    std::vector<std::vector<Rat>> rows() const {
        std::vector<std::vector<Rat>> out;
        for (const auto& [k, v] : rows_) out.push_back(v);
        return out;
    }

private:
    std::map<size_t, std::vector<Rat>> rows_;
};

}  // namespace

SeriesReport lower_central_series(const LieBasis& b) {
    if (!b.has_structure()) {
        if (b.basis.empty()) return {{0}, true, 0};
        throw Error(ErrorCode::NotClosed, "structure constants are missing");
    }
    size_t n = b.basis.size();
    SeriesReport rep;
    rep.dims.push_back(static_cast<int>(n));

    // current term as coordinate row space; starts at the whole algebra
    std::vector<std::vector<Rat>> cur;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n);
        e[i] = 1;
        cur.push_back(std::move(e));
    }
    while (true) {
        VecReducer next;
        for (size_t i = 0; i < n; ++i)
            for (const auto& v : cur) {
                // [basis_i, sum v_j basis_j]
                std::vector<Rat> w(n);
                for (size_t j = 0; j < n; ++j) {
                    if (sgn(v[j]) == 0) continue;
                    for (size_t k = 0; k < n; ++k) w[k] += v[j] * b.structure[i][j][k];
                }
                next.add(std::move(w));
            }
        int dim = static_cast<int>(next.size());
        rep.dims.push_back(dim);
        if (dim == 0) {
            rep.nilpotent = true;
            rep.nilpotency_class = static_cast<int>(rep.dims.size()) - 1;
            return rep;
        }
        if (dim == rep.dims[rep.dims.size() - 2]) {
            rep.nilpotent = false;
            rep.nilpotency_class = 0;
            return rep;
        }
        cur = next.rows();
    }
}

PlaneSpotCheck abelian_plane_spotcheck(const LieBasis& b, uint64_t seed, int samples) {
    PlaneSpotCheck out;
    if (!b.has_structure() || b.basis.size() < 2) return out;
    size_t n = b.basis.size();
    Rng rng(seed);
    auto bracket_coords = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        std::vector<Rat> w(n);
        for (size_t i = 0; i < n; ++i) {
            if (sgn(u[i]) == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (sgn(v[j]) == 0) continue;
                for (size_t k = 0; k < n; ++k) w[k] += u[i] * v[j] * b.structure[i][j][k];
            }
        }
        return w;
    };
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> u(n), v(n);
        for (size_t i = 0; i < n; ++i) {
            u[i] = rat(rng.range(-3, 3));
            v[i] = rat(rng.range(-3, 3));
        }
        VecReducer plane;
        if (!plane.add(u) || !plane.add(v)) continue;  // not a plane
        ++out.sampled;
        std::vector<Rat> w = bracket_coords(u, v);
        VecReducer with_bracket = plane;
        bool closed = !with_bracket.add(w);
        if (closed) {
            ++out.closed_planes;
            if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return sgn(x) == 0; }))
                ++out.abelian_closed_planes;
        }
    }
    return out;
}

}  // namespace lndkit
