#include "poly.hpp"

#include <algorithm>
#include <map>

namespace lndkit {

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (sgn(c) != 0) p.terms_.push_back({{0, 0}, c});
    return p;
}

Poly Poly::var(Var v) {
    Poly p;
    p.terms_.push_back({v == Var::X ? Monomial{1, 0} : Monomial{0, 1}, rat(1)});
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p;
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.m.grlex_key() > b.m.grlex_key();
    });
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
        } else if (sgn(t.c) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Poly::degree_x() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.dx));
    return d;
}

int Poly::degree_y() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.dy));
    return d;
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
    return terms_.front();
}

Rat Poly::coeff(const Monomial& m) const {
    uint64_t key = m.grlex_key();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, uint64_t k) {
        return t.m.grlex_key() > k;
    });
    if (it != terms_.end() && it->m.grlex_key() == key) return it->c;
    return rat(0);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        uint64_t ka = a->m.grlex_key(), kb = b->m.grlex_key();
        if (ka > kb) {
            r.terms_.push_back(*a++);
        } else if (kb > ka) {
            r.terms_.push_back(*b++);
        } else {
            Rat c = a->c + b->c;
            if (sgn(c) != 0) r.terms_.push_back({a->m, std::move(c)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

// Multiplication clears denominators first so the inner convolution runs
// on integers (one canonicalization per result term instead of per pair),
// and accumulates into a dense grid indexed by exponents.
Poly Poly::operator*(const Poly& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};

    struct ZTerm {
        uint32_t dx, dy;
        mpz_class v;
    };
    auto clear_dens = [](const std::vector<Term>& ts, mpz_class& den) {
        den = 1;
        for (const auto& t : ts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(t.c.get_mpq_t()));
        std::vector<ZTerm> zs;
        zs.reserve(ts.size());
        for (const auto& t : ts) {
            mpz_class s;
            mpz_divexact(s.get_mpz_t(), den.get_mpz_t(), mpq_denref(t.c.get_mpq_t()));
            mpz_mul(s.get_mpz_t(), s.get_mpz_t(), mpq_numref(t.c.get_mpq_t()));
            zs.push_back({t.m.dx, t.m.dy, std::move(s)});
        }
        return zs;
    };

    mpz_class da, db;
    std::vector<ZTerm> za = clear_dens(terms_, da);
    std::vector<ZTerm> zb = clear_dens(o.terms_, db);

    uint32_t nx = static_cast<uint32_t>(degree_x() + o.degree_x()) + 1;
    uint32_t ny = static_cast<uint32_t>(degree_y() + o.degree_y()) + 1;
    std::vector<mpz_class> grid(static_cast<size_t>(nx) * ny);
    for (const auto& a : za)
        for (const auto& b : zb) {
            mpz_class& slot = grid[static_cast<size_t>(a.dx + b.dx) * ny + (a.dy + b.dy)];
            mpz_addmul(slot.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
        }

    mpz_class den = da * db;
    std::vector<Term> out;
    for (uint32_t dx = 0; dx < nx; ++dx)
        for (uint32_t dy = 0; dy < ny; ++dy) {
            mpz_class& v = grid[static_cast<size_t>(dx) * ny + dy];
            if (sgn(v) == 0) continue;
            Rat c(v, den);
            c.canonicalize();
            out.push_back({{dx, dy}, std::move(c)});
        }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return a.m.grlex_key() > b.m.grlex_key();
    });
    Poly r;
    r.terms_ = std::move(out);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (sgn(c) == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.m = t.m * m;
    return r;
}

Poly Poly::pow(uint32_t n) const {
    Poly result = constant(rat(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Poly Poly::partial(Var v) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (v == Var::X) {
            if (t.m.dx == 0) continue;
            r.terms_.push_back({{t.m.dx - 1, t.m.dy}, t.c * t.m.dx});
        } else {
            if (t.m.dy == 0) continue;
            r.terms_.push_back({{t.m.dx, t.m.dy - 1}, t.c * t.m.dy});
        }
    }
    // dropping one exponent keeps the grlex order of the survivors
    return r;
}

namespace {

// Horner evaluation of rows (exponent, coeff), exponents strictly
// decreasing, at a polynomial argument.
Poly eval_rows(const std::vector<std::pair<uint32_t, Poly>>& rows, const Poly& arg) {
    Poly acc;
    uint32_t cur = 0;
    bool first = true;
    for (const auto& [e, p] : rows) {
        if (first) {
            acc = p;
            first = false;
        } else {
            acc = acc * arg.pow(cur - e) + p;
        }
        cur = e;
    }
    if (!first && cur > 0) acc = acc * arg.pow(cur);
    return acc;
}

}  // namespace

Poly Poly::substitute(const Poly& img_x, const Poly& img_y) const {
    if (terms_.empty()) return {};
    // group by x-exponent; within a group terms stay dy-descending
    std::map<uint32_t, std::vector<std::pair<uint32_t, Poly>>, std::greater<>> by_dx;
    for (const auto& t : terms_) by_dx[t.m.dx].push_back({t.m.dy, constant(t.c)});
    std::vector<std::pair<uint32_t, Poly>> rows;
    rows.reserve(by_dx.size());
    for (auto& [dx, row] : by_dx) rows.push_back({dx, eval_rows(row, img_y)});
    return eval_rows(rows, img_x);
}

Rat Poly::at(const Rat& x, const Rat& y) const {
    if (terms_.empty()) return rat(0);
    std::vector<Rat> px(degree_x() + 1), py(degree_y() + 1);
    px[0] = 1;
    for (size_t i = 1; i < px.size(); ++i) px[i] = px[i - 1] * x;
    py[0] = 1;
    for (size_t i = 1; i < py.size(); ++i) py[i] = py[i - 1] * y;
    Rat s = 0;
    for (const auto& t : terms_) s += t.c * px[t.m.dx] * py[t.m.dy];
    return s;
}

std::vector<Rat> Poly::on_line(const Rat& lambda) const {
    if (terms_.empty()) return {};
    std::vector<Rat> lp(degree_y() + 1);
    lp[0] = 1;
    for (size_t i = 1; i < lp.size(); ++i) lp[i] = lp[i - 1] * lambda;
    std::vector<Rat> u(degree() + 1);
    for (const auto& t : terms_) u[t.m.total()] += t.c * lp[t.m.dy];
    while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
    return u;
}

Poly Poly::homogeneous_component(uint32_t d) const {
    Poly r;
    for (const auto& t : terms_)
        if (t.m.total() == d) r.terms_.push_back(t);
    return r;
}

bool Poly::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.m.total() != terms_.front().m.total()) return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = sgn(t.c) < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = abs(t.c);
        std::string mon;
        if (t.m.dx > 0) {
            mon += "x";
            if (t.m.dx > 1) mon += "^" + std::to_string(t.m.dx);
        }
        if (t.m.dy > 0) {
            if (!mon.empty()) mon += "*";
            mon += "y";
            if (t.m.dy > 1) mon += "^" + std::to_string(t.m.dy);
        }
        if (mon.empty()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += mon;
        }
    }
    return out;
}

Poly jacobian_det(const Poly& f, const Poly& g) {
    return f.partial_x() * g.partial_y() - f.partial_y() * g.partial_x();
}

LeadingForm leading_form(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading form of zero polynomial");
    LeadingForm lf;
    lf.degree = p.degree();
    lf.form = p.homogeneous_component(static_cast<uint32_t>(lf.degree));
    if (lf.degree == 0) {
        lf.absent_reason = LeadingForm::AbsentReason::DegreeZero;
        return lf;
    }
    uint32_t d = static_cast<uint32_t>(lf.degree);
    int fx = lf.form.degree_x();
    if (fx == 0) {
        // single term c*y^d
        lf.pure = {Poly::var(Var::Y), lf.form.leading_coeff(), lf.degree};
        return lf;
    }
    if (static_cast<uint32_t>(fx) < d) {
        // every power of a linear form involving x carries x^d
        lf.absent_reason = LeadingForm::AbsentReason::MixedFactors;
        return lf;
    }
    // dehomogenize: u(t) = form(t, 1) has degree d; a pure power must be
    // u_d*(t - r)^d with the root read off the subleading coefficient
    std::vector<Rat> u(d + 1);
    for (const auto& t : lf.form.terms()) u[t.m.dx] = t.c;
    const Rat& ud = u[d];
    Rat r = -u[d - 1] / (ud * static_cast<long>(d));
    std::vector<Rat> v(d + 1);
    v[d] = ud;
    Rat binom = 1, pw = 1;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
        binom = binom * (i + 1) / static_cast<long>(d - i);
        pw *= -r;
        v[static_cast<size_t>(i)] = ud * binom * pw;
    }
    if (v != u) {
        lf.absent_reason = LeadingForm::AbsentReason::DistinctFactors;
        return lf;
    }
    Poly l = Poly::var(Var::X) + Poly::var(Var::Y).scaled(-r);
    lf.pure = {l, ud, lf.degree};
    return lf;
}

}  // namespace lndkit
