#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace lndkit {

enum class Var { X, Y };

// Element of Q[x,y]. Terms are kept in strictly decreasing graded lex
// order (x > y) with no zero coefficients, so equality and printing are
// canonical by construction.
class Poly {
public:
    struct Term {
        Monomial m;
        Rat c;
        bool operator==(const Term& o) const { return m == o.m && c == o.c; }
    };

    Poly() = default;

    static Poly constant(const Rat& c);
    static Poly var(Var v);
    static Poly monomial(const Monomial& m, const Rat& c);
    // Accepts terms in any order, merges duplicates, drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.total() == 0); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // -1 for the zero polynomial
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.total()); }
    int degree_x() const;
    int degree_y() const;

    const Term& leading_term() const;
    Rat leading_coeff() const { return leading_term().c; }
    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff({0, 0}); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly scaled(const Rat& c) const;
    Poly shifted(const Monomial& m) const;  // multiply by a power product
    Poly pow(uint32_t n) const;

    Poly partial(Var v) const;
    Poly partial_x() const { return partial(Var::X); }
    Poly partial_y() const { return partial(Var::Y); }

    // Ring morphism x -> img_x, y -> img_y applied to this polynomial.
    Poly substitute(const Poly& img_x, const Poly& img_y) const;

    Rat at(const Rat& x, const Rat& y) const;

    // Restriction to the line y = lambda * x, as coefficients of t^0..t^n.
    std::vector<Rat> on_line(const Rat& lambda) const;

    Poly homogeneous_component(uint32_t d) const;
    bool is_homogeneous() const;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

Poly jacobian_det(const Poly& f, const Poly& g);

// Top homogeneous part of p plus its analysis as a scaled power of a
// linear form, when it is one.
struct LeadingForm {
    enum class AbsentReason { None, DegreeZero, MixedFactors, DistinctFactors };
    struct PurePower {
        Poly linear;   // monic under grlex: x + b*y, or y
        Rat scale;
        int exponent;
    };
    int degree = 0;
    Poly form;
    std::optional<PurePower> pure;
    AbsentReason absent_reason = AbsentReason::None;
};

LeadingForm leading_form(const Poly& p);  // throws ZeroPolynomial

}  // namespace lndkit
