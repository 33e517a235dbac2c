#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/mono.hpp"
#include "qcong/rat.hpp"

namespace qcong {

struct UnitNormal;

// Sparse Laurent polynomial over Rat in (q, a, b, x). Terms are kept sorted
// ascending by the monomial order with no zero coefficients, so equal
// polynomials have identical term vectors.
class MPoly {
public:
    using Term = std::pair<Mono, Rat>;

    MPoly() = default;  // zero
    explicit MPoly(Rat c) {
        if (!c.is_zero()) t_.emplace_back(Mono::unit(), std::move(c));
    }
    MPoly(Rat c, Mono m) {
        if (!c.is_zero()) t_.emplace_back(m, std::move(c));
    }

    static MPoly zero() { return {}; }
    static MPoly one() { return MPoly(Rat(1)); }
    static MPoly variable(Var v) { return MPoly(Rat(1), Mono::of(v)); }
    static MPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].first.is_unit() && t_[0].second.is_one(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_unit()); }
    bool is_monomial() const { return t_.size() <= 1; }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    // Lex-greatest term; polynomial must be nonzero.
    const Term& lead() const { return t_.back(); }

    bool contains(Var v) const;
    // Componentwise minimum of exponents (the Laurent "valuation" per variable).
    Mono min_exponents() const;
    int64_t degree(Var v) const;
    Rat coeff(const Mono& m) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(const MPoly& l, const MPoly& r);
    friend MPoly operator-(const MPoly& l, const MPoly& r);
    friend MPoly operator*(const MPoly& l, const MPoly& r);

    // this += c * q^shift-style monomial * p
    void addmul(const MPoly& p, const Rat& c, const Mono& shift);
    // In-place scale by a single term.
    MPoly& mul_term(const Rat& c, const Mono& m);

    // Exact division in the Laurent ring; nullopt when div does not divide
    // exactly. Throws on a zero divisor.
    std::optional<MPoly> exact_div(const MPoly& div) const;

    // v -> sign*q^exp (sign in {+1,-1}); eliminates v.
    MPoly substitute(Var v, int sign, int64_t exp) const;
    // v -> rational constant; negative exponents of v require value != 0.
    MPoly substitute(Var v, const Rat& value) const;
    // v -> sign*q^qshift*v (keeps v); qshift only meaningful for v != q.
    MPoly scale_var(Var v, int sign, int64_t qshift = 0) const;

    friend bool operator==(const MPoly&, const MPoly&) = default;
    // Deterministic total order on polynomials (used to sort denominator factors).
    std::strong_ordering compare(const MPoly& o) const;

    // *this == content * q^shift-monomial * poly, where poly has integer,
    // collectively coprime coefficients, componentwise minimum exponent 0 and
    // a positive first (lex-least) coefficient. Requires a nonzero polynomial.
    UnitNormal unit_normal() const;

    // Canonical text form, terms ascending, e.g. "1 - q^3*a".
    std::string str() const;

private:
    std::vector<Term> t_;
};

struct UnitNormal {
    Rat content;
    Mono shift;
    MPoly poly;
};

}  // namespace qcong
