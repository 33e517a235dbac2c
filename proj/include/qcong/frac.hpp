#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcong/errors.hpp"
#include "qcong/mono.hpp"
#include "qcong/mpoly.hpp"
#include "qcong/rat.hpp"
#include "qcong/upoly.hpp"

namespace qcong {

// A signed q-power: sign * q^exp with sign in {+1,-1}. The value every
// microscoping specialization substitutes for a parameter.
struct SignedPower {
    int sign = 1;
    int64_t exp = 0;
    std::string str() const {
        std::string s = sign < 0 ? "-" : "";
        if (exp == 0) return s + "1";
        return s + "q^" + std::to_string(exp);
    }
};

// Rational function kept in factored form:
//
//     unit_coeff * unit_mono * num / prod_i factor_i^mult_i
//
// Denominator factors are canonical binomials (or the whole denominator is
// empty); they are never expanded. Construction normalizes: monomial content
// is pulled into the unit, factors that exactly divide the numerator are
// cancelled, identical factors are merged. Zero is stored as num == 0.
class Frac {
public:
    using DenFactor = std::pair<MPoly, int>;

    Frac() = default;  // zero
    explicit Frac(Rat c) : Frac(MPoly(std::move(c))) {}
    explicit Frac(MPoly num) : Frac(Rat(1), Mono::unit(), std::move(num), {}) {}
    Frac(Rat unit_coeff, Mono unit_mono, MPoly num, std::vector<DenFactor> den);

    static Frac one() { return Frac(Rat(1)); }

    bool is_zero() const { return num_.is_zero(); }
    const Rat& unit_coeff() const { return c_; }
    const Mono& unit_mono() const { return m_; }
    const MPoly& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }

    Frac operator-() const;
    friend Frac operator+(const Frac& l, const Frac& r);
    friend Frac operator-(const Frac& l, const Frac& r);
    friend Frac operator*(const Frac& l, const Frac& r);

    Frac scaled(const Rat& c) const;
    Frac scaled(const Rat& c, const Mono& m) const;
    // Reciprocal; numerator must have at most two terms (it becomes a
    // denominator factor). Throws std::domain_error on zero.
    Frac inverted() const;

    bool contains(Var v) const;

    // var -> sign*q^exp. Throws denominator_vanishes if a denominator factor
    // (or an inverse unit power) becomes zero.
    Frac substitute(Var v, SignedPower val) const;
    // var -> rational constant.
    Frac substitute(Var v, const Rat& value) const;
    // var -> sign*var (coefficient twist; keeps the variable).
    Frac scale_var(Var v, int sign) const;

    // Equality by cross-multiplication of cleared numerators, never by
    // floating approximation.
    bool equals(const Frac& o) const;

    // unit_coeff * unit_mono * num as a single Laurent polynomial.
    MPoly cleared_num() const;
    // The denominator expanded to a single polynomial (1 when empty).
    MPoly den_expanded() const;

    struct UnivariatePair {
        UPoly num, den;
        int64_t shift;  // both sides were multiplied by q^shift to clear negative powers
    };
    // Requires a q-only fraction; throws non_univariate otherwise.
    UnivariatePair to_upoly() const;

    std::string str() const;

private:
    Rat c_{1};
    Mono m_{};
    MPoly num_{};
    std::vector<DenFactor> den_{};
    void normalize();
};

}  // namespace qcong
