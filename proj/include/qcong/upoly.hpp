#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/mpoly.hpp"
#include "qcong/rat.hpp"

namespace qcong {

// Dense univariate Laurent polynomial in q over Rat: coefficient vector plus
// an integer valuation offset. Stored trimmed, so the first and last stored
// coefficients are nonzero (or the polynomial is zero).
class UPoly {
public:
    UPoly() = default;  // zero
    explicit UPoly(Rat c) : UPoly(std::vector<Rat>{std::move(c)}, 0) {}
    UPoly(std::vector<Rat> coeffs, int64_t valuation);
    static UPoly monomial(Rat c, int64_t e) { return UPoly({std::move(c)}, e); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && val_ == 0 && c_[0].is_one(); }
    // Degree/valuation of the zero polynomial are not meaningful; callers guard.
    int64_t degree() const { return val_ + static_cast<int64_t>(c_.size()) - 1; }
    int64_t valuation() const { return val_; }
    Rat coeff(int64_t e) const;
    const Rat& lead_coeff() const { return c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& l, const UPoly& r);
    friend UPoly operator-(const UPoly& l, const UPoly& r);
    friend UPoly operator*(const UPoly& l, const UPoly& r);
    UPoly mul_term(const Rat& c, int64_t e) const;
    UPoly shifted(int64_t e) const { return is_zero() ? UPoly() : UPoly(c_, val_ + e); }

    // Euclidean division n = quot*d + rem with deg rem < deg d; both operands
    // must be ordinary polynomials (valuation >= 0). Throws on zero divisor.
    static std::pair<UPoly, UPoly> divrem(const UPoly& n, const UPoly& d);
    // Monic gcd over the rationals; gcd(0,0) = 0.
    static UPoly gcd(UPoly x, UPoly y);
    // Exact division, Laurent-aware; nullopt if not exact.
    std::optional<UPoly> exact_div(const UPoly& d) const;

    UPoly compose_q_power(int64_t d) const;  // q -> q^d, d >= 1
    UPoly negate_q() const;                  // q -> -q

    MPoly to_mpoly() const;
    // Fails (nullopt) if p involves a, b or x.
    static std::optional<UPoly> from_mpoly(const MPoly& p);

    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str() const { return to_mpoly().str(); }

private:
    int64_t val_ = 0;
    std::vector<Rat> c_;  // c_[i] is the coefficient of q^(val_+i)
    void trim();
};

}  // namespace qcong
