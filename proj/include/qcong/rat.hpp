#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcong {

// Arbitrary-precision rational, always canonical: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpz_class n) : v_(std::move(n)) {}
    Rat(mpz_class n, mpz_class d) : v_(std::move(n), std::move(d)) {
        if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat l, const Rat& r) { return l += r; }
    friend Rat operator-(Rat l, const Rat& r) { return l -= r; }
    friend Rat operator*(Rat l, const Rat& r) { return l *= r; }
    friend Rat operator/(Rat l, const Rat& r) { return l /= r; }

    friend bool operator==(const Rat& l, const Rat& r) { return l.v_ == r.v_; }
    friend bool operator!=(const Rat& l, const Rat& r) { return l.v_ != r.v_; }
    friend bool operator<(const Rat& l, const Rat& r) { return l.v_ < r.v_; }

    // e may be negative; requires a nonzero base then.
    Rat pow(int64_t e) const {
        if (e == 0) return Rat(1);
        bool inv = e < 0;
        if (inv && is_zero()) throw std::domain_error("Rat: 0 to negative power");
        auto ue = static_cast<unsigned long>(inv ? -e : e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
        return inv ? Rat(std::move(d), std::move(n)) : Rat(std::move(n), std::move(d));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    static Rat binomial(uint64_t n, uint64_t k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rat(std::move(b));
    }

    static Rat int_pow(long base, uint64_t e) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
        if (base < 0 && (e & 1)) r = -r;
        return Rat(std::move(r));
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace qcong
