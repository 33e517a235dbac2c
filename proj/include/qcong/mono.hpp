#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace qcong {

// The fixed variable tuple. All polynomials live in Q[q^±1, a^±1, b^±1, x^±1].
enum class Var : int { q = 0, a = 1, b = 2, x = 3 };

inline constexpr std::array<char, 4> kVarNames{'q', 'a', 'b', 'x'};

// Exponent vector of a monomial; Laurent (negative) exponents are allowed in
// every variable. The total order used everywhere (canonical serialization,
// divisions) is lexicographic on (e_q, e_a, e_b, e_x).
struct Mono {
    std::array<int64_t, 4> e{0, 0, 0, 0};

    static Mono unit() { return {}; }
    static Mono of(Var v, int64_t k = 1) {
        Mono m;
        m.e[static_cast<int>(v)] = k;
        return m;
    }
    static Mono q_power(int64_t k) { return of(Var::q, k); }

    int64_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    int64_t& operator[](Var v) { return e[static_cast<int>(v)]; }

    bool is_unit() const { return e == std::array<int64_t, 4>{0, 0, 0, 0}; }

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Mono operator-() const {
        Mono r;
        for (int i = 0; i < 4; ++i) r.e[i] = -e[i];
        return r;
    }

    // Componentwise <=; divisibility of ordinary (shift-normalized) monomials.
    bool divides(const Mono& m) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    friend auto operator<=>(const Mono&, const Mono&) = default;

    // "q^2*a*b^-1"; "1" for the unit monomial.
    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += kVarNames[i];
            if (e[i] != 1) s += '^' + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

}  // namespace qcong
