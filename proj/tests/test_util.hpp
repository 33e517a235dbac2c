#pragma once

#include <random>
#include <vector>

#include "qcong/frac.hpp"
#include "qcong/qkit.hpp"

namespace qcong::testutil {

struct Rng {
    std::mt19937 gen{0xC0FFEE};
    int64_t pick(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(gen);
    }
};

inline Rat random_rat(Rng& rng) {
    int64_t num = rng.pick(-6, 6);
    int64_t den = rng.pick(1, 4);
    return Rat(num, den);
}

inline Mono random_mono(Rng& rng, bool laurent = true) {
    Mono m;
    int64_t lo = laurent ? -3 : 0;
    for (int i = 0; i < 4; ++i) m.e[i] = rng.pick(lo, 3);
    return m;
}

inline MPoly random_mpoly(Rng& rng, int max_terms = 4, bool laurent = true) {
    std::vector<MPoly::Term> t;
    int terms = static_cast<int>(rng.pick(0, max_terms));
    for (int i = 0; i < terms; ++i) t.emplace_back(random_mono(rng, laurent), random_rat(rng));
    return MPoly::from_terms(std::move(t));
}

inline MPoly random_nonzero_mpoly(Rng& rng, int max_terms = 4) {
    for (;;) {
        MPoly p = random_mpoly(rng, max_terms);
        if (!p.is_zero()) return p;
    }
}

// A random valid denominator factor: a nonzero binomial 1 - c*mono.
inline MPoly random_binomial(Rng& rng) {
    for (;;) {
        Mono m = random_mono(rng);
        if (m.is_unit()) continue;
        Rat c = random_rat(rng);
        if (c.is_zero()) continue;
        return MPoly::one() - MPoly(c, m);
    }
}

inline Frac random_frac(Rng& rng) {
    std::vector<Frac::DenFactor> den;
    int factors = static_cast<int>(rng.pick(0, 2));
    for (int i = 0; i < factors; ++i) den.emplace_back(random_binomial(rng), rng.pick(1, 2));
    return Frac(random_rat(rng), random_mono(rng), random_mpoly(rng, 4), std::move(den));
}

// Exact evaluation at a rational point (q, a, b, x); the denominators of the
// chosen points must not vanish.
inline Rat eval(const MPoly& p, const std::array<Rat, 4>& at) {
    Rat sum;
    for (const auto& [m, c] : p.terms()) {
        Rat term = c;
        for (int i = 0; i < 4; ++i) term *= at[static_cast<std::size_t>(i)].pow(m.e[i]);
        sum += term;
    }
    return sum;
}

inline Rat eval(const Frac& f, const std::array<Rat, 4>& at) {
    return eval(f.cleared_num(), at) / eval(f.den_expanded(), at);
}

}  // namespace qcong::testutil
