#pragma once

#include <cstdint>

#include "qcong/frac.hpp"
#include "qcong/mpoly.hpp"
#include "qcong/rat.hpp"
#include "qcong/upoly.hpp"

namespace qcong::qkit {

// [n] = 1 + q + ... + q^(n-1), n >= 1.
UPoly q_integer(int64_t n);

// n-th cyclotomic polynomial, computed over the rationals by exact division
// of q^n - 1 by the lower-index cyclotomics (no complex roots). Memoized;
// the cache is a thread-safe insert-once table.
const UPoly& cyclotomic(int64_t n);

// First factor of a q-shifted factorial: sign * mono (e.g. -q/a is
// {sign: -1, mono: q*a^-1}).
struct SignedMonoTerm {
    int sign = 1;
    Mono mono;
    MPoly to_mpoly() const { return MPoly(Rat(sign), mono); }
};

// (c*v*q^e; q^step)_length with first = c*v*q^e as a signed monomial;
// division by a parameter is encoded as a negative exponent on it.
struct PochSpec {
    SignedMonoTerm first;
    int64_t step = 1;    // the base is q^step
    int64_t length = 0;  // number of factors, >= 0
};

// prod_{j=0}^{length-1} (1 - first*q^(j*step)), expanded, as a Frac with a
// trivial denominator. Length 0 gives 1.
Frac pochhammer(const PochSpec& spec);

// Gaussian binomial coefficient in base q^d; 0 when k < 0 or k > n.
UPoly qbinom(int64_t n, int64_t k, int64_t d = 1);

// Least non-negative residue <x>_m: the unique t in [0, m) with
// den(x)*t == num(x) (mod m). Throws not_coprime if gcd(den(x), m) != 1.
int64_t least_nonneg_residue(const Rat& x, int64_t m);

// Jacobi-Kronecker symbol (D/n) for odd positive n.
int kronecker(int64_t D, int64_t n);

// Checks r + d*<-r/d>_n == n*<r/n>_d (requires r < d, gcd(d, n) = 1).
bool residue_identity_check(int64_t d, int64_t n, int64_t r);

// Trial-division primality for the small moduli used in sweeps.
bool is_prime(int64_t n);

// The three equivalent finite-sum expansions of the little q-Legendre
// polynomial P_n(x|q^d).
enum class LegendreExpansion { standard, signed_form, new_form };
Frac little_q_legendre(int64_t n, LegendreExpansion expansion, int64_t d = 1);

}  // namespace qcong::qkit
