#include "qcong/qkit.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qcong/errors.hpp"

namespace qcong::qkit {

UPoly q_integer(int64_t n) {
    if (n < 1) throw std::invalid_argument("q_integer: n must be >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(n), Rat(1));
    return UPoly(std::move(c), 0);
}

const UPoly& cyclotomic(int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::mutex mu;
    static std::map<int64_t, UPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // Fill the table bottom-up along the divisors of n.
    for (int64_t d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.contains(d)) continue;
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
        c.front() = Rat(-1);
        c.back() = Rat(1);
        UPoly num(std::move(c), 0);  // q^d - 1
        for (int64_t e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            num = *num.exact_div(cache.at(e));
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

Frac pochhammer(const PochSpec& spec) {
    if (spec.length < 0) throw std::invalid_argument("pochhammer: negative length");
    if (spec.step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    MPoly prod = MPoly::one();
    for (int64_t j = 0; j < spec.length; ++j) {
        MPoly factor = MPoly::one() - MPoly(Rat(spec.first.sign),
                                            spec.first.mono + Mono::q_power(j * spec.step));
        prod = prod * factor;
    }
    return Frac(std::move(prod));
}

UPoly qbinom(int64_t n, int64_t k, int64_t d) {
    if (n < 0) throw std::invalid_argument("qbinom: n must be >= 0");
    if (d < 1) throw std::invalid_argument("qbinom: base exponent must be >= 1");
    if (k < 0 || k > n) return UPoly();  // the 0-otherwise branch
    k = std::min(k, n - k);
    UPoly num(Rat(1));
    for (int64_t j = 1; j <= k; ++j) {
        // (1 - q^(d*(n-k+j))) / (1 - q^(d*j)); the running product stays polynomial.
        std::vector<Rat> f(static_cast<std::size_t>(d * (n - k + j)) + 1, Rat(0));
        f.front() = Rat(1);
        f.back() = Rat(-1);
        num = num * UPoly(std::move(f), 0);
        std::vector<Rat> g(static_cast<std::size_t>(d * j) + 1, Rat(0));
        g.front() = Rat(1);
        g.back() = Rat(-1);
        num = *num.exact_div(UPoly(std::move(g), 0));
    }
    return num;
}

int64_t least_nonneg_residue(const Rat& x, int64_t m) {
    if (m < 1) throw std::invalid_argument("least_nonneg_residue: modulus must be >= 1");
    mpz_class mm(static_cast<long>(m));
    mpz_class den = x.den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw not_coprime("least_nonneg_residue: denominator not invertible mod " +
                          std::to_string(m));
    mpz_class t = x.num() * inv;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mm.get_mpz_t());
    return t.get_si();
}

int kronecker(int64_t D, int64_t n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("kronecker: n must be odd positive");
    mpz_class a(static_cast<long>(D)), b(static_cast<long>(n));
    return mpz_jacobi(a.get_mpz_t(), b.get_mpz_t());
}

bool residue_identity_check(int64_t d, int64_t n, int64_t r) {
    if (d < 1 || n < 1 || r < 1 || r >= d)
        throw std::invalid_argument("residue_identity_check: need 1 <= r < d, n >= 1");
    if (std::gcd(d, n) != 1)
        throw std::invalid_argument("residue_identity_check: gcd(d, n) must be 1");
    int64_t lhs = r + d * least_nonneg_residue(Rat(-r, d), n);
    int64_t rhs = n * least_nonneg_residue(Rat(r, n), d);
    return lhs == rhs;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

Frac little_q_legendre(int64_t n, LegendreExpansion expansion, int64_t d) {
    if (n < 0) throw std::invalid_argument("little_q_legendre: n must be >= 0");
    if (d < 1) throw std::invalid_argument("little_q_legendre: base exponent must be >= 1");
    Frac sum;
    for (int64_t k = 0; k <= n; ++k) {
        int64_t e = d * (k * (k + 1) / 2 - n * k);
        switch (expansion) {
            case LegendreExpansion::standard: {
                MPoly t = (qbinom(n, k, d) * qbinom(n + k, k, d)).to_mpoly();
                t.mul_term(Rat((k % 2 != 0) ? -1 : 1), Mono::q_power(e) + Mono::of(Var::x, k));
                sum = sum + Frac(std::move(t));
                break;
            }
            case LegendreExpansion::signed_form: {
                MPoly t = (qbinom(n, k, d) * qbinom(n + k, k, d)).to_mpoly();
                Frac poch = pochhammer({{+1, Mono::of(Var::x) + Mono::q_power(d)}, d, k});
                t.mul_term(Rat((k % 2 != 0) ? -1 : 1), Mono::q_power(e));
                sum = sum + Frac(std::move(t)) * poch;
                break;
            }
            case LegendreExpansion::new_form: {
                UPoly b = qbinom(n, k, d);
                MPoly t = (b * b).to_mpoly();
                Frac poch = pochhammer({{+1, Mono::of(Var::x) + Mono::q_power(d)}, d, n - k});
                t.mul_term(Rat((k % 2 != 0) ? -1 : 1), Mono::q_power(e) + Mono::of(Var::x, k));
                sum = sum + Frac(std::move(t)) * poch;
                break;
            }
        }
    }
    if (expansion == LegendreExpansion::signed_form) {
        Rat sgn((n % 2 != 0) ? -1 : 1);
        sum = sum.scaled(sgn, Mono::q_power(-d * n * (n + 1) / 2));
    }
    return sum;
}

}  // namespace qcong::qkit
