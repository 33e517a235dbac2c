#pragma once

#include <cstdint>
#include <vector>

#include "qcong/frac.hpp"
#include "qcong/qkit.hpp"
#include "qcong/rat.hpp"

namespace qcong::sums {

// How a/b/x enters a builder: left symbolic, sent to 1, or specialized to a
// signed q-power (the microscoping move).
struct ParamMode {
    enum class Kind { symbolic, one, power };
    Kind kind = Kind::symbolic;
    SignedPower value{};

    static ParamMode sym() { return {}; }
    static ParamMode one() { return {Kind::one, {}}; }
    static ParamMode power(int sign, int64_t exp) { return {Kind::power, {sign, exp}}; }
    bool symbolic() const { return kind == Kind::symbolic; }
};

// Parameter tuple for the d/n/r/s family (constraints are per theorem and are
// validated by each builder; violations throw std::invalid_argument).
struct SumCaseParams {
    int64_t n = 1;
    int64_t d = 1;
    int64_t r = 1;
    int64_t s = 0;
    ParamMode a = ParamMode::sym();
    ParamMode b = ParamMode::sym();
    ParamMode x = ParamMode::sym();
};

// Truncated basic hypergeometric series
//   sum_{k=0}^{N} prod(upper; q^d)_k / [ (q^d;q^d)_k prod(lower; q^d)_k ] * z^k.
struct PhiSeriesSpec {
    std::vector<qkit::SignedMonoTerm> upper;
    std::vector<qkit::SignedMonoTerm> lower;
    int64_t base_exp = 1;
    qkit::SignedMonoTerm argument{+1, Mono::unit()};
    int64_t truncation = 0;
};
Frac phi_truncated(const PhiSeriesSpec& spec);

// sum_{k=s}^{n-1} (aq^r;q^d)_k (bq^{d-r};q^d)_k (q^d;q^{2d})_k q^{dk}
//                 / [ (q^d;q^d)_{k-s} (q^d;q^d)_{k+s} (abq^{2d};q^{2d})_k ]
Frac thm11_lhs(const SumCaseParams& p);

// sum_{k=0}^{n-1} (aq^r;q^d)_k (bq^{d-r};q^d)_k (x_sign*x;q^d)_k q^{dk}
//                 / [ (q^d;q^d)_k (abq^{2d};q^{2d})_k ]
Frac thm13_side(const SumCaseParams& p, int x_sign);

// sum_{k=0}^{n-1} 2 (aq^r;q^d)_k (q^{d-r}/a;q^d)_k q^{dk}
//                 / [ (q^d;q^d)_k^2 (1+q^{dk}) ]   and its constant right side.
Frac cor14_lhs(const SumCaseParams& p);
Frac cor14_rhs(const SumCaseParams& p);

// sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k (q;q^2)_{2k} [8k+1] q^{2k^2}
//                 / [ (q^2;q^2)_{2k} (aq^6;q^6)_k (q^6/a;q^6)_k ],
// rhs q^{-(n-1)/2} [n] (-3/n); requires gcd(n, 6) = 1.
Frac ramanujan_q_lhs(int64_t n, ParamMode a);
Frac ramanujan_q_rhs(int64_t n);

// sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k / (q^2;q^2)_k^2,
// rhs (-1)^((n-1)/2) q^((1-n^2)/4); n odd.
Frac thm15_lhs(int64_t n, ParamMode a);
Frac thm15_rhs(int64_t n);

// Same sum with argument x^k, and its closed form
// sum_{k=0}^{(n-1)/2} [(n-1)/2 ch k]_{q^2}^2 q^{k^2-nk} (-x)^k (x;q^2)_{(n-1)/2-k}.
Frac thm41_lhs(int64_t n, ParamMode a, ParamMode x);
Frac thm41_rhs(int64_t n, ParamMode x);

// (-1)^((n-1)/2) q^((1-n^2)/4) sum_k (aq;q^2)_k (q/a;q^2)_k q^{2k} (x;q^2)_k / (q^2;q^2)_k^2
Frac thm42_rhs(int64_t n, ParamMode a, ParamMode x);

// The x = 0 dual form: sum_k (aq;q^2)_k (q/a;q^2)_k q^{2k} / (q^2;q^2)_k^2,
// rhs (-1)^((n-1)/2) q^((n^2-1)/4).
Frac cor43_lhs(int64_t n, ParamMode a);
Frac cor43_rhs(int64_t n);

// sum_{k=0}^{(n-1)/2} (aq;q^2)_k (q/a;q^2)_{k+s} / [ (q^2;q^2)_k (q^2;q^2)_{k+s} ],
// with 0 <= s <= (n-1)/2; rhs is thm15_rhs.
Frac thm44_lhs(int64_t n, int64_t s, ParamMode a);

// sum_{k=0}^{N} (-1)^k [N ch k] [M+k ch N] q^{C(k,2)-Nk} == (-1)^N q^{-C(N+1,2)},
// verified on N <= M <= 2N.
bool identity51_check(int64_t N, int64_t M);

// Variant plus:  sum_k (aq;q^2)_k (-q/a;q^2)_k q^{2k} / (q^2;q^2)_k,
//                rhs (-1)^((n-1)/2) q^((n^2-1)/2).
// Variant minus: sum_k (aq;q^2)_k  (q/a;q^2)_k q^{2k} / (q^2;q^2)_k,
//                rhs q^((n^2-1)/2).
enum class Thm46Variant { plus, minus };
Frac thm46_lhs(int64_t n, ParamMode a, Thm46Variant v);
Frac thm46_rhs(int64_t n, Thm46Variant v);

// Binomial form  sum_{k=0}^{n-1} q^k [2k ch k] / (-q;q)_k,
// Pochhammer form sum_{k=0}^{n-1} (q;q^2)_k (-q;q^2)_k q^{2k} / (q^2;q^2)_k;
// expected residues (-1)^((n-1)/2) q^((n^2-1)/4) resp. q^((n^2-1)/2).
enum class Conj45Form { binomial, pochhammer };
Frac conj45_lhs(int64_t n, Conj45Form form);
Frac conj45_expected(int64_t n, Conj45Form form);

// F_n(x,b,q) = sum_{k=0}^{n} (q^{-n};q)_k (b;q)_k (x_sign*x;q)_k q^k
//              / [ (q;q)_k (bq^{1-n};q^2)_k ]
Frac fn_lemma31(int64_t n, int x_sign = +1);

enum class ClassicalIdentity {
    q_chu_vandermonde,
    q_pfaff_saalschutz,
    andrews_q_watson,
    q_gauss_terminating,
    q_binomial_theorem,
};
// Builds both sides symbolically and returns exact equality. For
// andrews_q_watson the two-branch right side (0 for odd n) is checked; for
// q_gauss_terminating all 0 <= j <= n are checked.
bool classical_identity_check(ClassicalIdentity which, int64_t n);

enum class IntegerSumKind { rv, ram1a, sun_tauraso };
// rv:          sum_{k=0}^{p-1} C(2k,k)^2 / 16^k
// ram1a:       sum_{k=0}^{p-1} C(4k,2k) C(2k,k)^2 (8k+1) / (2^{8k} 3^{2k})
// sun_tauraso: sum_{k=0}^{p^extra - 1} C(2k,k) / 2^k
Rat integer_sum(IntegerSumKind kind, int64_t p, int64_t extra = 1);

}  // namespace qcong::sums
