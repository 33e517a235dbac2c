#include <doctest.h>

#include "qcong/errors.hpp"
#include "qcong/qkit.hpp"
#include "qcong/sums.hpp"
#include "test_util.hpp"

using namespace qcong;
using qkit::PochSpec;
using qkit::SignedMonoTerm;
using sums::ParamMode;
using sums::SumCaseParams;

namespace {

Mono Q(int64_t e) { return Mono::q_power(e); }
const Mono A = Mono::of(Var::a);
const Mono Ai = Mono::of(Var::a, -1);
const Mono B = Mono::of(Var::b);
const Mono X = Mono::of(Var::x);

// 1 / (first; q^step)_len with the factors kept in the denominator.
Frac inv_poch(SignedMonoTerm first, int64_t step, int64_t len) {
    std::vector<Frac::DenFactor> den;
    for (int64_t j = 0; j < len; ++j)
        den.emplace_back(MPoly::one() - MPoly(Rat(first.sign), first.mono + Q(j * step)), 1);
    return Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
}

Frac poch(SignedMonoTerm first, int64_t step, int64_t len) {
    return qkit::pochhammer({first, step, len});
}

Frac qmono(int64_t e) { return Frac(Rat(1), Q(e), MPoly::one(), {}); }

// Naive per-term reconstructions of the truncated sums, recomputing every
// q-shifted factorial from scratch. These act as independent oracles for the
// incremental term-ratio builders.
Frac naive_thm15(int64_t n) {
    Frac sum;
    for (int64_t k = 0; k < n; ++k) {
        Frac t = poch({+1, A + Q(1)}, 2, k) * poch({+1, Ai + Q(1)}, 2, k) *
                 inv_poch({+1, Q(2)}, 2, k) * inv_poch({+1, Q(2)}, 2, k);
        sum = sum + t;
    }
    return sum;
}

Frac naive_thm46(int64_t n, int xsign) {
    Frac sum;
    for (int64_t k = 0; k < n; ++k) {
        Frac t = poch({+1, A + Q(1)}, 2, k) * poch({xsign, Ai + Q(1)}, 2, k) *
                 inv_poch({+1, Q(2)}, 2, k) * qmono(2 * k);
        sum = sum + t;
    }
    return sum;
}

Frac naive_thm11(const SumCaseParams& p) {
    Frac sum;
    for (int64_t k = p.s; k <= p.n - 1; ++k) {
        Frac t = poch({+1, A + Q(p.r)}, p.d, k) * poch({+1, B + Q(p.d - p.r)}, p.d, k) *
                 poch({+1, Q(p.d)}, 2 * p.d, k) * qmono(p.d * k) *
                 inv_poch({+1, Q(p.d)}, p.d, k - p.s) * inv_poch({+1, Q(p.d)}, p.d, k + p.s) *
                 inv_poch({+1, A + B + Q(2 * p.d)}, 2 * p.d, k);
        sum = sum + t;
    }
    return sum;
}

Frac naive_thm13(const SumCaseParams& p, int xsign) {
    Frac sum;
    for (int64_t k = 0; k <= p.n - 1; ++k) {
        Frac t = poch({+1, A + Q(p.r)}, p.d, k) * poch({+1, B + Q(p.d - p.r)}, p.d, k) *
                 poch({xsign, X}, p.d, k) * qmono(p.d * k) * inv_poch({+1, Q(p.d)}, p.d, k) *
                 inv_poch({+1, A + B + Q(2 * p.d)}, 2 * p.d, k);
        sum = sum + t;
    }
    return sum;
}

Frac naive_cor14(const SumCaseParams& p) {
    Frac sum;
    for (int64_t k = 0; k <= p.n - 1; ++k) {
        std::vector<Frac::DenFactor> den;
        den.emplace_back(MPoly::one() + MPoly(Rat(1), Q(p.d * k)), 1);
        Frac t = Frac(Rat(2)) * poch({+1, A + Q(p.r)}, p.d, k) *
                 poch({+1, Ai + Q(p.d - p.r)}, p.d, k) * qmono(p.d * k) *
                 inv_poch({+1, Q(p.d)}, p.d, k) * inv_poch({+1, Q(p.d)}, p.d, k) *
                 Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
        sum = sum + t;
    }
    return sum;
}

Frac naive_ramanujan(int64_t n) {
    Frac sum;
    for (int64_t k = 0; k < n; ++k) {
        Frac t = poch({+1, A + Q(1)}, 2, k) * poch({+1, Ai + Q(1)}, 2, k) *
                 poch({+1, Q(1)}, 2, 2 * k) * Frac(qkit::q_integer(8 * k + 1).to_mpoly()) *
                 qmono(2 * k * k) * inv_poch({+1, Q(2)}, 2, 2 * k) *
                 inv_poch({+1, A + Q(6)}, 6, k) * inv_poch({+1, Ai + Q(6)}, 6, k);
        sum = sum + t;
    }
    return sum;
}

}  // namespace

TEST_CASE("phi_truncated basics") {
    sums::PhiSeriesSpec spec;
    spec.truncation = 0;
    CHECK(sums::phi_truncated(spec).equals(Frac::one()));

    // 2phi1(a, q^-1; b; q, q) truncated at 1 equals (a-b)/(1-b)
    sums::PhiSeriesSpec cv;
    cv.upper = {{+1, A}, {+1, Q(-1)}};
    cv.lower = {{+1, B}};
    cv.argument = {+1, Q(1)};
    cv.truncation = 1;
    Frac expect(Rat(1), Mono::unit(), MPoly::variable(Var::a) - MPoly::variable(Var::b),
                {{MPoly::one() - MPoly::variable(Var::b), 1}});
    CHECK(sums::phi_truncated(cv).equals(expect));

    // Andrews' q-Watson 4phi3 with n = 1: the k = 1 term cancels the k = 0 term.
    sums::PhiSeriesSpec aw;
    aw.upper = {{+1, Q(-1)}, {+1, A + A + Q(2)}, {+1, B}, {-1, B}};
    aw.lower = {{+1, A + Q(1)}, {-1, A + Q(1)}, {+1, B + B}};
    aw.argument = {+1, Q(1)};
    aw.truncation = 1;
    CHECK(sums::phi_truncated(aw).is_zero());
}

TEST_CASE("thm11 builder matches the naive oracle and validates input") {
    CHECK_THROWS_AS(sums::thm11_lhs({1, 2, 1, 0}), std::invalid_argument);  // no admissible s
    CHECK_THROWS_AS(sums::thm11_lhs({3, 3, 1, 0}), std::invalid_argument);  // gcd(d,n) != 1
    for (SumCaseParams p : {SumCaseParams{3, 2, 1, 0}, SumCaseParams{3, 2, 1, 2},
                            SumCaseParams{5, 2, 1, 1}, SumCaseParams{5, 3, 2, 0},
                            SumCaseParams{3, 1, 1, 1}}) {
        CHECK(sums::thm11_lhs(p).equals(naive_thm11(p)));
    }
    // r > d is accepted (same factor structure up to exponent shifts)
    SumCaseParams big{3, 2, 3, 1};
    CHECK(sums::thm11_lhs(big).equals(naive_thm11(big)));
}

TEST_CASE("thm13 builder matches the naive oracle") {
    for (SumCaseParams p : {SumCaseParams{3, 2, 1, 0}, SumCaseParams{5, 1, 1, 0},
                            SumCaseParams{3, 4, 3, 0}}) {
        CHECK(sums::thm13_side(p, +1).equals(naive_thm13(p, +1)));
        CHECK(sums::thm13_side(p, -1).equals(naive_thm13(p, -1)));
    }
    // x = 0 of the n=1 case: single term 1 on both sides.
    SumCaseParams p1{1, 2, 1, 0};
    CHECK(sums::thm13_side(p1, +1).equals(Frac::one()));
}

TEST_CASE("cor14 matches the naive oracle; right side is the residue sign") {
    for (SumCaseParams p : {SumCaseParams{3, 2, 1, 0}, SumCaseParams{5, 2, 1, 0},
                            SumCaseParams{3, 1, 1, 0}}) {
        CHECK(sums::cor14_lhs(p).equals(naive_cor14(p)));
    }
    CHECK(sums::cor14_rhs({1, 2, 1, 0}).equals(Frac::one()));
    CHECK(sums::cor14_rhs({3, 2, 1, 0}).equals(Frac(Rat(-1))));  // <-1/2>_3 = 1
    CHECK(sums::cor14_rhs({5, 2, 1, 0}).equals(Frac::one()));    // <-1/2>_5 = 2
}

TEST_CASE("ramanujan-type sum and right side") {
    CHECK(sums::ramanujan_q_lhs(1, ParamMode::sym()).equals(Frac::one()));
    CHECK(sums::ramanujan_q_rhs(1).equals(Frac::one()));
    CHECK(sums::ramanujan_q_lhs(5, ParamMode::sym()).equals(naive_ramanujan(5)));
    // n=5: kronecker(-3,5) = -1, so rhs = -q^-2 [5]
    Frac r5 = sums::ramanujan_q_rhs(5);
    Frac expect5 = Frac(qkit::q_integer(5).to_mpoly()).scaled(Rat(-1), Q(-2));
    CHECK(r5.equals(expect5));
    // n=7: kronecker(-3,7) = +1, rhs = q^-3 [7]
    CHECK(sums::ramanujan_q_rhs(7).equals(Frac(qkit::q_integer(7).to_mpoly()).scaled(Rat(1), Q(-3))));
    CHECK_THROWS_AS(sums::ramanujan_q_lhs(3, ParamMode::sym()), std::invalid_argument);
}

TEST_CASE("thm15 sum, right side, and the exact collapse at the root") {
    CHECK(sums::thm15_lhs(1, ParamMode::sym()).equals(Frac::one()));
    CHECK(sums::thm15_rhs(1).equals(Frac::one()));
    CHECK(sums::thm15_rhs(3).equals(Frac(Rat(-1), Q(-2), MPoly::one(), {})));
    for (int64_t n : {3, 5}) CHECK(sums::thm15_lhs(n, ParamMode::sym()).equals(naive_thm15(n)));
    // a -> q^-3: the k=2 term vanishes and the sum collapses to -q^-2 exactly.
    CHECK(sums::thm15_lhs(3, ParamMode::power(+1, -3)).equals(sums::thm15_rhs(3)));
    CHECK_THROWS_AS(sums::thm15_lhs(2, ParamMode::sym()), std::invalid_argument);
}

TEST_CASE("thm13 at x = 0 with odd residue: the x-free sum vanishes at the roots") {
    // (n,d,r) = (3,2,1) has <-1/2>_3 = 1 odd, so the x = 0 congruence forces
    // the x-free sum itself to vanish at both specializations.
    SumCaseParams p{3, 2, 1, 0};
    Frac s = sums::thm13_side(p, +1).substitute(Var::x, Rat(0));
    CHECK(s.substitute(Var::a, SignedPower{+1, -3}).is_zero());
}

TEST_CASE("thm41 closed form is the little q-Legendre polynomial in x/q^2") {
    for (int64_t n : {1, 3, 5, 7}) {
        int64_t m = (n - 1) / 2;
        MPoly p = qkit::little_q_legendre(m, qkit::LegendreExpansion::standard, 2).cleared_num();
        CHECK(Frac(p.scale_var(Var::x, +1, -2)).equals(sums::thm41_rhs(n, ParamMode::sym())));
    }
}

TEST_CASE("thm41: specialization equals the closed form exactly") {
    for (int64_t n : {1, 3, 5, 7}) {
        Frac rhs = sums::thm41_rhs(n, ParamMode::sym());
        CHECK(sums::thm41_lhs(n, ParamMode::power(+1, -n), ParamMode::sym()).equals(rhs));
        CHECK(sums::thm41_lhs(n, ParamMode::power(+1, +n), ParamMode::sym()).equals(rhs));
    }
    // x -> 1 reduces the closed form to thm15's right side.
    CHECK(sums::thm41_rhs(3, ParamMode::one()).equals(sums::thm15_rhs(3)));
    for (int64_t n : {1, 3, 5, 7, 9})
        CHECK(sums::thm41_lhs(n, ParamMode::sym(), ParamMode::one())
                  .equals(sums::thm15_lhs(n, ParamMode::sym())));
}

TEST_CASE("thm42 right side specializations") {
    // x -> 1 of the rhs sum keeps only k = 0, recovering thm15's right side.
    for (int64_t n : {1, 3, 5}) {
        Frac r = sums::thm42_rhs(n, ParamMode::sym(), ParamMode::one());
        CHECK(r.equals(sums::thm15_rhs(n)));
    }
    // x -> 0 reduces to the cor4.3 sum with the (1-n^2)/4 prefactor.
    for (int64_t n : {1, 3, 5, 7, 9}) {
        Frac r = sums::thm42_rhs(n, ParamMode::sym(), ParamMode::sym()).substitute(Var::x, Rat(0));
        Rat c((n - 1) / 2 % 2 != 0 ? -1 : 1);
        Frac expect = sums::cor43_lhs(n, ParamMode::sym()).scaled(c, Q((1 - n * n) / 4));
        CHECK(r.equals(expect));
    }
}

TEST_CASE("thm44: shifted factorial sum at the root and validation") {
    CHECK(sums::thm44_lhs(1, 0, ParamMode::sym()).equals(Frac::one()));
    // s = 0 is the (n-1)/2 truncation of thm15's sum.
    for (int64_t n : {3, 5, 7}) {
        Frac expect;
        for (int64_t k = 0; k <= (n - 1) / 2; ++k) {
            Frac t = poch({+1, A + Q(1)}, 2, k) * poch({+1, Ai + Q(1)}, 2, k) *
                     inv_poch({+1, Q(2)}, 2, k) * inv_poch({+1, Q(2)}, 2, k);
            expect = expect + t;
        }
        CHECK(sums::thm44_lhs(n, 0, ParamMode::sym()).equals(expect));
    }
    // At a = q^-n the sum collapses to the right side exactly, for every s.
    for (int64_t n : {3, 5, 7})
        for (int64_t s = 0; s <= (n - 1) / 2; ++s)
            CHECK(sums::thm44_lhs(n, s, ParamMode::power(+1, -n)).equals(sums::thm15_rhs(n)));
    CHECK_THROWS_AS(sums::thm44_lhs(3, 2, ParamMode::sym()), std::invalid_argument);
}

TEST_CASE("identity (5.1) on the worked examples") {
    CHECK(sums::identity51_check(0, 0));
    CHECK(sums::identity51_check(1, 1));
    CHECK(sums::identity51_check(2, 3));
    CHECK_THROWS_AS(sums::identity51_check(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(sums::identity51_check(2, 5), std::invalid_argument);
}

TEST_CASE("thm46 sums, right sides, and exact collapse") {
    using sums::Thm46Variant;
    CHECK(sums::thm46_lhs(1, ParamMode::sym(), Thm46Variant::plus).equals(Frac::one()));
    CHECK(sums::thm46_rhs(1, Thm46Variant::minus).equals(Frac::one()));
    for (int64_t n : {3, 5}) {
        CHECK(sums::thm46_lhs(n, ParamMode::sym(), Thm46Variant::minus).equals(naive_thm46(n, +1)));
        CHECK(sums::thm46_lhs(n, ParamMode::sym(), Thm46Variant::plus).equals(naive_thm46(n, -1)));
    }
    // n=3, minus variant, a -> q^-3: 1 + (q^4 - 1) + 0 = q^4.
    CHECK(sums::thm46_lhs(3, ParamMode::power(+1, -3), Thm46Variant::minus)
              .equals(Frac(Rat(1), Q(4), MPoly::one(), {})));
    CHECK(sums::thm46_rhs(3, Thm46Variant::minus).equals(Frac(Rat(1), Q(4), MPoly::one(), {})));
    CHECK(sums::thm46_rhs(3, Thm46Variant::plus).equals(Frac(Rat(-1), Q(4), MPoly::one(), {})));
    // Plus variant collapses at a = -q^n as well.
    for (int64_t n : {3, 5, 7}) {
        Frac rhs = sums::thm46_rhs(n, Thm46Variant::plus);
        CHECK(sums::thm46_lhs(n, ParamMode::power(+1, -n), Thm46Variant::plus).equals(rhs));
        CHECK(sums::thm46_lhs(n, ParamMode::power(-1, +n), Thm46Variant::plus).equals(rhs));
    }
}

TEST_CASE("conj45 forms") {
    using sums::Conj45Form;
    CHECK(sums::conj45_lhs(1, Conj45Form::binomial).equals(Frac::one()));
    CHECK(sums::conj45_lhs(1, Conj45Form::pochhammer).equals(Frac::one()));

    // n = 3 binomial form, expanded by hand from the definition.
    Frac expect = Frac::one();
    {
        Frac t1 = Frac(qkit::qbinom(2, 1).to_mpoly()).scaled(Rat(1), Q(1)) *
                  inv_poch({-1, Q(1)}, 1, 1);
        Frac t2 = Frac(qkit::qbinom(4, 2).to_mpoly()).scaled(Rat(1), Q(2)) *
                  inv_poch({-1, Q(1)}, 1, 2);
        expect = expect + t1 + t2;
    }
    CHECK(sums::conj45_lhs(3, Conj45Form::binomial).equals(expect));

    // The pochhammer form (base q^2) is invariant under q -> -q.
    for (int64_t n = 1; n <= 9; n += 2) {
        Frac f = sums::conj45_lhs(n, Conj45Form::pochhammer);
        CHECK(f.equals(f.scale_var(Var::q, -1)));
    }
    CHECK(sums::conj45_expected(3, Conj45Form::binomial)
              .equals(Frac(Rat(-1), Q(2), MPoly::one(), {})));
}

TEST_CASE("lemma 3.1 sum: base cases and symmetry") {
    CHECK(sums::fn_lemma31(0).equals(Frac::one()));
    CHECK(sums::fn_lemma31(1).equals(Frac(MPoly::variable(Var::x))));
    // F_2 is even in x.
    Frac f2 = sums::fn_lemma31(2);
    CHECK(f2.equals(sums::fn_lemma31(2, -1)));
    for (int64_t n = 0; n <= 8; ++n) {
        Frac lhs = sums::fn_lemma31(n, +1);
        Frac rhs = sums::fn_lemma31(n, -1).scaled(Rat(n % 2 != 0 ? -1 : 1));
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("classical identity checks over the small grid") {
    using CI = sums::ClassicalIdentity;
    for (int64_t n = 0; n <= 8; ++n) {
        CHECK(sums::classical_identity_check(CI::q_chu_vandermonde, n));
        CHECK(sums::classical_identity_check(CI::q_pfaff_saalschutz, n));
        CHECK(sums::classical_identity_check(CI::andrews_q_watson, n));
        CHECK(sums::classical_identity_check(CI::q_gauss_terminating, n));
    }
    for (int64_t n = 0; n <= 10; ++n)
        CHECK(sums::classical_identity_check(CI::q_binomial_theorem, n));
}

TEST_CASE("integer sums") {
    CHECK(sums::integer_sum(sums::IntegerSumKind::rv, 3) == Rat(89, 64));
    CHECK(sums::integer_sum(sums::IntegerSumKind::sun_tauraso, 3, 1) == Rat(7, 2));
    CHECK_THROWS_AS(sums::integer_sum(sums::IntegerSumKind::rv, 4), std::invalid_argument);
    CHECK_THROWS_AS(sums::integer_sum(sums::IntegerSumKind::ram1a, 3), std::invalid_argument);
}
