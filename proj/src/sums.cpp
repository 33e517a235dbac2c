#include "qcong/sums.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qcong/errors.hpp"

namespace qcong::sums {

namespace {

using qkit::SignedMonoTerm;

Mono Q(int64_t e) { return Mono::q_power(e); }
const Mono A = Mono::of(Var::a);
const Mono Ai = Mono::of(Var::a, -1);
const Mono B = Mono::of(Var::b);
const Mono Bi = Mono::of(Var::b, -1);
const Mono X = Mono::of(Var::x);

// Apply a parameter mode to the first element of a q-shifted factorial.
SignedMonoTerm resolve(SignedMonoTerm t, Var v, const ParamMode& mode) {
    int64_t k = t.mono[v];
    if (k == 0 || mode.kind == ParamMode::Kind::symbolic) return t;
    t.mono[v] = 0;
    if (mode.kind == ParamMode::Kind::one) return t;
    if (mode.value.sign < 0 && (k % 2 != 0)) t.sign = -t.sign;
    t.mono[Var::q] += mode.value.exp * k;
    return t;
}

int64_t require_odd(int64_t n, const char* who) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": n must be a positive odd integer");
    return n;
}

// --- factored-term machinery ------------------------------------------------
//
// A summand is kept as coeff * mono * prod num / prod den with canonical
// binomial factors in multiset form, so term-ratio updates are multiset edits
// and the common denominator of a sum is a multiset union. Nothing is
// expanded until a term is folded into the running numerator.

struct PolyLess {
    bool operator()(const MPoly& l, const MPoly& r) const {
        return l.compare(r) == std::strong_ordering::less;
    }
};
using FactorBag = std::map<MPoly, int, PolyLess>;

struct FactoredTerm {
    Rat coeff{1};
    Mono mono{};
    FactorBag num, den;
    bool zero = false;

    void mul_num(const MPoly& f) {
        if (zero) return;
        if (f.is_zero()) {
            zero = true;
            return;
        }
        UnitNormal un = f.unit_normal();
        coeff *= un.content;
        mono = mono + un.shift;
        if (un.poly.is_one()) return;
        if (auto it = den.find(un.poly); it != den.end()) {
            if (--(it->second) == 0) den.erase(it);
            return;
        }
        ++num[un.poly];
    }

    void mul_den(const MPoly& f) {
        if (zero) return;
        if (f.is_zero()) throw denominator_vanishes("summand denominator factor vanishes");
        UnitNormal un = f.unit_normal();
        coeff /= un.content;
        mono = mono - un.shift;
        if (un.poly.is_one()) return;
        if (auto it = num.find(un.poly); it != num.end()) {
            if (--(it->second) == 0) num.erase(it);
            return;
        }
        ++den[un.poly];
    }
};

struct SumAccum {
    FactorBag den;
    MPoly num;

    void add(const FactoredTerm& t, MPoly extra) {
        if (t.zero || extra.is_zero()) return;
        for (const auto& [f, m] : t.den) {
            int& have = den[f];
            for (int i = have; i < m; ++i) num = num * f;
            have = std::max(have, m);
        }
        extra.mul_term(t.coeff, t.mono);
        for (const auto& [f, m] : t.num)
            for (int i = 0; i < m; ++i) extra = extra * f;
        for (const auto& [f, m] : den) {
            auto it = t.den.find(f);
            int have = it == t.den.end() ? 0 : it->second;
            for (int i = have; i < m; ++i) extra = extra * f;
        }
        num += extra;
    }

    Frac finish(Rat c = Rat(1), Mono m = Mono::unit()) && {
        std::vector<Frac::DenFactor> d(den.begin(), den.end());
        return Frac(std::move(c), m, std::move(num), std::move(d));
    }
};

// One q-shifted factorial of a summand: factors j in [0, speed*k + offset)
// at summation index k, each factor being 1 - first*q^(j*step).
struct Column {
    SignedMonoTerm first;
    int64_t step = 1;
    int64_t offset = 0;
    int64_t speed = 1;
};

MPoly column_factor(const Column& c, int64_t j) {
    return MPoly::one() - MPoly(Rat(c.first.sign), c.first.mono + Q(j * c.step));
}

// Incremental term-ratio evaluation of a truncated sum: term_{k+1} = term_k *
// ratio, the ratio being the newly appended column factors times the argument
// step. `extra` supplies a per-term polynomial multiplier (q-integers,
// q-binomial coefficients) that is not part of the running product.
struct SumRunner {
    std::vector<Column> num_cols, den_cols;
    Rat init_coeff{1};
    std::function<SignedMonoTerm(int64_t)> step_arg;        // k -> factor for k -> k+1
    std::function<MPoly(int64_t)> extra;                    // k -> per-term multiplier
    std::function<void(FactoredTerm&, int64_t)> init_hook;  // k = 0 adjustments
    std::function<void(FactoredTerm&, int64_t)> step_hook;  // applied entering k >= 1

    Frac run(int64_t k_lo, int64_t k_hi, Rat unit_c = Rat(1), Mono unit_m = Mono::unit()) const {
        FactoredTerm t;
        t.coeff = init_coeff;
        for (const auto& c : num_cols)
            for (int64_t j = 0; j < c.offset; ++j) t.mul_num(column_factor(c, j));
        for (const auto& c : den_cols)
            for (int64_t j = 0; j < c.offset; ++j) t.mul_den(column_factor(c, j));
        if (init_hook) init_hook(t, 0);

        SumAccum acc;
        for (int64_t k = 0; k <= k_hi && !t.zero; ++k) {
            if (k > 0) {
                for (const auto& c : num_cols)
                    for (int64_t j = c.speed * (k - 1) + c.offset; j < c.speed * k + c.offset; ++j)
                        if (j >= 0) t.mul_num(column_factor(c, j));
                for (const auto& c : den_cols)
                    for (int64_t j = c.speed * (k - 1) + c.offset; j < c.speed * k + c.offset; ++j)
                        if (j >= 0) t.mul_den(column_factor(c, j));
                if (step_arg) {
                    SignedMonoTerm s = step_arg(k - 1);
                    if (s.sign < 0) t.coeff = -t.coeff;
                    t.mono = t.mono + s.mono;
                }
                if (step_hook) step_hook(t, k);
            }
            if (k >= k_lo) acc.add(t, extra ? extra(k) : MPoly::one());
        }
        return std::move(acc).finish(std::move(unit_c), unit_m);
    }
};

MPoly one_plus_qpow(int64_t e) { return MPoly::one() + MPoly(Rat(1), Q(e)); }

}  // namespace

Frac phi_truncated(const PhiSeriesSpec& spec) {
    if (spec.truncation < 0) throw std::invalid_argument("phi_truncated: negative truncation");
    if (spec.base_exp < 1) throw std::invalid_argument("phi_truncated: base exponent must be >= 1");
    SumRunner r;
    for (const auto& u : spec.upper) r.num_cols.push_back({u, spec.base_exp});
    r.den_cols.push_back({{+1, Q(spec.base_exp)}, spec.base_exp});  // (q^d;q^d)_k
    for (const auto& l : spec.lower) r.den_cols.push_back({l, spec.base_exp});
    r.step_arg = [&spec](int64_t) { return spec.argument; };
    return r.run(0, spec.truncation);
}

Frac thm11_lhs(const SumCaseParams& p) {
    require_odd(p.n, "thm11_lhs");
    if (p.d < 1 || p.r < 1) throw std::invalid_argument("thm11_lhs: d and r must be positive");
    if (std::gcd(p.d, p.n) != 1) throw std::invalid_argument("thm11_lhs: gcd(d, n) must be 1");
    int64_t rho = qkit::least_nonneg_residue(Rat(-p.r, p.d), p.n);
    if (p.s < 0 || p.s > p.n - 1 || (p.s - rho - 1) % 2 != 0)
        throw std::invalid_argument(
            "thm11_lhs: s must satisfy 0 <= s <= n-1 and s == <-r/d>_n + 1 (mod 2)");

    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(p.r)}, Var::a, p.a), p.d},
        {resolve({+1, B + Q(p.d - p.r)}, Var::b, p.b), p.d},
        {{+1, Q(p.d)}, 2 * p.d},
    };
    run.den_cols = {
        {{+1, Q(p.d)}, p.d, -p.s},
        {{+1, Q(p.d)}, p.d, p.s},
        {resolve(resolve({+1, A + B + Q(2 * p.d)}, Var::a, p.a), Var::b, p.b), 2 * p.d},
    };
    run.step_arg = [d = p.d](int64_t) { return SignedMonoTerm{+1, Q(d)}; };
    return run.run(p.s, p.n - 1);
}

Frac thm13_side(const SumCaseParams& p, int x_sign) {
    require_odd(p.n, "thm13_side");
    if (p.d < 1 || p.r < 1) throw std::invalid_argument("thm13_side: d and r must be positive");
    if (std::gcd(p.d, p.n) != 1) throw std::invalid_argument("thm13_side: gcd(d, n) must be 1");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(p.r)}, Var::a, p.a), p.d},
        {resolve({+1, B + Q(p.d - p.r)}, Var::b, p.b), p.d},
        {resolve({x_sign, X}, Var::x, p.x), p.d},
    };
    run.den_cols = {
        {{+1, Q(p.d)}, p.d},
        {resolve(resolve({+1, A + B + Q(2 * p.d)}, Var::a, p.a), Var::b, p.b), 2 * p.d},
    };
    run.step_arg = [d = p.d](int64_t) { return SignedMonoTerm{+1, Q(d)}; };
    return run.run(0, p.n - 1);
}

Frac cor14_lhs(const SumCaseParams& p) {
    require_odd(p.n, "cor14_lhs");
    if (p.d < 1 || p.r < 1) throw std::invalid_argument("cor14_lhs: d and r must be positive");
    if (std::gcd(p.d, p.n) != 1) throw std::invalid_argument("cor14_lhs: gcd(d, n) must be 1");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(p.r)}, Var::a, p.a), p.d},
        {resolve({+1, Ai + Q(p.d - p.r)}, Var::a, p.a), p.d},
    };
    run.den_cols = {
        {{+1, Q(p.d)}, p.d},
        {{+1, Q(p.d)}, p.d},
    };
    run.init_coeff = Rat(2);
    run.init_hook = [](FactoredTerm& t, int64_t) { t.mul_den(one_plus_qpow(0)); };
    run.step_hook = [d = p.d](FactoredTerm& t, int64_t k) {
        t.mul_num(one_plus_qpow(d * (k - 1)));
        t.mul_den(one_plus_qpow(d * k));
    };
    run.step_arg = [d = p.d](int64_t) { return SignedMonoTerm{+1, Q(d)}; };
    return run.run(0, p.n - 1);
}

Frac cor14_rhs(const SumCaseParams& p) {
    require_odd(p.n, "cor14_rhs");
    if (std::gcd(p.d, p.n) != 1) throw std::invalid_argument("cor14_rhs: gcd(d, n) must be 1");
    int64_t rho = qkit::least_nonneg_residue(Rat(-p.r, p.d), p.n);
    return Frac(Rat((rho % 2 != 0) ? -1 : 1));
}

Frac ramanujan_q_lhs(int64_t n, ParamMode a) {
    if (n < 1 || std::gcd(n, static_cast<int64_t>(6)) != 1)
        throw std::invalid_argument("ramanujan_q_lhs: n must be coprime to 6");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2},
        {{+1, Q(1)}, 2, 0, 2},  // (q;q^2)_{2k}
    };
    run.den_cols = {
        {{+1, Q(2)}, 2, 0, 2},  // (q^2;q^2)_{2k}
        {resolve({+1, A + Q(6)}, Var::a, a), 6},
        {resolve({+1, Ai + Q(6)}, Var::a, a), 6},
    };
    run.step_arg = [](int64_t k) { return SignedMonoTerm{+1, Q(4 * k + 2)}; };  // q^{2k^2}
    run.extra = [](int64_t k) { return qkit::q_integer(8 * k + 1).to_mpoly(); };
    return run.run(0, n - 1);
}

Frac ramanujan_q_rhs(int64_t n) {
    if (n < 1 || std::gcd(n, static_cast<int64_t>(6)) != 1)
        throw std::invalid_argument("ramanujan_q_rhs: n must be coprime to 6");
    return Frac(qkit::q_integer(n).to_mpoly())
        .scaled(Rat(qkit::kronecker(-3, n)), Q(-(n - 1) / 2));
}

Frac thm15_lhs(int64_t n, ParamMode a) {
    require_odd(n, "thm15_lhs");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2},
    };
    run.den_cols = {{{+1, Q(2)}, 2}, {{+1, Q(2)}, 2}};
    return run.run(0, n - 1);
}

Frac thm15_rhs(int64_t n) {
    require_odd(n, "thm15_rhs");
    return Frac(Rat((n - 1) / 2 % 2 != 0 ? -1 : 1), Q((1 - n * n) / 4), MPoly::one(), {});
}

Frac thm41_lhs(int64_t n, ParamMode a, ParamMode x) {
    require_odd(n, "thm41_lhs");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2},
    };
    run.den_cols = {{{+1, Q(2)}, 2}, {{+1, Q(2)}, 2}};
    run.step_arg = [arg = resolve({+1, X}, Var::x, x)](int64_t) { return arg; };
    return run.run(0, n - 1);
}

Frac thm41_rhs(int64_t n, ParamMode x) {
    require_odd(n, "thm41_rhs");
    int64_t m = (n - 1) / 2;
    SignedMonoTerm xr = resolve({+1, X}, Var::x, x);
    MPoly sum;
    for (int64_t k = 0; k <= m; ++k) {
        UPoly b = qkit::qbinom(m, k, 2);
        MPoly term = (b * b).to_mpoly();
        // (x; q^2)_{m-k}, with x resolved by its mode
        term = term * qkit::pochhammer({xr, 2, m - k}).cleared_num();
        Rat c((k % 2 != 0) ? -1 : 1);
        if (xr.sign < 0 && (k % 2 != 0)) c = -c;
        Mono mono = Q(k * k - n * k);
        for (int i = 0; i < 4; ++i) mono.e[i] += xr.mono.e[i] * k;
        term.mul_term(c, mono);
        sum += term;
    }
    return Frac(std::move(sum));
}

Frac thm42_rhs(int64_t n, ParamMode a, ParamMode x) {
    require_odd(n, "thm42_rhs");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2},
        {resolve({+1, X}, Var::x, x), 2},
    };
    run.den_cols = {{{+1, Q(2)}, 2}, {{+1, Q(2)}, 2}};
    run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(2)}; };
    return run.run(0, n - 1, Rat((n - 1) / 2 % 2 != 0 ? -1 : 1), Q((1 - n * n) / 4));
}

Frac cor43_lhs(int64_t n, ParamMode a) {
    require_odd(n, "cor43_lhs");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2},
    };
    run.den_cols = {{{+1, Q(2)}, 2}, {{+1, Q(2)}, 2}};
    run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(2)}; };
    return run.run(0, n - 1);
}

Frac cor43_rhs(int64_t n) {
    require_odd(n, "cor43_rhs");
    return Frac(Rat((n - 1) / 2 % 2 != 0 ? -1 : 1), Q((n * n - 1) / 4), MPoly::one(), {});
}

Frac thm44_lhs(int64_t n, int64_t s, ParamMode a) {
    require_odd(n, "thm44_lhs");
    if (s < 0 || s > (n - 1) / 2)
        throw std::invalid_argument("thm44_lhs: s must satisfy 0 <= s <= (n-1)/2");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({+1, Ai + Q(1)}, Var::a, a), 2, s},
    };
    run.den_cols = {{{+1, Q(2)}, 2}, {{+1, Q(2)}, 2, s}};
    return run.run(0, (n - 1) / 2);
}

bool identity51_check(int64_t N, int64_t M) {
    if (N < 0 || M < N || M > 2 * N)
        throw std::invalid_argument("identity51_check: need 0 <= N <= M <= 2N");
    UPoly sum;
    for (int64_t k = 0; k <= N; ++k) {
        UPoly t = qkit::qbinom(N, k) * qkit::qbinom(M + k, N);
        sum = sum + t.mul_term(Rat((k % 2 != 0) ? -1 : 1), k * (k - 1) / 2 - N * k);
    }
    UPoly rhs = UPoly::monomial(Rat((N % 2 != 0) ? -1 : 1), -N * (N + 1) / 2);
    return sum == rhs;
}

Frac thm46_lhs(int64_t n, ParamMode a, Thm46Variant v) {
    require_odd(n, "thm46_lhs");
    SumRunner run;
    run.num_cols = {
        {resolve({+1, A + Q(1)}, Var::a, a), 2},
        {resolve({v == Thm46Variant::plus ? -1 : +1, Ai + Q(1)}, Var::a, a), 2},
    };
    run.den_cols = {{{+1, Q(2)}, 2}};
    run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(2)}; };
    return run.run(0, n - 1);
}

Frac thm46_rhs(int64_t n, Thm46Variant v) {
    require_odd(n, "thm46_rhs");
    Rat c(v == Thm46Variant::plus && (n - 1) / 2 % 2 != 0 ? -1 : 1);
    return Frac(std::move(c), Q((n * n - 1) / 2), MPoly::one(), {});
}

Frac conj45_lhs(int64_t n, Conj45Form form) {
    require_odd(n, "conj45_lhs");
    SumRunner run;
    if (form == Conj45Form::binomial) {
        run.den_cols = {{{-1, Q(1)}, 1}};  // (-q;q)_k
        run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(1)}; };
        run.extra = [](int64_t k) { return qkit::qbinom(2 * k, k).to_mpoly(); };
    } else {
        run.num_cols = {{{+1, Q(1)}, 2}, {{-1, Q(1)}, 2}};
        run.den_cols = {{{+1, Q(2)}, 2}};
        run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(2)}; };
    }
    return run.run(0, n - 1);
}

Frac conj45_expected(int64_t n, Conj45Form form) {
    require_odd(n, "conj45_expected");
    int64_t e = form == Conj45Form::binomial ? (n * n - 1) / 4 : (n * n - 1) / 2;
    return Frac(Rat((n - 1) / 2 % 2 != 0 ? -1 : 1), Q(e), MPoly::one(), {});
}

Frac fn_lemma31(int64_t n, int x_sign) {
    if (n < 0) throw std::invalid_argument("fn_lemma31: n must be >= 0");
    SumRunner run;
    run.num_cols = {
        {{+1, Q(-n)}, 1},
        {{+1, B}, 1},
        {{x_sign, X}, 1},
    };
    run.den_cols = {
        {{+1, Q(1)}, 1},
        {{+1, B + Q(1 - n)}, 2},
    };
    run.step_arg = [](int64_t) { return SignedMonoTerm{+1, Q(1)}; };
    return run.run(0, n);
}

namespace {

bool check_chu_vandermonde(int64_t n) {
    PhiSeriesSpec spec;
    spec.upper = {{+1, A}, {+1, Q(-n)}};
    spec.lower = {{+1, B}};
    spec.argument = {+1, Q(1)};
    spec.truncation = n;
    Frac lhs = phi_truncated(spec);
    // (b/a;q)_n a^n / (b;q)_n
    Frac rhs = qkit::pochhammer({{+1, B + Ai}, 1, n}).scaled(Rat(1), Mono::of(Var::a, n));
    std::vector<Frac::DenFactor> den;
    for (int64_t j = 0; j < n; ++j)
        den.emplace_back(MPoly::one() - MPoly(Rat(1), B + Q(j)), 1);
    rhs = rhs * Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
    return lhs.equals(rhs);
}

bool check_pfaff_saalschutz(int64_t n) {
    PhiSeriesSpec spec;
    spec.upper = {{+1, Q(-n)}, {+1, A}, {+1, B}};
    spec.lower = {{+1, X}, {+1, A + B - X + Q(1 - n)}};
    spec.argument = {+1, Q(1)};
    spec.truncation = n;
    Frac lhs = phi_truncated(spec);
    Frac rhs = qkit::pochhammer({{+1, X + Ai}, 1, n}) * qkit::pochhammer({{+1, X + Bi}, 1, n});
    std::vector<Frac::DenFactor> den;
    for (int64_t j = 0; j < n; ++j) {
        den.emplace_back(MPoly::one() - MPoly(Rat(1), X + Q(j)), 1);
        den.emplace_back(MPoly::one() - MPoly(Rat(1), X + Ai + Bi + Q(j)), 1);
    }
    rhs = rhs * Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
    return lhs.equals(rhs);
}

bool check_andrews_q_watson(int64_t n) {
    PhiSeriesSpec spec;
    spec.upper = {{+1, Q(-n)}, {+1, A + A + Q(n + 1)}, {+1, B}, {-1, B}};
    spec.lower = {{+1, A + Q(1)}, {-1, A + Q(1)}, {+1, B + B}};
    spec.argument = {+1, Q(1)};
    spec.truncation = n;
    Frac lhs = phi_truncated(spec);
    if (n % 2 != 0) return lhs.is_zero();
    int64_t m = n / 2;
    // b^n (q;q^2)_m (a^2 q^2 / b^2;q^2)_m / [ (a^2 q^2;q^2)_m (b^2 q;q^2)_m ]
    Frac rhs = qkit::pochhammer({{+1, Q(1)}, 2, m}) *
               qkit::pochhammer({{+1, A + A + Bi + Bi + Q(2)}, 2, m});
    rhs = rhs.scaled(Rat(1), Mono::of(Var::b, n));
    std::vector<Frac::DenFactor> den;
    for (int64_t j = 0; j < m; ++j) {
        den.emplace_back(MPoly::one() - MPoly(Rat(1), A + A + Q(2 + 2 * j)), 1);
        den.emplace_back(MPoly::one() - MPoly(Rat(1), B + B + Q(1 + 2 * j)), 1);
    }
    rhs = rhs * Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
    return lhs.equals(rhs);
}

bool check_q_gauss_terminating(int64_t n) {
    for (int64_t j = 0; j <= n; ++j) {
        SumRunner run;
        run.num_cols = {
            {{+1, Q(j - n)}, 1},
            {{+1, B + Q(j)}, 1},
        };
        run.den_cols = {
            {{+1, Q(1)}, 1},
            {{+1, B + Q(2 * j + 1 - n)}, 2},
        };
        run.step_arg = [](int64_t k) { return SignedMonoTerm{+1, Q(k + 1)}; };  // q^{k(k+1)/2}
        Frac lhs = run.run(0, n - j);
        Frac rhs;
        if ((n - j) % 2 == 0) {
            int64_t m = (n - j) / 2;
            rhs = qkit::pochhammer({{+1, Q(j + 1 - n)}, 2, m});
            std::vector<Frac::DenFactor> den;
            for (int64_t i = 0; i < m; ++i)
                den.emplace_back(MPoly::one() - MPoly(Rat(1), B + Q(2 * j + 1 - n + 2 * i)), 1);
            rhs = rhs * Frac(Rat(1), Mono::unit(), MPoly::one(), std::move(den));
        }
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

bool check_q_binomial_theorem(int64_t n) {
    MPoly lhs = qkit::pochhammer({{+1, X}, 1, n}).cleared_num();
    MPoly rhs;
    for (int64_t k = 0; k <= n; ++k) {
        MPoly t = qkit::qbinom(n, k).to_mpoly();
        t.mul_term(Rat((k % 2 != 0) ? -1 : 1), Q(k * (k - 1) / 2) + Mono::of(Var::x, k));
        rhs += t;
    }
    return lhs == rhs;
}

}  // namespace

bool classical_identity_check(ClassicalIdentity which, int64_t n) {
    if (n < 0) throw std::invalid_argument("classical_identity_check: n must be >= 0");
    switch (which) {
        case ClassicalIdentity::q_chu_vandermonde: return check_chu_vandermonde(n);
        case ClassicalIdentity::q_pfaff_saalschutz: return check_pfaff_saalschutz(n);
        case ClassicalIdentity::andrews_q_watson: return check_andrews_q_watson(n);
        case ClassicalIdentity::q_gauss_terminating: return check_q_gauss_terminating(n);
        case ClassicalIdentity::q_binomial_theorem: return check_q_binomial_theorem(n);
    }
    throw std::invalid_argument("classical_identity_check: unknown identity");
}

Rat integer_sum(IntegerSumKind kind, int64_t p, int64_t extra) {
    if (p < 3 || p % 2 == 0 || !qkit::is_prime(p))
        throw std::invalid_argument("integer_sum: p must be an odd prime");
    Rat sum;
    switch (kind) {
        case IntegerSumKind::rv:
            for (int64_t k = 0; k < p; ++k) {
                Rat b = Rat::binomial(static_cast<uint64_t>(2 * k), static_cast<uint64_t>(k));
                sum += b * b / Rat::int_pow(16, static_cast<uint64_t>(k));
            }
            return sum;
        case IntegerSumKind::ram1a:
            if (p <= 3) throw std::invalid_argument("integer_sum: ram1a needs p > 3");
            for (int64_t k = 0; k < p; ++k) {
                Rat b = Rat::binomial(static_cast<uint64_t>(2 * k), static_cast<uint64_t>(k));
                Rat c = Rat::binomial(static_cast<uint64_t>(4 * k), static_cast<uint64_t>(2 * k));
                Rat num = c * b * b * Rat(8 * k + 1);
                sum += num / (Rat::int_pow(2, static_cast<uint64_t>(8 * k)) *
                              Rat::int_pow(3, static_cast<uint64_t>(2 * k)));
            }
            return sum;
        case IntegerSumKind::sun_tauraso: {
            if (extra < 1) throw std::invalid_argument("integer_sum: exponent must be >= 1");
            int64_t limit = 1;
            for (int64_t i = 0; i < extra; ++i) {
                limit *= p;
                if (limit > 2'000'000) throw std::invalid_argument("integer_sum: p^r too large");
            }
            for (int64_t k = 0; k < limit; ++k)
                sum += Rat::binomial(static_cast<uint64_t>(2 * k), static_cast<uint64_t>(k)) /
                       Rat::int_pow(2, static_cast<uint64_t>(k));
            return sum;
        }
    }
    throw std::invalid_argument("integer_sum: unknown kind");
}

}  // namespace qcong::sums
