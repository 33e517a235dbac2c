#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qcong/frac.hpp"
#include "qcong/rat.hpp"

namespace qcong::congruence {

// One factor of a verification modulus. The three shapes match the moduli
// that occur: parameter-linear binomials (checked by root specialization),
// cyclotomic powers (checked by quotient-ring divisibility after parameters
// are sent to 1), and integer prime powers (checked on exact rationals).
struct Factor {
    enum class Kind { param_linear, cyclotomic_power, integer_prime_power };
    enum class Form { one_minus_vq, v_minus_q, v_plus_q };

    Kind kind = Kind::param_linear;
    Var param = Var::a;
    SignedPower root{};  // param_linear vanishes at param = root
    Form form = Form::one_minus_vq;
    int64_t index = 0;  // cyclotomic index n, or the prime p
    int64_t power = 1;

    // (1 - v*q^e), vanishing at v = q^{-e}.
    static Factor one_minus(Var v, int64_t e) {
        return {Kind::param_linear, v, {+1, -e}, Form::one_minus_vq, 0, 1};
    }
    // (v - q^e), vanishing at v = q^{e}.
    static Factor minus_q(Var v, int64_t e) {
        return {Kind::param_linear, v, {+1, e}, Form::v_minus_q, 0, 1};
    }
    // (v + q^e), vanishing at v = -q^{e}.
    static Factor plus_q(Var v, int64_t e) {
        return {Kind::param_linear, v, {-1, e}, Form::v_plus_q, 0, 1};
    }
    static Factor cyclotomic(int64_t n, int64_t k = 1) {
        return {Kind::cyclotomic_power, Var::q, {}, Form::one_minus_vq, n, k};
    }
    static Factor integer(int64_t p, int64_t k) {
        return {Kind::integer_prime_power, Var::q, {}, Form::one_minus_vq, p, k};
    }

    // param_linear only: the factor as the polynomial (param - sign*q^exp).
    MPoly binomial_form() const;
    std::string str() const;
};

// Product of pairwise coprime factors: any number of parameter-linear
// binomials (distinct roots or distinct parameters), at most one cyclotomic
// power and at most one integer prime power. Violations throw.
struct Modulus {
    std::vector<Factor> factors;
    Modulus() = default;
    Modulus(std::initializer_list<Factor> fs) : Modulus(std::vector<Factor>(fs)) {}
    explicit Modulus(std::vector<Factor> fs);
    std::string str() const;  // "exact" for the empty modulus (plain equality)
};

enum class Status { verified, failed, skipped };
std::string status_str(Status s);

struct VerifyOutcome {
    Status status = Status::verified;
    std::string reason;   // skipped: why the check could not be decided
    std::string witness;  // failed: canonical text of the nonzero residual
    std::vector<std::string> strategy;

    static VerifyOutcome ok(std::string note);
    static VerifyOutcome fail(std::string note, std::string witness);
    static VerifyOutcome skip(std::string note, std::string reason);
    // Fail-closed aggregation: failed beats skipped beats verified.
    void merge(VerifyOutcome other);
};

// Substitutes the factor's root into lhs - rhs; Verified iff the result is
// exactly zero. A vanishing denominator factor yields Skipped, never Verified.
VerifyOutcome check_param_factor(const Frac& lhs, const Frac& rhs, const Factor& f);

// Quotient-ring check: lhs - rhs (a q-only fraction) must have numerator
// divisible by Phi_n(q)^k once the denominator's Phi_n-content is cancelled;
// a denominator not coprime to Phi_n after that reduction yields Skipped.
// Throws non_univariate if parameters remain.
VerifyOutcome check_cyclotomic(const Frac& lhs, const Frac& rhs, int64_t n, int64_t k);

// value == expected (mod p^k) in the localization of the integers at p;
// Skipped when the denominator of value is divisible by p.
VerifyOutcome check_integer_mod(const Rat& value, const mpz_class& expected, int64_t p,
                                int64_t k);

// Runs every factor check of m against lhs - rhs: parameter-linear factors
// with the parameters symbolic, then cyclotomic factors after substituting
// every remaining parameter by 1. The empty modulus means exact equality.
VerifyOutcome verify(const Frac& lhs, const Frac& rhs, const Modulus& m);

}  // namespace qcong::congruence
