#include "qcong/congruence.hpp"

#include <stdexcept>

#include "qcong/errors.hpp"
#include "qcong/qkit.hpp"

namespace qcong::congruence {

namespace {

constexpr std::size_t kWitnessCap = 400;

std::string capped(std::string s) {
    if (s.size() > kWitnessCap) {
        s.resize(kWitnessCap);
        s += " ...";
    }
    return s;
}

std::string var_name(Var v) { return std::string(1, kVarNames[static_cast<int>(v)]); }

}  // namespace

MPoly Factor::binomial_form() const {
    if (kind != Kind::param_linear)
        throw std::logic_error("Factor: binomial_form is only defined for param_linear");
    return MPoly::variable(param) - MPoly(Rat(root.sign), Mono::q_power(root.exp));
}

std::string Factor::str() const {
    switch (kind) {
        case Kind::param_linear: {
            std::string v = var_name(param);
            auto qpow = [](int64_t e) {
                return e == 1 ? std::string("q") : "q^" + std::to_string(e);
            };
            if (form == Form::one_minus_vq) {
                int64_t e = -root.exp;
                std::string q = e == 0 ? "" : "*" + qpow(e);
                return "(1" + std::string(root.sign > 0 ? "-" : "+") + v + q + ")";
            }
            std::string op = form == Form::v_minus_q ? "-" : "+";
            std::string q = root.exp == 0 ? "1" : qpow(root.exp);
            return "(" + v + op + q + ")";
        }
        case Kind::cyclotomic_power: {
            std::string s = "Phi_" + std::to_string(index) + "(q)";
            if (power != 1) s += "^" + std::to_string(power);
            return s;
        }
        case Kind::integer_prime_power:
            return std::to_string(index) + "^" + std::to_string(power);
    }
    return "?";
}

Modulus::Modulus(std::vector<Factor> fs) : factors(std::move(fs)) {
    int cyclo = 0, integer = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Factor& f = factors[i];
        switch (f.kind) {
            case Factor::Kind::cyclotomic_power:
                ++cyclo;
                break;
            case Factor::Kind::integer_prime_power:
                ++integer;
                break;
            case Factor::Kind::param_linear:
                for (std::size_t j = 0; j < i; ++j) {
                    const Factor& g = factors[j];
                    if (g.kind != Factor::Kind::param_linear) continue;
                    if (g.param == f.param && g.root.sign == f.root.sign &&
                        g.root.exp == f.root.exp)
                        throw std::invalid_argument(
                            "Modulus: parameter-linear factors must be pairwise coprime");
                }
                break;
        }
    }
    if (cyclo > 1) throw std::invalid_argument("Modulus: at most one cyclotomic power");
    if (integer > 1) throw std::invalid_argument("Modulus: at most one integer prime power");
}

std::string Modulus::str() const {
    if (factors.empty()) return "exact";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f.str();
    }
    return s;
}

std::string status_str(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
    }
    return "?";
}

VerifyOutcome VerifyOutcome::ok(std::string note) {
    VerifyOutcome o;
    o.strategy.push_back(std::move(note));
    return o;
}

VerifyOutcome VerifyOutcome::fail(std::string note, std::string witness) {
    VerifyOutcome o;
    o.status = Status::failed;
    o.witness = capped(std::move(witness));
    o.strategy.push_back(std::move(note));
    return o;
}

VerifyOutcome VerifyOutcome::skip(std::string note, std::string reason) {
    VerifyOutcome o;
    o.status = Status::skipped;
    o.reason = std::move(reason);
    o.strategy.push_back(std::move(note));
    return o;
}

void VerifyOutcome::merge(VerifyOutcome other) {
    if (other.status == Status::failed ||
        (other.status == Status::skipped && status == Status::verified))
        status = other.status;
    if (witness.empty()) witness = std::move(other.witness);
    if (reason.empty()) reason = std::move(other.reason);
    for (auto& s : other.strategy) strategy.push_back(std::move(s));
}

namespace {

VerifyOutcome check_param_factor_diff(const Frac& diff, const Factor& f) {
    std::string note = f.str() + " via " + var_name(f.param) + " = " + f.root.str();
    try {
        Frac sub = diff.substitute(f.param, f.root);
        if (sub.is_zero()) return VerifyOutcome::ok(note + ": zero");
        return VerifyOutcome::fail(note + ": nonzero", sub.str());
    } catch (const denominator_vanishes& e) {
        return VerifyOutcome::skip(note + ": denominator vanishes", e.what());
    }
}

VerifyOutcome check_cyclotomic_diff(const Frac& diff, int64_t n, int64_t k, std::string note) {
    auto [num, den, shift] = diff.to_upoly();
    if (num.is_zero()) return VerifyOutcome::ok(note + ": zero");
    const UPoly& phi = qkit::cyclotomic(n);

    // q^shift is a unit modulo Phi_n. Cancel the denominator's Phi_n-content
    // against the numerator; what remains of the denominator must be coprime.
    int64_t dord = 0;
    while (auto q = den.exact_div(phi)) {
        den = std::move(*q);
        ++dord;
    }
    int64_t nord = 0;
    while (nord < dord + k) {
        auto q = num.exact_div(phi);
        if (!q) break;
        num = std::move(*q);
        ++nord;
    }
    if (nord < dord)
        return VerifyOutcome::skip(note + ": denominator not coprime",
                                   "denominator carries Phi_" + std::to_string(n) +
                                       "^" + std::to_string(dord - nord) +
                                       " beyond the numerator");
    if (nord >= dord + k)
        return VerifyOutcome::ok(note + ": divisible, valuation " + std::to_string(nord - dord));
    auto [q, rem] = UPoly::divrem(num, phi);
    return VerifyOutcome::fail(
        note + ": valuation " + std::to_string(nord - dord) + " < " + std::to_string(k),
        "residue mod Phi_" + std::to_string(n) + ": " + rem.str());
}

}  // namespace

VerifyOutcome check_param_factor(const Frac& lhs, const Frac& rhs, const Factor& f) {
    if (f.kind != Factor::Kind::param_linear)
        throw std::invalid_argument("check_param_factor: factor is not parameter-linear");
    return check_param_factor_diff(lhs - rhs, f);
}

VerifyOutcome check_cyclotomic(const Frac& lhs, const Frac& rhs, int64_t n, int64_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("check_cyclotomic: need n >= 1, k >= 1");
    return check_cyclotomic_diff(lhs - rhs, n, k,
                                 "Phi_" + std::to_string(n) + "^" + std::to_string(k));
}

VerifyOutcome check_integer_mod(const Rat& value, const mpz_class& expected, int64_t p,
                                int64_t k) {
    if (p < 2 || k < 1) throw std::invalid_argument("check_integer_mod: need p >= 2, k >= 1");
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    std::string note = "mod " + std::to_string(p) + "^" + std::to_string(k);
    mpz_class den = value.den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0)
        return VerifyOutcome::skip(note + ": denominator not invertible",
                                   "denominator " + den.get_str() + " shares a factor with " +
                                       std::to_string(p));
    mpz_class got = value.num() * inv;
    mpz_mod(got.get_mpz_t(), got.get_mpz_t(), pk.get_mpz_t());
    mpz_class want = expected;
    mpz_mod(want.get_mpz_t(), want.get_mpz_t(), pk.get_mpz_t());
    if (got == want) return VerifyOutcome::ok(note + ": residue " + got.get_str());
    return VerifyOutcome::fail(note + ": mismatch",
                               "residue " + got.get_str() + ", expected " + want.get_str());
}

VerifyOutcome verify(const Frac& lhs, const Frac& rhs, const Modulus& m) {
    Frac diff = lhs - rhs;

    if (m.factors.empty()) {
        if (diff.is_zero()) return VerifyOutcome::ok("exact equality: zero difference");
        return VerifyOutcome::fail("exact equality: nonzero difference", diff.str());
    }

    VerifyOutcome out;
    out.strategy.clear();
    bool first = true;
    for (const Factor& f : m.factors) {
        switch (f.kind) {
            case Factor::Kind::param_linear: {
                auto sub = check_param_factor_diff(diff, f);
                if (first) {
                    out = std::move(sub);
                    first = false;
                } else {
                    out.merge(std::move(sub));
                }
                break;
            }
            case Factor::Kind::cyclotomic_power: {
                // Remaining parameters go to their a,b -> 1 limit before the
                // quotient-ring check.
                VerifyOutcome sub;
                std::string subst;
                try {
                    Frac d = diff;
                    for (Var v : {Var::a, Var::b, Var::x}) {
                        if (!d.contains(v)) continue;
                        d = d.substitute(v, Rat(1));
                        subst += (subst.empty() ? "" : "=") + var_name(v);
                    }
                    subst = subst.empty() ? "" : " at " + subst + "=1";
                    sub = check_cyclotomic_diff(d, f.index, f.power, f.str() + subst);
                } catch (const denominator_vanishes& e) {
                    sub = VerifyOutcome::skip(f.str() + ": denominator vanishes at 1", e.what());
                }
                if (first) {
                    out = std::move(sub);
                    first = false;
                } else {
                    out.merge(std::move(sub));
                }
                break;
            }
            case Factor::Kind::integer_prime_power:
                throw std::invalid_argument(
                    "verify: integer factors are checked with check_integer_mod");
        }
    }
    return out;
}

}  // namespace qcong::congruence
