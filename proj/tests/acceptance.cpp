// Acceptance suite: runs every toolkit-level criterion at its stated scale
// and time budget, printing one pass/fail line per criterion. Exit code is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "qcong/harness.hpp"
#include "qcong/qkit.hpp"
#include "qcong/sums.hpp"
#include "test_util.hpp"

using namespace qcong;
using congruence::Status;
using harness::Overrides;
using harness::Report;
using sums::ParamMode;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& what, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                  std::to_string(limit_s) + "s";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

// Every report verified except skips with recorded reasons; at least
// `min_verified` verified.
bool sweep_green(const std::vector<std::string>& ids, const Overrides& ov, int64_t min_verified,
                 std::string& detail, int64_t* verified_out = nullptr) {
    auto reports = harness::run_sweep(ids, ov, 2);
    auto sum = harness::summarize(reports);
    if (verified_out) *verified_out = sum.verified;
    for (const auto& r : reports) {
        if (r.status == Status::failed) {
            detail = r.case_id + " " + r.params.str() + " failed: " + r.witness;
            return false;
        }
        if (r.status == Status::skipped && r.reason.empty()) {
            detail = r.case_id + " " + r.params.str() + " skipped without reason";
            return false;
        }
    }
    if (sum.verified < min_verified) {
        detail = "verified " + std::to_string(sum.verified) + " < expected " +
                 std::to_string(min_verified);
        return false;
    }
    detail = std::to_string(sum.verified) + " verified, " + std::to_string(sum.skipped) +
             " skipped";
    return true;
}

std::vector<int64_t> odds_to(int64_t hi, int64_t lo = 1) {
    std::vector<int64_t> v;
    for (int64_t i = lo; i <= hi; i += 2) v.push_back(i);
    return v;
}

int64_t lnr(int64_t num, int64_t den, int64_t mod) {
    return qkit::least_nonneg_residue(Rat(num, den), mod);
}

}  // namespace

int main() {
    // 1. Parametric Rodriguez-Villegas q-analogue, both verification routes.
    criterion(1, "thm1.5 mod (1-aq^n)(a-q^n) and a->1 mod Phi_n^2, odd n <= 15", 30.0,
              [](std::string& detail) {
                  Overrides ov;
                  ov.n = odds_to(15);
                  return sweep_green({"thm1.5", "gz-rv"}, ov, 16, detail);
              });

    // 2. The two-parameter vanishing congruence and its a=b=1 limit.
    criterion(2, "thm1.1 and cor1.2 over odd n <= 9, d <= 4, r <= d, admissible s", 300.0,
              [](std::string& detail) {
                  int64_t expected = 0;
                  for (int64_t n = 1; n <= 9; n += 2)
                      for (int64_t d = 1; d <= 4; ++d) {
                          if (std::gcd(d, n) != 1) continue;
                          for (int64_t r = 1; r <= d; ++r) {
                              int64_t rho = lnr(-r, d, n);
                              for (int64_t s = (rho + 1) % 2; s <= n - 1; s += 2) ++expected;
                          }
                      }
                  int64_t verified = 0;
                  if (!sweep_green({"thm1.1", "cor1.2"}, Overrides{}, 2 * expected, detail,
                                   &verified))
                      return false;
                  if (verified != 2 * expected) {
                      detail = "verified " + std::to_string(verified) + " != expected " +
                               std::to_string(2 * expected);
                      return false;
                  }
                  return true;
              });

    // 3. The reflection congruence, its corollaries, and the residue identity.
    criterion(3, "thm1.3 (x symbolic) odd n <= 7, d <= 3; cor1.4; cor1.5 exponent identities",
              0.0, [](std::string& detail) {
                  int64_t expected = 0;
                  for (int64_t n = 1; n <= 7; n += 2)
                      for (int64_t d = 1; d <= 3; ++d)
                          if (std::gcd(d, n) == 1) expected += d;  // r in 1..d
                  Overrides ov;
                  ov.n = odds_to(7);
                  int64_t verified = 0;
                  if (!sweep_green({"thm1.3"}, ov, expected, detail, &verified)) return false;
                  if (!sweep_green({"cor1.4"}, ov, expected, detail)) return false;

                  int64_t expected15 = 0;
                  for (int64_t n = 1; n <= 7; n += 2)
                      for (int64_t d = 2; d <= 3; ++d)
                          if (std::gcd(d, n) == 1) expected15 += d - 1;  // r in 1..d-1
                  if (!sweep_green({"cor1.5"}, ov, expected15, detail)) return false;
                  // Proposition 3.2 on the same grid, as exact integer equality.
                  for (int64_t n = 1; n <= 7; n += 2)
                      for (int64_t d = 2; d <= 3; ++d) {
                          if (std::gcd(d, n) != 1) continue;
                          for (int64_t r = 1; r < d; ++r)
                              if (!qkit::residue_identity_check(d, n, r)) {
                                  detail = "residue identity failed at (d,n,r)";
                                  return false;
                              }
                      }
                  detail = "thm1.3/cor1.4: " + std::to_string(expected) +
                           " tuples each; cor1.5: " + std::to_string(expected15);
                  return true;
              });

    // 4. Ramanujan-type congruence, parametric and cyclotomic forms.
    criterion(4, "eq-q4a-new (mixed modulus) and eq-q4a (Phi_n^3), n in {1,5,7,11,13}", 120.0,
              [](std::string& detail) {
                  return sweep_green({"eq-q4a-new", "eq-q4a"}, Overrides{}, 10, detail);
              });

    // 5. Parity of F_n(x, b, q), exact and fully symbolic.
    criterion(5, "lemma3.1 symmetry F_n(x,b,q) = (-1)^n F_n(-x,b,q), 0 <= n <= 8", 0.0,
              [](std::string& detail) {
                  for (int64_t n = 0; n <= 8; ++n) {
                      Frac lhs = sums::fn_lemma31(n, +1);
                      Frac rhs = sums::fn_lemma31(n, -1).scaled(Rat(n % 2 != 0 ? -1 : 1));
                      if (!(lhs - rhs).is_zero()) {
                          detail = "asymmetry at n = " + std::to_string(n);
                          return false;
                      }
                  }
                  detail = "9 exact symbolic identities";
                  return true;
              });

    // 6. The closed-form family and the q-binomial evaluation identity.
    criterion(6, "thm4.1, thm4.2 (odd n <= 9); cor4.3, thm4.4 (odd n <= 13); id5.1 (N <= 6)",
              0.0, [](std::string& detail) {
                  Overrides ov9;
                  ov9.n = odds_to(9);
                  if (!sweep_green({"thm4.1", "thm4.2"}, ov9, 10, detail)) return false;
                  Overrides ov13;
                  ov13.n = odds_to(13);
                  if (!sweep_green({"cor4.3"}, ov13, 7, detail)) return false;
                  int64_t expected44 = 0;
                  for (int64_t n = 1; n <= 13; n += 2) expected44 += (n - 1) / 2 + 1;
                  if (!sweep_green({"thm4.4"}, ov13, expected44, detail)) return false;
                  int64_t expected51 = 0;
                  for (int64_t N = 0; N <= 6; ++N) expected51 += N + 1;
                  if (!sweep_green({"id5.1"}, Overrides{}, expected51, detail)) return false;
                  detail = "thm4.4: " + std::to_string(expected44) +
                           " tuples; id5.1: " + std::to_string(expected51) + " pairs";
                  return true;
              });

    // 7. Both single-factorial congruences and the a->1 limit.
    criterion(7, "thm4.6-2, thm4.6-22 (odd n <= 15) and a->1 mod Phi_n^2", 0.0,
              [](std::string& detail) {
                  Overrides ov;
                  ov.n = odds_to(15);
                  return sweep_green({"thm4.6-2", "thm4.6-22", "thm4.6-22-phi2"}, ov, 24, detail);
              });

    // 8. The central q-binomial congruence mod Phi_n^2, both forms.
    criterion(8, "conj4.5 mod Phi_n^2 with the base-q^2 form agreeing, odd 3 <= n <= 15", 0.0,
              [](std::string& detail) {
                  Overrides ov;
                  ov.n = odds_to(15, 3);
                  return sweep_green({"conj4.5"}, ov, 7, detail);
              });

    // 9. Integer supercongruences on exact rationals.
    criterion(9, "rv-int (p <= 37, mod p^2), ram1a (mod p^3), sun-tauraso (mod p, r <= 2)", 0.0,
              [](std::string& detail) {
                  Rat rv3 = sums::integer_sum(sums::IntegerSumKind::rv, 3);
                  if (!(rv3 == Rat(89, 64))) {
                      detail = "rv p=3 sum mismatch";
                      return false;
                  }
                  return sweep_green({"rv-int", "ram1a", "sun-tauraso"}, Overrides{},
                                     11 + 4 + 10, detail);
              });

    // 10. Property suites over the exact core.
    criterion(10, "ring laws, normalize idempotence, residue oracle, cyclotomic product, "
                  "q-Legendre expansions, classical identities", 120.0,
              [](std::string& detail) {
                  testutil::Rng rng;
                  for (int i = 0; i < 60; ++i) {
                      MPoly a = testutil::random_mpoly(rng), b = testutil::random_mpoly(rng),
                            c = testutil::random_mpoly(rng);
                      if ((a + b) + c != a + (b + c) || a * b != b * a ||
                          a * (b + c) != a * b + a * c) {
                          detail = "ring law violation";
                          return false;
                      }
                      MPoly nz = testutil::random_nonzero_mpoly(rng);
                      auto quot = (a * nz).exact_div(nz);
                      if (!quot || *quot != a) {
                          detail = "exact_div(a*b, b) != a";
                          return false;
                      }
                      Frac f = testutil::random_frac(rng);
                      Frac again(f.unit_coeff(), f.unit_mono(), f.num(), f.den());
                      if (!(again.unit_coeff() == f.unit_coeff() &&
                            again.unit_mono() == f.unit_mono() && again.num() == f.num() &&
                            again.den() == f.den())) {
                          detail = "frac normalization not idempotent";
                          return false;
                      }
                  }
                  for (int64_t m = 1; m <= 50; ++m)
                      for (int64_t v = 1; v <= 20; ++v) {
                          if (std::gcd(v, m) != 1) continue;
                          for (int64_t u = -20; u <= 20; ++u) {
                              int64_t got = qkit::least_nonneg_residue(Rat(u, v), m);
                              if (((v * got - u) % m + m) % m != 0 || got < 0 || got >= m) {
                                  detail = "residue oracle mismatch";
                                  return false;
                              }
                          }
                      }
                  for (int64_t n = 1; n <= 60; ++n) {
                      UPoly prod(Rat(1));
                      for (int64_t d = 1; d <= n; ++d)
                          if (n % d == 0) prod = prod * qkit::cyclotomic(d);
                      std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
                      c.front() = Rat(-1);
                      c.back() = Rat(1);
                      if (!(prod == UPoly(std::move(c), 0))) {
                          detail = "cyclotomic product != q^n - 1 at n = " + std::to_string(n);
                          return false;
                      }
                  }
                  using E = qkit::LegendreExpansion;
                  for (int64_t n = 0; n <= 8; ++n) {
                      Frac s = qkit::little_q_legendre(n, E::standard);
                      if (!s.equals(qkit::little_q_legendre(n, E::signed_form)) ||
                          !s.equals(qkit::little_q_legendre(n, E::new_form))) {
                          detail = "little q-Legendre expansions disagree at n = " +
                                   std::to_string(n);
                          return false;
                      }
                  }
                  using CI = sums::ClassicalIdentity;
                  for (int64_t n = 0; n <= 8; ++n)
                      for (CI which :
                           {CI::q_chu_vandermonde, CI::q_pfaff_saalschutz, CI::andrews_q_watson,
                            CI::q_gauss_terminating, CI::q_binomial_theorem})
                          if (!sums::classical_identity_check(which, n)) {
                              detail = "classical identity failed at n = " + std::to_string(n);
                              return false;
                          }
                  detail = "all property suites green";
                  return true;
              });

    // 11. Fail-closed behavior on a deliberately perturbed right side.
    criterion(11, "perturbed rhs yields status failed, a nonzero witness, and CLI exit 1", 0.0,
              [](std::string& detail) {
                  auto reports =
                      harness::run_sweep({"fixture-perturbed-rhs"}, Overrides{}, 1);
                  if (reports.size() != 1 || reports[0].status != Status::failed ||
                      reports[0].witness.empty()) {
                      detail = "fixture did not fail with a witness";
                      return false;
                  }
                  std::string cmd = std::string(QCONG_CLI_PATH) +
                                    " verify --case fixture-perturbed-rhs > /dev/null 2>&1";
                  int rc = std::system(cmd.c_str());
                  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
                  if (code != 1) {
                      detail = "CLI exit code " + std::to_string(code) + " != 1";
                      return false;
                  }
                  detail = "witness: " + reports[0].witness;
                  return true;
              });

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures;
}
