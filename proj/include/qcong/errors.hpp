#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

// A substitution made a denominator factor of a Frac vanish identically.
// Congruence checks translate this into a Skipped outcome, never Verified.
struct denominator_vanishes : std::runtime_error {
    explicit denominator_vanishes(const std::string& msg) : std::runtime_error(msg) {}
};

// least_nonneg_residue: denominator of the argument shares a factor with the modulus.
struct not_coprime : std::runtime_error {
    explicit not_coprime(const std::string& msg) : std::runtime_error(msg) {}
};

// to_upoly on a fraction that still involves a, b or x.
struct non_univariate : std::runtime_error {
    explicit non_univariate(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcong
