#pragma once

#include "translates/frequency.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace translates {

// max |(2m+1)^{-1} sum_l e^{ik(t - delta l)} e^{is(delta l - t)} - expected| over
// m <= max_m, |k| <= max_k, |s| <= m and `points` random t. The expected value is
// 0 off the alias class of s and e^{i(k - k')t} on it.
double aliasing_identity_deviation(Index max_m, Index max_k, int points, std::uint64_t seed);

// beta^{-1} = 0 beyond m and g band-limited to m: max over `cases` of the
// Parseval error, the p = 2 and p = 3 quadrature errors and the coefficient
// distance between the spectral image and f.
double exact_reproduction_max(int cases, std::uint64_t seed);

// Korobov r = 2, bandwidth <= 32, m <= 16: max relative gap between the
// quadrature and Parseval errors.
double oracle_equivalence_max(int pairs, std::uint64_t seed);

// beta = lambda^2: max |f(x) - (f, K(., x))| with K(t, x) = phi_beta(t - x) and
// (f1, f2) = sum_k lambda_k^2 f1^(k) conj(f2^(k)).
double rk_identity_max(int functions, int points, std::uint64_t seed);

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
};

// Fast invariant suite behind the `selftest` subcommand.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

} // namespace translates
