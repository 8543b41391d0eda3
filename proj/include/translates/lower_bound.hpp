#pragma once

#include "translates/sequences.hpp"
#include "translates/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace translates {

// Nondecreasing growth Psi on [0, inf).
class GrowthFunction {
public:
    enum class Rule { power, log_power, table };

    // max(t, 1)^a
    static GrowthFunction power(double a);
    // (1 + log(1 + t))^a
    static GrowthFunction log_power(double a);
    // piecewise linear through (t_i, v_i), constant outside
    static GrowthFunction table(std::vector<double> t, std::vector<double> v);

    Rule rule() const { return rule_; }
    double parameter() const { return a_; }
    double operator()(double t) const;

    // max Psi(2t)/Psi(t) over a log grid on [1, t_max].
    double doubling_constant(double t_max = 1e4, int samples = 2048) const;
    bool nondecreasing(double t_max = 1e4, int samples = 2048) const;
    std::string describe() const;

private:
    Rule rule_ = Rule::power;
    double a_ = 1.0;
    std::vector<double> t_, v_;
};

// #{k in Z^d : |k|_2 <= s}
Index lattice_count(Index s, int dim);
std::vector<FrequencyIndex> lattice_ball(Index s, int dim);

struct LowerBoundDesign {
    Index n = 10;
    int dim = 1;
    double c3 = 1.0;
    Index m = 0;      // floor(c3 n log n) + 1
    Index s = 0;      // largest s with lattice_count(s) <= m
    Index s_star = 0; // lattice_count(s)
    double omega = 0.0;
};

LowerBoundDesign design_for_n(Index n, int dim, const CoefficientSequence &lambda, double c3 = 1.0);

// omega * sum_{|k|_2 <= s} eps_k e^{ikx} with eps_k = eps_{-k} in {-1, +1}.
std::vector<SpectralFunction> sample_F_ns(const LowerBoundDesign &design, const CoefficientSequence &lambda,
                                          int trials, std::uint64_t seed);

// Truncated generator: psi^(k) = beta_k^{-1} on |k|_inf <= radius.
SpectralFunction truncated_generator(const CoefficientSequence &beta, Index radius);

struct FitResult {
    double residual = 0.0;
    bool regularized = false;
};

// Node set for restart r: equispaced for r = 0, otherwise each equispaced node
// gets a Gaussian jitter of sd 2pi/(4q), q its reduced denominator, seeded by
// the node itself. Node sets for n and 2n are nested.
std::vector<double> translate_nodes(Index n, int restart, std::uint64_t seed);

// min over restarts of min_b ||f - sum_l b_l psi(. - a_l)||_2 with least squares
// on an 8x oversampled grid. d = 1.
FitResult best_translate_fit(const SpectralFunction &f, const SpectralFunction &psi, Index n, int restarts,
                             std::uint64_t seed);

struct ProbeResult {
    LowerBoundDesign design;
    double statistic = 0.0;     // max over sampled members of best_translate_fit
    double envelope_low = 0.0;  // 1/Psi((n log n)^{1/d})
    double envelope_high = 0.0; // 1/Psi(n^{1/d})
    bool regularized = false;
    std::vector<double> per_trial;
};

ProbeResult probe_Mn(const LowerBoundDesign &design, const CoefficientSequence &lambda, const SpectralFunction &psi,
                     const GrowthFunction &growth, int trials, int restarts, std::uint64_t seed);

} // namespace translates
