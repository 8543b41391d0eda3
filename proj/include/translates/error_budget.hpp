#pragma once

#include "translates/kernels.hpp"
#include "translates/sequences.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace translates {

enum class EpsilonVariant { p2_univariate, general_p, p2_multivariate };
std::string to_string(EpsilonVariant v);

// Error budget value. Infinite sums are split into an explicit part and a
// closed-form tail bound; value includes the tail, tail_bound says how much of
// value came from it.
struct EpsilonReport {
    double value = 0.0;
    Index truncation_radius = 0;
    double tail_bound = 0.0;
    EpsilonVariant variant = EpsilonVariant::p2_univariate;
    std::vector<std::pair<std::string, double>> components;
    bool tail_dominated = false;

    double component(std::string_view name) const;
};

// gamma_k = alpha_{k'} beta_k^{-1}
cplx gamma_k(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index k);
cplx gamma_k_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, const FrequencyIndex &k);

// Gamma_{m,j} = max |gamma_k| over the alias block I_{m,j} = [(2m+1)j - m, (2m+1)j + m].
double alias_block_max(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index j,
                       Exec exec = Exec::parallel);
// max over |k|_inf <= m of |gamma_{k + (2m+1)j}|, by direct enumeration.
double alias_block_max_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                          const FrequencyIndex &j, Exec exec = Exec::parallel);

// 1e5 for power-type tails, 1e3 for exponential ones.
Index default_j_max(const CoefficientSequence &beta);

// sup_{|k| > m} |seq_k^{-1}| (d = 1): explicit scan of `scan` indices per side,
// then the envelope.
double sup_reciprocal_beyond(const CoefficientSequence &seq, Index m, Index scan = 4096);
// sup over |k|_inf > m in d dimensions.
double sup_reciprocal_beyond_md(const CoefficientSequence &seq, Index m);

// Upper bound on sum_{k > K} |theta_k - theta_{k+1}|, theta = seq^{-1} (d = 1, one side).
double difference_tail(const CoefficientSequence &seq, Index K);

EpsilonReport epsilon_p2(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                         std::optional<Index> j_max = std::nullopt);
EpsilonReport epsilon_general_p(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                                std::optional<Index> j_max = std::nullopt);
EpsilonReport epsilon_p2_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                            std::optional<Index> j_max = std::nullopt);

struct RatePrediction {
    enum class Kind { power, exponential, sup_tail, series_l2, series_l1, none };
    Kind kind = Kind::none;
    double rate = 0.0; // r for power, s for exponential
    std::string rule;  // short name of the hypothesis set that matched
    std::string note;  // why nothing applied, or which probes certified it
    bool probe_certified = false;

    bool applies() const { return kind != Kind::none; }
    // Shape of the predicted decay at m (no constant).
    double at(const CoefficientSequence &lambda, Index m) const;
    std::string describe() const;
};

// Matches (lambda, beta, p, d) against the known rate results. Structural
// hypotheses are checked with finite nondecreasing-type probes of radius 64.
RatePrediction predicted_rate(const CoefficientSequence &lambda, const CoefficientSequence &beta, double p, int d);

} // namespace translates
