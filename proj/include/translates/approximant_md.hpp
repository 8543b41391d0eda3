#pragma once

#include "translates/approximant.hpp"

namespace translates {

inline constexpr double kMaxNodes = 1e7;

// Lexicographic enumeration of the (2m+1)^d nodes delta*l.
struct MultiIndexWindow {
    Index m = 1;
    int dim = 1;

    Index side() const { return 2 * m + 1; }
    std::size_t count() const;
    double delta() const { return kTwoPi / static_cast<double>(side()); }
    std::vector<Index> l_of(std::size_t flat) const;
};

// Throws when (2m+1)^d exceeds the node budget.
void check_node_budget(Index m, int dim);

FrequencyIndex k_prime_md(const FrequencyIndex &k, Index m);

SpectralFunction build_Hm_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m);

// (H_m * g)(delta l) for all l, via a d-dimensional inverse DFT of the aliased products.
std::vector<cplx> vm_samples_md(const SpectralFunction &g, const SpectralFunction &hm, Index m);

// Bound on sum_{|k|_inf > K} |beta_k^{-1}|.
double generator_tail_bound_md(const CoefficientSequence &beta, Index k_gen);
Index default_k_gen_md(const CoefficientSequence &beta, Index m);

TranslateApproximant assemble_Qm_md(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                    std::optional<Index> k_gen = std::nullopt);

// Bound on the l2 norm of sum over |k|_inf > K of |beta_k^{-1}|^2 |a_{k'}|^2 given ||a||_2.
double image_tail_bound_md(const CoefficientSequence &beta, Index m, Index k_out, double alias_l2);
Index choose_k_out_md(const ClassElement &elem, const CoefficientSequence &beta, Index m, const BandPolicy &policy,
                      double *tail = nullptr);

SpectralImage spectral_image_md(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                std::optional<Index> k_out = std::nullopt);

ErrorValue approximation_error_md(const ClassElement &elem, const CoefficientSequence &beta, Index m, double p,
                                  const ErrorMethod &method = {});

ErrorValue single_mode_error_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                                const FrequencyIndex &k0, double p, const ErrorMethod &method = {});

// Multivariate band policies are much smaller than the univariate ones.
inline BandPolicy md_parseval_band() { return {1e-12, 16}; }
inline BandPolicy md_quadrature_band() { return {1e-12, 4}; }

} // namespace translates
