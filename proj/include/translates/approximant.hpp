#pragma once

#include "translates/kernels.hpp"
#include "translates/sequences.hpp"
#include "translates/spectral.hpp"

#include <optional>
#include <span>
#include <vector>

namespace translates {

// f = phi_lambda * g, with f^(k) = lambda_k^{-1} g^(k) and norm ||g||_p.
struct ClassElement {
    CoefficientSequence lambda;
    SpectralFunction g;
    double p = 2.0;

    ClassElement(CoefficientSequence lambda, SpectralFunction g, double p = 2.0);

    int dimension() const { return g.dimension(); }
    cplx f_hat(const FrequencyIndex &k) const;
    // Coefficients of f on g's box.
    SpectralFunction f() const;
    double class_norm(int oversample = 8) const;
};

// Weighted sum of (2m+1)^d equispaced translates of the (truncated) generator phi_beta.
struct TranslateApproximant {
    CoefficientSequence beta;
    Index m = 1;
    int dim = 1;
    double delta = 0.0;
    std::vector<cplx> weights; // lexicographic over l in {0..2m}^d
    Index k_gen = 0;
    double generator_tail = 0.0; // bound on sum_{|k|_inf > k_gen} |beta_k^{-1}|

    Index nodes_per_axis() const { return 2 * m + 1; }
    std::vector<double> node(std::size_t flat) const;
};

struct SpectralImage {
    SpectralFunction coeffs;
    Index k_out = 0;
    double tail_bound = 0.0; // l2 norm bound of the discarded coefficients
};

// Defaults for the output band K_out = max(bandwidth(g), m) + J(2m+1): the
// smallest J whose l2 tail bound is <= tol, but at most j_cap.
struct BandPolicy {
    double tol = 1e-12;
    Index j_cap = 256;
};

struct ErrorMethod {
    enum class Kind { quadrature, parseval };
    Kind kind = Kind::parseval;
    int oversample = 8;
    std::optional<Index> k_out;
    BandPolicy band{};

    static ErrorMethod parseval(BandPolicy b = {}) { return {Kind::parseval, 8, std::nullopt, b}; }
    static ErrorMethod quadrature(int oversample = 8, BandPolicy b = {1e-12, 256}) {
        return {Kind::quadrature, oversample, std::nullopt, b};
    }
};

struct ErrorValue {
    double value = 0.0;
    Index k_out = 0;
    double tail_bound = 0.0;
};

// ((k + m) mod (2m+1)) - m
Index k_prime(Index k, Index m);

// alpha_k = beta_k / lambda_k on |k| <= m.
SpectralFunction build_Hm(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m);

// (H_m * g)(delta l), l = 0..2m, via aliasing onto residues and one inverse DFT.
std::vector<cplx> vm_samples(const SpectralFunction &g, const SpectralFunction &hm, Index m);

// max(50m, 1000) unless a smaller K already has generator tail < 1e-10.
Index default_k_gen(const CoefficientSequence &beta, Index m);
// Bound on sum_{|k| > K} |beta_k^{-1}| (d = 1).
double generator_tail_bound(const CoefficientSequence &beta, Index k_gen);

TranslateApproximant assemble_Qm(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                 std::optional<Index> k_gen = std::nullopt);

Index choose_k_out(const ClassElement &elem, const CoefficientSequence &beta, Index m, const BandPolicy &policy,
                   double *tail = nullptr);
// Bound on the l2 norm of (Q_m f)^ outside |k| <= k_out, given the aliased products a_r = alpha_r g^(r).
double image_tail_bound(const CoefficientSequence &beta, Index m, Index k_out, double alias_l2);

SpectralImage spectral_image(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                             std::optional<Index> k_out = std::nullopt);

std::vector<cplx> evaluate_approximant(const TranslateApproximant &a, std::span<const double> xs,
                                       Exec exec = Exec::parallel);

ErrorValue approximation_error(const ClassElement &elem, const CoefficientSequence &beta, Index m, double p,
                               const ErrorMethod &method = {});

// ||f - Q_m f||_p for g = e^{i k0 x}, |k0| <= m. The error is
// alpha_{k0} sum_{j != 0} beta_{k0+(2m+1)j}^{-1} e^{i(k0+(2m+1)j)x}; its L_p norm
// is computed on the compressed series in j.
ErrorValue single_mode_error(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index k0,
                             double p, const ErrorMethod &method = {});

} // namespace translates
