#pragma once

#include "translates/frequency.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace translates {

// reference: plain serial loops, kept as the test oracle.
// parallel: OpenMP over fixed-size blocks, partial results combined in block
// order, so the answer does not depend on the thread count.
enum class Exec { reference, parallel };

inline constexpr Index kReduceBlock = 4096;

template <class Term>
double blocked_sum(Index n, Term &&term, Exec exec = Exec::parallel) {
    if (n <= 0) return 0.0;
    if (exec == Exec::reference) {
        double s = 0.0;
        for (Index i = 0; i < n; ++i) s += term(i);
        return s;
    }
    const Index blocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
    for (Index b = 0; b < blocks; ++b) {
        const Index hi = std::min(n, (b + 1) * kReduceBlock);
        double s = 0.0;
        for (Index i = b * kReduceBlock; i < hi; ++i) s += term(i);
        partial[static_cast<std::size_t>(b)] = s;
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

template <class Term>
double blocked_max(Index n, Term &&term, Exec exec = Exec::parallel) {
    double best = 0.0;
    if (n <= 0) return best;
    if (exec == Exec::reference) {
        for (Index i = 0; i < n; ++i) best = std::max(best, term(i));
        return best;
    }
#pragma omp parallel for schedule(static) reduction(max : best)
    for (Index i = 0; i < n; ++i) best = std::max(best, term(i));
    return best;
}

// sum_i |v_i|^p
double sum_abs_pow(std::span<const cplx> v, double p, Exec exec = Exec::parallel);

// sum_{|k|<=K} coeffs[k+K] e^{ikx} at every x.
std::vector<cplx> synthesize_points_1d(std::span<const cplx> coeffs, std::span<const double> xs,
                                       Exec exec = Exec::parallel);

// sum_l weights[l] * gen(x - delta*l) at every x, where gen is given by its
// Fourier coefficients on -K..K (gen[k+K]).
std::vector<cplx> translate_sum_1d(std::span<const cplx> weights, double delta, std::span<const cplx> gen,
                                   std::span<const double> xs, Exec exec = Exec::parallel);

} // namespace translates
