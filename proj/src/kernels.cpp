#include "translates/kernels.hpp"

#include <cmath>

namespace translates {

namespace {

// Symmetric partial sum with a rotation recurrence for e^{ikx}.
cplx series_at(std::span<const cplx> coeffs, double x) {
    const Index K = (static_cast<Index>(coeffs.size()) - 1) / 2;
    const cplx step = std::polar(1.0, x);
    cplx z(1.0, 0.0);
    cplx s = coeffs[static_cast<std::size_t>(K)];
    for (Index k = 1; k <= K; ++k) {
        z *= step;
        if ((k & 63) == 0) z = std::polar(1.0, static_cast<double>(k) * x);
        s += coeffs[static_cast<std::size_t>(K + k)] * z + coeffs[static_cast<std::size_t>(K - k)] * std::conj(z);
    }
    return s;
}

} // namespace

double sum_abs_pow(std::span<const cplx> v, double p, Exec exec) {
    const auto n = static_cast<Index>(v.size());
    if (p == 2.0) return blocked_sum(n, [&](Index i) { return std::norm(v[static_cast<std::size_t>(i)]); }, exec);
    return blocked_sum(n, [&](Index i) { return std::pow(std::abs(v[static_cast<std::size_t>(i)]), p); }, exec);
}

std::vector<cplx> synthesize_points_1d(std::span<const cplx> coeffs, std::span<const double> xs, Exec exec) {
    std::vector<cplx> out(xs.size());
    const auto n = static_cast<Index>(xs.size());
    if (exec == Exec::reference) {
        const Index K = (static_cast<Index>(coeffs.size()) - 1) / 2;
        for (Index i = 0; i < n; ++i) {
            cplx s(0.0);
            for (Index k = -K; k <= K; ++k)
                s += coeffs[static_cast<std::size_t>(k + K)] *
                     std::polar(1.0, static_cast<double>(k) * xs[static_cast<std::size_t>(i)]);
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }
#pragma omp parallel for schedule(dynamic, 8)
    for (Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = series_at(coeffs, xs[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<cplx> translate_sum_1d(std::span<const cplx> weights, double delta, std::span<const cplx> gen,
                                   std::span<const double> xs, Exec exec) {
    std::vector<cplx> out(xs.size());
    const auto n = static_cast<Index>(xs.size());
    const auto L = static_cast<Index>(weights.size());
    if (exec == Exec::reference) {
        const Index K = (static_cast<Index>(gen.size()) - 1) / 2;
        for (Index i = 0; i < n; ++i) {
            cplx s(0.0);
            for (Index l = 0; l < L; ++l) {
                const double t = xs[static_cast<std::size_t>(i)] - delta * static_cast<double>(l);
                cplx g(0.0);
                for (Index k = -K; k <= K; ++k)
                    g += gen[static_cast<std::size_t>(k + K)] * std::polar(1.0, static_cast<double>(k) * t);
                s += weights[static_cast<std::size_t>(l)] * g;
            }
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (Index i = 0; i < n; ++i) {
        cplx s(0.0);
        for (Index l = 0; l < L; ++l) {
            const cplx w = weights[static_cast<std::size_t>(l)];
            if (w == cplx(0.0)) continue;
            s += w * series_at(gen, xs[static_cast<std::size_t>(i)] - delta * static_cast<double>(l));
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

} // namespace translates
