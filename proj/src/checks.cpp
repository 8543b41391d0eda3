#include "translates/checks.hpp"

#include "translates/approximant.hpp"
#include "translates/error_budget.hpp"
#include "translates/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace translates {

namespace {

CoefficientSequence random_family(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < 0.5) return CoefficientSequence::korobov(0.6 + 2.4 * u(rng));
    return CoefficientSequence::exponential(0.2 + 0.8 * u(rng));
}

Index uniform_index(std::mt19937_64 &rng, Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

} // namespace

double aliasing_identity_deviation(Index max_m, Index max_k, int points, std::uint64_t seed) {
    auto rng = make_engine(seed, 1);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    std::vector<double> ts(static_cast<std::size_t>(points));
    for (auto &t : ts) t = ut(rng);
    double worst = 0.0;
    for (Index m = 1; m <= max_m; ++m) {
        const Index n = 2 * m + 1;
        const double delta = kTwoPi / static_cast<double>(n);
        for (Index k = -max_k; k <= max_k; ++k)
            for (Index s = -m; s <= m; ++s)
                for (double t : ts) {
                    cplx sum = 0.0;
                    for (Index l = 0; l < n; ++l) {
                        const double dl = delta * static_cast<double>(l);
                        sum += std::polar(1.0, static_cast<double>(k) * (t - dl)) *
                               std::polar(1.0, static_cast<double>(s) * (dl - t));
                    }
                    sum /= static_cast<double>(n);
                    const cplx want = pos_mod(k - s, n) == 0
                                          ? std::polar(1.0, static_cast<double>(k - k_prime(k, m)) * t)
                                          : cplx(0.0);
                    worst = std::max(worst, std::abs(sum - want));
                }
    }
    return worst;
}

double exact_reproduction_max(int cases, std::uint64_t seed) {
    double worst = 0.0;
    for (int c = 0; c < cases; ++c) {
        auto rng = make_engine(seed, 1000 + static_cast<std::uint64_t>(c));
        const Index m = uniform_index(rng, 1, 16);
        const CoefficientSequence lambda = random_family(rng);
        const CoefficientSequence beta = CoefficientSequence::band_limited(random_family(rng), m);
        SpectralFunction g = random_real_spectral(1, uniform_index(rng, 0, m), rng);
        ClassElement elem(lambda, g, 2.0);
        worst = std::max(worst, approximation_error(elem, beta, m, 2.0, ErrorMethod::parseval()).value);
        worst = std::max(worst, approximation_error(elem, beta, m, 2.0, ErrorMethod::quadrature()).value);
        ClassElement elem3(lambda, g, 3.0);
        worst = std::max(worst, approximation_error(elem3, beta, m, 3.0, ErrorMethod::quadrature()).value);
        const SpectralImage img = spectral_image(elem, beta, m);
        const SpectralFunction f = elem.f();
        for (Index k = -img.k_out; k <= img.k_out; ++k)
            worst = std::max(worst, std::abs(img.coeffs.coeff1(k) - f.coeff1(k)));
    }
    return worst;
}

double oracle_equivalence_max(int pairs, std::uint64_t seed) {
    const CoefficientSequence seq = CoefficientSequence::korobov(2.0);
    double worst = 0.0;
    for (int c = 0; c < pairs; ++c) {
        auto rng = make_engine(seed, 2000 + static_cast<std::uint64_t>(c));
        const Index bw = uniform_index(rng, 1, 32);
        const Index m = uniform_index(rng, 1, 16);
        SpectralFunction g = random_real_spectral(1, bw, rng);
        ClassElement raw(seq, g, 2.0);
        ClassElement elem(seq, (1.0 / raw.class_norm()) * g, 2.0);
        const double q = approximation_error(elem, seq, m, 2.0, ErrorMethod::quadrature()).value;
        const double pv = approximation_error(elem, seq, m, 2.0, ErrorMethod::parseval()).value;
        worst = std::max(worst, std::abs(q - pv) / pv);
    }
    return worst;
}

double rk_identity_max(int functions, int points, std::uint64_t seed) {
    double worst = 0.0;
    for (int c = 0; c < functions; ++c) {
        auto rng = make_engine(seed, 3000 + static_cast<std::uint64_t>(c));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const CoefficientSequence lambda = CoefficientSequence::korobov(0.6 + 2.4 * u(rng));
        const CoefficientSequence beta = CoefficientSequence::power(lambda, 2.0);
        const Index K = uniform_index(rng, 0, 16);
        const SpectralFunction f = random_real_spectral(1, K, rng);
        for (int t = 0; t < points; ++t) {
            const double x = kTwoPi * u(rng);
            cplx inner = 0.0;
            for (Index k = -K; k <= K; ++k) {
                const cplx kernel = beta.reciprocal1(k) * std::polar(1.0, -static_cast<double>(k) * x);
                const double l = lambda.value1(k).real();
                inner += l * l * f.coeff1(k) * std::conj(kernel);
            }
            worst = std::max(worst, std::abs(evaluate(f, x) - inner));
        }
    }
    return worst;
}

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto run = [&](std::string name, double tol, const std::function<double()> &fn) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = std::move(name);
        r.tolerance = tol;
        r.measured = fn();
        r.pass = r.measured <= tol;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    };
    run("aliasing identity (m <= 4, |k| <= 20)", 1e-12, [&] { return aliasing_identity_deviation(4, 20, 5, seed); });
    run("exact reproduction (10 cases)", 1e-12, [&] { return exact_reproduction_max(10, seed); });
    run("quadrature vs Parseval (20 pairs, relative)", 1e-6, [&] { return oracle_equivalence_max(20, seed); });
    run("reproducing kernel identity (10 x 10)", 1e-9, [&] { return rk_identity_max(10, 10, seed); });
    run("telescoping |Delta lambda^{-1}| tail, Korobov r=1 m=4", 1e-12, [] {
        const auto seq = CoefficientSequence::korobov(1.0);
        return std::abs(epsilon_general_p(seq, seq, 4).component("delta_lambda") - 0.4);
    });
    run("single mode e^{ix}, Korobov r=2 m=1: quadrature vs Parseval", 1e-8, [] {
        const auto seq = CoefficientSequence::korobov(2.0);
        const double q = single_mode_error(seq, seq, 1, 1, 2.0, ErrorMethod::quadrature()).value;
        const double pv = single_mode_error(seq, seq, 1, 1, 2.0, ErrorMethod::parseval()).value;
        return std::abs(q - pv);
    });
    return out;
}

} // namespace translates
