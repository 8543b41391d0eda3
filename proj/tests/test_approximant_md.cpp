#include "translates/approximant_md.hpp"
#include "translates/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace translates;
using doctest::Approx;

namespace {

SpectralFunction mode2(Index k1, Index k2, Index radius) {
    SpectralFunction g(2, radius);
    g.at({k1, k2}) = 1.0;
    return g;
}

SpectralFunction tensor(const SpectralFunction &a, const SpectralFunction &b) {
    const Index R = std::max(a.radius(), b.radius());
    SpectralFunction g(2, R);
    for (Index i = -R; i <= R; ++i)
        for (Index j = -R; j <= R; ++j) g.at({i, j}) = a.coeff1(i) * b.coeff1(j);
    return g;
}

} // namespace

TEST_CASE("k_prime_md") {
    CHECK(k_prime_md({5, 7}, 2) == FrequencyIndex{0, 2});
    CHECK(k_prime_md({0, 0}, 3) == FrequencyIndex{0, 0});
    CHECK(k_prime_md({-4, 3}, 1) == FrequencyIndex{-1, 0});
}

TEST_CASE("build_Hm_md") {
    auto k2 = CoefficientSequence::korobov(2.0, 2);
    auto h = build_Hm_md(k2, k2, 1);
    CHECK(h.size() == 9);
    for (auto c : h.data()) CHECK(c == cplx(1.0));
    auto h2 = build_Hm_md(CoefficientSequence::korobov(1.0, 2), k2, 1);
    CHECK(h2[{1, 1}].real() == Approx(1.0));
    auto one = CoefficientSequence::korobov(2.0);
    auto lam = CoefficientSequence::korobov(1.0);
    auto a = build_Hm_md(lam, one, 3);
    auto b = build_Hm(lam, one, 3);
    for (Index k = -3; k <= 3; ++k) CHECK(a.coeff1(k) == b.coeff1(k));
}

TEST_CASE("assemble_Qm_md weights") {
    auto k2 = CoefficientSequence::korobov(2.0, 2);
    {
        auto a = assemble_Qm_md(ClassElement(k2, mode2(0, 0, 0)), k2, 1);
        REQUIRE(a.weights.size() == 9);
        for (auto w : a.weights) CHECK(std::abs(w - 1.0 / 9.0) < 1e-15);
    }
    {
        auto a = assemble_Qm_md(ClassElement(k2, mode2(1, 1, 1)), k2, 2);
        REQUIRE(a.weights.size() == 25);
        const double delta = kTwoPi / 5;
        for (Index l1 = 0; l1 < 5; ++l1)
            for (Index l2 = 0; l2 < 5; ++l2)
                CHECK(std::abs(a.weights[static_cast<std::size_t>(l1 * 5 + l2)] -
                               std::polar(1.0 / 25.0, delta * static_cast<double>(l1 + l2))) < 1e-15);
    }
    CHECK_THROWS(assemble_Qm_md(ClassElement(CoefficientSequence::korobov(2.0, 3), SpectralFunction(3, 1)),
                                CoefficientSequence::korobov(2.0, 3), 120));
}

TEST_CASE("spectral image matches a direct translate-sum transform") {
    // Q_m f has coefficients beta_k^{-1} sum_l c_l e^{-i k.delta l}; the weights
    // c_l are computed here by direct summation of alpha_k g^(k) e^{i k.delta l}/n^2.
    auto lam = CoefficientSequence::korobov(1.0, 2);
    auto beta = CoefficientSequence::korobov(2.0, 2);
    auto rng = make_engine(12);
    auto g = random_real_spectral(2, 4, rng);
    const Index m = 4, n = 9;
    const double delta = kTwoPi / n;
    std::vector<cplx> c(static_cast<std::size_t>(n * n));
    for (Index l1 = 0; l1 < n; ++l1)
        for (Index l2 = 0; l2 < n; ++l2) {
            cplx s = 0.0;
            for (Index k1 = -m; k1 <= m; ++k1)
                for (Index k2 = -m; k2 <= m; ++k2) {
                    FrequencyIndex k{k1, k2};
                    s += beta.value(k) / lam.value(k) * g[k] *
                         std::polar(1.0, delta * static_cast<double>(k1 * l1 + k2 * l2));
                }
            c[static_cast<std::size_t>(l1 * n + l2)] = s / static_cast<double>(n * n);
        }
    auto img = spectral_image_md(ClassElement(lam, g), beta, m, 20);
    double worst = 0.0;
    for (Index k1 = -20; k1 <= 20; ++k1)
        for (Index k2 = -20; k2 <= 20; ++k2) {
            cplx s = 0.0;
            for (Index l1 = 0; l1 < n; ++l1)
                for (Index l2 = 0; l2 < n; ++l2)
                    s += c[static_cast<std::size_t>(l1 * n + l2)] *
                         std::polar(1.0, -delta * static_cast<double>(k1 * l1 + k2 * l2));
            FrequencyIndex k{k1, k2};
            worst = std::max(worst, std::abs(img.coeffs[k] - beta.reciprocal(k) * s));
        }
    CHECK(worst < 1e-9);
}

TEST_CASE("e^{i(x1+x2)}, product Korobov r=2, m=1: series and quadrature agree") {
    // error^2 = S^2 - 1, S = sum over k = 1 (mod 3) of max(|k|,1)^{-4}
    double S = 0.0;
    for (Index k = -999998; k <= 999999; ++k)
        if (pos_mod(k - 1, 3) == 0) S += std::pow(std::max<double>(std::abs(static_cast<double>(k)), 1.0), -4.0);
    const double oracle = std::sqrt(S * S - 1.0);
    auto k2 = CoefficientSequence::korobov(2.0, 2);
    const double series = single_mode_error_md(k2, k2, 1, {1, 1}, 2.0, ErrorMethod::parseval()).value;
    ErrorMethod quad = ErrorMethod::quadrature(2);
    quad.k_out = 200;
    const double q = approximation_error_md(ClassElement(k2, mode2(1, 1, 1)), k2, 1, 2.0, quad).value;
    CHECK(series == Approx(oracle).epsilon(1e-9));
    CHECK(q == Approx(oracle).epsilon(1e-6));
}

TEST_CASE("d = 1 reduces bit-for-bit") {
    auto seq = CoefficientSequence::korobov(2.0);
    auto rng = make_engine(2);
    auto g = random_real_spectral(1, 10, rng);
    ClassElement e(seq, g);
    for (auto method : {ErrorMethod::parseval(), ErrorMethod::quadrature()})
        CHECK(approximation_error_md(e, seq, 5, 2.0, method).value == approximation_error(e, seq, 5, 2.0, method).value);
    auto a = assemble_Qm_md(e, seq, 5);
    auto b = assemble_Qm(e, seq, 5);
    CHECK(a.weights == b.weights);
}

TEST_CASE("tensor consistency") {
    auto one = CoefficientSequence::korobov(2.0);
    auto lam1 = CoefficientSequence::korobov(1.5);
    auto beta = CoefficientSequence::product({one, one});
    auto lam = CoefficientSequence::product({lam1, lam1});
    for (Index m = 1; m <= 4; ++m) {
        auto rng = make_engine(40, static_cast<std::uint64_t>(m));
        auto g1 = random_real_spectral(1, 4, rng);
        auto g2 = random_real_spectral(1, 3, rng);
        const Index K = 30;
        auto img = spectral_image_md(ClassElement(lam, tensor(g1, g2)), beta, m, K).coeffs;
        auto i1 = spectral_image(ClassElement(lam1, g1), one, m, K).coeffs;
        auto i2 = spectral_image(ClassElement(lam1, g2), one, m, K).coeffs;
        double worst = 0.0;
        for (Index a = -K; a <= K; ++a)
            for (Index b = -K; b <= K; ++b) worst = std::max(worst, std::abs(img[{a, b}] - i1.coeff1(a) * i2.coeff1(b)));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("exact reproduction on T^2") {
    auto lam = CoefficientSequence::korobov(1.0, 2);
    for (Index m : {1, 2, 3}) {
        auto beta = CoefficientSequence::band_limited(CoefficientSequence::korobov(2.0, 2), m);
        auto rng = make_engine(90, static_cast<std::uint64_t>(m));
        ClassElement e(lam, random_real_spectral(2, m, rng));
        CHECK(approximation_error_md(e, beta, m, 2.0, ErrorMethod::parseval(md_parseval_band())).value <= 1e-12);
        CHECK(approximation_error_md(e, beta, m, 2.0, ErrorMethod::quadrature(8, md_quadrature_band())).value <= 1e-12);
    }
}

TEST_CASE("node count law and window enumeration") {
    MultiIndexWindow w{3, 2};
    CHECK(w.count() == 49);
    CHECK(w.l_of(8) == std::vector<Index>{1, 1});
    auto k2 = CoefficientSequence::korobov(2.0, 3);
    auto a = assemble_Qm_md(ClassElement(k2, SpectralFunction(3, 1)), k2, 2);
    CHECK(a.weights.size() == 125);
}
