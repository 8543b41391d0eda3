#include "translates/approximant.hpp"
#include "translates/error_budget.hpp"

#include <doctest.h>

#include <cmath>

using namespace translates;
using doctest::Approx;

TEST_CASE("gamma_k") {
    auto k2 = CoefficientSequence::korobov(2.0);
    auto k1 = CoefficientSequence::korobov(1.0);
    CHECK(gamma_k(k2, k2, 1, 4).real() == Approx(1.0 / 16.0));
    for (Index k = -3; k <= 3; ++k) CHECK(gamma_k(k2, k2, 3, k) == k2.reciprocal1(k));
    CHECK(gamma_k(k1, k2, 2, 7).real() == Approx(2.0 / 49.0));
    CHECK(gamma_k_md(k1, k2, 2, FrequencyIndex{7}) == gamma_k(k1, k2, 2, 7));
}

TEST_CASE("epsilon_p2, Korobov r=2, m=1") {
    auto k2 = CoefficientSequence::korobov(2.0);
    auto rep = epsilon_p2(k2, k2, 1, 10000);
    CHECK(rep.variant == EpsilonVariant::p2_univariate);
    CHECK(rep.component("sup") == Approx(0.25));
    // Gamma_{1,j} = (3|j| - 1)^{-2}; direct summation plus the integral tail
    double s = 0.0;
    const Index J = 2000000;
    for (Index j = J; j >= 1; --j) s += std::pow(3.0 * static_cast<double>(j) - 1.0, -4.0);
    s += std::pow(3.0 * static_cast<double>(J), -3.0) / 9.0;
    const double oracle = std::sqrt(2.0 * s);
    CHECK(rep.component("gamma_sum") == Approx(oracle).epsilon(1e-9));
    CHECK(rep.value == Approx(std::max(0.25, oracle)));
    CHECK_FALSE(rep.tail_dominated);
    CHECK(rep.tail_bound < 0.01 * rep.value);
}

TEST_CASE("epsilon_p2 reduces to the sup tail for a degree-m generator") {
    auto lam = CoefficientSequence::korobov(1.5);
    const Index m = 6;
    auto beta = CoefficientSequence::band_limited(lam, m);
    auto rep = epsilon_p2(lam, beta, m);
    CHECK(rep.component("gamma_sum") == 0.0);
    CHECK(rep.value == Approx(std::pow(7.0, -1.5)));
}

TEST_CASE("epsilon_p2, exponential s=1, m=3") {
    auto e = CoefficientSequence::exponential(1.0);
    CHECK(epsilon_p2(e, e, 3).component("sup") == Approx(std::exp(-4.0)).epsilon(1e-14));
}

TEST_CASE("general p: telescoping for monotone reciprocals") {
    auto k1 = CoefficientSequence::korobov(1.0);
    auto rep = epsilon_general_p(k1, k1, 4);
    CHECK(rep.variant == EpsilonVariant::general_p);
    CHECK(rep.component("delta_lambda") == Approx(0.4).epsilon(1e-12));
    for (double r : {1.5, 2.0, 3.0})
        for (Index m : {2, 5, 11}) {
            auto seq = CoefficientSequence::korobov(r);
            auto g = epsilon_general_p(seq, seq, m);
            const double want = 2.0 * std::pow(static_cast<double>(m + 1), -r);
            CHECK(g.component("delta_lambda") == Approx(want).epsilon(1e-12));
            // lambda = beta: gamma_k = beta_k^{-1} off the band, alpha = 1
            CHECK(g.component("delta_gamma") == Approx(want).epsilon(1e-12));
        }
}

TEST_CASE("general p: direct enumeration of the Delta gamma sum") {
    auto lam = CoefficientSequence::korobov(1.0);
    auto beta = CoefficientSequence::korobov(3.0);
    const Index m = 3;
    double s = 0.0;
    for (Index k = m + 1; k <= 2000000; ++k)
        s += std::abs(gamma_k(lam, beta, m, k) - gamma_k(lam, beta, m, k + 1)) +
             std::abs(gamma_k(lam, beta, m, -k) - gamma_k(lam, beta, m, -k - 1));
    auto rep = epsilon_general_p(lam, beta, m);
    CHECK(rep.component("delta_gamma") >= s * (1 - 1e-12));
    CHECK(rep.component("delta_gamma") == Approx(s).epsilon(1e-6));
}

TEST_CASE("general p: exponential ratio approaches e^{-s}") {
    auto e = CoefficientSequence::exponential(0.5);
    for (Index m = 10; m < 20; ++m) {
        const double ratio = epsilon_general_p(e, e, m + 1).value / epsilon_general_p(e, e, m).value;
        CHECK(ratio == Approx(std::exp(-0.5)).epsilon(0.05));
    }
}

TEST_CASE("epsilon_p2_md") {
    auto k2 = CoefficientSequence::korobov(2.0);
    auto a = epsilon_p2_md(k2, k2, 3, 1000);
    auto b = epsilon_p2(k2, k2, 3, 1000);
    CHECK(a.value == b.value);
    CHECK(a.variant == EpsilonVariant::p2_univariate);

    auto p2 = CoefficientSequence::korobov(2.0, 2);
    // Gamma_{m,j} as product of per-axis maxima vs enumeration of the block
    for (Index j1 = -3; j1 <= 3; ++j1)
        for (Index j2 = -3; j2 <= 3; ++j2) {
            const double prod = alias_block_max(k2, k2, 1, j1) * alias_block_max(k2, k2, 1, j2);
            double brute = 0.0;
            for (Index r1 = -1; r1 <= 1; ++r1)
                for (Index r2 = -1; r2 <= 1; ++r2)
                    brute = std::max(brute, std::abs(p2.reciprocal({r1 + 3 * j1, r2 + 3 * j2})));
            CHECK(alias_block_max_md(p2, p2, 1, {j1, j2}) == Approx(brute).epsilon(1e-12));
            CHECK(prod == Approx(brute).epsilon(1e-12));
        }
    // Gamma-sum by enumeration over |j|_inf <= 200 plus the per-axis tail
    double s = 0.0;
    for (Index j1 = -200; j1 <= 200; ++j1)
        for (Index j2 = -200; j2 <= 200; ++j2)
            if (j1 != 0 || j2 != 0) {
                const double g = alias_block_max(k2, k2, 1, j1) * alias_block_max(k2, k2, 1, j2);
                s += g * g;
            }
    auto rep = epsilon_p2_md(p2, p2, 1);
    CHECK(rep.variant == EpsilonVariant::p2_multivariate);
    CHECK(rep.component("gamma_sum") >= std::sqrt(s));
    CHECK(rep.component("gamma_sum") == Approx(std::sqrt(s)).epsilon(1e-6));

    auto box = CoefficientSequence::band_limited(p2, 2);
    CHECK(epsilon_p2_md(p2, box, 2).component("gamma_sum") == 0.0);
}

TEST_CASE("epsilon is nonincreasing in m for built-in families") {
    std::vector<CoefficientSequence> fams = {CoefficientSequence::korobov(1.0), CoefficientSequence::korobov(2.0),
                                             CoefficientSequence::exponential(0.5),
                                             CoefficientSequence::mask_power(2.0, MaskSpec::log_damped(1.0))};
    for (const auto &s : fams) {
        double prev = INFINITY, prev_g = INFINITY;
        for (Index m = 2; m <= 64; m += 2) {
            const double v = epsilon_p2(s, s, m, 2000).value;
            CHECK(v <= prev * (1 + 1e-12));
            prev = v;
            if (s.family() != Family::korobov || s.parameter() > 1.0) {
                const double g = epsilon_general_p(s, s, m, 2000).value;
                CHECK(g <= prev_g * (1 + 1e-12));
                prev_g = g;
            }
        }
    }
}

TEST_CASE("general-p alias term diverges for Korobov r = 1") {
    auto k1 = CoefficientSequence::korobov(1.0);
    auto rep = epsilon_general_p(k1, k1, 4);
    CHECK(std::isinf(rep.value));
    CHECK(rep.tail_dominated);
}

TEST_CASE("predicted_rate gates") {
    auto k2 = CoefficientSequence::korobov(2.0);
    auto p = predicted_rate(k2, k2, 2.0, 1);
    CHECK(p.kind == RatePrediction::Kind::power);
    CHECK(p.rate == 2.0);
    CHECK(p.at(k2, 8) == Approx(1.0 / 64.0));

    auto e = CoefficientSequence::exponential(0.5);
    auto pe = predicted_rate(e, e, 3.0, 1);
    CHECK(pe.kind == RatePrediction::Kind::exponential);
    CHECK(pe.rate == 0.5);

    auto k04 = CoefficientSequence::korobov(0.4);
    auto pn = predicted_rate(k04, k04, 2.0, 1);
    CHECK_FALSE(pn.applies());
    CHECK(pn.describe() == "no-theorem-applies");

    auto k1 = CoefficientSequence::korobov(1.0);
    CHECK_FALSE(predicted_rate(k1, k1, 3.0, 1).applies());
    CHECK(predicted_rate(k2, k2, 3.0, 1).kind == RatePrediction::Kind::power);

    auto mask = CoefficientSequence::mask_power(2.0, MaskSpec::log_damped(1.0));
    auto pm = predicted_rate(mask, mask, 2.0, 1);
    CHECK(pm.kind == RatePrediction::Kind::power);
    CHECK(pm.rate == 2.0);

    // beta = lambda^2 with |lambda|/|k|^r nondecreasing: sup tail
    auto b2 = CoefficientSequence::power(k1, 2.0);
    auto ps = predicted_rate(k1, b2, 2.0, 1);
    CHECK(ps.kind == RatePrediction::Kind::sup_tail);
    CHECK(ps.at(k1, 10) == Approx(0.1));
    CHECK(ps.probe_certified);

    auto d2 = CoefficientSequence::korobov(2.0, 2);
    auto pd = predicted_rate(d2, d2, 2.0, 2);
    CHECK(pd.applies());
    auto pd2 = predicted_rate(d2, CoefficientSequence::power(d2, 2.0), 2.0, 2);
    CHECK(pd2.kind == RatePrediction::Kind::sup_tail);
    CHECK(pd2.at(d2, 4) == Approx(1.0 / 25.0));
    CHECK_FALSE(predicted_rate(d2, d2, 3.0, 2).applies());
}
