#include "translates/approximant.hpp"
#include "translates/lower_bound.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace translates;
using doctest::Approx;

namespace {

Index brute_count(Index s, int d) {
    Index c = 0;
    if (d == 1) return 2 * s + 1;
    for (Index a = -s; a <= s; ++a)
        for (Index b = -s; b <= s; ++b) {
            if (d == 2) {
                c += a * a + b * b <= s * s;
                continue;
            }
            for (Index e = -s; e <= s; ++e) c += a * a + b * b + e * e <= s * s;
        }
    return c;
}

} // namespace

TEST_CASE("lattice counts") {
    CHECK(lattice_count(1, 2) == 5);
    CHECK(lattice_count(0, 3) == 1);
    CHECK(lattice_count(2, 2) == 13);
    for (int d = 1; d <= 3; ++d)
        for (Index s = 0; s <= 12; ++s) CHECK(lattice_count(s, d) == brute_count(s, d));
    CHECK_THROWS_AS(lattice_count(6000, 3), std::overflow_error);
}

TEST_CASE("lattice counts grow like s^d") {
    for (int d = 1; d <= 3; ++d) {
        double lo = 1e300, hi = 0.0;
        for (Index s = 4; s <= 64; ++s) {
            const double ratio = static_cast<double>(lattice_count(s, d)) / std::pow(static_cast<double>(s), d);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(lo > 0.0);
        CHECK(hi / lo < 2.5);
    }
}

TEST_CASE("design_for_n") {
    auto k1 = CoefficientSequence::korobov(1.0);
    auto d = design_for_n(10, 1, k1, 1.0);
    CHECK(static_cast<Index>(std::floor(10 * std::log(10.0))) == 23);
    CHECK(d.m == 24);
    CHECK(d.s == 11);
    CHECK(d.omega == Approx(1.0 / (std::sqrt(24.0) * 11.0)));
    auto c = design_for_n(37, 1, CoefficientSequence::constant(1.0), 1.0);
    CHECK(c.omega == Approx(1.0 / std::sqrt(static_cast<double>(c.m))));
    auto d2 = design_for_n(100, 2, CoefficientSequence::korobov(1.0, 2), 1.0);
    CHECK(d2.m == 461);
    CHECK(lattice_count(d2.s, 2) <= 461);
    CHECK(lattice_count(d2.s + 1, 2) > 461);
    CHECK_THROWS(design_for_n(9, 1, k1));
}

TEST_CASE("F_ns members lie in the unit ball and are reproducible") {
    auto k1 = CoefficientSequence::korobov(1.0);
    auto d = design_for_n(10, 1, k1);
    auto a = sample_F_ns(d, k1, 50, 7);
    auto b = sample_F_ns(d, k1, 50, 7);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real_valued());
        for (std::size_t j = 0; j < a[i].size(); ++j) CHECK(a[i].data()[j] == b[i].data()[j]);
        // class norm ||g||_2 with g^(k) = lambda_k f^(k)
        double s = 0.0;
        for (Index k = -d.s; k <= d.s; ++k) s += std::norm(k1.value1(k) * a[i].coeff1(k));
        CHECK(std::sqrt(s) <= 1.0 + 1e-12);
    }
}

TEST_CASE("best_translate_fit trivial cases") {
    auto k2 = CoefficientSequence::korobov(2.0);
    auto psi = truncated_generator(k2, 8);
    CHECK(best_translate_fit(psi, psi, 1, 1, 3).residual < 1e-8);
    CHECK(best_translate_fit(psi, psi, 5, 3, 3).residual < 1e-8);
    SpectralFunction e1(1, 1);
    e1.at1(1) = 1.0;
    SpectralFunction constant(1, 0);
    constant.at1(0) = 1.0;
    for (Index n : {1, 4, 9}) CHECK(best_translate_fit(e1, constant, n, 2, 1).residual == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("best_translate_fit is reproducible, nested in n, monotone in restarts") {
    auto k1 = CoefficientSequence::korobov(1.0);
    auto d = design_for_n(10, 1, k1);
    auto f = sample_F_ns(d, k1, 1, 99)[0];
    auto psi = truncated_generator(k1, d.s);
    auto r1 = best_translate_fit(f, psi, 8, 20, 5).residual;
    auto r2 = best_translate_fit(f, psi, 8, 20, 5).residual;
    CHECK(std::abs(r1 - r2) <= 1e-10);
    double prev = INFINITY;
    for (Index n : {2, 4, 8, 16}) {
        const double r = best_translate_fit(f, psi, n, 4, 5).residual;
        CHECK(r <= prev + 1e-12);
        prev = r;
    }
    prev = INFINITY;
    for (int restarts = 1; restarts <= 6; ++restarts) {
        const double r = best_translate_fit(f, psi, 6, restarts, 5).residual;
        CHECK(r <= prev);
        prev = r;
    }
}

TEST_CASE("translate nodes nest under doubling") {
    for (int restart = 0; restart < 3; ++restart) {
        auto a = translate_nodes(5, restart, 17);
        auto b = translate_nodes(10, restart, 17);
        for (std::size_t l = 0; l < a.size(); ++l) CHECK(b[2 * l] == a[l]);
    }
}

TEST_CASE("probe_Mn") {
    auto cst = CoefficientSequence::constant(1.0);
    auto d = design_for_n(10, 1, cst);
    auto pr = probe_Mn(d, cst, truncated_generator(cst, d.s), GrowthFunction::power(1.0), 3, 2, 4);
    REQUIRE(pr.per_trial.size() == 3);
    CHECK(pr.statistic == *std::max_element(pr.per_trial.begin(), pr.per_trial.end()));
    CHECK(pr.statistic <= 1.0 + 1e-12);
    auto again = probe_Mn(d, cst, truncated_generator(cst, d.s), GrowthFunction::power(1.0), 3, 2, 4);
    CHECK(again.statistic == pr.statistic);

    auto grow = GrowthFunction::power(2.0);
    auto dd = design_for_n(100, 1, CoefficientSequence::korobov(2.0));
    auto p2 = probe_Mn(dd, CoefficientSequence::korobov(2.0), truncated_generator(CoefficientSequence::korobov(2.0), dd.s),
                       grow, 1, 1, 1);
    const double ln = std::log(100.0);
    CHECK(p2.envelope_low == Approx(1.0 / std::pow(100.0 * ln, 2.0)));
    CHECK(p2.envelope_high == Approx(1.0 / 1e4));
}

TEST_CASE("growth functions") {
    auto p = GrowthFunction::power(1.5);
    CHECK(p.nondecreasing());
    CHECK(p.doubling_constant() == Approx(std::pow(2.0, 1.5)).epsilon(1e-12));
    auto l = GrowthFunction::log_power(2.0);
    CHECK(l.nondecreasing());
    CHECK(std::isfinite(l.doubling_constant()));
    auto t = GrowthFunction::table({0.0, 10.0}, {1.0, 11.0});
    CHECK(t(5.0) == Approx(6.0));
    CHECK_THROWS(GrowthFunction::table({0.0}, {1.0}));
}
