#include "translates/kernels.hpp"
#include "translates/random.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace translates;

TEST_CASE("blocked reductions agree across execution paths") {
    auto term = [](Index i) { return 1.0 / static_cast<double>((i + 1) * (i + 1)); };
    const double a = blocked_sum(100000, term, Exec::reference);
    const double b = blocked_sum(100000, term, Exec::parallel);
    CHECK(std::abs(a - b) <= 1e-13);
    CHECK(blocked_sum(100000, term) == b);
    CHECK(blocked_max(5000, [](Index i) { return std::sin(static_cast<double>(i)); }, Exec::reference) ==
          blocked_max(5000, [](Index i) { return std::sin(static_cast<double>(i)); }, Exec::parallel));
}

TEST_CASE("kernels: reference and parallel paths match") {
    auto rng = make_engine(5, 0);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
    std::vector<cplx> coeffs(2 * 40 + 1), weights(31);
    for (auto &c : coeffs) c = {n01(rng), n01(rng)};
    for (auto &w : weights) w = {n01(rng), n01(rng)};
    std::vector<double> xs(257);
    for (auto &x : xs) x = u(rng);

    CHECK(std::abs(sum_abs_pow(coeffs, 3.0, Exec::reference) - sum_abs_pow(coeffs, 3.0, Exec::parallel)) <= 1e-12);

    auto s1 = synthesize_points_1d(coeffs, xs, Exec::reference);
    auto s2 = synthesize_points_1d(coeffs, xs, Exec::parallel);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(std::abs(s1[i] - s2[i]) <= 1e-11);
        cplx direct = 0.0;
        for (Index k = -40; k <= 40; ++k) direct += coeffs[static_cast<std::size_t>(k + 40)] * std::polar(1.0, k * xs[i]);
        CHECK(std::abs(direct - s1[i]) <= 1e-11);
    }

    const double delta = 6.283185307179586 / 31.0;
    auto t1 = translate_sum_1d(weights, delta, coeffs, xs, Exec::reference);
    auto t2 = translate_sum_1d(weights, delta, coeffs, xs, Exec::parallel);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(t1[i] - t2[i]) <= 1e-11);
}
