#include "translates/random.hpp"
#include "translates/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace translates;
using doctest::Approx;

namespace {

SpectralFunction from_pairs(std::initializer_list<std::pair<Index, cplx>> kv) {
    std::map<FrequencyIndex, cplx> m;
    for (auto [k, v] : kv) m[FrequencyIndex{k}] = v;
    return SpectralFunction::from_map(1, m);
}

// direct Riemann sum of |f|^p on a fine grid
double lp_oracle(const SpectralFunction &f, double p, int N) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += std::pow(std::abs(evaluate(f, kTwoPi * i / N)), p);
    return std::pow(s / N, 1.0 / p);
}

} // namespace

TEST_CASE("frequency index norms") {
    FrequencyIndex k{3, -4};
    CHECK(k.norm_inf() == 4);
    CHECK(k.norm1() == 7);
    CHECK(k.norm2() == Approx(5.0));
    CHECK(pos_mod(-4, 3) == 2);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(from_pairs({{0, 1.0}}), 1.234) == cplx(1.0));
    CHECK(std::abs(evaluate(from_pairs({{1, 0.5}, {-1, 0.5}}), 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(evaluate(from_pairs({{1, 1.0}}), kTwoPi / 4) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("convolve multiplies coefficients on the common support") {
    auto a = from_pairs({{-1, 2.0}, {0, 3.0}, {2, 1.0}});
    auto b = from_pairs({{0, 5.0}, {1, 7.0}, {2, -1.0}});
    auto c = convolve(a, b);
    CHECK(c.coeff1(0) == cplx(15.0));
    CHECK(c.coeff1(2) == cplx(-1.0));
    CHECK(c.coeff1(1) == cplx(0.0));
    CHECK(c.coeff1(-1) == cplx(0.0));
}

TEST_CASE("lp norms against fine-grid oracle") {
    auto rng = make_engine(3);
    auto f = random_real_spectral(1, 6, rng);
    CHECK(f.real_valued());
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        const double want = lp_oracle(f, p, 20000);
        // |f|^p is smooth only for even p; otherwise the Riemann sum converges algebraically
        const bool even = p == 2.0 || p == 4.0;
        CHECK(lp_norm(f, p, 8) == Approx(want).epsilon(even ? 1e-9 : 1e-3));
        if (!even) CHECK(std::abs(lp_norm(f, p, 64) - want) < std::abs(lp_norm(f, p, 8) - want));
    }
    // p = 2 is Parseval
    double s = 0.0;
    for (auto c : f.data()) s += std::norm(c);
    CHECK(l2_norm(f) == Approx(std::sqrt(s)).epsilon(1e-14));
    CHECK_THROWS(lp_norm(f, 1.0));
    CHECK_THROWS(lp_norm(f, 3.0, 1));
}

TEST_CASE("cos x has L4 norm (3/8)^{1/4}") {
    auto f = from_pairs({{1, 0.5}, {-1, 0.5}});
    CHECK(lp_norm(f, 4.0) == Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-13));
}

TEST_CASE("synthesize and analyze are inverse") {
    for (int d : {1, 2}) {
        auto rng = make_engine(11, static_cast<std::uint64_t>(d));
        auto f = random_real_spectral(d, 5, rng);
        auto g = analyze(synthesize(f, 16), 5);
        double err = 0.0, mag = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            err = std::max(err, std::abs(f.data()[i] - g.data()[i]));
            mag = std::max(mag, std::abs(f.data()[i]));
        }
        CHECK(err <= 1e-12 * mag);
    }
}

TEST_CASE("synthesis matches pointwise evaluation") {
    auto rng = make_engine(5);
    auto f = random_real_spectral(1, 9, rng);
    const Index N = 32;
    auto grid = synthesize(f, N);
    for (Index l = 0; l < N; ++l)
        CHECK(std::abs(grid.values[static_cast<std::size_t>(l)] - evaluate(f, kTwoPi * l / N)) < 1e-12);
}

TEST_CASE("partial sums keep a frequency window") {
    auto f = from_pairs({{-3, 1.0}, {0, 2.0}, {2, 3.0}, {4, 4.0}});
    auto g = partial_sum(f, 0, 3);
    CHECK(g.coeff1(-3) == cplx(0.0));
    CHECK(g.coeff1(0) == cplx(2.0));
    CHECK(g.coeff1(2) == cplx(3.0));
    CHECK(g.coeff1(4) == cplx(0.0));
}

TEST_CASE("text round trip") {
    auto rng = make_engine(9);
    auto f = random_real_spectral(2, 3, rng);
    std::stringstream ss;
    write_text(ss, f);
    auto g = read_text(ss);
    REQUIRE(g.dimension() == 2);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(g.at(f.index_of(i)) == f.data()[i]);
}

TEST_CASE("read_text reports the bad line") {
    std::stringstream ss("0 1 0\n1 abc 0\n");
    CHECK_THROWS_WITH_AS(read_text(ss), doctest::Contains("line 2"), std::runtime_error);
}
