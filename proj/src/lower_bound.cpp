#include "translates/lower_bound.hpp"

#include "translates/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace translates {

GrowthFunction GrowthFunction::power(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("power growth needs a > 0");
    GrowthFunction g;
    g.rule_ = Rule::power;
    g.a_ = a;
    return g;
}

GrowthFunction GrowthFunction::log_power(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("log-power growth needs a > 0");
    GrowthFunction g;
    g.rule_ = Rule::log_power;
    g.a_ = a;
    return g;
}

GrowthFunction GrowthFunction::table(std::vector<double> t, std::vector<double> v) {
    if (t.size() < 2 || t.size() != v.size()) throw std::invalid_argument("growth table needs >= 2 matching points");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(v[i] > 0.0)) throw std::invalid_argument("growth table values must be positive");
        if (i > 0 && !(t[i] > t[i - 1])) throw std::invalid_argument("growth table abscissae must increase");
    }
    GrowthFunction g;
    g.rule_ = Rule::table;
    g.t_ = std::move(t);
    g.v_ = std::move(v);
    return g;
}

double GrowthFunction::operator()(double t) const {
    switch (rule_) {
    case Rule::power: return std::pow(std::max(t, 1.0), a_);
    case Rule::log_power: return std::pow(1.0 + std::log1p(std::max(t, 0.0)), a_);
    case Rule::table: {
        if (t <= t_.front()) return v_.front();
        if (t >= t_.back()) return v_.back();
        auto it = std::upper_bound(t_.begin(), t_.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - t_.begin());
        const double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
        return (1.0 - w) * v_[i - 1] + w * v_[i];
    }
    }
    return 1.0;
}

double GrowthFunction::doubling_constant(double t_max, int samples) const {
    double c = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = std::pow(t_max, static_cast<double>(i) / (samples - 1));
        c = std::max(c, (*this)(2.0 * t) / (*this)(t));
    }
    return c;
}

bool GrowthFunction::nondecreasing(double t_max, int samples) const {
    double prev = (*this)(0.0);
    for (int i = 0; i < samples; ++i) {
        const double v = (*this)(t_max * static_cast<double>(i) / (samples - 1));
        if (v < prev) return false;
        prev = v;
    }
    return true;
}

std::string GrowthFunction::describe() const {
    switch (rule_) {
    case Rule::power: return "power(" + std::to_string(a_) + ")";
    case Rule::log_power: return "log-power(" + std::to_string(a_) + ")";
    case Rule::table: return "table(" + std::to_string(t_.size()) + " points)";
    }
    return "?";
}

namespace {

void check_ball(Index s, int dim) {
    if (s < 0 || dim < 1) throw std::invalid_argument("lattice ball needs s >= 0 and d >= 1");
    if (std::pow(2.0 * static_cast<double>(s) + 1.0, dim) > 1e8)
        throw std::overflow_error("lattice ball enumeration exceeds 1e8 box points");
}

} // namespace

Index lattice_count(Index s, int dim) {
    check_ball(s, dim);
    // count row by row on the first d-1 axes, closed form on the last
    const Index s2 = s * s;
    Index count = 0;
    std::vector<Index> k(static_cast<std::size_t>(dim - 1), -s);
    while (true) {
        Index r2 = 0;
        for (Index v : k) r2 += v * v;
        if (r2 <= s2) {
            Index t = static_cast<Index>(std::sqrt(static_cast<double>(s2 - r2)));
            while (t * t > s2 - r2) --t;
            while ((t + 1) * (t + 1) <= s2 - r2) ++t;
            count += 2 * t + 1;
        }
        int a = dim - 2;
        while (a >= 0 && k[static_cast<std::size_t>(a)] == s) k[static_cast<std::size_t>(a--)] = -s;
        if (a < 0) break;
        ++k[static_cast<std::size_t>(a)];
    }
    return count;
}

std::vector<FrequencyIndex> lattice_ball(Index s, int dim) {
    check_ball(s, dim);
    SpectralFunction box(dim, s);
    std::vector<FrequencyIndex> out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        FrequencyIndex k = box.index_of(i);
        if (k.norm2_squared() <= s * s) out.push_back(std::move(k));
    }
    return out;
}

LowerBoundDesign design_for_n(Index n, int dim, const CoefficientSequence &lambda, double c3) {
    if (n < 10) throw std::invalid_argument("design needs n >= 10");
    if (!(c3 > 0.0)) throw std::invalid_argument("c3 must be positive");
    if (lambda.dimension() != dim) throw std::invalid_argument("lambda dimension differs from d");
    LowerBoundDesign d;
    d.n = n;
    d.dim = dim;
    d.c3 = c3;
    const double nd = static_cast<double>(n);
    d.m = static_cast<Index>(std::floor(c3 * nd * std::log(nd))) + 1;
    while (lattice_count(d.s + 1, dim) <= d.m) ++d.s;
    d.s_star = lattice_count(d.s, dim);
    double lmax = 0.0;
    for (const auto &k : lattice_ball(d.s, dim)) lmax = std::max(lmax, std::abs(lambda.value(k)));
    d.omega = 1.0 / (std::sqrt(static_cast<double>(d.m)) * lmax);
    return d;
}

std::vector<SpectralFunction> sample_F_ns(const LowerBoundDesign &design, const CoefficientSequence &lambda,
                                          int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (lambda.dimension() != design.dim) throw std::invalid_argument("lambda dimension differs from design");
    const Index s = design.s;
    std::vector<SpectralFunction> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        auto rng = make_engine(seed, static_cast<std::uint64_t>(t));
        std::bernoulli_distribution coin(0.5);
        SpectralFunction f(design.dim, s);
        auto data = f.data();
        const std::size_t n = data.size();
        for (std::size_t i = 0; i <= n / 2; ++i) {
            FrequencyIndex k = f.index_of(i);
            if (k.norm2_squared() > s * s) continue;
            const double v = coin(rng) ? design.omega : -design.omega;
            data[i] = v;
            data[n - 1 - i] = v;
        }
        out.push_back(std::move(f));
    }
    return out;
}

SpectralFunction truncated_generator(const CoefficientSequence &beta, Index radius) {
    SpectralFunction psi(beta.dimension(), radius);
    for (std::size_t i = 0; i < psi.size(); ++i) psi.data()[i] = beta.reciprocal(psi.index_of(i));
    return psi;
}

std::vector<double> translate_nodes(Index n, int restart, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<double> a(static_cast<std::size_t>(n));
    for (Index l = 0; l < n; ++l) {
        const Index g = std::gcd(l, n);
        const Index num = l / g, den = n / g;
        double x = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
        if (restart > 0) {
            const std::uint64_t key = splitmix64(splitmix64(static_cast<std::uint64_t>(restart)) ^
                                                 (static_cast<std::uint64_t>(num) * 0x9E3779B97F4A7C15ull)) ^
                                      static_cast<std::uint64_t>(den);
            auto rng = make_engine(seed, key);
            std::normal_distribution<double> jitter(0.0, kTwoPi / (4.0 * static_cast<double>(den)));
            x += jitter(rng);
        }
        a[static_cast<std::size_t>(l)] = x;
    }
    return a;
}

FitResult best_translate_fit(const SpectralFunction &f, const SpectralFunction &psi, Index n, int restarts,
                             std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (f.dimension() != 1 || psi.dimension() != 1)
        throw std::invalid_argument("best_translate_fit is implemented for d = 1");
    const Index K = std::max<Index>({f.bandwidth(), psi.bandwidth(), 0});
    const Index N = 8 * (2 * K + 1);
    const Index W = 2 * K + 1;

    // E(i, k) = e^{i k x_i} on the grid, target y = f(x_i)
    Eigen::MatrixXcd E(N, W);
    for (Index i = 0; i < N; ++i) {
        const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(N);
        for (Index k = -K; k <= K; ++k) E(i, k + K) = std::polar(1.0, static_cast<double>(k) * x);
    }
    Eigen::VectorXcd fh(W), ph(W);
    for (Index k = -K; k <= K; ++k) {
        fh(k + K) = f.coeff1(k);
        ph(k + K) = psi.coeff1(k);
    }
    const Eigen::VectorXcd y = E * fh;

    FitResult best{std::numeric_limits<double>::infinity(), false};
    for (int r = 0; r < restarts; ++r) {
        const auto nodes = translate_nodes(n, r, seed);
        // column l holds psi(x - a_l): coefficients psi^(k) e^{-i k a_l}
        Eigen::MatrixXcd C(W, n);
        for (Index l = 0; l < n; ++l)
            for (Index k = -K; k <= K; ++k)
                C(k + K, l) = ph(k + K) * std::polar(1.0, -static_cast<double>(k) * nodes[static_cast<std::size_t>(l)]);
        const Eigen::MatrixXcd A = E * C;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
        Eigen::VectorXcd b;
        bool ridge = false;
        if (qr.rank() < n) {
            ridge = true;
            const double mu = 1e-12 * static_cast<double>(N);
            Eigen::MatrixXcd G = A.adjoint() * A;
            G.diagonal().array() += mu;
            b = G.ldlt().solve(A.adjoint() * y);
        } else {
            b = qr.solve(y);
        }
        const double res = std::sqrt((y - A * b).squaredNorm() / static_cast<double>(N));
        if (res < best.residual) best.residual = res;
        best.regularized = best.regularized || ridge;
    }
    return best;
}

ProbeResult probe_Mn(const LowerBoundDesign &design, const CoefficientSequence &lambda, const SpectralFunction &psi,
                     const GrowthFunction &growth, int trials, int restarts, std::uint64_t seed) {
    ProbeResult out;
    out.design = design;
    const auto members = sample_F_ns(design, lambda, trials, seed);
    out.per_trial.assign(members.size(), 0.0);
    std::vector<char> flags(members.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t t = 0; t < members.size(); ++t) {
        FitResult r = best_translate_fit(members[t], psi, design.n, restarts, splitmix64(seed + t + 1));
        out.per_trial[t] = r.residual;
        flags[t] = r.regularized;
    }
    for (std::size_t t = 0; t < members.size(); ++t) {
        out.statistic = std::max(out.statistic, out.per_trial[t]);
        out.regularized = out.regularized || flags[t];
    }
    const double nd = static_cast<double>(design.n);
    const double inv_d = 1.0 / static_cast<double>(design.dim);
    out.envelope_low = 1.0 / growth(std::pow(nd * std::log(nd), inv_d));
    out.envelope_high = 1.0 / growth(std::pow(nd, inv_d));
    return out;
}

} // namespace translates
