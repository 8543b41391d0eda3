#include "translates/approximant.hpp"

#include "translates/fft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace translates {

namespace {

void check_m(Index m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
}

void check_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in (1, inf)");
}

void check_univariate(const CoefficientSequence &s, const char *what) {
    if (s.dimension() != 1) throw std::invalid_argument(std::string(what) + " must be one-dimensional");
}

// a_r = alpha_r g^(r) for |r| <= m, stored at r + m.
std::vector<cplx> alias_products(const ClassElement &elem, const CoefficientSequence &beta, Index m) {
    std::vector<cplx> a(static_cast<std::size_t>(2 * m + 1));
    for (Index r = -m; r <= m; ++r) {
        cplx gr = elem.g.coeff1(r);
        if (gr == cplx(0.0)) continue;
        a[static_cast<std::size_t>(r + m)] = beta.value1(r) / elem.lambda.value1(r) * gr;
    }
    return a;
}

double l2(std::span<const cplx> v) {
    double s = 0.0;
    for (cplx x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

ClassElement::ClassElement(CoefficientSequence lambda_, SpectralFunction g_, double p_)
    : lambda(std::move(lambda_)), g(std::move(g_)), p(p_) {
    if (lambda.dimension() != g.dimension()) throw std::invalid_argument("lambda and g dimensions differ");
    check_p(p);
}

cplx ClassElement::f_hat(const FrequencyIndex &k) const {
    cplx gk = g[k];
    if (gk == cplx(0.0)) return gk;
    return lambda.reciprocal(k) * gk;
}

SpectralFunction ClassElement::f() const {
    SpectralFunction out = g;
    auto d = out.data();
    if (dimension() == 1) {
        for (Index k = -g.radius(); k <= g.radius(); ++k)
            if (out.coeff1(k) != cplx(0.0)) out.at1(k) *= lambda.reciprocal1(k);
        return out;
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != cplx(0.0)) d[i] *= lambda.reciprocal(out.index_of(i));
    return out;
}

double ClassElement::class_norm(int oversample) const { return lp_norm(g, p, oversample); }

std::vector<double> TranslateApproximant::node(std::size_t flat) const {
    std::vector<double> x(static_cast<std::size_t>(dim));
    const auto n = static_cast<std::size_t>(nodes_per_axis());
    for (int j = dim - 1; j >= 0; --j) {
        x[static_cast<std::size_t>(j)] = delta * static_cast<double>(flat % n);
        flat /= n;
    }
    return x;
}

Index k_prime(Index k, Index m) {
    check_m(m);
    return pos_mod(k + m, 2 * m + 1) - m;
}

SpectralFunction build_Hm(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m) {
    check_m(m);
    check_univariate(lambda, "lambda");
    check_univariate(beta, "beta");
    SpectralFunction h(1, m);
    for (Index k = -m; k <= m; ++k) h.at1(k) = beta.value1(k) / lambda.value1(k);
    return h;
}

std::vector<cplx> vm_samples(const SpectralFunction &g, const SpectralFunction &hm, Index m) {
    check_m(m);
    if (g.dimension() != 1 || hm.dimension() != 1) throw std::invalid_argument("vm_samples is one-dimensional");
    const Index n = 2 * m + 1;
    std::vector<cplx> v(static_cast<std::size_t>(n));
    const Index r = std::min({g.radius(), hm.radius(), m});
    for (Index k = -r; k <= r; ++k) v[static_cast<std::size_t>(pos_mod(k, n))] += hm.coeff1(k) * g.coeff1(k);
    dft_inplace(v, 1, n, +1);
    return v;
}

double generator_tail_bound(const CoefficientSequence &beta, Index k_gen) {
    check_univariate(beta, "beta");
    return 2.0 * beta.progression_sum(static_cast<double>(k_gen + 1), 1.0, 1.0);
}

Index default_k_gen(const CoefficientSequence &beta, Index m) {
    check_m(m);
    constexpr double target = 1e-10;
    Index hi = std::max<Index>(50 * m, 1000);
    if (!(generator_tail_bound(beta, hi) < target)) return hi;
    Index lo = m;
    if (generator_tail_bound(beta, lo) < target) return lo;
    while (hi - lo > 1) {
        Index mid = lo + (hi - lo) / 2;
        (generator_tail_bound(beta, mid) < target ? hi : lo) = mid;
    }
    return hi;
}

TranslateApproximant assemble_Qm(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                 std::optional<Index> k_gen) {
    check_m(m);
    if (elem.dimension() != 1) throw std::invalid_argument("assemble_Qm: element must be univariate");
    check_univariate(beta, "beta");
    const Index kg = k_gen.value_or(default_k_gen(beta, m));
    if (kg < m) throw std::invalid_argument("K_gen must be >= m");
    TranslateApproximant a{beta, m, 1, kTwoPi / static_cast<double>(2 * m + 1), {}, kg, 0.0};
    a.weights = vm_samples(elem.g, build_Hm(elem.lambda, beta, m), m);
    const double scale = 1.0 / static_cast<double>(2 * m + 1);
    for (auto &w : a.weights) w *= scale;
    a.generator_tail = generator_tail_bound(beta, kg);
    return a;
}

double image_tail_bound(const CoefficientSequence &beta, Index m, Index k_out, double alias_l2) {
    if (alias_l2 == 0.0) return 0.0;
    double s = beta.progression_sum(static_cast<double>(k_out + 1), static_cast<double>(2 * m + 1), 2.0);
    return alias_l2 * std::sqrt(2.0 * s);
}

Index choose_k_out(const ClassElement &elem, const CoefficientSequence &beta, Index m, const BandPolicy &policy,
                   double *tail) {
    check_m(m);
    const double a = l2(alias_products(elem, beta, m));
    const Index base = std::max(elem.g.bandwidth(), m);
    Index k = base;
    double t = image_tail_bound(beta, m, k, a);
    for (Index j = 1; j <= policy.j_cap && t > policy.tol; ++j) {
        k = base + j * (2 * m + 1);
        t = image_tail_bound(beta, m, k, a);
    }
    if (tail) *tail = t;
    return k;
}

SpectralImage spectral_image(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                             std::optional<Index> k_out) {
    check_m(m);
    if (elem.dimension() != 1) throw std::invalid_argument("spectral_image: element must be univariate");
    check_univariate(beta, "beta");
    const Index K = k_out.value_or(choose_k_out(elem, beta, m, BandPolicy{}));
    if (K < m) throw std::invalid_argument("K_out must be >= m");
    const auto a = alias_products(elem, beta, m);
    SpectralImage img{SpectralFunction(1, K), K, image_tail_bound(beta, m, K, l2(a))};
    for (Index k = -m; k <= m; ++k) {
        cplx gk = elem.g.coeff1(k);
        if (gk != cplx(0.0)) img.coeffs.at1(k) = elem.lambda.reciprocal1(k) * gk;
    }
    for (Index k = m + 1; k <= K; ++k) {
        for (Index kk : {k, -k}) {
            cplx ar = a[static_cast<std::size_t>(k_prime(kk, m) + m)];
            if (ar != cplx(0.0)) img.coeffs.at1(kk) = ar * beta.reciprocal1(kk);
        }
    }
    return img;
}

std::vector<cplx> evaluate_approximant(const TranslateApproximant &a, std::span<const double> xs, Exec exec) {
    if (a.dim == 1) {
        std::vector<cplx> gen(static_cast<std::size_t>(2 * a.k_gen + 1));
        for (Index k = -a.k_gen; k <= a.k_gen; ++k) gen[static_cast<std::size_t>(k + a.k_gen)] = a.beta.reciprocal1(k);
        return translate_sum_1d(a.weights, a.delta, gen, xs, exec);
    }
    // d > 1: xs holds points back to back; direct translate sum.
    const auto d = static_cast<std::size_t>(a.dim);
    if (xs.size() % d != 0) throw std::invalid_argument("point array length must be a multiple of the dimension");
    SpectralFunction gen(a.dim, a.k_gen);
    auto gd = gen.data();
    for (std::size_t i = 0; i < gd.size(); ++i) gd[i] = a.beta.reciprocal(gen.index_of(i));
    const auto npts = static_cast<Index>(xs.size() / d);
    std::vector<cplx> out(static_cast<std::size_t>(npts));
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (Index i = 0; i < npts; ++i) {
        cplx s(0.0);
        std::vector<double> t(d);
        for (std::size_t l = 0; l < a.weights.size(); ++l) {
            if (a.weights[l] == cplx(0.0)) continue;
            auto y = a.node(l);
            for (std::size_t j = 0; j < d; ++j) t[j] = xs[static_cast<std::size_t>(i) * d + j] - y[j];
            s += a.weights[l] * evaluate(gen, t);
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

ErrorValue approximation_error(const ClassElement &elem, const CoefficientSequence &beta, Index m, double p,
                               const ErrorMethod &method) {
    check_m(m);
    check_p(p);
    if (elem.dimension() != 1) throw std::invalid_argument("approximation_error: element must be univariate");
    check_univariate(beta, "beta");
    if (method.kind == ErrorMethod::Kind::parseval && p != 2.0)
        throw std::invalid_argument("the Parseval oracle needs p = 2");
    const Index bg = elem.g.bandwidth();
    const Index K = method.k_out.value_or(choose_k_out(elem, beta, m, method.band));
    if (K < std::max(bg, m)) throw std::invalid_argument("K_out must cover both m and the bandwidth of g");
    const auto a = alias_products(elem, beta, m);
    ErrorValue out{0.0, K, image_tail_bound(beta, m, K, l2(a))};

    if (method.kind == ErrorMethod::Kind::parseval) {
        auto term = [&](Index i) {
            const Index k = m + 1 + i;
            double s = 0.0;
            for (Index kk : {k, -k}) {
                cplx q = a[static_cast<std::size_t>(k_prime(kk, m) + m)];
                cplx d = q == cplx(0.0) ? q : q * beta.reciprocal1(kk);
                if (k <= bg) {
                    cplx gk = elem.g.coeff1(kk);
                    if (gk != cplx(0.0)) d -= elem.lambda.reciprocal1(kk) * gk;
                }
                s += std::norm(d);
            }
            return s;
        };
        out.value = std::sqrt(blocked_sum(K - m, term));
        return out;
    }

    // Quadrature route: coefficients of Q_m f from the DFT of the assembled weights.
    const Index n = 2 * m + 1;
    std::vector<cplx> c = vm_samples(elem.g, build_Hm(elem.lambda, beta, m), m);
    for (auto &w : c) w /= static_cast<double>(n);
    dft_inplace(c, 1, n, -1);
    SpectralFunction diff(1, K);
    auto dd = diff.data();
#pragma omp parallel for schedule(static)
    for (Index k = -K; k <= K; ++k) {
        cplx ck = c[static_cast<std::size_t>(pos_mod(k, n))];
        cplx d = ck == cplx(0.0) ? ck : -beta.reciprocal1(k) * ck;
        if (k >= -bg && k <= bg) {
            cplx gk = elem.g.coeff1(k);
            if (gk != cplx(0.0)) d += elem.lambda.reciprocal1(k) * gk;
        }
        dd[static_cast<std::size_t>(k + K)] = d;
    }
    out.value = lp_norm_quadrature(diff, p, method.oversample);
    return out;
}

ErrorValue single_mode_error(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index k0,
                             double p, const ErrorMethod &method) {
    check_m(m);
    check_p(p);
    check_univariate(lambda, "lambda");
    check_univariate(beta, "beta");
    if (k0 < -m || k0 > m) throw std::invalid_argument("single-mode probe needs |k0| <= m");
    if (method.kind == ErrorMethod::Kind::parseval && p != 2.0)
        throw std::invalid_argument("the Parseval oracle needs p = 2");
    const Index n = 2 * m + 1;
    const double amp = std::abs(beta.value1(k0) / lambda.value1(k0));
    auto tail_after = [&](Index J) {
        if (amp == 0.0) return 0.0;
        double first = static_cast<double>(n * (J + 1) - m);
        return amp * std::sqrt(2.0 * beta.progression_sum(first, static_cast<double>(n), 2.0));
    };
    Index J = 1;
    if (method.k_out) {
        J = std::max<Index>(1, (*method.k_out - m) / n);
    } else {
        while (J < method.band.j_cap && tail_after(J) > method.band.tol) ++J;
    }
    ErrorValue out{0.0, m + J * n, tail_after(J)};
    const cplx alpha = beta.value1(k0) / lambda.value1(k0);
    SpectralFunction h(1, J);
    for (Index j = 1; j <= J; ++j) {
        h.at1(j) = alpha * beta.reciprocal1(k0 + n * j);
        h.at1(-j) = alpha * beta.reciprocal1(k0 - n * j);
    }
    out.value = method.kind == ErrorMethod::Kind::parseval ? l2_norm(h)
                                                            : lp_norm_quadrature(h, p, method.oversample);
    return out;
}

} // namespace translates
