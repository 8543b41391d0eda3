#include "translates/approximant_md.hpp"

#include "translates/fft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace translates {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_m(Index m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
}

void check_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in (1, inf)");
}

std::size_t ipow(Index base, int d) {
    std::size_t n = 1;
    for (int j = 0; j < d; ++j) n *= static_cast<std::size_t>(base);
    return n;
}

void check_box(Index radius, int d) {
    if (std::pow(2.0 * static_cast<double>(radius) + 1.0, d) > 6e7)
        throw std::length_error("coefficient box |k|_inf <= " + std::to_string(radius) + " too large");
}

// Sum over the shells |k|_inf = t > K of shell(t) * envelope(t)^q.
double shell_tail(const CoefficientSequence &s, Index K, double q) {
    const int d = s.dimension();
    double sum = 0.0;
    for (Index t = K + 1; t <= K + 2'000'000; ++t) {
        const double td = static_cast<double>(t);
        const double shell = std::pow(2.0 * td + 1.0, d) - std::pow(2.0 * td - 1.0, d);
        const double e = s.envelope(td);
        if (e == 0.0) return sum;
        const double term = shell * std::pow(e, q);
        sum += term;
        if (term * td < 1e-30 || term * td < 1e-18 * sum) return sum;
    }
    return kInf;
}

// beta_k^{-1} on the box |k|_inf <= K, lexicographic.
std::vector<cplx> reciprocal_box(const CoefficientSequence &s, Index K) {
    const int d = s.dimension();
    check_box(K, d);
    const Index side = 2 * K + 1;
    std::vector<cplx> out(ipow(side, d));
    if (auto f = s.factors()) {
        std::vector<std::vector<cplx>> axis(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) {
            axis[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(side));
            for (Index k = -K; k <= K; ++k)
                axis[static_cast<std::size_t>(a)][static_cast<std::size_t>(k + K)] = (*f)[static_cast<std::size_t>(a)].reciprocal1(k);
        }
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::size_t rem = i;
            cplx v(1.0);
            for (int a = d - 1; a >= 0; --a) {
                v *= axis[static_cast<std::size_t>(a)][rem % static_cast<std::size_t>(side)];
                rem /= static_cast<std::size_t>(side);
            }
            out[i] = v;
        }
        return out;
    }
    SpectralFunction box(d, K);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.reciprocal(box.index_of(i));
    return out;
}

// Flat position of k' in the box of radius m, for a flat position in the box of radius K.
struct AliasMap {
    int d;
    Index K, m;
    std::size_t operator()(std::size_t flat, bool *inside_m, bool *inside_b = nullptr, Index b = 0,
                           std::size_t *flat_b = nullptr) const {
        const auto side = static_cast<std::size_t>(2 * K + 1);
        const Index n = 2 * m + 1;
        std::size_t out = 0, mul = 1, outb = 0, mulb = 1;
        bool in_m = true, in_b = true;
        for (int a = d - 1; a >= 0; --a) {
            const Index k = static_cast<Index>(flat % side) - K;
            flat /= side;
            if (k < -m || k > m) in_m = false;
            if (k < -b || k > b) in_b = false;
            out += static_cast<std::size_t>(pos_mod(k + m, n)) * mul;
            mul *= static_cast<std::size_t>(n);
            if (in_b) outb += static_cast<std::size_t>(k + b) * mulb;
            mulb *= static_cast<std::size_t>(2 * b + 1);
        }
        *inside_m = in_m;
        if (inside_b) *inside_b = in_b;
        if (flat_b) *flat_b = outb;
        return out;
    }
};

// a_r = alpha_r g^(r) on |r|_inf <= m.
SpectralFunction alias_products_md(const ClassElement &elem, const CoefficientSequence &beta, Index m) {
    SpectralFunction h = build_Hm_md(elem.lambda, beta, m);
    return convolve(h, elem.g.resized(m));
}

} // namespace

std::size_t MultiIndexWindow::count() const { return ipow(side(), dim); }

std::vector<Index> MultiIndexWindow::l_of(std::size_t flat) const {
    std::vector<Index> l(static_cast<std::size_t>(dim));
    for (int j = dim - 1; j >= 0; --j) {
        l[static_cast<std::size_t>(j)] = static_cast<Index>(flat % static_cast<std::size_t>(side()));
        flat /= static_cast<std::size_t>(side());
    }
    return l;
}

void check_node_budget(Index m, int dim) {
    if (std::pow(2.0 * static_cast<double>(m) + 1.0, dim) > kMaxNodes)
        throw std::length_error("(2m+1)^d exceeds the node budget of 1e7");
}

FrequencyIndex k_prime_md(const FrequencyIndex &k, Index m) {
    std::vector<Index> out(static_cast<std::size_t>(k.dimension()));
    for (int j = 0; j < k.dimension(); ++j) out[static_cast<std::size_t>(j)] = k_prime(k[j], m);
    return FrequencyIndex(std::move(out));
}

SpectralFunction build_Hm_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m) {
    check_m(m);
    if (lambda.dimension() != beta.dimension()) throw std::invalid_argument("lambda and beta dimensions differ");
    if (lambda.dimension() == 1) return build_Hm(lambda, beta, m);
    check_node_budget(m, lambda.dimension());
    SpectralFunction h(lambda.dimension(), m);
    auto d = h.data();
    for (std::size_t i = 0; i < d.size(); ++i) {
        FrequencyIndex k = h.index_of(i);
        d[i] = beta.value(k) / lambda.value(k);
    }
    return h;
}

std::vector<cplx> vm_samples_md(const SpectralFunction &g, const SpectralFunction &hm, Index m) {
    check_m(m);
    if (g.dimension() != hm.dimension()) throw std::invalid_argument("dimension mismatch");
    if (g.dimension() == 1) return vm_samples(g, hm, m);
    const int d = g.dimension();
    check_node_budget(m, d);
    const Index n = 2 * m + 1;
    SpectralFunction prod = convolve(hm.resized(m), g.resized(m));
    std::vector<cplx> v(ipow(n, d));
    auto pd = prod.data();
    for (std::size_t i = 0; i < pd.size(); ++i) {
        if (pd[i] == cplx(0.0)) continue;
        FrequencyIndex k = prod.index_of(i);
        std::size_t flat = 0;
        for (int a = 0; a < d; ++a) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(pos_mod(k[a], n));
        v[flat] += pd[i];
    }
    dft_inplace(v, d, n, +1);
    return v;
}

double generator_tail_bound_md(const CoefficientSequence &beta, Index k_gen) {
    if (beta.dimension() == 1) return generator_tail_bound(beta, k_gen);
    if (auto f = beta.factors()) {
        double total = 0.0;
        for (std::size_t a = 0; a < f->size(); ++a) {
            double t = 2.0 * (*f)[a].progression_sum(static_cast<double>(k_gen + 1), 1.0, 1.0);
            for (std::size_t b = 0; b < f->size(); ++b)
                if (b != a) t *= (*f)[b].sup_reciprocal() + 2.0 * (*f)[b].progression_sum(1.0, 1.0, 1.0);
            total += t;
        }
        return total;
    }
    return shell_tail(beta, k_gen, 1.0);
}

Index default_k_gen_md(const CoefficientSequence &beta, Index m) {
    if (beta.dimension() == 1) return default_k_gen(beta, m);
    // The direct translate sum in d > 1 is only used for small checks; keep the box modest.
    Index k = m;
    while (k < 8 * m + 32 && !(generator_tail_bound_md(beta, k) < 1e-10)) k += m;
    return k;
}

TranslateApproximant assemble_Qm_md(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                    std::optional<Index> k_gen) {
    check_m(m);
    if (elem.dimension() != beta.dimension()) throw std::invalid_argument("element and beta dimensions differ");
    if (elem.dimension() == 1) return assemble_Qm(elem, beta, m, k_gen);
    const int d = elem.dimension();
    check_node_budget(m, d);
    const Index kg = k_gen.value_or(default_k_gen_md(beta, m));
    if (kg < m) throw std::invalid_argument("K_gen must be >= m");
    TranslateApproximant a{beta, m, d, kTwoPi / static_cast<double>(2 * m + 1), {}, kg, 0.0};
    a.weights = vm_samples_md(elem.g, build_Hm_md(elem.lambda, beta, m), m);
    const double scale = 1.0 / static_cast<double>(a.weights.size());
    for (auto &w : a.weights) w *= scale;
    a.generator_tail = generator_tail_bound_md(beta, kg);
    return a;
}

double image_tail_bound_md(const CoefficientSequence &beta, Index m, Index k_out, double alias_l2) {
    if (beta.dimension() == 1) return image_tail_bound(beta, m, k_out, alias_l2);
    if (alias_l2 == 0.0) return 0.0;
    const double n = static_cast<double>(2 * m + 1);
    double s = 0.0;
    if (auto f = beta.factors()) {
        for (std::size_t a = 0; a < f->size(); ++a) {
            double t = 2.0 * (*f)[a].progression_sum(static_cast<double>(k_out + 1), n, 2.0);
            for (std::size_t b = 0; b < f->size(); ++b) {
                if (b == a) continue;
                const double sup = (*f)[b].sup_reciprocal();
                t *= sup * sup + 2.0 * (*f)[b].progression_sum(static_cast<double>(m + 1), n, 2.0);
            }
            s += t;
        }
    } else {
        s = shell_tail(beta, k_out, 2.0);
    }
    return alias_l2 * std::sqrt(s);
}

Index choose_k_out_md(const ClassElement &elem, const CoefficientSequence &beta, Index m, const BandPolicy &policy,
                      double *tail) {
    if (elem.dimension() == 1) return choose_k_out(elem, beta, m, policy, tail);
    const double a = l2_norm(alias_products_md(elem, beta, m));
    const Index base = std::max(elem.g.bandwidth(), m);
    Index k = base;
    double t = image_tail_bound_md(beta, m, k, a);
    for (Index j = 1; j <= policy.j_cap && t > policy.tol; ++j) {
        k = base + j * (2 * m + 1);
        t = image_tail_bound_md(beta, m, k, a);
    }
    if (tail) *tail = t;
    return k;
}

SpectralImage spectral_image_md(const ClassElement &elem, const CoefficientSequence &beta, Index m,
                                std::optional<Index> k_out) {
    check_m(m);
    if (elem.dimension() != beta.dimension()) throw std::invalid_argument("element and beta dimensions differ");
    if (elem.dimension() == 1) return spectral_image(elem, beta, m, k_out);
    const int d = elem.dimension();
    const Index K = k_out.value_or(choose_k_out_md(elem, beta, m, md_parseval_band()));
    if (K < m) throw std::invalid_argument("K_out must be >= m");
    const SpectralFunction a = alias_products_md(elem, beta, m);
    const auto ad = a.data();
    const auto rb = reciprocal_box(beta, K);
    const SpectralFunction fk = elem.f().resized(m);
    const auto fd = fk.data();
    SpectralImage img{SpectralFunction(d, K), K, image_tail_bound_md(beta, m, K, l2_norm(a))};
    auto out = img.coeffs.data();
    const AliasMap alias{d, K, m};
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool in_m = false;
        std::size_t r = alias(i, &in_m);
        out[i] = in_m ? fd[r] : ad[r] * rb[i];
    }
    return img;
}

ErrorValue approximation_error_md(const ClassElement &elem, const CoefficientSequence &beta, Index m, double p,
                                  const ErrorMethod &method) {
    check_m(m);
    check_p(p);
    if (elem.dimension() != beta.dimension()) throw std::invalid_argument("element and beta dimensions differ");
    if (elem.dimension() == 1) return approximation_error(elem, beta, m, p, method);
    if (method.kind == ErrorMethod::Kind::parseval && p != 2.0)
        throw std::invalid_argument("the Parseval oracle needs p = 2");
    const int d = elem.dimension();
    check_node_budget(m, d);
    const Index bg = elem.g.bandwidth();
    const Index K = method.k_out.value_or(choose_k_out_md(elem, beta, m, method.band));
    if (K < std::max(bg, m)) throw std::invalid_argument("K_out must cover both m and the bandwidth of g");
    const SpectralFunction a = alias_products_md(elem, beta, m);
    ErrorValue out{0.0, K, image_tail_bound_md(beta, m, K, l2_norm(a))};
    const auto rb = reciprocal_box(beta, K);
    const SpectralFunction fb = elem.f().resized(bg);
    const auto fd = fb.data();
    const AliasMap alias{d, K, m};
    const auto total = static_cast<Index>(rb.size());

    if (method.kind == ErrorMethod::Kind::parseval) {
        const auto ad = a.data();
        auto term = [&](Index i) {
            bool in_m = false, in_b = false;
            std::size_t fb_flat = 0;
            std::size_t r = alias(static_cast<std::size_t>(i), &in_m, &in_b, bg, &fb_flat);
            if (in_m) return 0.0;
            cplx v = ad[r] * rb[static_cast<std::size_t>(i)];
            if (in_b) v -= fd[fb_flat];
            return std::norm(v);
        };
        out.value = std::sqrt(blocked_sum(total, term));
        return out;
    }

    const Index n = 2 * m + 1;
    std::vector<cplx> c = vm_samples_md(elem.g, build_Hm_md(elem.lambda, beta, m), m);
    for (auto &w : c) w /= static_cast<double>(c.size());
    dft_inplace(c, d, n, -1);
    // c is indexed by k mod n while AliasMap yields k' + m per axis.
    std::vector<cplx> c_centered(c.size());
    {
        MultiIndexWindow w{m, d};
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto l = w.l_of(i);
            std::size_t flat = 0;
            for (int j = 0; j < d; ++j)
                flat = flat * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(pos_mod(l[static_cast<std::size_t>(j)] - m, n));
            c_centered[i] = c[flat];
        }
    }
    SpectralFunction diff(d, K);
    auto dd = diff.data();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < dd.size(); ++i) {
        bool in_b = false, in_m = false;
        std::size_t fb_flat = 0;
        std::size_t r = alias(i, &in_m, &in_b, bg, &fb_flat);
        cplx v = -rb[i] * c_centered[r];
        if (in_b) v += fd[fb_flat];
        dd[i] = v;
    }
    out.value = lp_norm_quadrature(diff, p, method.oversample);
    return out;
}

ErrorValue single_mode_error_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                                const FrequencyIndex &k0, double p, const ErrorMethod &method) {
    check_m(m);
    check_p(p);
    if (lambda.dimension() != beta.dimension() || k0.dimension() != beta.dimension())
        throw std::invalid_argument("dimension mismatch");
    if (beta.dimension() == 1) return single_mode_error(lambda, beta, m, k0[0], p, method);
    if (k0.norm_inf() > m) throw std::invalid_argument("single-mode probe needs |k0|_inf <= m");
    if (method.kind == ErrorMethod::Kind::parseval && p != 2.0)
        throw std::invalid_argument("the Parseval oracle needs p = 2");
    const int d = beta.dimension();
    const Index n = 2 * m + 1;
    const cplx alpha = beta.value(k0) / lambda.value(k0);
    const double amp = std::abs(alpha);
    auto tail_after = [&](Index J) { return image_tail_bound_md(beta, m, m + J * n, amp); };

    Index J = 1;
    if (method.k_out) {
        J = std::max<Index>(1, (*method.k_out - m) / n);
    } else {
        while (J < method.band.j_cap && tail_after(J) > method.band.tol) ++J;
    }
    ErrorValue out{0.0, m + J * n, tail_after(J)};

    auto f = beta.factors();
    if (method.kind == ErrorMethod::Kind::parseval && f && !method.k_out) {
        // sum_{j != 0} prod_a |b_a(j_a)|^2 = prod_a S_a - prod_a |b_a(0)|^2, expanded to avoid cancellation.
        const Index J1 = 4096;
        double base = 1.0, excess = 0.0, tail = 0.0;
        for (int a = 0; a < d; ++a) {
            const auto &fa = (*f)[static_cast<std::size_t>(a)];
            const Index r = k0[a];
            const double s0 = std::norm(fa.reciprocal1(r));
            double rest = 0.0;
            for (Index j = J1; j >= 1; --j) rest += std::norm(fa.reciprocal1(r + n * j)) + std::norm(fa.reciprocal1(r - n * j));
            tail += 2.0 * fa.progression_sum(static_cast<double>(n * (J1 + 1) - m), static_cast<double>(n), 2.0);
            excess = excess * (s0 + rest) + base * rest;
            base *= s0;
        }
        out.value = amp * std::sqrt(excess);
        out.k_out = m + J1 * n;
        out.tail_bound = amp * std::sqrt(tail);
        return out;
    }

    SpectralFunction h(d, J);
    auto hd = h.data();
    for (std::size_t i = 0; i < hd.size(); ++i) {
        FrequencyIndex j = h.index_of(i);
        if (j.norm_inf() == 0) continue;
        std::vector<Index> k(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) k[static_cast<std::size_t>(a)] = k0[a] + n * j[a];
        hd[i] = alpha * beta.reciprocal(FrequencyIndex(std::move(k)));
    }
    out.value = method.kind == ErrorMethod::Kind::parseval ? l2_norm(h) : lp_norm_quadrature(h, p, method.oversample);
    return out;
}

} // namespace translates
