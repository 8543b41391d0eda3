#include "translates/error_budget.hpp"

#include "translates/approximant.hpp"
#include "translates/approximant_md.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace translates {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Index kWork = Index{1} << 22;

void check_m(Index m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
}

std::vector<cplx> alpha_values(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m) {
    std::vector<cplx> a(static_cast<std::size_t>(2 * m + 1));
    for (Index r = -m; r <= m; ++r) a[static_cast<std::size_t>(r + m)] = beta.value1(r) / lambda.value1(r);
    return a;
}

double max_abs(std::span<const cplx> v) {
    double best = 0.0;
    for (cplx x : v) best = std::max(best, std::abs(x));
    return best;
}

// max_r |alpha_r| |beta^{-1}_{r + n j}|
double block_max(std::span<const double> alpha_abs, const CoefficientSequence &beta, Index m, Index j) {
    const Index n = 2 * m + 1;
    double best = 0.0;
    for (Index r = -m; r <= m; ++r) {
        const double a = alpha_abs[static_cast<std::size_t>(r + m)];
        if (a == 0.0) continue;
        best = std::max(best, a * std::abs(beta.reciprocal1(r + n * j)));
    }
    return best;
}

std::vector<double> abs_of(std::span<const cplx> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
    return out;
}

// prod_a (b_a + r_a) - prod_a b_a without cancellation.
double product_excess(std::span<const double> base, std::span<const double> rest) {
    double b = 1.0, e = 0.0;
    for (std::size_t a = 0; a < base.size(); ++a) {
        e = e * (base[a] + rest[a]) + b * rest[a];
        b *= base[a];
    }
    return e;
}

bool both_factorize(const CoefficientSequence &lambda, const CoefficientSequence &beta,
                    std::vector<CoefficientSequence> &lf, std::vector<CoefficientSequence> &bf) {
    auto l = lambda.factors();
    auto b = beta.factors();
    if (!l || !b) return false;
    lf = std::move(*l);
    bf = std::move(*b);
    return true;
}

// One axis of a product budget: G(j) = max_r |alpha(r)||beta^{-1}(r + n j)|.
struct AxisGamma {
    double g0sq = 0.0;   // G(0)^2
    double rest = 0.0;   // sum_{0 < |j| <= J} G(j)^2
    double tail = 0.0;   // bound on sum_{|j| > J} G(j)^2
};

AxisGamma axis_gamma(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index J) {
    const Index n = 2 * m + 1;
    const auto alpha = abs_of(alpha_values(lambda, beta, m));
    const double amax = *std::max_element(alpha.begin(), alpha.end());
    AxisGamma out;
    const double g0 = block_max(alpha, beta, m, 0);
    out.g0sq = g0 * g0;
    out.rest = blocked_sum(J, [&](Index i) {
        const double gp = block_max(alpha, beta, m, i + 1);
        const double gm = block_max(alpha, beta, m, -(i + 1));
        return gp * gp + gm * gm;
    });
    out.tail = amax * amax * 2.0 *
               beta.progression_sum(static_cast<double>(n * (J + 1) - m), static_cast<double>(n), 2.0);
    return out;
}

void finish(EpsilonReport &r) {
    r.value = 0.0;
    for (const auto &[name, v] : r.components) r.value = std::max(r.value, v);
    r.tail_dominated = !(r.tail_bound <= 0.01 * r.value);
}

} // namespace

std::string to_string(EpsilonVariant v) {
    switch (v) {
    case EpsilonVariant::p2_univariate: return "p2_univariate";
    case EpsilonVariant::general_p: return "general_p";
    case EpsilonVariant::p2_multivariate: return "p2_multivariate";
    }
    return "?";
}

double EpsilonReport::component(std::string_view name) const {
    for (const auto &[n, v] : components)
        if (n == name) return v;
    throw std::out_of_range("no component named " + std::string(name));
}

cplx gamma_k(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index k) {
    const Index kp = k_prime(k, m);
    return beta.value1(kp) / lambda.value1(kp) * beta.reciprocal1(k);
}

cplx gamma_k_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, const FrequencyIndex &k) {
    if (k.dimension() == 1) return gamma_k(lambda, beta, m, k[0]);
    FrequencyIndex kp = k_prime_md(k, m);
    return beta.value(kp) / lambda.value(kp) * beta.reciprocal(k);
}

double alias_block_max(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m, Index j,
                       Exec exec) {
    check_m(m);
    const Index n = 2 * m + 1;
    const auto alpha = abs_of(alpha_values(lambda, beta, m));
    return blocked_max(
        n,
        [&](Index i) {
            const Index r = i - m;
            return alpha[static_cast<std::size_t>(i)] * std::abs(beta.reciprocal1(r + n * j));
        },
        exec);
}

double alias_block_max_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                          const FrequencyIndex &j, Exec exec) {
    check_m(m);
    const int d = beta.dimension();
    if (d == 1) return alias_block_max(lambda, beta, m, j[0], exec);
    check_node_budget(m, d);
    const Index n = 2 * m + 1;
    SpectralFunction box(d, m);
    return blocked_max(
        static_cast<Index>(box.size()),
        [&](Index i) {
            FrequencyIndex r = box.index_of(static_cast<std::size_t>(i));
            std::vector<Index> k(static_cast<std::size_t>(d));
            for (int a = 0; a < d; ++a) k[static_cast<std::size_t>(a)] = r[a] + n * j[a];
            return std::abs(beta.value(r) / lambda.value(r)) * std::abs(beta.reciprocal(FrequencyIndex(std::move(k))));
        },
        exec);
}

Index default_j_max(const CoefficientSequence &beta) {
    auto exp_like = [](const CoefficientSequence &s) {
        Family f = s.family();
        return f == Family::exponential || f == Family::exponent_mask || f == Family::band_limited;
    };
    if (auto f = beta.factors(); f && std::all_of(f->begin(), f->end(), exp_like)) return 1000;
    if (exp_like(beta)) return 1000;
    return 100000;
}

double sup_reciprocal_beyond(const CoefficientSequence &seq, Index m, Index scan) {
    if (seq.dimension() != 1) return sup_reciprocal_beyond_md(seq, m);
    double best = 0.0;
    for (Index k = m + 1; k <= m + scan; ++k)
        best = std::max({best, std::abs(seq.reciprocal1(k)), std::abs(seq.reciprocal1(-k))});
    return std::max(best, seq.envelope(static_cast<double>(m + scan + 1)));
}

double sup_reciprocal_beyond_md(const CoefficientSequence &seq, Index m) {
    const int d = seq.dimension();
    if (d == 1) return sup_reciprocal_beyond(seq, m);
    if (auto f = seq.factors()) {
        std::vector<double> beyond, all;
        for (const auto &fa : *f) {
            double b = sup_reciprocal_beyond(fa, m);
            double in = 0.0;
            for (Index k = -m; k <= m; ++k) in = std::max(in, std::abs(fa.reciprocal1(k)));
            beyond.push_back(b);
            all.push_back(std::max(in, b));
        }
        double best = 0.0;
        for (std::size_t a = 0; a < beyond.size(); ++a) {
            double v = beyond[a];
            for (std::size_t b = 0; b < all.size(); ++b)
                if (b != a) v *= all[b];
            best = std::max(best, v);
        }
        return best;
    }
    const Index shells = 16;
    SpectralFunction box(d, m + shells);
    double best = 0.0;
    for (std::size_t i = 0; i < box.size(); ++i) {
        FrequencyIndex k = box.index_of(i);
        if (k.norm_inf() > m) best = std::max(best, std::abs(seq.reciprocal(k)));
    }
    return std::max(best, seq.envelope(static_cast<double>(m + shells + 1)));
}

double difference_tail(const CoefficientSequence &seq, Index K) {
    const double next = static_cast<double>(K + 1);
    auto generic = [&] { return 2.0 * seq.progression_sum(next, 1.0, 1.0); };
    switch (seq.family()) {
    case Family::korobov:
    case Family::exponential:
    case Family::exponent_mask:
        // reciprocals decrease monotonically, so the differences telescope
        return seq.envelope(next);
    case Family::constant:
        return 0.0;
    case Family::mask_power: {
        if (K < 3) return generic();
        const double r = seq.parameter();
        return (r + 2.0) * seq.mask()->bound() * std::pow(static_cast<double>(K), -r) / r;
    }
    case Family::power: {
        auto b = seq.base();
        Family bf = b->family();
        bool monotone = bf == Family::korobov || bf == Family::exponential || bf == Family::exponent_mask;
        if (monotone && seq.parameter() > 0.0) return seq.envelope(next);
        return generic();
    }
    case Family::band_limited:
        if (K >= static_cast<Index>(seq.parameter())) return 0.0;
        return generic();
    default:
        return generic();
    }
}

EpsilonReport epsilon_p2(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                         std::optional<Index> j_max) {
    check_m(m);
    if (lambda.dimension() != 1 || beta.dimension() != 1) throw std::invalid_argument("epsilon_p2 is univariate");
    const Index J = j_max.value_or(default_j_max(beta));
    if (J < 1) throw std::invalid_argument("J_max must be >= 1");
    const Index n = 2 * m + 1;
    const Index Jeff = std::min(J, std::max<Index>(1, kWork / n));

    AxisGamma ag = axis_gamma(lambda, beta, m, Jeff);
    const double explicit_term = std::sqrt(ag.rest);
    const double gamma_term = std::sqrt(ag.rest + ag.tail);
    const double sup = sup_reciprocal_beyond(lambda, m);

    EpsilonReport r;
    r.variant = EpsilonVariant::p2_univariate;
    r.truncation_radius = Jeff;
    r.components = {{"sup", sup}, {"gamma_sum", gamma_term}};
    r.tail_bound = gamma_term >= sup ? gamma_term - explicit_term : 0.0;
    finish(r);
    return r;
}

EpsilonReport epsilon_general_p(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                                std::optional<Index> j_max) {
    check_m(m);
    if (lambda.dimension() != 1 || beta.dimension() != 1)
        throw std::invalid_argument("epsilon_general_p is univariate");
    const Index J = j_max.value_or(default_j_max(beta));
    if (J < 1) throw std::invalid_argument("J_max must be >= 1");
    const Index n = 2 * m + 1;
    const Index span = std::min(J * n, kWork);
    const Index KT = m + span;

    // sum_{|k| > m} |Delta lambda_k^{-1}|, the negative side traversed on the reflection
    const double dl_explicit = blocked_sum(span, [&](Index i) {
        const Index k = m + 1 + i;
        return std::abs(lambda.reciprocal1(k) - lambda.reciprocal1(k + 1)) +
               std::abs(lambda.reciprocal1(-k) - lambda.reciprocal1(-k - 1));
    });
    const double dl_tail = 2.0 * difference_tail(lambda, KT);

    const auto alpha = alpha_values(lambda, beta, m);
    auto gam = [&](Index k) {
        return alpha[static_cast<std::size_t>(k_prime(k, m) + m)] * beta.reciprocal1(k);
    };
    const double dg_explicit = blocked_sum(span, [&](Index i) {
        const Index k = m + 1 + i;
        return std::abs(gam(k) - gam(k + 1)) + std::abs(gam(-k) - gam(-k - 1));
    });
    double tv_alpha = 0.0;
    for (Index r = -m; r <= m; ++r) {
        const Index next = r == m ? -m : r + 1;
        tv_alpha += std::abs(alpha[static_cast<std::size_t>(r + m)] - alpha[static_cast<std::size_t>(next + m)]);
    }
    const double amax = max_abs(alpha);
    double dg_tail = 2.0 * amax * difference_tail(beta, KT);
    if (tv_alpha > 0.0)
        dg_tail += 2.0 * tv_alpha * beta.progression_sum(static_cast<double>(KT + 1), static_cast<double>(n), 1.0);

    // sum_{k in Z} |gamma_{k(2m+1)+m}| = |alpha_m| sum_k |beta^{-1}_{kn+m}|
    const Index Jg = std::min(J, kWork);
    const double am = std::abs(alpha[static_cast<std::size_t>(2 * m)]);
    const double ga_explicit =
        am * (std::abs(beta.reciprocal1(m)) + blocked_sum(Jg, [&](Index i) {
                  const Index k = i + 1;
                  return std::abs(beta.reciprocal1(k * n + m)) + std::abs(beta.reciprocal1(-k * n + m));
              }));
    const double ga_tail =
        am == 0.0 ? 0.0
                  : am * (beta.progression_sum(static_cast<double>(n * (Jg + 1) + m), static_cast<double>(n), 1.0) +
                          beta.progression_sum(static_cast<double>(n * (Jg + 1) - m), static_cast<double>(n), 1.0));

    EpsilonReport r;
    r.variant = EpsilonVariant::general_p;
    r.truncation_radius = KT;
    const double dl = dl_explicit + dl_tail;
    const double dg = dg_explicit + dg_tail;
    const double ga = ga_explicit + ga_tail;
    r.components = {{"delta_lambda", dl}, {"delta_gamma", dg}, {"gamma_alias", ga}, {"gamma_total", dg + ga}};
    r.value = std::max(dl, dg + ga);
    r.tail_bound = dl >= dg + ga ? dl_tail : dg_tail + ga_tail;
    r.tail_dominated = std::isinf(r.value) || !(r.tail_bound <= 0.01 * r.value);
    return r;
}

EpsilonReport epsilon_p2_md(const CoefficientSequence &lambda, const CoefficientSequence &beta, Index m,
                            std::optional<Index> j_max) {
    check_m(m);
    if (lambda.dimension() != beta.dimension()) throw std::invalid_argument("lambda and beta dimensions differ");
    const int d = beta.dimension();
    if (d == 1) return epsilon_p2(lambda, beta, m, j_max);
    check_node_budget(m, d);
    const Index J = j_max.value_or(default_j_max(beta));
    if (J < 1) throw std::invalid_argument("J_max must be >= 1");
    const Index n = 2 * m + 1;

    EpsilonReport r;
    r.variant = EpsilonVariant::p2_multivariate;
    const double sup = sup_reciprocal_beyond_md(lambda, m);

    std::vector<CoefficientSequence> lf, bf;
    double explicit_sq = 0.0, upper_sq = 0.0;
    if (both_factorize(lambda, beta, lf, bf)) {
        // Gamma_{m,j} = prod_a G_a(j_a), so sum_{j != 0} = prod_a S_a - prod_a G_a(0)^2.
        const Index Jeff = std::min(J, std::max<Index>(1, kWork / n));
        std::vector<double> base, rest, rest_up;
        for (int a = 0; a < d; ++a) {
            AxisGamma ag = axis_gamma(lf[static_cast<std::size_t>(a)], bf[static_cast<std::size_t>(a)], m, Jeff);
            base.push_back(ag.g0sq);
            rest.push_back(ag.rest);
            rest_up.push_back(ag.rest + ag.tail);
        }
        explicit_sq = product_excess(base, rest);
        upper_sq = product_excess(base, rest_up);
        r.truncation_radius = Jeff;
    } else {
        // Direct enumeration over the j box, alias blocks of (2m+1)^d indices each.
        const double inner = std::pow(static_cast<double>(n), d);
        Index Jmd = 1;
        while (Jmd < J && std::pow(2.0 * static_cast<double>(Jmd + 1) + 1.0, d) * inner <= static_cast<double>(kWork) * 4)
            ++Jmd;
        SpectralFunction jbox(d, Jmd);
        for (std::size_t i = 0; i < jbox.size(); ++i) {
            FrequencyIndex j = jbox.index_of(i);
            if (j.norm_inf() == 0) continue;
            const double g = alias_block_max_md(lambda, beta, m, j);
            explicit_sq += g * g;
        }
        double amax = 0.0;
        for (cplx v : build_Hm_md(lambda, beta, m).data()) amax = std::max(amax, std::abs(v));
        double tail = 0.0;
        for (Index t = Jmd + 1; t <= Jmd + 2'000'000; ++t) {
            const double td = static_cast<double>(t);
            const double shell = std::pow(2.0 * td + 1.0, d) - std::pow(2.0 * td - 1.0, d);
            const double e = beta.envelope(static_cast<double>(n) * td - static_cast<double>(m));
            const double term = shell * e * e;
            tail += term;
            if (term == 0.0 || term * td < 1e-18 * std::max(tail, 1e-300)) break;
            if (t == Jmd + 2'000'000) tail = kInf;
        }
        upper_sq = explicit_sq + amax * amax * tail;
        r.truncation_radius = Jmd;
    }
    const double explicit_term = std::sqrt(explicit_sq);
    const double gamma_term = std::sqrt(upper_sq);
    r.components = {{"sup", sup}, {"gamma_sum", gamma_term}};
    r.tail_bound = gamma_term >= sup ? gamma_term - explicit_term : 0.0;
    finish(r);
    return r;
}

// ---------------------------------------------------------------------------
// Rate predictions
// ---------------------------------------------------------------------------

namespace {

constexpr Index kProbeRadius = 64;

// Passes when the probe holds at radius 64 and its constant has not drifted
// below 95% of the radius-32 constant (a drifting constant means it tends to 0).
bool stable_probe(const ThetaFn &theta, int d, bool skip_zero, std::string &note, const std::string &what) {
    const Index r64 = d == 1 ? kProbeRadius : (d == 2 ? 48 : 16);
    auto big = check_nondecreasing_type(theta, d, r64, 1e-3, skip_zero);
    auto small = check_nondecreasing_type(theta, d, r64 / 2, 1e-3, skip_zero);
    const bool ok = big.holds && big.constant >= 0.95 * small.constant;
    note += what + (ok ? " probe-certified; " : " failed probe; ");
    return ok;
}

bool is_korobov(const CoefficientSequence &s, double *r) {
    if (s.dimension() == 1) {
        if (s.family() != Family::korobov) return false;
        *r = s.parameter();
        return true;
    }
    auto f = s.factors();
    if (!f || s.family() != Family::product) return false;
    double r0 = -1.0;
    for (const auto &fa : *f) {
        if (fa.family() != Family::korobov) return false;
        if (r0 < 0.0) r0 = fa.parameter();
        if (fa.parameter() != r0) return false;
    }
    *r = r0;
    return true;
}

bool same(const CoefficientSequence &a, const CoefficientSequence &b) { return a.describe() == b.describe(); }

// |beta_k| == |lambda_k|^e on the probe box (relative 1e-12).
bool abs_power_relation(const CoefficientSequence &lambda, const CoefficientSequence &beta, double e) {
    const int d = lambda.dimension();
    const Index R = d == 1 ? kProbeRadius : 8;
    SpectralFunction box(d, R);
    for (std::size_t i = 0; i < box.size(); ++i) {
        FrequencyIndex k = box.index_of(i);
        const double want = std::pow(std::abs(lambda.value(k)), e);
        const double got = std::abs(beta.value(k));
        if (!(std::abs(got - want) <= 1e-12 * want)) return false;
    }
    return true;
}

double norm2(const FrequencyIndex &k) { return k.norm2(); }

double l2_series_1d(const CoefficientSequence &lambda, Index m) {
    constexpr Index K = 20000;
    double s = 0.0;
    for (Index k = K; k >= 1; --k)
        s += std::norm(lambda.reciprocal1(m * k)) + std::norm(lambda.reciprocal1(-m * k));
    s += 2.0 * lambda.progression_sum(static_cast<double>(m * (K + 1)), static_cast<double>(m), 2.0);
    return std::sqrt(s);
}

} // namespace

double RatePrediction::at(const CoefficientSequence &lambda, Index m) const {
    const double md = static_cast<double>(m);
    switch (kind) {
    case Kind::power: return std::pow(md, -rate);
    case Kind::exponential: return std::exp(-rate * md);
    case Kind::sup_tail:
        if (lambda.dimension() == 1) return std::abs(lambda.reciprocal1(m));
        return sup_reciprocal_beyond_md(lambda, m);
    case Kind::series_l2: {
        if (lambda.dimension() == 1) return l2_series_1d(lambda, m);
        if (auto f = lambda.factors()) {
            std::vector<double> base, rest;
            for (const auto &fa : *f) {
                base.push_back(std::norm(fa.reciprocal1(0)));
                const double s = l2_series_1d(fa, m);
                rest.push_back(s * s);
            }
            return std::sqrt(product_excess(base, rest));
        }
        SpectralFunction box(lambda.dimension(), 32);
        double s = 0.0;
        for (std::size_t i = 0; i < box.size(); ++i) {
            FrequencyIndex k = box.index_of(i);
            if (k.norm_inf() == 0) continue;
            std::vector<Index> mk(k.components().begin(), k.components().end());
            for (auto &v : mk) v *= m;
            s += std::norm(lambda.reciprocal(FrequencyIndex(std::move(mk))));
        }
        return std::sqrt(s);
    }
    case Kind::series_l1: {
        constexpr Index K = 20000;
        double s = 0.0;
        for (Index k = K; k >= 1; --k) s += std::abs(lambda.reciprocal1(m * k));
        return s + lambda.progression_sum(static_cast<double>(m * (K + 1)), md, 1.0);
    }
    case Kind::none: break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string RatePrediction::describe() const {
    auto num = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    switch (kind) {
    case Kind::power: return "power(" + num(rate) + ")";
    case Kind::exponential: return "exponential(" + num(rate) + ")";
    case Kind::sup_tail: return "sup_tail";
    case Kind::series_l2: return "series_l2";
    case Kind::series_l1: return "series_l1";
    case Kind::none: return "no-theorem-applies";
    }
    return "?";
}

RatePrediction predicted_rate(const CoefficientSequence &lambda, const CoefficientSequence &beta, double p, int d) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in (1, inf)");
    if (lambda.dimension() != d || beta.dimension() != d) throw std::invalid_argument("dimension mismatch");
    RatePrediction out;
    auto set = [&](RatePrediction::Kind k, double rate, std::string rule) {
        out.kind = k;
        out.rate = rate;
        out.rule = std::move(rule);
        out.probe_certified = true;
        return out;
    };

    if (d == 1) {
        double r = 0.0;
        if (is_korobov(lambda, &r) && same(lambda, beta)) {
            if (p == 2.0) {
                if (r > 0.5) return set(RatePrediction::Kind::power, r, "korobov-l2");
                out.note = "Korobov with p = 2 needs r > 1/2";
                return out;
            }
            if (r > 1.0) return set(RatePrediction::Kind::power, r, "korobov-lp");
            out.note = "the general-p series sum_k lambda_{mk}^{-1} diverges for r <= 1";
            return out;
        }
        if (lambda.family() == Family::exponential && same(lambda, beta))
            return set(RatePrediction::Kind::exponential, lambda.parameter(), "exponential");
        if (lambda.family() == Family::mask_power && lambda.parameter() > 1.0 && lambda.mask()->check_bound()) {
            if (same(lambda, beta)) return set(RatePrediction::Kind::power, lambda.parameter(), "mask");
            if (beta.family() == Family::exponent_mask)
                return set(RatePrediction::Kind::power, lambda.parameter(), "mask-exponent");
        }
        const bool finite_l2 = std::isfinite(lambda.progression_sum(1.0, 1.0, 2.0));
        if (p == 2.0) {
            const bool sym = lambda.symmetric() && beta.symmetric();
            ThetaFn abs_lambda = [&](const FrequencyIndex &k) { return std::abs(lambda.value(k)); };
            if (sym && (abs_power_relation(lambda, beta, 1.0) || abs_power_relation(lambda, beta, 2.0))) {
                const double rr = 0.55;
                ThetaFn theta = [&](const FrequencyIndex &k) {
                    return std::abs(lambda.value(k)) / std::pow(std::abs(static_cast<double>(k[0])), rr);
                };
                if (stable_probe(theta, 1, true, out.note, "|lambda_k|/|k|^r"))
                    return set(RatePrediction::Kind::sup_tail, 0.0, "sup-tail");
            }
            if (finite_l2 && stable_probe(abs_lambda, 1, false, out.note, "|lambda_k|"))
                return set(RatePrediction::Kind::series_l2, 0.0, "series-l2");
            out.note += "no p = 2 result matched";
            return out;
        }
        // General p: symmetric, lambda nondecreasing on N, log(beta/lambda)/2^k nondecreasing on N.
        bool ok = lambda.symmetric() && beta.symmetric() && lambda.real_valued() && beta.real_valued();
        for (Index k = 0; ok && k < kProbeRadius; ++k) {
            const double a = lambda.value1(k).real(), b = lambda.value1(k + 1).real();
            if (!(a > 0.0) || b < a) ok = false;
        }
        double prev = -kInf;
        for (Index k = 1; ok && k <= kProbeRadius; ++k) {
            const double q = beta.value1(k).real() / lambda.value1(k).real();
            if (!(q > 0.0)) {
                ok = false;
                break;
            }
            const double v = std::log(q) / std::ldexp(1.0, static_cast<int>(k));
            if (v < prev - 1e-15 * std::abs(prev)) ok = false;
            prev = v;
        }
        if (ok && std::isfinite(lambda.progression_sum(1.0, 1.0, 1.0)))
            return set(RatePrediction::Kind::series_l1, 0.0, "series-l1");
        out.note = "general-p hypotheses not met";
        return out;
    }

    if (p != 2.0) {
        out.note = "multivariate results cover p = 2 only";
        return out;
    }
    const double rr = static_cast<double>(d) / 2.0 + 0.05;
    if (abs_power_relation(lambda, beta, 2.0)) {
        ThetaFn theta = [&](const FrequencyIndex &k) { return std::abs(lambda.value(k)) / std::pow(norm2(k), rr); };
        if (stable_probe(theta, d, true, out.note, "|lambda_k|/|k|^r"))
            return set(RatePrediction::Kind::sup_tail, 0.0, "sup-tail-md-squared");
    }
    {
        ThetaFn theta = [&](const FrequencyIndex &k) {
            return std::abs(beta.value(k)) / (std::pow(norm2(k), rr) * std::abs(lambda.value(k)));
        };
        if (stable_probe(theta, d, true, out.note, "|beta_k|/(|k|^r|lambda_k|)"))
            return set(RatePrediction::Kind::sup_tail, 0.0, "sup-tail-md");
    }
    {
        // |beta_k^{-1}| <= c |lambda_k^{-1}| and |lambda| nondecreasing-type
        SpectralFunction box(d, 16);
        double worst = 0.0;
        for (std::size_t i = 0; i < box.size(); ++i) {
            FrequencyIndex k = box.index_of(i);
            worst = std::max(worst, std::abs(beta.reciprocal(k)) / std::abs(lambda.reciprocal(k)));
        }
        ThetaFn abs_lambda = [&](const FrequencyIndex &k) { return std::abs(lambda.value(k)); };
        if (std::isfinite(worst) && worst <= 1e6 && stable_probe(abs_lambda, d, false, out.note, "|lambda_k|"))
            return set(RatePrediction::Kind::series_l2, 0.0, "series-l2-md");
    }
    out.note += "no multivariate result matched";
    return out;
}

} // namespace translates
