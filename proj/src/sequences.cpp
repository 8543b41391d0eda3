#include "translates/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace translates {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// MaskSpec
// ---------------------------------------------------------------------------

MaskSpec MaskSpec::constant_one() { return MaskSpec{}; }

MaskSpec MaskSpec::log_damped(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("log_damped mask needs c > 0");
    MaskSpec m;
    m.profile_ = Profile::log_damped;
    m.param_ = c;
    // sup |F| = 1, sup |F'| = 9 sqrt(c) / (8 sqrt(3))
    m.bound_ = std::max(1.0, 9.0 * std::sqrt(c) / (8.0 * std::sqrt(3.0)));
    return m;
}

MaskSpec MaskSpec::table(std::vector<double> t, std::vector<double> v, double bound) {
    if (t.size() != v.size() || t.size() < 2) throw std::invalid_argument("mask table needs >= 2 matching points");
    if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("mask table abscissae must be strictly increasing");
    if (!(bound > 0.0)) throw std::invalid_argument("mask table bound must be positive");
    MaskSpec m;
    m.profile_ = Profile::table;
    m.bound_ = bound;
    m.t_ = std::move(t);
    m.v_ = std::move(v);
    return m;
}

double MaskSpec::operator()(double t) const {
    switch (profile_) {
    case Profile::constant_one:
        return 1.0;
    case Profile::log_damped:
        return 1.0 / (1.0 + param_ * t * t);
    case Profile::table: {
        if (t <= t_.front()) return v_.front();
        if (t >= t_.back()) return v_.back();
        auto it = std::upper_bound(t_.begin(), t_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - t_.begin());
        double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
        return (1.0 - w) * v_[i - 1] + w * v_[i];
    }
    }
    return 1.0;
}

double MaskSpec::derivative(double t) const {
    switch (profile_) {
    case Profile::constant_one:
        return 0.0;
    case Profile::log_damped: {
        double den = 1.0 + param_ * t * t;
        return -2.0 * param_ * t / (den * den);
    }
    case Profile::table: {
        if (t <= t_.front() || t >= t_.back()) return 0.0;
        auto it = std::upper_bound(t_.begin(), t_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - t_.begin());
        return (v_[i] - v_[i - 1]) / (t_[i] - t_[i - 1]);
    }
    }
    return 0.0;
}

bool MaskSpec::check_bound(double t_max, int samples) const {
    for (int i = 1; i <= samples; ++i) {
        double t = 1.0 + (t_max - 1.0) * static_cast<double>(i) / samples;
        if (std::abs((*this)(t)) > bound_ || std::abs(derivative(t)) > bound_) return false;
    }
    return true;
}

std::string MaskSpec::describe() const {
    switch (profile_) {
    case Profile::constant_one:
        return "constant-one";
    case Profile::log_damped:
        return "log-damped(" + fmt_double(param_) + ")";
    case Profile::table:
        return "table(" + std::to_string(t_.size()) + ")";
    }
    return "?";
}

double mask_sequence_value(const MaskSpec &spec, double r, Index k) {
    if (k == 0) return spec.left_value();
    double a = static_cast<double>(std::llabs(k));
    return std::pow(1.0 + a, -r) * spec(std::log(a));
}

// ---------------------------------------------------------------------------
// TailRule
// ---------------------------------------------------------------------------

double TailRule::envelope(double t) const {
    switch (kind) {
    case Kind::zero:
        return 0.0;
    case Kind::constant:
        return std::abs(scale);
    case Kind::power:
        if (rate < 0.0) return kInf;
        return std::abs(scale) * std::pow(std::max(t, 1.0), -rate);
    case Kind::exponential:
        if (rate < 0.0) return kInf;
        return std::abs(scale) * std::exp(-rate * std::max(t, 0.0));
    }
    return kInf;
}

double TailRule::progression_sum(double first, double stride, double q) const {
    double c = std::pow(std::abs(scale), q);
    switch (kind) {
    case Kind::zero:
        return 0.0;
    case Kind::constant:
        return c == 0.0 ? 0.0 : kInf;
    case Kind::power: {
        double a = rate * q;
        if (a <= 1.0) return c == 0.0 ? 0.0 : kInf;
        first = std::max(first, 1.0);
        return c * (std::pow(first, -a) + std::pow(first, 1.0 - a) / (stride * (a - 1.0)));
    }
    case Kind::exponential: {
        double a = rate * q;
        if (a <= 0.0) return c == 0.0 ? 0.0 : kInf;
        return c * std::exp(-a * std::max(first, 0.0)) / (-std::expm1(-a * stride));
    }
    }
    return kInf;
}

// ---------------------------------------------------------------------------
// CoefficientSequence
// ---------------------------------------------------------------------------

std::string to_string(Family f) {
    switch (f) {
    case Family::korobov: return "korobov";
    case Family::exponential: return "exponential";
    case Family::mask_power: return "mask_power";
    case Family::exponent_mask: return "exponent_mask";
    case Family::constant: return "constant";
    case Family::product: return "product";
    case Family::custom: return "custom";
    case Family::power: return "power";
    case Family::band_limited: return "band_limited";
    }
    return "?";
}

struct CoefficientSequence::Node {
    Family family = Family::korobov;
    int dim = 1;
    double param = 0.0;
    MaskSpec mask;
    std::vector<CoefficientSequence> factors;
    std::shared_ptr<const Node> base;
    Index degree = 0;
    std::map<FrequencyIndex, cplx> table;
    Index table_radius = -1;
    TailRule tail;
    // Asymptotic rule for the reciprocals and the index from which it applies.
    TailRule asymptotic;
    double switch_at = 0.0;
};

namespace {

using Node = CoefficientSequence::Node;

Index abs_idx(Index k) { return k < 0 ? -k : k; }

} // namespace

CoefficientSequence CoefficientSequence::korobov(double r, int dim) {
    if (!(r > 0.0)) throw std::invalid_argument("korobov needs r > 0");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > 1) return product(std::vector<CoefficientSequence>(static_cast<std::size_t>(dim), korobov(r, 1)));
    auto n = std::make_shared<Node>();
    n->family = Family::korobov;
    n->param = r;
    n->asymptotic = TailRule::power(r);
    n->switch_at = 1.0;
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::exponential(double s, int dim) {
    if (!(s > 0.0)) throw std::invalid_argument("exponential needs s > 0");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > 1) return product(std::vector<CoefficientSequence>(static_cast<std::size_t>(dim), exponential(s, 1)));
    auto n = std::make_shared<Node>();
    n->family = Family::exponential;
    n->param = s;
    n->asymptotic = TailRule::exponential(s);
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::mask_power(double r, MaskSpec oscillation) {
    if (!(r > 0.0)) throw std::invalid_argument("mask_power needs r > 0");
    if (oscillation.left_value() == 0.0) throw std::invalid_argument("mask profile must be nonzero at 0");
    auto n = std::make_shared<Node>();
    n->family = Family::mask_power;
    n->param = r;
    n->asymptotic = TailRule::power(r, oscillation.bound());
    // |F(log|k|)| <= bound is only guaranteed once log|k| > 1
    n->switch_at = 3.0;
    n->mask = std::move(oscillation);
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::exponent_mask(double s, MaskSpec envelope) {
    if (!(s > 0.0)) throw std::invalid_argument("exponent_mask needs s > 0");
    if (!(envelope(0.0) > 0.0)) throw std::invalid_argument("exponent-type envelope must be positive at 0");
    auto n = std::make_shared<Node>();
    n->family = Family::exponent_mask;
    n->param = s;
    n->asymptotic = TailRule::exponential(s, envelope(0.0));
    n->mask = std::move(envelope);
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::constant(double v, int dim) {
    if (v == 0.0 || !std::isfinite(v)) throw std::invalid_argument("constant sequence needs a finite nonzero value");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    auto n = std::make_shared<Node>();
    n->family = Family::constant;
    n->dim = dim;
    n->param = v;
    n->asymptotic = TailRule::constant(1.0 / v);
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::product(std::vector<CoefficientSequence> factors) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    for (const auto &f : factors)
        if (f.dimension() != 1) throw std::invalid_argument("product factors must be one-dimensional");
    if (factors.size() == 1) return factors.front();
    auto n = std::make_shared<Node>();
    n->family = Family::product;
    n->dim = static_cast<int>(factors.size());
    n->factors = std::move(factors);
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::custom(int dim, std::map<FrequencyIndex, cplx> table, TailRule tail) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (table.empty()) throw std::invalid_argument("custom sequence needs a nonempty table");
    Index radius = 0;
    for (const auto &[k, v] : table) {
        if (k.dimension() != dim) throw std::invalid_argument("custom table index has wrong dimension");
        if (v == cplx(0.0) || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("custom table value must be finite and nonzero at " + k.str());
        radius = std::max(radius, k.norm_inf());
    }
    // The table must cover its whole box so the rule only acts outside it.
    double box = std::pow(2.0 * static_cast<double>(radius) + 1.0, dim);
    if (static_cast<double>(table.size()) != box)
        throw std::invalid_argument("custom table must cover the full box |k|_inf <= " + std::to_string(radius));
    if (tail.kind == TailRule::Kind::zero) throw std::invalid_argument("custom tail rule must be nonzero");
    if (tail.kind == TailRule::Kind::constant && tail.scale == 0.0)
        throw std::invalid_argument("custom constant tail must be nonzero");
    auto n = std::make_shared<Node>();
    n->family = Family::custom;
    n->dim = dim;
    n->table = std::move(table);
    n->table_radius = radius;
    n->tail = tail;
    n->asymptotic = tail;
    n->switch_at = static_cast<double>(radius) + 1.0;
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::power(const CoefficientSequence &base, double exponent) {
    if (exponent == 0.0 || !std::isfinite(exponent)) throw std::invalid_argument("power exponent must be finite, nonzero");
    auto n = std::make_shared<Node>();
    n->family = Family::power;
    n->dim = base.dimension();
    n->param = exponent;
    n->base = base.node_;
    return CoefficientSequence(n);
}

CoefficientSequence CoefficientSequence::band_limited(const CoefficientSequence &base, Index degree) {
    if (degree < 0) throw std::invalid_argument("band_limited degree must be >= 0");
    auto n = std::make_shared<Node>();
    n->family = Family::band_limited;
    n->dim = base.dimension();
    n->degree = degree;
    n->param = static_cast<double>(degree);
    n->base = base.node_;
    return CoefficientSequence(n);
}

int CoefficientSequence::dimension() const { return node_->dim; }
Family CoefficientSequence::family() const { return node_->family; }
double CoefficientSequence::parameter() const { return node_->param; }
const MaskSpec *CoefficientSequence::mask() const {
    return (node_->family == Family::mask_power || node_->family == Family::exponent_mask) ? &node_->mask : nullptr;
}

std::optional<CoefficientSequence> CoefficientSequence::base() const {
    if (!node_->base) return std::nullopt;
    return CoefficientSequence(node_->base);
}

std::string CoefficientSequence::describe() const {
    const Node &n = *node_;
    switch (n.family) {
    case Family::korobov: return "korobov(r=" + fmt_double(n.param) + ")";
    case Family::exponential: return "exponential(s=" + fmt_double(n.param) + ")";
    case Family::mask_power: return "mask_power(r=" + fmt_double(n.param) + "," + n.mask.describe() + ")";
    case Family::exponent_mask: return "exponent_mask(s=" + fmt_double(n.param) + "," + n.mask.describe() + ")";
    case Family::constant: return "constant(v=" + fmt_double(n.param) + ",d=" + std::to_string(n.dim) + ")";
    case Family::product: {
        std::string s = "product[";
        for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i) s += "x";
            s += n.factors[i].describe();
        }
        return s + "]";
    }
    case Family::custom: return "custom(d=" + std::to_string(n.dim) + ",R=" + std::to_string(n.table_radius) + ")";
    case Family::power: return "power(" + CoefficientSequence(n.base).describe() + ",e=" + fmt_double(n.param) + ")";
    case Family::band_limited:
        return "band_limited(" + CoefficientSequence(n.base).describe() + ",m=" + std::to_string(n.degree) + ")";
    }
    return "?";
}

namespace {

cplx custom_rule_value(const TailRule &t, double a) {
    switch (t.kind) {
    case TailRule::Kind::power: return cplx(std::pow(std::max(a, 1.0), t.rate) / t.scale);
    case TailRule::Kind::exponential: return cplx(std::exp(t.rate * a) / t.scale);
    case TailRule::Kind::constant: return cplx(1.0 / t.scale);
    case TailRule::Kind::zero: break;
    }
    return cplx(kInf);
}

cplx custom_rule_reciprocal(const TailRule &t, double a) {
    switch (t.kind) {
    case TailRule::Kind::power: return cplx(t.scale * std::pow(std::max(a, 1.0), -t.rate));
    case TailRule::Kind::exponential: return cplx(t.scale * std::exp(-t.rate * a));
    case TailRule::Kind::constant: return cplx(t.scale);
    case TailRule::Kind::zero: break;
    }
    return cplx(0.0);
}

cplx value_node(const Node &n, std::span<const Index> k);
cplx reciprocal_node(const Node &n, std::span<const Index> k);

cplx value1_node(const Node &n, Index k) {
    switch (n.family) {
    case Family::korobov:
        return k == 0 ? cplx(1.0) : cplx(std::pow(static_cast<double>(abs_idx(k)), n.param));
    case Family::exponential:
        return cplx(std::exp(n.param * static_cast<double>(abs_idx(k))));
    case Family::mask_power:
        return cplx(1.0 / mask_sequence_value(n.mask, n.param, k));
    case Family::exponent_mask: {
        double a = static_cast<double>(abs_idx(k));
        return cplx(std::exp(n.param * a) / n.mask(a));
    }
    default: {
        Index kk[1] = {k};
        return value_node(n, kk);
    }
    }
}

cplx reciprocal1_node(const Node &n, Index k) {
    switch (n.family) {
    case Family::korobov:
        return k == 0 ? cplx(1.0) : cplx(std::pow(static_cast<double>(abs_idx(k)), -n.param));
    case Family::exponential:
        return cplx(std::exp(-n.param * static_cast<double>(abs_idx(k))));
    case Family::mask_power:
        return cplx(mask_sequence_value(n.mask, n.param, k));
    case Family::exponent_mask: {
        double a = static_cast<double>(abs_idx(k));
        return cplx(std::exp(-n.param * a) * n.mask(a));
    }
    default: {
        Index kk[1] = {k};
        return reciprocal_node(n, kk);
    }
    }
}

Index span_norm_inf(std::span<const Index> k) {
    Index m = 0;
    for (Index v : k) m = std::max(m, abs_idx(v));
    return m;
}

cplx real_or_complex_pow(cplx b, double e) {
    if (b.imag() == 0.0 && b.real() > 0.0) return cplx(std::pow(b.real(), e));
    return std::pow(b, e);
}

cplx value_node(const Node &n, std::span<const Index> k) {
    switch (n.family) {
    case Family::korobov:
    case Family::exponential:
    case Family::mask_power:
    case Family::exponent_mask:
        return value1_node(n, k[0]);
    case Family::constant:
        return cplx(n.param);
    case Family::product: {
        cplx v(1.0);
        for (std::size_t a = 0; a < n.factors.size(); ++a) v *= n.factors[a].value1(k[a]);
        return v;
    }
    case Family::custom: {
        Index r = span_norm_inf(k);
        if (r <= n.table_radius) return n.table.at(FrequencyIndex(std::vector<Index>(k.begin(), k.end())));
        return custom_rule_value(n.tail, static_cast<double>(r));
    }
    case Family::power:
        return real_or_complex_pow(value_node(*n.base, k), n.param);
    case Family::band_limited:
        if (span_norm_inf(k) <= n.degree) return value_node(*n.base, k);
        return cplx(kInf);
    }
    return cplx(kInf);
}

cplx reciprocal_node(const Node &n, std::span<const Index> k) {
    switch (n.family) {
    case Family::korobov:
    case Family::exponential:
    case Family::mask_power:
    case Family::exponent_mask:
        return reciprocal1_node(n, k[0]);
    case Family::constant:
        return cplx(1.0 / n.param);
    case Family::product: {
        cplx v(1.0);
        for (std::size_t a = 0; a < n.factors.size(); ++a) v *= n.factors[a].reciprocal1(k[a]);
        return v;
    }
    case Family::custom: {
        Index r = span_norm_inf(k);
        if (r <= n.table_radius) return 1.0 / n.table.at(FrequencyIndex(std::vector<Index>(k.begin(), k.end())));
        return custom_rule_reciprocal(n.tail, static_cast<double>(r));
    }
    case Family::power:
        return real_or_complex_pow(reciprocal_node(*n.base, k), n.param);
    case Family::band_limited:
        if (span_norm_inf(k) <= n.degree) return reciprocal_node(*n.base, k);
        return cplx(0.0);
    }
    return cplx(0.0);
}

double envelope_node(const Node &n, double t);

double sup_node(const Node &n) { return envelope_node(n, 0.0); }

double envelope_node(const Node &n, double t) {
    switch (n.family) {
    case Family::korobov:
        return t <= 1.0 ? 1.0 : std::pow(t, -n.param);
    case Family::exponential:
        return std::exp(-n.param * std::max(t, 0.0));
    case Family::mask_power: {
        double e = n.mask.bound() * std::pow(1.0 + std::max(t, 0.0), -n.param);
        for (Index k = 0; k <= 2; ++k)
            if (static_cast<double>(k) >= t) e = std::max(e, std::abs(reciprocal1_node(n, k)));
        return e;
    }
    case Family::exponent_mask: {
        double a = std::max(t, 0.0);
        return std::exp(-n.param * a) * n.mask(a);
    }
    case Family::constant:
        return std::abs(1.0 / n.param);
    case Family::product: {
        double best = 0.0;
        for (std::size_t a = 0; a < n.factors.size(); ++a) {
            double e = n.factors[a].envelope(t);
            for (std::size_t b = 0; b < n.factors.size(); ++b)
                if (b != a) e *= n.factors[b].sup_reciprocal();
            best = std::max(best, e);
        }
        return best;
    }
    case Family::custom: {
        double rule = n.tail.envelope(std::max(t, static_cast<double>(n.table_radius) + 1.0));
        if (t > static_cast<double>(n.table_radius)) return n.tail.envelope(t);
        double e = rule;
        for (const auto &[k, v] : n.table)
            if (static_cast<double>(k.norm_inf()) >= t) e = std::max(e, std::abs(1.0 / v));
        return e;
    }
    case Family::power:
        if (n.param < 0.0) return kInf;
        return std::pow(envelope_node(*n.base, t), n.param);
    case Family::band_limited:
        if (t > static_cast<double>(n.degree)) return 0.0;
        return envelope_node(*n.base, t);
    }
    return kInf;
}

double progression_node(const Node &n, double first, double stride, double q) {
    switch (n.family) {
    case Family::product: {
        // sum_j max_a x_a(j)^q <= sum_a sum_j x_a(j)^q
        double total = 0.0;
        for (std::size_t a = 0; a < n.factors.size(); ++a) {
            double others = 1.0;
            for (std::size_t b = 0; b < n.factors.size(); ++b)
                if (b != a) others *= n.factors[b].sup_reciprocal();
            total += std::pow(others, q) * n.factors[a].progression_sum(first, stride, q);
        }
        return total;
    }
    case Family::power:
        if (n.param < 0.0) return kInf;
        return progression_node(*n.base, first, stride, q * n.param);
    case Family::band_limited: {
        double deg = static_cast<double>(n.degree);
        double total = 0.0;
        for (double t = first; t <= deg; t += stride) total += std::pow(envelope_node(*n.base, t), q);
        return total;
    }
    default: {
        double total = 0.0;
        double t = first;
        while (t < n.switch_at) {
            total += std::pow(envelope_node(n, t), q);
            t += stride;
        }
        return total + n.asymptotic.progression_sum(t, stride, q);
    }
    }
}

} // namespace

cplx CoefficientSequence::value(const FrequencyIndex &k) const { return value_node(*node_, k.components()); }
cplx CoefficientSequence::reciprocal(const FrequencyIndex &k) const { return reciprocal_node(*node_, k.components()); }
cplx CoefficientSequence::value1(Index k) const { return value1_node(*node_, k); }
cplx CoefficientSequence::reciprocal1(Index k) const { return reciprocal1_node(*node_, k); }

bool CoefficientSequence::real_valued() const {
    const Node &n = *node_;
    switch (n.family) {
    case Family::product:
        return std::all_of(n.factors.begin(), n.factors.end(), [](const auto &f) { return f.real_valued(); });
    case Family::custom:
        return std::all_of(n.table.begin(), n.table.end(), [](const auto &kv) { return kv.second.imag() == 0.0; });
    case Family::power:
    case Family::band_limited:
        return CoefficientSequence(n.base).real_valued();
    default:
        return true;
    }
}

bool CoefficientSequence::symmetric() const {
    const Node &n = *node_;
    switch (n.family) {
    case Family::product:
        return std::all_of(n.factors.begin(), n.factors.end(), [](const auto &f) { return f.symmetric(); });
    case Family::custom:
        for (const auto &[k, v] : n.table)
            if (n.table.at(-k) != v) return false;
        return true;
    case Family::power:
    case Family::band_limited:
        return CoefficientSequence(n.base).symmetric();
    default:
        return true;
    }
}

std::optional<std::vector<CoefficientSequence>> CoefficientSequence::factors() const {
    const Node &n = *node_;
    if (n.dim == 1) return std::vector<CoefficientSequence>{*this};
    switch (n.family) {
    case Family::product:
        return n.factors;
    case Family::constant: {
        std::vector<CoefficientSequence> f(static_cast<std::size_t>(n.dim), constant(1.0, 1));
        f[0] = constant(n.param, 1);
        return f;
    }
    case Family::power: {
        auto bf = CoefficientSequence(n.base).factors();
        if (!bf) return std::nullopt;
        for (auto &f : *bf) f = power(f, n.param);
        return bf;
    }
    case Family::band_limited: {
        auto bf = CoefficientSequence(n.base).factors();
        if (!bf) return std::nullopt;
        for (auto &f : *bf) f = band_limited(f, n.degree);
        return bf;
    }
    default:
        return std::nullopt;
    }
}

double CoefficientSequence::envelope(double t) const { return envelope_node(*node_, t); }

double CoefficientSequence::progression_sum(double first, double stride, double q) const {
    return progression_node(*node_, first, stride, q);
}

double CoefficientSequence::sup_reciprocal() const { return sup_node(*node_); }

cplx eval_lambda(const CoefficientSequence &seq, const FrequencyIndex &k) {
    if (k.dimension() != seq.dimension())
        throw std::invalid_argument("eval_lambda: index dimension " + std::to_string(k.dimension()) +
                                    " does not match sequence dimension " + std::to_string(seq.dimension()));
    return seq.value(k);
}

// ---------------------------------------------------------------------------
// Nondecreasing-type scan
// ---------------------------------------------------------------------------

NondecreasingCertificate check_nondecreasing_type(const ThetaFn &theta, int dim, Index probe_radius,
                                                  double min_constant, bool skip_zero) {
    if (probe_radius < 2) throw std::invalid_argument("probe_radius must be >= 2");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    const Index side = probe_radius + 1; // |k_j| in [0, R]
    std::size_t count = 1;
    for (int j = 0; j < dim; ++j) count *= static_cast<std::size_t>(side);
    if (count > 50'000'000u) throw std::invalid_argument("probe box too large");

    auto decode = [&](std::size_t flat, std::vector<Index> &a) {
        for (int j = dim - 1; j >= 0; --j) {
            a[static_cast<std::size_t>(j)] = static_cast<Index>(flat % static_cast<std::size_t>(side));
            flat /= static_cast<std::size_t>(side);
        }
    };
    auto has_zero = [&](const std::vector<Index> &a) {
        return std::any_of(a.begin(), a.end(), [](Index v) { return v == 0; });
    };

    // For each absolute-value pattern, the minimum and maximum of theta over sign choices.
    const double inf = kInf;
    std::vector<double> lo(count, inf), hi(count, -inf);
    std::vector<FrequencyIndex> lo_arg(count), hi_arg(count);
    std::vector<Index> a(static_cast<std::size_t>(dim));
    const std::size_t signs = std::size_t{1} << dim;
    for (std::size_t f = 0; f < count; ++f) {
        decode(f, a);
        if (skip_zero && has_zero(a)) continue;
        for (std::size_t s = 0; s < signs; ++s) {
            std::vector<Index> k(a);
            bool dup = false;
            for (int j = 0; j < dim; ++j) {
                if ((s >> j) & 1u) {
                    if (k[static_cast<std::size_t>(j)] == 0) dup = true;
                    k[static_cast<std::size_t>(j)] = -k[static_cast<std::size_t>(j)];
                }
            }
            if (dup) continue;
            FrequencyIndex kk(std::move(k));
            double v = theta(kk);
            if (v < lo[f]) { lo[f] = v; lo_arg[f] = kk; }
            if (v > hi[f]) { hi[f] = v; hi_arg[f] = kk; }
        }
    }

    // Dominance minimum: dom[a] = min over b with b_j >= a_j (d > 1) or |b| > |a| (d = 1).
    std::vector<double> dom(lo);
    std::vector<FrequencyIndex> dom_arg(lo_arg);
    if (dim == 1) {
        double run = inf;
        FrequencyIndex run_arg;
        for (Index t = probe_radius; t >= 0; --t) {
            auto ti = static_cast<std::size_t>(t);
            dom[ti] = run;
            dom_arg[ti] = run_arg;
            if (lo[ti] < run) { run = lo[ti]; run_arg = lo_arg[ti]; }
        }
    } else {
        std::size_t stride = 1;
        for (int j = dim - 1; j >= 0; --j) {
            for (std::size_t f = count; f-- > 0;) {
                std::size_t digit = (f / stride) % static_cast<std::size_t>(side);
                if (digit + 1 < static_cast<std::size_t>(side)) {
                    std::size_t g = f + stride;
                    if (dom[g] < dom[f]) { dom[f] = dom[g]; dom_arg[f] = dom_arg[g]; }
                }
            }
            stride *= static_cast<std::size_t>(side);
        }
    }

    NondecreasingCertificate cert;
    cert.constant = inf;
    for (std::size_t f = 0; f < count; ++f) {
        if (hi[f] == -inf || dom[f] == inf) continue;
        double ratio = dom[f] / hi[f];
        if (ratio < cert.constant) cert.constant = ratio;
        if (!cert.violated_at && ratio < min_constant) cert.violated_at = std::make_pair(dom_arg[f], hi_arg[f]);
    }
    if (cert.constant == inf) cert.constant = 1.0;
    cert.holds = !cert.violated_at.has_value();
    return cert;
}

NondecreasingCertificate check_nondecreasing_type(const CoefficientSequence &seq, Index probe_radius,
                                                  double min_constant) {
    return check_nondecreasing_type([&](const FrequencyIndex &k) { return std::abs(seq.value(k)); },
                                    seq.dimension(), probe_radius, min_constant);
}

} // namespace translates
