#include "translates/spectral.hpp"

#include "translates/fft.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace translates {

namespace {

std::size_t box_size(int dim, Index side) {
    std::size_t n = 1;
    for (int j = 0; j < dim; ++j) {
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(side))
            throw std::length_error("spectral box too large");
        n *= static_cast<std::size_t>(side);
    }
    return n;
}

void check_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in (1, inf)");
}

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

SpectralFunction::SpectralFunction(int dim, Index radius) : dim_(dim), radius_(radius) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    data_.assign(box_size(dim, 2 * radius + 1), cplx(0.0));
}

SpectralFunction SpectralFunction::from_map(int dim, const std::map<FrequencyIndex, cplx> &coeffs) {
    Index r = 0;
    for (const auto &[k, v] : coeffs) {
        if (k.dimension() != dim) throw std::invalid_argument("coefficient index has wrong dimension");
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::invalid_argument("non-finite coefficient");
        r = std::max(r, k.norm_inf());
    }
    SpectralFunction f(dim, r);
    for (const auto &[k, v] : coeffs) f.at(k) = v;
    return f;
}

SpectralFunction SpectralFunction::from_symmetric(std::vector<cplx> coeffs) {
    if (coeffs.size() % 2 == 0) throw std::invalid_argument("symmetric coefficient vector must have odd length");
    SpectralFunction f(1, static_cast<Index>(coeffs.size() / 2));
    f.data_ = std::move(coeffs);
    return f;
}

std::size_t SpectralFunction::flat_of(std::span<const Index> k) const {
    std::size_t flat = 0;
    const auto s = static_cast<std::size_t>(side());
    for (Index v : k) flat = flat * s + static_cast<std::size_t>(v + radius_);
    return flat;
}

FrequencyIndex SpectralFunction::index_of(std::size_t flat) const {
    std::vector<Index> k(static_cast<std::size_t>(dim_));
    const auto s = static_cast<std::size_t>(side());
    for (int j = dim_ - 1; j >= 0; --j) {
        k[static_cast<std::size_t>(j)] = static_cast<Index>(flat % s) - radius_;
        flat /= s;
    }
    return FrequencyIndex(std::move(k));
}

bool SpectralFunction::contains(std::span<const Index> k) const {
    if (static_cast<int>(k.size()) != dim_) return false;
    return std::all_of(k.begin(), k.end(), [&](Index v) { return v >= -radius_ && v <= radius_; });
}

cplx SpectralFunction::operator[](const FrequencyIndex &k) const {
    if (k.dimension() != dim_) throw std::invalid_argument("index dimension mismatch");
    if (!contains(k.components())) return cplx(0.0);
    return data_[flat_of(k.components())];
}

cplx &SpectralFunction::at(const FrequencyIndex &k) {
    if (!contains(k.components())) throw std::out_of_range("index " + k.str() + " outside the coefficient box");
    return data_[flat_of(k.components())];
}

Index SpectralFunction::bandwidth() const {
    Index b = 0;
    if (dim_ == 1) {
        for (Index k = radius_; k > 0; --k)
            if (coeff1(k) != cplx(0.0) || coeff1(-k) != cplx(0.0)) return k;
        return 0;
    }
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != cplx(0.0)) b = std::max(b, index_of(i).norm_inf());
    return b;
}

SpectralFunction SpectralFunction::resized(Index radius) const {
    SpectralFunction out(dim_, radius);
    if (dim_ == 1) {
        const Index r = std::min(radius, radius_);
        for (Index k = -r; k <= r; ++k) out.at1(k) = coeff1(k);
        return out;
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (data_[i] == cplx(0.0)) continue;
        FrequencyIndex k = index_of(i);
        if (out.contains(k.components())) out.data_[out.flat_of(k.components())] = data_[i];
    }
    return out;
}

bool SpectralFunction::real_valued(double tol) const {
    // The box is symmetric, so -k is the mirrored flat position.
    const std::size_t n = data_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(data_[i] - std::conj(data_[n - 1 - i])) > tol) return false;
    return true;
}

bool SpectralFunction::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](cplx v) { return v == cplx(0.0); });
}

SpectralFunction &SpectralFunction::operator*=(cplx a) {
    for (auto &v : data_) v *= a;
    return *this;
}

SpectralFunction &SpectralFunction::operator+=(const SpectralFunction &o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    if (o.radius_ > radius_) *this = resized(o.radius_);
    if (o.radius_ == radius_) {
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    for (std::size_t i = 0; i < o.data_.size(); ++i)
        if (o.data_[i] != cplx(0.0)) data_[flat_of(o.index_of(i).components())] += o.data_[i];
    return *this;
}

SpectralFunction &SpectralFunction::operator-=(const SpectralFunction &o) {
    SpectralFunction neg = o;
    neg *= -1.0;
    return *this += neg;
}

cplx evaluate(const SpectralFunction &f, std::span<const double> x) {
    if (static_cast<int>(x.size()) != f.dimension()) throw std::invalid_argument("point dimension mismatch");
    cplx s(0.0);
    const auto data = f.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i] == cplx(0.0)) continue;
        FrequencyIndex k = f.index_of(i);
        double phase = 0.0;
        for (int j = 0; j < f.dimension(); ++j) phase += static_cast<double>(k[j]) * x[static_cast<std::size_t>(j)];
        s += data[i] * std::polar(1.0, phase);
    }
    return s;
}

cplx evaluate(const SpectralFunction &f, double x) {
    double xs[1] = {x};
    return evaluate(f, xs);
}

std::vector<cplx> evaluate_many(const SpectralFunction &f, std::span<const double> xs, Exec exec) {
    if (f.dimension() != 1) throw std::invalid_argument("evaluate_many is one-dimensional");
    return synthesize_points_1d(f.data(), xs, exec);
}

SpectralFunction convolve(const SpectralFunction &f1, const SpectralFunction &f2) {
    if (f1.dimension() != f2.dimension()) throw std::invalid_argument("convolve: dimension mismatch");
    const Index r = std::min(f1.radius(), f2.radius());
    SpectralFunction a = f1.radius() == r ? f1 : f1.resized(r);
    SpectralFunction b = f2.radius() == r ? f2 : f2.resized(r);
    auto ad = a.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i) ad[i] *= bd[i];
    return a;
}

GridSamples synthesize(const SpectralFunction &f, Index points) {
    if (points < 1) throw std::invalid_argument("points must be >= 1");
    const int d = f.dimension();
    GridSamples g{d, points, std::vector<cplx>(box_size(d, points), cplx(0.0))};
    const auto data = f.data();
    std::vector<Index> k(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i] == cplx(0.0)) continue;
        std::size_t flat = 0;
        std::size_t rem = i;
        const auto side = static_cast<std::size_t>(f.side());
        for (int j = d - 1; j >= 0; --j) {
            k[static_cast<std::size_t>(j)] = static_cast<Index>(rem % side) - f.radius();
            rem /= side;
        }
        for (int j = 0; j < d; ++j) flat = flat * static_cast<std::size_t>(points) +
                                          static_cast<std::size_t>(pos_mod(k[static_cast<std::size_t>(j)], points));
        g.values[flat] += data[i];
    }
    dft_inplace(g.values, d, points, +1);
    return g;
}

SpectralFunction analyze(const GridSamples &g, Index radius) {
    if (2 * radius + 1 > g.points) throw std::invalid_argument("analyze: radius too large for the grid");
    std::vector<cplx> work = g.values;
    dft_inplace(work, g.dimension, g.points, -1);
    const double scale = 1.0 / static_cast<double>(work.size());
    SpectralFunction f(g.dimension, radius);
    auto data = f.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        FrequencyIndex k = f.index_of(i);
        std::size_t flat = 0;
        for (int j = 0; j < g.dimension; ++j)
            flat = flat * static_cast<std::size_t>(g.points) + static_cast<std::size_t>(pos_mod(k[j], g.points));
        data[i] = work[flat] * scale;
    }
    return f;
}

Index quadrature_points(Index bandwidth, int oversample) {
    return smooth_size(static_cast<Index>(oversample) * (2 * bandwidth + 1));
}

double l2_norm(const SpectralFunction &f) { return std::sqrt(sum_abs_pow(f.data(), 2.0)); }

double lp_norm_quadrature(const SpectralFunction &f, double p, int oversample) {
    check_p(p);
    if (oversample < 2) throw std::invalid_argument("oversample must be >= 2");
    const Index n = quadrature_points(f.bandwidth(), oversample);
    GridSamples g = synthesize(f.bandwidth() == f.radius() ? f : f.resized(f.bandwidth()), n);
    const double mean = sum_abs_pow(g.values, p) / static_cast<double>(g.values.size());
    return std::pow(mean, 1.0 / p);
}

double lp_norm(const SpectralFunction &f, double p, int oversample) {
    check_p(p);
    if (oversample < 2) throw std::invalid_argument("oversample must be >= 2");
    if (p == 2.0) return l2_norm(f);
    return lp_norm_quadrature(f, p, oversample);
}

SpectralFunction partial_sum(const SpectralFunction &g, Index r, Index s) {
    if (g.dimension() != 1) throw std::invalid_argument("partial_sum is one-dimensional");
    if (r > s) throw std::invalid_argument("partial_sum needs r <= s");
    SpectralFunction out(1, g.radius());
    const Index lo = std::max(r, -g.radius());
    const Index hi = std::min(s, g.radius());
    for (Index k = lo; k <= hi; ++k) out.at1(k) = g.coeff1(k);
    return out;
}

void write_text(std::ostream &os, const SpectralFunction &f) {
    const auto data = f.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i] == cplx(0.0)) continue;
        FrequencyIndex k = f.index_of(i);
        for (int j = 0; j < f.dimension(); ++j) os << k[j] << ' ';
        os << shortest(data[i].real()) << ' ' << shortest(data[i].imag()) << '\n';
    }
}

SpectralFunction read_text(std::istream &is) {
    std::map<FrequencyIndex, cplx> coeffs;
    int dim = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 3) throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'k_1 ... k_d re im'");
        const int d = static_cast<int>(tok.size()) - 2;
        if (dim == 0) dim = d;
        if (d != dim) throw std::runtime_error("line " + std::to_string(lineno) + ": inconsistent dimension");
        std::vector<Index> k(static_cast<std::size_t>(d));
        try {
            for (int j = 0; j < d; ++j) {
                std::size_t used = 0;
                k[static_cast<std::size_t>(j)] = std::stoll(tok[static_cast<std::size_t>(j)], &used);
                if (used != tok[static_cast<std::size_t>(j)].size()) throw std::invalid_argument("index");
            }
            double re = std::stod(tok[static_cast<std::size_t>(d)]);
            double im = std::stod(tok[static_cast<std::size_t>(d) + 1]);
            coeffs[FrequencyIndex(std::move(k))] += cplx(re, im);
        } catch (const std::logic_error &) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed number");
        }
    }
    if (dim == 0) throw std::runtime_error("no coefficients found");
    return SpectralFunction::from_map(dim, coeffs);
}

} // namespace translates
