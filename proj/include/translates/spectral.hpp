#pragma once

#include "translates/frequency.hpp"
#include "translates/kernels.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace translates {

// Band-limited periodic function on T^d, stored densely on the box
// |k|_inf <= radius in lexicographic order. Indices outside the box read as 0.
//
// Convention: f(x) = sum_k c_k e^{i(k,x)}, c_k = (2pi)^{-d} int f(x) e^{-i(k,x)} dx.
class SpectralFunction {
public:
    SpectralFunction() : SpectralFunction(1, 0) {}
    SpectralFunction(int dim, Index radius);
    static SpectralFunction from_map(int dim, const std::map<FrequencyIndex, cplx> &coeffs);
    // One-dimensional, coeffs[k + K] for k = -K..K.
    static SpectralFunction from_symmetric(std::vector<cplx> coeffs);

    int dimension() const { return dim_; }
    Index radius() const { return radius_; }
    Index side() const { return 2 * radius_ + 1; }
    std::size_t size() const { return data_.size(); }

    // Smallest K with every nonzero coefficient inside |k|_inf <= K (0 for the zero function).
    Index bandwidth() const;

    cplx operator[](const FrequencyIndex &k) const;
    cplx &at(const FrequencyIndex &k);
    cplx coeff1(Index k) const {
        return (k < -radius_ || k > radius_) ? cplx(0.0) : data_[static_cast<std::size_t>(k + radius_)];
    }
    cplx &at1(Index k) { return data_[static_cast<std::size_t>(k + radius_)]; }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }
    // Index for a flat position and back.
    FrequencyIndex index_of(std::size_t flat) const;
    std::size_t flat_of(std::span<const Index> k) const;
    bool contains(std::span<const Index> k) const;

    // Same coefficients on a different box (truncating or zero-padding).
    SpectralFunction resized(Index radius) const;

    bool real_valued(double tol = 1e-12) const;
    bool is_zero() const;

    SpectralFunction &operator*=(cplx a);
    SpectralFunction &operator+=(const SpectralFunction &o);
    SpectralFunction &operator-=(const SpectralFunction &o);
    friend SpectralFunction operator*(cplx a, SpectralFunction f) { return f *= a; }
    friend SpectralFunction operator+(SpectralFunction a, const SpectralFunction &b) { return a += b; }
    friend SpectralFunction operator-(SpectralFunction a, const SpectralFunction &b) { return a -= b; }

private:
    int dim_;
    Index radius_;
    std::vector<cplx> data_;
};

// Values on the uniform grid 2pi l / N, l in {0..N-1}^d, row-major.
struct GridSamples {
    int dimension = 1;
    Index points = 1;
    std::vector<cplx> values;
};

cplx evaluate(const SpectralFunction &f, std::span<const double> x);
cplx evaluate(const SpectralFunction &f, double x);
std::vector<cplx> evaluate_many(const SpectralFunction &f, std::span<const double> xs, Exec exec = Exec::parallel);

SpectralFunction convolve(const SpectralFunction &f1, const SpectralFunction &f2);

// Coefficients folded modulo N then transformed; exact for any bandwidth
// (aliasing included) and equal to pointwise synthesis when 2K+1 <= N.
GridSamples synthesize(const SpectralFunction &f, Index points);
// Recovers coefficients on |k|_inf <= radius; requires 2*radius + 1 <= points.
SpectralFunction analyze(const GridSamples &g, Index radius);

// p = 2: exact Parseval value. Otherwise the normalized Riemann sum on a grid
// of at least oversample*(2K+1) points per axis (rounded up to a 7-smooth size).
double lp_norm(const SpectralFunction &f, double p, int oversample = 8);
// Always uses the grid, also for p = 2.
double lp_norm_quadrature(const SpectralFunction &f, double p, int oversample = 8);
double l2_norm(const SpectralFunction &f);
Index quadrature_points(Index bandwidth, int oversample);

// Keeps coefficients with r <= k <= s (d = 1).
SpectralFunction partial_sum(const SpectralFunction &g, Index r, Index s);

// One line per stored nonzero coefficient: "k_1 ... k_d re im", lexicographic.
void write_text(std::ostream &os, const SpectralFunction &f);
SpectralFunction read_text(std::istream &is);

} // namespace translates
