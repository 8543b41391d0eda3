#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace translates {

using cplx = std::complex<double>;
using Index = std::int64_t;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Integer frequency vector k in Z^d.
class FrequencyIndex {
public:
    FrequencyIndex() = default;
    explicit FrequencyIndex(std::vector<Index> components) : c_(std::move(components)) {}
    FrequencyIndex(std::initializer_list<Index> components) : c_(components) {}

    static FrequencyIndex zero(int dim) { return FrequencyIndex(std::vector<Index>(dim, 0)); }

    int dimension() const { return static_cast<int>(c_.size()); }
    Index operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
    Index &operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
    std::span<const Index> components() const { return c_; }

    Index norm_inf() const;
    Index norm1() const;
    double norm2() const;
    Index norm2_squared() const;

    FrequencyIndex operator-() const;

    std::string str() const;

    auto operator<=>(const FrequencyIndex &) const = default;
    bool operator==(const FrequencyIndex &) const = default;

private:
    std::vector<Index> c_;
};

// Mathematical (nonnegative) remainder.
constexpr Index pos_mod(Index a, Index n) {
    Index r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace translates
