#include "translates/random.hpp"

namespace translates {

SpectralFunction random_real_spectral(int dim, Index bandwidth, std::mt19937_64 &rng) {
    SpectralFunction g(dim, bandwidth);
    std::normal_distribution<double> normal;
    auto data = g.data();
    const std::size_t n = data.size();
    // lexicographic box: the mirror of flat index i is n - 1 - i
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        data[i] = {re, im};
        data[n - 1 - i] = {re, -im};
    }
    data[n / 2] = normal(rng);
    return g;
}

} // namespace translates
