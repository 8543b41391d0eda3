#pragma once

#include "translates/frequency.hpp"

#include <span>
#include <vector>

namespace translates {

// Unnormalized d-dimensional DFT over an N^d row-major array, in place.
// sign = -1: sum_x v(x) e^{-i k x}; sign = +1: sum_k v(k) e^{+i k x}.
void dft_inplace(std::span<cplx> data, int dim, Index n, int sign);

// Smallest integer >= n whose prime factors are all in {2, 3, 5, 7}.
Index smooth_size(Index n);

} // namespace translates
