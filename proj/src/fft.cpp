#include "translates/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>
#include <stdexcept>

namespace translates {

namespace {

// FFTW's planner is not thread-safe; execution of a plan is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

void dft_inplace(std::span<cplx> data, int dim, Index n, int sign) {
    if (dim < 1 || n < 1) throw std::invalid_argument("dft_inplace: bad shape");
    std::size_t total = 1;
    for (int j = 0; j < dim; ++j) total *= static_cast<std::size_t>(n);
    if (data.size() != total) throw std::invalid_argument("dft_inplace: size mismatch");
    if (n == 1) return;

    std::vector<int> shape(static_cast<std::size_t>(dim), static_cast<int>(n));
    // Always run on an fftw_malloc buffer: the codelets FFTW picks depend on
    // alignment, and the output bits must not depend on where data lives.
    auto *buf = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * total));
    if (!buf) throw std::bad_alloc();
    std::copy(data.begin(), data.end(), reinterpret_cast<cplx *>(buf));
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft(dim, shape.data(), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (!plan) {
        fftw_free(buf);
        throw std::runtime_error("fftw planning failed");
    }
    fftw_execute(plan);
    std::copy(reinterpret_cast<cplx *>(buf), reinterpret_cast<cplx *>(buf) + total, data.begin());
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
}

Index smooth_size(Index n) {
    if (n <= 1) return 1;
    for (Index c = n;; ++c) {
        Index r = c;
        for (Index p : {2, 3, 5, 7})
            while (r % p == 0) r /= p;
        if (r == 1) return c;
    }
}

} // namespace translates
