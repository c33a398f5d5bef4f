#include "tqw/kernels.hpp"

#include <algorithm>

namespace tqw::kernels::detail {

// Reference kernels. ikj ordering streams rows of B and C, which is the
// cache-friendly layout for row-major storage; the SIMD variants vectorize
// the same loop structure and are equivalence-tested against these.

void cgemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + n * n, cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            if (aik == cplx(0.0)) continue;
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void cgemv_scalar(std::size_t n, const cplx* m, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = 0.0;
        const cplx* row = m + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

}  // namespace tqw::kernels::detail
