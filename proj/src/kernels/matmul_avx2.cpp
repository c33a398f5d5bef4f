#include "tqw/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace tqw::kernels::detail {

namespace {

// Two packed complex doubles per __m256d: [re0, im0, re1, im1].
// (ar + i*ai) * (br + i*bi) = (ar*br - ai*bi) + i*(ar*bi + ai*br), so an
// accumulate is two FMAs: ar*[br,bi] plus ai*[-bi,br].
inline __m256d cplx_fmadd(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
    const __m256d neg_even = _mm256_setr_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d bswap = _mm256_permute_pd(b, 0b0101);
    bswap = _mm256_xor_pd(bswap, neg_even);
    acc = _mm256_fmadd_pd(ar, b, acc);
    return _mm256_fmadd_pd(ai, bswap, acc);
}

}  // namespace

void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b,
                                                    cplx* c) {
    std::fill(c, c + n * n, cplx(0.0));
    const double* bd = reinterpret_cast<const double*>(b);
    const std::size_t vec_end = n & ~std::size_t(1);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            const double* brow = bd + 2 * k * n;
            std::size_t j = 0;
            for (; j < vec_end; j += 2) {
                __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                acc = cplx_fmadd(acc, ar, ai, _mm256_loadu_pd(brow + 2 * j));
                _mm256_storeu_pd(crow + 2 * j, acc);
            }
            if (j < n) {
                const cplx prod = aik * b[k * n + j];
                crow[2 * j] += prod.real();
                crow[2 * j + 1] += prod.imag();
            }
        }
    }
}

void cgemv_avx2(std::size_t n, const cplx* m, const cplx* x,
                                                    cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const std::size_t vec_end = n & ~std::size_t(1);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = reinterpret_cast<const double*>(m + i * n);
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j < vec_end; j += 2) {
            const __m256d mv = _mm256_loadu_pd(row + 2 * j);
            const __m256d xv = _mm256_loadu_pd(xd + 2 * j);
            // Split products: re*re - im*im and re*im + im*re summed per lane pair.
            const __m256d xswap = _mm256_permute_pd(xv, 0b0101);
            acc_re = _mm256_fmadd_pd(mv, xv, acc_re);
            acc_im = _mm256_fmadd_pd(mv, xswap, acc_im);
        }
        // acc_re lanes hold [a.re*x.re, a.im*x.im, ...]; real part is
        // even-lane minus odd-lane. acc_im holds [a.re*x.im, a.im*x.re, ...];
        // imaginary part is even-lane plus odd-lane.
        alignas(32) double re4[4], im4[4];
        _mm256_store_pd(re4, acc_re);
        _mm256_store_pd(im4, acc_im);
        double re = (re4[0] - re4[1]) + (re4[2] - re4[3]);
        double im = (im4[0] + im4[1]) + (im4[2] + im4[3]);
        for (; j < n; ++j) {
            const cplx prod = m[i * n + j] * x[j];
            re += prod.real();
            im += prod.imag();
        }
        y[i] = cplx(re, im);
    }
}

}  // namespace tqw::kernels::detail

#endif
