#ifndef TQW_KERNELS_HPP
#define TQW_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string_view>

namespace tqw::kernels {

using cplx = std::complex<double>;

/// C = A * B for row-major n x n complex matrices. C must not alias A or B.
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);

/// y = M * x for a row-major n x n matrix.
void cgemv(std::size_t n, const cplx* m, const cplx* x, cplx* y);

/// Name of the kernel set selected at runtime ("avx2" or "scalar").
/// Set TQW_KERNEL=scalar|avx2|auto to override CPU detection; an avx2
/// request on a CPU without AVX2+FMA falls back to scalar.
std::string_view active_kernel();

namespace detail {
void cgemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void cgemv_scalar(std::size_t n, const cplx* m, const cplx* x, cplx* y);
#if defined(__x86_64__) || defined(_M_X64)
void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void cgemv_avx2(std::size_t n, const cplx* m, const cplx* x, cplx* y);
#endif
}  // namespace detail

}  // namespace tqw::kernels

#endif
