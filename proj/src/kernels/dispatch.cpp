#include "tqw/kernels.hpp"

#include <cstdlib>
#include <string>

namespace tqw::kernels {

namespace {

struct KernelTable {
    void (*gemm)(std::size_t, const cplx*, const cplx*, cplx*);
    void (*gemv)(std::size_t, const cplx*, const cplx*, cplx*);
    std::string_view name;
};

KernelTable select() {
#if defined(__x86_64__) || defined(_M_X64)
    const bool cpu_ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    const char* req = std::getenv("TQW_KERNEL");
    const std::string mode = req ? req : "auto";
    if (mode == "scalar") return {detail::cgemm_scalar, detail::cgemv_scalar, "scalar"};
    if ((mode == "avx2" || mode == "auto") && cpu_ok)
        return {detail::cgemm_avx2, detail::cgemv_avx2, "avx2"};
#endif
    return {detail::cgemm_scalar, detail::cgemv_scalar, "scalar"};
}

const KernelTable& table() {
    static const KernelTable t = select();
    return t;
}

}  // namespace

void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) { table().gemm(n, a, b, c); }

void cgemv(std::size_t n, const cplx* m, const cplx* x, cplx* y) { table().gemv(n, m, x, y); }

std::string_view active_kernel() { return table().name; }

}  // namespace tqw::kernels
