#include "tqw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqw {

DenseMatrix DenseMatrix::identity(int d) {
    DenseMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

cplx DenseMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matrix product: dimension mismatch");
    DenseMatrix c(x.dim);
    kernels::cgemm(static_cast<size_t>(x.dim), x.a.data(), y.a.data(), c.a.data());
    return c;
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matrix sum: dimension mismatch");
    DenseMatrix c = x;
    for (size_t i = 0; i < c.a.size(); ++i) c.a[i] += y.a[i];
    return c;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matrix difference: dimension mismatch");
    DenseMatrix c = x;
    for (size_t i = 0; i < c.a.size(); ++i) c.a[i] -= y.a[i];
    return c;
}

DenseMatrix operator*(cplx s, const DenseMatrix& x) {
    DenseMatrix c = x;
    for (auto& v : c.a) v *= s;
    return c;
}

std::vector<cplx> operator*(const DenseMatrix& m, const std::vector<cplx>& v) {
    if (static_cast<int>(v.size()) != m.dim) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cplx> y(v.size());
    kernels::cgemv(static_cast<size_t>(m.dim), m.a.data(), v.data(), y.data());
    return y;
}

DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix c(x.dim * y.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) {
            const cplx xij = x.at(i, j);
            if (xij == cplx(0.0)) continue;
            for (int k = 0; k < y.dim; ++k)
                for (int l = 0; l < y.dim; ++l)
                    c.at(i * y.dim + k, j * y.dim + l) = xij * y.at(k, l);
        }
    return c;
}

double commutator_max_abs(const DenseMatrix& x, const DenseMatrix& y) {
    return (x * y - y * x).max_abs();
}

}  // namespace tqw
