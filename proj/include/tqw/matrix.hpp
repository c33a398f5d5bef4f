#ifndef TQW_MATRIX_HPP
#define TQW_MATRIX_HPP

#include <complex>
#include <vector>

#include "tqw/kernels.hpp"

namespace tqw {

using cplx = std::complex<double>;

/// Square dense complex matrix, row-major.
struct DenseMatrix {
    int dim = 0;
    std::vector<cplx> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d, cplx(0.0)) {}

    static DenseMatrix identity(int d);

    cplx& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

    cplx trace() const;
    double max_abs() const;
};

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(cplx s, const DenseMatrix& x);

std::vector<cplx> operator*(const DenseMatrix& m, const std::vector<cplx>& v);

/// Kronecker product, x's factor leftmost (most significant).
DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y);

/// max |[X, Y]| entry.
double commutator_max_abs(const DenseMatrix& x, const DenseMatrix& y);

}  // namespace tqw

#endif
