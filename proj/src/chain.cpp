#include "tqw/chain.hpp"

#include <stdexcept>

namespace tqw {

namespace {
const cplx kI(0.0, 1.0);
}

void ModelParams::validate() const {
    if (n_sites < 1 || n_sites > 10)
        throw std::invalid_argument("n_sites must be between 1 and 10");
    if (alpha == 0.0 || beta == 0.0)
        throw std::invalid_argument(
            "alpha and beta must be nonzero: the Hamiltonian boundary terms divide by them");
}

DenseMatrix r_matrix(cplx u) {
    DenseMatrix r(4);
    const cplx d = u - 0.5 * kI;
    for (int i = 0; i < 4; ++i) r.at(i, i) = d;
    // permutation on the two qubit factors: swaps |01> and |10>
    r.at(0, 0) += kI;
    r.at(3, 3) += kI;
    r.at(1, 2) += kI;
    r.at(2, 1) += kI;
    return r;
}

DenseMatrix k_right(cplx u, const ModelParams& p) {
    DenseMatrix k(2);
    k.at(0, 0) = kI * (p.alpha - 0.5) + u;
    k.at(1, 1) = kI * (p.alpha + 0.5) - u;
    return k;
}

DenseMatrix k_left(cplx u, const ModelParams& p) {
    DenseMatrix k(2);
    k.at(0, 0) = kI * (p.beta - 0.5) - u;
    k.at(1, 1) = kI * (p.beta + 0.5) + u;
    k.at(0, 1) = -p.xi * (u + 0.5 * kI);
    k.at(1, 0) = -p.xi * (u + 0.5 * kI);
    return k;
}

DenseMatrix embed_two_site(const DenseMatrix& op4, int a, int b, int n_factors) {
    if (op4.dim != 4 || a >= b || b >= n_factors)
        throw std::invalid_argument("embed_two_site: bad arguments");
    const int dim = 1 << n_factors;
    const int sh_a = n_factors - 1 - a;
    const int sh_b = n_factors - 1 - b;
    DenseMatrix m(dim);
    for (int row = 0; row < dim; ++row) {
        const int ra = (row >> sh_a) & 1;
        const int rb = (row >> sh_b) & 1;
        const int base = row & ~((1 << sh_a) | (1 << sh_b));
        for (int ca = 0; ca < 2; ++ca)
            for (int cb = 0; cb < 2; ++cb) {
                const cplx v = op4.at(ra * 2 + rb, ca * 2 + cb);
                if (v == cplx(0.0)) continue;
                m.at(row, base | (ca << sh_a) | (cb << sh_b)) += v;
            }
    }
    return m;
}

DenseMatrix embed_one_site(const DenseMatrix& op2, int k, int n_factors) {
    if (op2.dim != 2 || k >= n_factors) throw std::invalid_argument("embed_one_site: bad arguments");
    const int dim = 1 << n_factors;
    const int sh = n_factors - 1 - k;
    DenseMatrix m(dim);
    for (int row = 0; row < dim; ++row) {
        const int rk = (row >> sh) & 1;
        const int base = row & ~(1 << sh);
        for (int ck = 0; ck < 2; ++ck) {
            const cplx v = op2.at(rk, ck);
            if (v == cplx(0.0)) continue;
            m.at(row, base | (ck << sh)) += v;
        }
    }
    return m;
}

std::pair<DenseMatrix, DenseMatrix> monodromy(cplx u, const ModelParams& p) {
    const int nf = p.n_sites + 1;
    const DenseMatrix r = r_matrix(u);
    DenseMatrix m = embed_two_site(r, 0, 1, nf);
    DenseMatrix mhat = embed_two_site(r, 0, p.n_sites, nf);
    for (int k = 2; k <= p.n_sites; ++k) m = m * embed_two_site(r, 0, k, nf);
    for (int k = p.n_sites - 1; k >= 1; --k) mhat = mhat * embed_two_site(r, 0, k, nf);
    return {std::move(m), std::move(mhat)};
}

DenseMatrix transfer_matrix(cplx u, const ModelParams& p) {
    const int half = p.quantum_dim();
    auto [m, mhat] = monodromy(u, p);
    const DenseMatrix id_q = DenseMatrix::identity(half);
    const DenseMatrix big = kron(k_left(u, p), id_q) * m * kron(k_right(u, p), id_q) * mhat;
    DenseMatrix t(half);
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            t.at(i, j) = big.at(i, j) + big.at(half + i, half + j);
    return t;
}

DenseMatrix hamiltonian(const ModelParams& p) {
    const int n = p.n_sites;
    DenseMatrix h(p.quantum_dim());

    // sigma.sigma on two adjacent sites is real: diag(1,-1,-1,1) plus a
    // 2 on the |01><10| entries.
    DenseMatrix heis(4);
    heis.at(0, 0) = 1.0;
    heis.at(3, 3) = 1.0;
    heis.at(1, 1) = -1.0;
    heis.at(2, 2) = -1.0;
    heis.at(1, 2) = 2.0;
    heis.at(2, 1) = 2.0;
    for (int k = 0; k + 1 < n; ++k) h = h + embed_two_site(heis, k, k + 1, n);

    DenseMatrix sx(2), sz(2);
    sx.at(0, 1) = 1.0;
    sx.at(1, 0) = 1.0;
    sz.at(0, 0) = 1.0;
    sz.at(1, 1) = -1.0;
    h = h + (-p.xi / p.beta) * embed_one_site(sx, 0, n);
    h = h + cplx(-1.0 / p.beta) * embed_one_site(sz, 0, n);
    h = h + cplx(1.0 / p.alpha) * embed_one_site(sz, n - 1, n);
    return h;
}

DenseMatrix charge_conjugation(const ModelParams& p) {
    DenseMatrix sx(2);
    sx.at(0, 1) = 1.0;
    sx.at(1, 0) = 1.0;
    DenseMatrix c = sx;
    for (int k = 1; k < p.n_sites; ++k) c = kron(c, sx);
    return c;
}

}  // namespace tqw
