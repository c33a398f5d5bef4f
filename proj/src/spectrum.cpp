#include "tqw/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace tqw {

namespace {

constexpr double kDegeneracyRel = 1e-8;
constexpr double kHeldOutProbes[4] = {0.37, 1.91, 3.1, 0.11};

Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
    return Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        m.a.data(), m.dim, m.dim);
}

std::vector<std::vector<cplx>> sample_values(const ModelParams& p,
                                             const std::vector<std::vector<cplx>>& vecs,
                                             const std::vector<double>& points) {
    std::vector<std::vector<cplx>> vals(vecs.size(), std::vector<cplx>(points.size()));
    for (size_t j = 0; j < points.size(); ++j) {
        const DenseMatrix t = transfer_matrix(points[j], p);
        for (size_t i = 0; i < vecs.size(); ++i) vals[i][j] = rayleigh(t, vecs[i]);
    }
    return vals;
}

std::pair<Polynomial, double> reconstruct(const std::vector<double>& nodes,
                                          const std::vector<cplx>& node_vals,
                                          const std::vector<cplx>& probe_vals, double tol) {
    std::vector<std::pair<cplx, cplx>> pts(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) pts[j] = {cplx(nodes[j]), node_vals[j]};
    Polynomial t_poly = interpolate(pts);

    double scale = 1.0;
    for (const auto& v : probe_vals) scale = std::max(scale, std::abs(v));
    double resid = 0.0;
    for (size_t j = 0; j < probe_vals.size(); ++j)
        resid = std::max(resid, std::abs(probe_vals[j] - t_poly.eval(kHeldOutProbes[j])) / scale);
    if (resid > tol)
        throw std::runtime_error(
            "eigenvalue reconstruction residual above tolerance; the vector is not a clean "
            "joint eigenvector (degeneracy may have leaked)");
    return {std::move(t_poly), resid};
}

}  // namespace

cplx rayleigh(const DenseMatrix& t, const std::vector<cplx>& v) {
    const std::vector<cplx> tv = t * v;
    cplx num = 0.0, den = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        num += std::conj(v[i]) * tv[i];
        den += std::conj(v[i]) * v[i];
    }
    return num / den;
}

std::vector<std::vector<cplx>> joint_eigenbasis(const ModelParams& p, double probe) {
    std::vector<double> ignored;
    return joint_eigenbasis(p, probe, ignored);
}

std::vector<std::vector<cplx>> joint_eigenbasis(const ModelParams& p, double probe,
                                                std::vector<double>& h_eigenvalues) {
    p.validate();
    const int dim = p.quantum_dim();
    const DenseMatrix h = hamiltonian(p);

    Eigen::MatrixXd hr(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) hr(i, j) = h.at(i, j).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hr);
    if (es.info() != Eigen::Success) throw std::runtime_error("H eigensolver failed");
    const Eigen::VectorXd w = es.eigenvalues();
    const Eigen::MatrixXd v = es.eigenvectors();

    h_eigenvalues.assign(w.data(), w.data() + dim);
    const double diameter = std::max(w(dim - 1) - w(0), 1.0);

    std::vector<std::vector<cplx>> out(static_cast<size_t>(dim));
    Eigen::MatrixXcd t0;  // built lazily, only if a degenerate block shows up

    int lo = 0;
    while (lo < dim) {
        int hi = lo + 1;
        while (hi < dim && w(hi) - w(hi - 1) < kDegeneracyRel * diameter) ++hi;
        const int k = hi - lo;
        if (k == 1) {
            std::vector<cplx> vec(static_cast<size_t>(dim));
            for (int i = 0; i < dim; ++i) vec[static_cast<size_t>(i)] = v(i, lo);
            out[static_cast<size_t>(lo)] = std::move(vec);
        } else {
            if (t0.size() == 0) t0 = to_eigen(transfer_matrix(probe, p));
            const Eigen::MatrixXcd block =
                v.middleCols(lo, k).transpose().cast<cplx>() * t0 * v.middleCols(lo, k).cast<cplx>();
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> bes(block);
            if (bes.info() != Eigen::Success) throw std::runtime_error("block eigensolver failed");
            const double bscale = std::max(block.cwiseAbs().maxCoeff(), 1.0);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (std::abs(bes.eigenvalues()(i) - bes.eigenvalues()(j)) < kDegeneracyRel * bscale)
                        throw std::runtime_error(
                            "unresolved degeneracy: H and T(probe) are degenerate on the same "
                            "subspace; retry with a different probe u0");
            // deterministic ordering inside the block
            std::vector<int> order(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) order[static_cast<size_t>(i)] = i;
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                const cplx ex = bes.eigenvalues()(x), ey = bes.eigenvalues()(y);
                if (ex.real() != ey.real()) return ex.real() < ey.real();
                return ex.imag() < ey.imag();
            });
            for (int c = 0; c < k; ++c) {
                Eigen::VectorXcd col =
                    v.middleCols(lo, k).cast<cplx>() * bes.eigenvectors().col(order[static_cast<size_t>(c)]);
                col.normalize();
                std::vector<cplx> vec(col.data(), col.data() + dim);
                out[static_cast<size_t>(lo + c)] = std::move(vec);
            }
        }
        lo = hi;
    }
    return out;
}

std::pair<Polynomial, double> eigenvalue_polynomial(const ModelParams& p,
                                                    const std::vector<cplx>& v, double tol) {
    const int count = 2 * p.n_sites + 3;
    const std::vector<double> nodes = chebyshev_nodes(count, 0.5, 2.5);
    std::vector<double> all = nodes;
    all.insert(all.end(), std::begin(kHeldOutProbes), std::end(kHeldOutProbes));
    const auto vals = sample_values(p, {v}, all);
    const std::vector<cplx> node_vals(vals[0].begin(), vals[0].begin() + count);
    const std::vector<cplx> probe_vals(vals[0].begin() + count, vals[0].end());
    return reconstruct(nodes, node_vals, probe_vals, tol);
}

SpectralData spectral_data(const ModelParams& p, double tol) {
    SpectralData sd;
    sd.params = p;
    sd.eigenvectors = joint_eigenbasis(p, 0.63, sd.h_eigenvalues);

    const int count = 2 * p.n_sites + 3;
    const std::vector<double> nodes = chebyshev_nodes(count, 0.5, 2.5);
    std::vector<double> all = nodes;
    all.insert(all.end(), std::begin(kHeldOutProbes), std::end(kHeldOutProbes));
    const auto vals = sample_values(p, sd.eigenvectors, all);

    sd.t_polys.reserve(sd.eigenvectors.size());
    sd.recon_residuals.reserve(sd.eigenvectors.size());
    for (const auto& row : vals) {
        const std::vector<cplx> node_vals(row.begin(), row.begin() + count);
        const std::vector<cplx> probe_vals(row.begin() + count, row.end());
        auto [poly, resid] = reconstruct(nodes, node_vals, probe_vals, tol);
        sd.t_polys.push_back(std::move(poly));
        sd.recon_residuals.push_back(resid);
    }
    return sd;
}

}  // namespace tqw
