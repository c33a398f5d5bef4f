#ifndef TQW_SPECTRUM_HPP
#define TQW_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "tqw/chain.hpp"
#include "tqw/poly.hpp"

namespace tqw {

/// Joint eigenbasis of the commuting family together with each
/// transfer-matrix eigenvalue reconstructed as an explicit polynomial.
struct SpectralData {
    ModelParams params;
    std::vector<double> h_eigenvalues;             ///< ascending; fixes the ordering
    std::vector<std::vector<cplx>> eigenvectors;   ///< unit norm, dimension 2^N
    std::vector<Polynomial> t_polys;               ///< degree 2N+2, leading coeff -2
    std::vector<double> recon_residuals;
};

/// v^dag T v / v^dag v.
cplx rayleigh(const DenseMatrix& t, const std::vector<cplx>& v);

/// Simultaneous eigenvectors of H and T(u), ordered by H eigenvalue
/// ascending. H (real symmetric) is the primary resolving operator;
/// any H-degenerate subspace is resolved by diagonalizing the restriction
/// of T(probe) within it. Throws std::runtime_error when H and T(probe)
/// are degenerate on the same subspace — retry with a different probe.
std::vector<std::vector<cplx>> joint_eigenbasis(const ModelParams& p, double probe = 0.63);

/// Overload that also reports the H eigenvalues (ascending).
std::vector<std::vector<cplx>> joint_eigenbasis(const ModelParams& p, double probe,
                                                std::vector<double>& h_eigenvalues);

/// Reconstructs t(u) = <v|T(u)|v> as the degree-(2N+2) interpolant through
/// 2N+3 Chebyshev nodes on [0.5, 2.5]; the returned residual is the held-out
/// reconstruction error at four fixed probe points, relative to the largest
/// probed magnitude. Throws std::runtime_error if it exceeds tol (v is then
/// not a clean joint eigenvector).
std::pair<Polynomial, double> eigenvalue_polynomial(const ModelParams& p,
                                                    const std::vector<cplx>& v,
                                                    double tol = 1e-6);

/// Full spectral pipeline: eigenbasis plus one eigenvalue polynomial per
/// eigenvector. Transfer-matrix samples are shared across eigenvectors.
SpectralData spectral_data(const ModelParams& p, double tol = 1e-6);

}  // namespace tqw

#endif
