#ifndef TQW_CHAIN_HPP
#define TQW_CHAIN_HPP

#include <cmath>
#include <utility>

#include "tqw/matrix.hpp"

namespace tqw {

/// Chain length and boundary field parameters of the open XXX spin-1/2
/// chain. alpha tunes the right (diagonal) boundary; beta and xi the left
/// (generally non-diagonal) one. xi == 0 is the U(1)-symmetric diagonal case.
struct ModelParams {
    int n_sites = 1;
    double alpha = 1.0;
    double beta = 1.0;
    double xi = 0.0;

    /// sqrt(1 + xi^2), >= 1.
    double root_term() const { return std::sqrt(1.0 + xi * xi); }
    /// -2 (1 - sqrt(1 + xi^2)); zero exactly when xi == 0.
    double gamma() const { return -2.0 * (1.0 - root_term()); }

    int quantum_dim() const { return 1 << n_sites; }

    /// Throws std::invalid_argument on alpha == 0, beta == 0 (the
    /// Hamiltonian divides by both) or n_sites outside [1, 10].
    void validate() const;
};

/// R(u) = (u - i/2) I + i P on C^2 (x) C^2, P the permutation matrix.
DenseMatrix r_matrix(cplx u);

/// Right boundary matrix, diag(i(alpha-1/2)+u, i(alpha+1/2)-u).
DenseMatrix k_right(cplx u, const ModelParams& p);

/// Left boundary matrix; off-diagonal entries -xi(u+i/2).
DenseMatrix k_left(cplx u, const ModelParams& p);

/// (M, Mhat) on auxiliary (x) quantum space, dimension 2^(N+1); the
/// auxiliary factor is the leftmost (most significant). M multiplies
/// R_{01}...R_{0N}, Mhat the reverse order.
std::pair<DenseMatrix, DenseMatrix> monodromy(cplx u, const ModelParams& p);

/// Transfer matrix tr_0 [ K^L_0 M_0 K^R_0 Mhat_0 ] on the 2^N quantum space.
DenseMatrix transfer_matrix(cplx u, const ModelParams& p);

/// H = sum_k sigma_k.sigma_{k+1} - (xi/beta) sx_1 - (1/beta) sz_1 + (1/alpha) sz_N.
DenseMatrix hamiltonian(const ModelParams& p);

/// (sigma^x)^(x N).
DenseMatrix charge_conjugation(const ModelParams& p);

/// Two-site operator op4 placed on factors (a, b), a < b, of n_factors
/// qubit factors; factor 0 is the most significant.
DenseMatrix embed_two_site(const DenseMatrix& op4, int a, int b, int n_factors);

/// Single-site operator on factor k of n_factors.
DenseMatrix embed_one_site(const DenseMatrix& op2, int k, int n_factors);

}  // namespace tqw

#endif
