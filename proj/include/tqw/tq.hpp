#ifndef TQW_TQ_HPP
#define TQW_TQ_HPP

#include <utility>
#include <vector>

#include "tqw/chain.hpp"
#include "tqw/poly.hpp"

namespace tqw {

/// Boundary data entering the TQ-equation: f(u) = (u - i alpha)(u sqrt(1+xi^2) + i beta),
/// g(u) = f(-u), and the inhomogeneity strength gamma = -2(1 - sqrt(1+xi^2)).
struct BoundaryFunctions {
    Polynomial f;
    Polynomial g;
    double gamma = 0.0;

    /// Boundary data of the dual equation: f and g interchanged.
    BoundaryFunctions dual() const { return {g, f, gamma}; }
};

BoundaryFunctions boundary_functions(const ModelParams& p);

/// Diagnostics of one TQ solve.
struct TqSolveInfo {
    double sigma_ratio = 1.0;  ///< smallest/largest singular value of the design matrix
    bool fallback = false;     ///< deficient monic ansatz; homogeneous null-vector solution used
    int degree = 0;            ///< degree of the returned polynomial
};

/// Defect polynomial of the TQ-equation for a candidate (T, Q):
///   -u T Q - [ g^- (u^+)^{2N+1} Q^{--} + f^+ (u^-)^{2N+1} Q^{++}
///              - gamma u (u^- u^+)^{2N+1} ],
/// all shifts exact. Zero iff Q solves the equation for this T.
/// For the dual equation pass bf.dual().
Polynomial tq_defect(const Polynomial& t, const Polynomial& q, const BoundaryFunctions& bf,
                     int n_sites);

/// Solves the TQ-equation for an even monic Q of degree 2N by evaluating the
/// defect at 4N+6 nodes on the circle |u| = 1.7 and least-squares fitting the
/// N free even coefficients. Returns (Q, relative residual): defect sup-norm
/// over the nodes divided by the sup-norm of the largest single term.
///
/// When the design matrix is numerically rank-deficient (the degree-2N monic
/// solution is not unique or does not exist, e.g. the diagonal case xi = 0),
/// the solver falls back to the homogeneous formulation and returns the
/// lower-degree monic solution instead, flagged in TqSolveInfo. Throws
/// std::runtime_error when no candidate reaches residual 1e-3 (t is then not
/// an eigenvalue polynomial of this family).
std::pair<Polynomial, double> solve_q(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites);
std::pair<Polynomial, double> solve_q(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites, TqSolveInfo& info);

/// Same procedure for the dual TQ-equation (f and g interchanged), solved by P.
std::pair<Polynomial, double> solve_p(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites);
std::pair<Polynomial, double> solve_p(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites, TqSolveInfo& info);

/// Roots of an even polynomial q(u) = prod (u - u_k)(u + u_k), one
/// representative per symmetric pair, canonicalized to nonnegative real part
/// (nonnegative imaginary part on the imaginary axis). Throws if q is not
/// even within tolerance.
std::vector<cplx> extract_roots(const Polynomial& q);

/// Per-eigenvalue bundle produced by the solver pipeline.
struct TQSolution {
    Polynomial t_poly;
    Polynomial q_poly;
    Polynomial p_poly;
    double q_residual = 0.0;
    double p_residual = 0.0;
    std::vector<cplx> bethe_roots;
    std::vector<cplx> dual_roots;
    TqSolveInfo q_info;
    TqSolveInfo p_info;
};

/// Solves both equations for one eigenvalue polynomial and extracts roots.
TQSolution solve_tq_pair(const Polynomial& t, const BoundaryFunctions& bf, int n_sites);

}  // namespace tqw

#endif
