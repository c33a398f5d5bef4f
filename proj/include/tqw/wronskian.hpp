#ifndef TQW_WRONSKIAN_HPP
#define TQW_WRONSKIAN_HPP

#include <utility>

#include "tqw/poly.hpp"
#include "tqw/tq.hpp"

namespace tqw {

/// Outcome of the Wronskian-identity verification for one eigenvalue.
///
/// Two independent computations of mu are compared: division of W by
/// u^{2N+1}, and the discrete antidifference of gamma u (Q - P) (the latter
/// canonicalized to zero constant term, so the comparison is modulo one
/// additive constant). The difference-equation check on the division-mu is
/// exact, not modulo constants.
struct WronskianReport {
    Polynomial w_poly;
    Polynomial mu_poly;   ///< from division by u^{2N+1}
    Polynomial mu_anti;   ///< from the antidifference route, zero constant term
    double divisibility_defect = 0.0;  ///< low coefficients of W, relative to max|W|
    double mu_match_defect = 0.0;      ///< |mu_poly - mu_anti| after constant alignment
    double mu_relation_defect = 0.0;   ///< |mu^+ - mu^- - gamma u (Q-P)|, relative
    double w_parity_defect = 0.0;      ///< even-coefficient mass of W, relative
    double mu_parity_defect = 0.0;     ///< odd-coefficient mass of mu, relative
    int mu_degree = 0;                 ///< with coefficients below 1e-8 relative trimmed
    bool pass = false;
};

/// W = g P^+ Q^- - f P^- Q^+, via exact shifts and products.
Polynomial wronskian_poly(const Polynomial& q, const Polynomial& p, const BoundaryFunctions& bf);

/// (mu, divisibility defect relative to max|W| coefficient) from
/// W = mu u^{2N+1}.
std::pair<Polynomial, double> extract_mu(const Polynomial& w, int n_sites);

/// mu as the discrete antidifference of gamma u (q - p), zero constant term.
Polynomial mu_from_antidifference(const Polynomial& q, const Polynomial& p, double gamma);

/// Runs every check of the identity at tolerance tol and assembles the report.
WronskianReport verify_identity(const TQSolution& sol, const BoundaryFunctions& bf, int n_sites,
                                double tol);

}  // namespace tqw

#endif
