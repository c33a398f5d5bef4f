#include "tqw/wronskian.hpp"

#include <algorithm>
#include <cmath>

namespace tqw {

namespace {
const cplx kHalfI(0.0, 0.5);
}

Polynomial wronskian_poly(const Polynomial& q, const Polynomial& p, const BoundaryFunctions& bf) {
    return bf.g * shift(p, kHalfI) * shift(q, -kHalfI) - bf.f * shift(p, -kHalfI) * shift(q, kHalfI);
}

std::pair<Polynomial, double> extract_mu(const Polynomial& w, int n_sites) {
    auto [mu, defect_abs] = divide_by_power(w, 2 * n_sites + 1);
    return {std::move(mu), defect_abs / std::max(w.max_abs_coeff(), 1e-300)};
}

Polynomial mu_from_antidifference(const Polynomial& q, const Polynomial& p, double gamma) {
    return antidifference(gamma * (Polynomial::monomial(1) * (q - p)));
}

WronskianReport verify_identity(const TQSolution& sol, const BoundaryFunctions& bf, int n_sites,
                                double tol) {
    WronskianReport rep;
    rep.w_poly = wronskian_poly(sol.q_poly, sol.p_poly, bf);
    std::tie(rep.mu_poly, rep.divisibility_defect) = extract_mu(rep.w_poly, n_sites);
    rep.mu_anti = mu_from_antidifference(sol.q_poly, sol.p_poly, bf.gamma);

    const double mu_scale = std::max(rep.mu_poly.max_abs_coeff(), 1e-300);

    // agreement of the two mu routes, modulo one additive constant
    const Polynomial aligned =
        rep.mu_poly - rep.mu_anti - Polynomial::constant(rep.mu_poly.coeff(0) - rep.mu_anti.coeff(0));
    rep.mu_match_defect = aligned.max_abs_coeff() / mu_scale;

    // exact difference-equation check on the division-extracted mu
    const Polynomial relation = shift(rep.mu_poly, kHalfI) - shift(rep.mu_poly, -kHalfI) -
                                bf.gamma * (Polynomial::monomial(1) * (sol.q_poly - sol.p_poly));
    rep.mu_relation_defect = relation.max_abs_coeff() / mu_scale;

    const auto [w_odd, w_even] = parity_defect(rep.w_poly);
    rep.w_parity_defect = w_even / std::max(w_odd, 1e-300);
    const auto [mu_odd, mu_even] = parity_defect(rep.mu_poly);
    rep.mu_parity_defect = mu_odd / std::max(mu_even, 1e-300);

    int d = std::max(rep.mu_poly.degree(), 0);
    while (d > 0 && std::abs(rep.mu_poly.coeff(d)) < 1e-8 * mu_scale) --d;
    rep.mu_degree = d;

    rep.pass = rep.divisibility_defect < tol && rep.mu_match_defect < tol &&
               rep.mu_relation_defect < tol && rep.w_parity_defect < tol &&
               rep.mu_parity_defect < tol && rep.mu_degree <= 2 * n_sites;
    return rep;
}

}  // namespace tqw
