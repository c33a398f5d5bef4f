#include "tqw/tq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace tqw {

namespace {

const cplx kI(0.0, 1.0);

constexpr double kDeficiencyTol = 1e-10;   // sigma_min/sigma_max below this: deficient ansatz
constexpr double kCoeffBlowup = 1e8;       // least-squares coefficients beyond this: deficient
constexpr double kNoSolutionTol = 1e-3;    // best residual above this: t is not an eigenvalue

std::vector<cplx> solve_nodes(int n_sites) {
    const int count = 4 * n_sites + 6;
    std::vector<cplx> nodes(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
        const double phi = 2.0 * std::numbers::pi * (j + 0.37) / count;
        nodes[static_cast<size_t>(j)] = 1.7 * cplx(std::cos(phi), std::sin(phi));
    }
    return nodes;
}

struct NodeTerms {
    // The three Q-dependent factors at one node: -uT, g^-(u^+)^{2N+1},
    // f^+(u^-)^{2N+1}; plus the Q-independent inhomogeneous value
    // gamma u (u^- u^+)^{2N+1}.
    cplx minus_ut, gshift, fshift, inhom;
    cplx u;
};

std::vector<NodeTerms> node_terms(const Polynomial& t, const BoundaryFunctions& bf, int n_sites,
                                  const std::vector<cplx>& nodes) {
    std::vector<NodeTerms> out;
    out.reserve(nodes.size());
    const int pw = 2 * n_sites + 1;
    for (const cplx u : nodes) {
        const cplx up = u + 0.5 * kI, um = u - 0.5 * kI;
        NodeTerms nt;
        nt.u = u;
        nt.minus_ut = -u * t.eval(u);
        nt.gshift = bf.g.eval(um) * std::pow(up, pw);
        nt.fshift = bf.f.eval(up) * std::pow(um, pw);
        nt.inhom = bf.gamma * u * std::pow(um * up, pw);
        out.push_back(nt);
    }
    return out;
}

// Relative residual: sup over nodes of |defect| / sup of the largest term.
double node_residual(const Polynomial& q, const std::vector<NodeTerms>& terms) {
    double sup_d = 0.0, sup_t = 0.0;
    for (const auto& nt : terms) {
        const cplx t1 = nt.minus_ut * q.eval(nt.u);
        const cplx t2 = nt.gshift * q.eval(nt.u - kI);
        const cplx t3 = nt.fshift * q.eval(nt.u + kI);
        sup_d = std::max(sup_d, std::abs(t1 - t2 - t3 + nt.inhom));
        sup_t = std::max({sup_t, std::abs(t1), std::abs(t2), std::abs(t3), std::abs(nt.inhom)});
    }
    return sup_d / std::max(sup_t, 1e-300);
}

Polynomial even_poly(const Eigen::VectorXcd& even_coeffs) {
    std::vector<cplx> c(static_cast<size_t>(2 * (even_coeffs.size() - 1) + 1), cplx(0.0));
    for (Eigen::Index m = 0; m < even_coeffs.size(); ++m)
        c[static_cast<size_t>(2 * m)] = even_coeffs(m);
    return Polynomial(std::move(c));
}

std::pair<Polynomial, double> solve_impl(const Polynomial& t, const BoundaryFunctions& bf,
                                         int n_sites, TqSolveInfo& info) {
    if (t.degree() != 2 * n_sites + 2)
        throw std::invalid_argument("solve_q: t must have degree 2N+2");
    const int nfree = n_sites;
    const auto nodes = solve_nodes(n_sites);
    const auto terms = node_terms(t, bf, n_sites, nodes);
    const int rows = static_cast<int>(nodes.size());

    // Column m carries the defect contribution of the u^{2m} coefficient;
    // the last column is the monic u^{2N} part.
    Eigen::MatrixXcd full(rows, nfree + 1);
    Eigen::VectorXcd inhom(rows);
    for (int r = 0; r < rows; ++r) {
        const auto& nt = terms[static_cast<size_t>(r)];
        for (int m = 0; m <= nfree; ++m)
            full(r, m) = nt.minus_ut * std::pow(nt.u, 2 * m) -
                         nt.gshift * std::pow(nt.u - kI, 2 * m) -
                         nt.fshift * std::pow(nt.u + kI, 2 * m);
        inhom(r) = nt.inhom;
    }

    double term_scale = 1e-300;
    for (const auto& nt : terms)
        term_scale = std::max({term_scale, std::abs(nt.minus_ut), std::abs(nt.gshift),
                               std::abs(nt.fshift), std::abs(nt.inhom)});

    const Eigen::MatrixXcd a = full.leftCols(nfree);
    const Eigen::VectorXcd b = -full.col(nfree) - inhom;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sig_max = svd.singularValues()(0);
    const double sig_min = svd.singularValues()(nfree - 1);
    info.sigma_ratio = sig_max > 0.0 ? sig_min / sig_max : 0.0;

    Polynomial q_monic;
    double res_monic = 1.0;
    bool monic_ok = sig_max > 1e-13 * term_scale;
    if (monic_ok) {
        Eigen::VectorXcd c(nfree + 1);
        c.head(nfree) = svd.solve(b);
        c(nfree) = 1.0;
        q_monic = even_poly(c);
        res_monic = node_residual(q_monic, terms);
        monic_ok = c.head(nfree).cwiseAbs().maxCoeff() <= kCoeffBlowup;
    }

    const bool deficient = !monic_ok || info.sigma_ratio < kDeficiencyTol;
    if (deficient) {
        // The monic degree-2N family is not well posed; take the best
        // homogeneous solution over all N+1 even coefficients instead
        // (smallest singular direction), normalized monic at its true degree.
        Eigen::JacobiSVD<Eigen::MatrixXcd> fsvd(full, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Eigen::VectorXcd x = fsvd.matrixV().col(nfree);
        const double xmax = x.cwiseAbs().maxCoeff();
        int top = nfree;
        while (top > 0 && std::abs(x(top)) < 1e-8 * xmax) --top;
        x /= x(top);
        Polynomial q_fb = even_poly(x.head(top + 1));
        const double res_fb = node_residual(q_fb, terms);
        if (!monic_ok || res_fb <= res_monic) {
            info.fallback = true;
            info.degree = q_fb.degree();
            if (res_fb > kNoSolutionTol)
                throw std::runtime_error(
                    "TQ solve: rank-deficient design matrix and no solution at any admissible "
                    "degree; t is not an eigenvalue polynomial of this family");
            return {std::move(q_fb), res_fb};
        }
    }
    if (res_monic > kNoSolutionTol)
        throw std::runtime_error(
            "TQ solve: no monic degree-2N solution (residual above 1e-3); t is not an "
            "eigenvalue polynomial of this family");
    info.degree = q_monic.degree();
    return {std::move(q_monic), res_monic};
}

}  // namespace

BoundaryFunctions boundary_functions(const ModelParams& p) {
    const double rt = p.root_term();
    const Polynomial f = Polynomial{-kI * p.alpha, 1.0} * Polynomial{kI * p.beta, rt};
    std::vector<cplx> gc = f.coeffs();
    for (size_t k = 1; k < gc.size(); k += 2) gc[k] = -gc[k];
    return {f, Polynomial(std::move(gc)), p.gamma()};
}

Polynomial tq_defect(const Polynomial& t, const Polynomial& q, const BoundaryFunctions& bf,
                     int n_sites) {
    const cplx half(0.0, 0.5);
    const int pw = 2 * n_sites + 1;
    Polynomial up_pw{1.0}, um_pw{1.0};
    const Polynomial up{half, 1.0}, um{-half, 1.0};
    for (int k = 0; k < pw; ++k) {
        up_pw = up_pw * up;
        um_pw = um_pw * um;
    }
    const Polynomial u = Polynomial::monomial(1);
    const Polynomial lhs = -1.0 * (u * t * q);
    const Polynomial rhs = shift(bf.g, -half) * up_pw * shift(q, -2.0 * half) +
                           shift(bf.f, half) * um_pw * shift(q, 2.0 * half) -
                           bf.gamma * (u * um_pw * up_pw);
    return lhs - rhs;
}

std::pair<Polynomial, double> solve_q(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites) {
    TqSolveInfo info;
    return solve_q(t, bf, n_sites, info);
}

std::pair<Polynomial, double> solve_q(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites, TqSolveInfo& info) {
    return solve_impl(t, bf, n_sites, info);
}

std::pair<Polynomial, double> solve_p(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites) {
    TqSolveInfo info;
    return solve_p(t, bf, n_sites, info);
}

std::pair<Polynomial, double> solve_p(const Polynomial& t, const BoundaryFunctions& bf,
                                      int n_sites, TqSolveInfo& info) {
    return solve_impl(t, bf.dual(), n_sites, info);
}

std::vector<cplx> extract_roots(const Polynomial& q) {
    const auto [odd, even] = parity_defect(q);
    if (odd > 1e-8 * std::max(even, 1e-300))
        throw std::invalid_argument("extract_roots: polynomial is not even within tolerance");
    if (q.degree() < 2) return {};
    std::vector<cplx> w(static_cast<size_t>(q.degree() / 2) + 1);
    for (size_t m = 0; m < w.size(); ++m) w[m] = q.coeff(static_cast<int>(2 * m));
    const std::vector<cplx> wroots = roots(Polynomial(std::move(w)));
    std::vector<cplx> out;
    out.reserve(wroots.size());
    for (const cplx wr : wroots) {
        cplx s = std::sqrt(wr);
        if (s.real() < 0.0) s = -s;
        if (std::abs(s.real()) <= 1e-12 * std::abs(s) && s.imag() < 0.0) s = -s;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

TQSolution solve_tq_pair(const Polynomial& t, const BoundaryFunctions& bf, int n_sites) {
    TQSolution sol;
    sol.t_poly = t;
    std::tie(sol.q_poly, sol.q_residual) = solve_q(t, bf, n_sites, sol.q_info);
    std::tie(sol.p_poly, sol.p_residual) = solve_p(t, bf, n_sites, sol.p_info);
    sol.bethe_roots = extract_roots(sol.q_poly);
    sol.dual_roots = extract_roots(sol.p_poly);
    return sol;
}

}  // namespace tqw
