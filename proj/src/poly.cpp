#include "tqw/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace tqw {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    trim_exact_zeros();
}

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) {
    trim_exact_zeros();
}

Polynomial Polynomial::monomial(int k, cplx c) {
    if (c == cplx(0.0)) return {};
    std::vector<cplx> v(static_cast<size_t>(k) + 1, cplx(0.0));
    v.back() = c;
    return Polynomial(std::move(v));
}

cplx Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<size_t>(k)];
}

cplx Polynomial::eval(cplx u) const {
    cplx v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * u + *it;
    return v;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::normalized(double tol_rel) const {
    const double thresh = tol_rel * max_abs_coeff();
    std::vector<cplx> v = coeffs_;
    while (!v.empty() && std::abs(v.back()) <= thresh) v.pop_back();
    return Polynomial(std::move(v));
}

void Polynomial::trim_exact_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    std::vector<cplx> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<cplx> v(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx(0.0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<cplx> v(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx(0.0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) v[i] -= q.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<cplx> v(p.coeffs_.size() + q.coeffs_.size() - 1, cplx(0.0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(cplx s, const Polynomial& p) {
    if (s == cplx(0.0)) return {};
    std::vector<cplx> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

Polynomial shift(const Polynomial& p, cplx c) {
    if (p.is_zero()) return {};
    // Horner in coefficient space: r <- r*(u + c) + a_k, from the top down.
    // Extended precision keeps the binomial cancellation at degree ~20 well
    // below the 1e-12 round-trip budget.
    const std::complex<long double> cl(c);
    std::vector<std::complex<long double>> r;
    r.reserve(p.coeffs().size());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        r.push_back({});
        for (size_t i = r.size() - 1; i > 0; --i) r[i] = r[i - 1] + cl * r[i];
        r[0] *= cl;
        r[0] += std::complex<long double>(*it);
    }
    std::vector<cplx> out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = cplx(r[i]);
    return Polynomial(std::move(out));
}

Polynomial antidifference(const Polynomial& h) {
    if (h.is_zero()) return {};
    const int dh = h.degree();
    // mu = sum_{k>=1} m_k u^k; the u^{k-1} row of mu^+ - mu^- couples m_k to
    // m_{k+2}, m_{k+4}, ... through binomial terms in (i/2)^odd, so solve
    // from the top degree down.
    const int dm = dh + 1;
    std::vector<cplx> m(static_cast<size_t>(dm) + 1, cplx(0.0));
    const cplx half_i(0.0, 0.5);
    // diff_coeff(k, j): coefficient of u^{k-j} in (u+i/2)^k - (u-i/2)^k,
    // nonzero for odd j: 2 * C(k, j) * (i/2)^j.
    auto diff_coeff = [&](int k, int j) {
        double binom = 1.0;
        for (int t = 0; t < j; ++t) binom = binom * double(k - t) / double(t + 1);
        cplx pw = 1.0;
        for (int t = 0; t < j; ++t) pw *= half_i;
        return 2.0 * binom * pw;
    };
    for (int r = dh; r >= 0; --r) {
        const int k = r + 1;  // m_k is determined by the u^r equation
        cplx rhs = h.coeff(r);
        for (int kk = k + 2; kk <= dm; kk += 2) rhs -= m[static_cast<size_t>(kk)] * diff_coeff(kk, kk - r);
        m[static_cast<size_t>(k)] = rhs / diff_coeff(k, 1);
    }
    return Polynomial(std::move(m));
}

std::pair<Polynomial, double> divide_by_power(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("divide_by_power: negative power");
    const auto& c = p.coeffs();
    double defect = 0.0;
    for (size_t i = 0; i < std::min(c.size(), static_cast<size_t>(k)); ++i)
        defect = std::max(defect, std::abs(c[i]));
    std::vector<cplx> q;
    if (c.size() > static_cast<size_t>(k)) q.assign(c.begin() + k, c.end());
    return {Polynomial(std::move(q)), defect};
}

std::pair<double, double> parity_defect(const Polynomial& p) {
    double odd = 0.0, even = 0.0;
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        (i % 2 ? odd : even) = std::max(i % 2 ? odd : even, std::abs(c[i]));
    return {odd, even};
}

namespace {
using lcplx = std::complex<long double>;
}

Polynomial interpolate(const std::vector<std::pair<cplx, cplx>>& nodes) {
    const size_t n = nodes.size();
    if (n == 0) throw std::invalid_argument("interpolate: no nodes");
    long double span = 0.0L;
    lcplx mean = 0.0L;
    for (const auto& [x, y] : nodes) mean += lcplx(x);
    mean /= static_cast<long double>(n);
    for (const auto& [x, y] : nodes) span = std::max(span, std::abs(lcplx(x) - mean));

    // Newton divided differences on centered abscissae; long double
    // accumulation keeps the expansion to monomials from dominating the
    // error budget at the degrees used here (<= ~25).
    std::vector<lcplx> z(n), dd(n);
    for (size_t i = 0; i < n; ++i) {
        z[i] = lcplx(nodes[i].first) - mean;
        dd[i] = lcplx(nodes[i].second);
    }
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = n - 1; i >= j; --i) {
            const lcplx den = z[i] - z[i - j];
            if (std::abs(den) <= 1e-14L * std::max(span, 1.0L))
                throw std::invalid_argument("interpolate: duplicate abscissae");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    }
    // Expand the Newton form in the centered variable, then un-center.
    std::vector<lcplx> c(n, lcplx(0.0L));
    size_t len = 1;
    c[0] = dd[n - 1];
    for (size_t k = n - 1; k-- > 0;) {
        for (size_t i = len; i > 0; --i) c[i] = c[i - 1] - z[k] * c[i];
        c[0] = -z[k] * c[0] + dd[k];
        ++len;
    }
    std::vector<lcplx> out(n, lcplx(0.0L));
    len = 1;
    out[0] = c[n - 1];
    for (size_t k = n - 1; k-- > 0;) {
        for (size_t i = len; i > 0; --i) out[i] = out[i - 1] - mean * out[i];
        out[0] = -mean * out[0] + c[k];
        ++len;
    }
    std::vector<cplx> res(n);
    for (size_t i = 0; i < n; ++i) res[i] = cplx(out[i]);
    return Polynomial(std::move(res));
}

std::vector<cplx> roots(const Polynomial& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("roots: polynomial must have degree >= 1");
    const auto& c = p.coeffs();
    const cplx lead = c.back();

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw std::runtime_error("roots: eigensolver failed");

    std::vector<cplx> r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = es.eigenvalues()(i);

    // One or two Newton steps sharpen simple roots to near machine precision.
    auto deriv_eval = [&](cplx u) {
        cplx v = 0.0;
        for (int k = d; k >= 1; --k) v = v * u + double(k) * c[static_cast<size_t>(k)];
        return v;
    };
    for (auto& root : r) {
        for (int it = 0; it < 2; ++it) {
            const cplx f = p.eval(root);
            const cplx df = deriv_eval(root);
            if (std::abs(df) < 1e-12 * p.max_abs_coeff()) break;
            const cplx step = f / df;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            if (std::abs(step) > 0.5 * (1.0 + std::abs(root))) break;
            root -= step;
        }
    }
    std::sort(r.begin(), r.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return r;
}

std::vector<double> chebyshev_nodes(int count, double lo, double hi) {
    std::vector<double> x(static_cast<size_t>(count));
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int k = 0; k < count; ++k)
        x[static_cast<size_t>(k)] = mid + half * std::cos((2.0 * k + 1.0) / (2.0 * count) * std::numbers::pi);
    return x;
}

}  // namespace tqw
