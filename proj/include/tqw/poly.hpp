#ifndef TQW_POLY_HPP
#define TQW_POLY_HPP

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace tqw {

using cplx = std::complex<double>;

/// Dense univariate polynomial with complex coefficients, stored in
/// ascending degree (coeffs()[k] multiplies u^k).
///
/// Canonical form: the highest-index coefficient is nonzero unless the
/// polynomial is zero; the zero polynomial has an empty coefficient list
/// and degree() == -1. Arithmetic trims exact zeros only; fuzzy trimming
/// happens solely through an explicit normalize() call.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coeffs);
    Polynomial(std::initializer_list<cplx> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(cplx c) { return Polynomial({c}); }
    /// c * u^k
    static Polynomial monomial(int k, cplx c = 1.0);

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    /// Coefficient of u^k; zero beyond the stored range.
    cplx coeff(int k) const;

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    cplx eval(cplx u) const;
    cplx operator()(cplx u) const { return eval(u); }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_abs_coeff() const;

    /// Drops trailing coefficients below tol_rel * max|coeff| (absolute
    /// threshold tol_rel when the polynomial is zero-scale).
    Polynomial normalized(double tol_rel = 1e-13) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(cplx s, const Polynomial& p);

  private:
    void trim_exact_zeros();
    std::vector<cplx> coeffs_;
};

/// r(u) = p(u + c), exact binomial re-expansion. Degree preserved.
Polynomial shift(const Polynomial& p, cplx c);

/// Returns mu with mu(u + i/2) - mu(u - i/2) = h(u) and zero constant term.
/// The coefficient map is triangular with nonzero diagonal, so this is
/// always solvable; degree(mu) == degree(h) + 1 for nonzero h.
Polynomial antidifference(const Polynomial& h);

/// Splits p = u^k * q + r with deg r < k. Returns (q, max |coeff| of the
/// discarded low part); the caller decides what defect is acceptable.
std::pair<Polynomial, double> divide_by_power(const Polynomial& p, int k);

/// (max |odd-index coeff|, max |even-index coeff|) — callers assert
/// evenness or oddness against these.
std::pair<double, double> parity_defect(const Polynomial& p);

/// Unique polynomial of degree nodes.size()-1 through the given
/// (abscissa, ordinate) pairs. Newton divided differences with extended
/// intermediate precision. Throws std::invalid_argument on (near-)duplicate
/// abscissae.
Polynomial interpolate(const std::vector<std::pair<cplx, cplx>>& nodes);

/// All complex roots with multiplicity, from the companion-matrix
/// eigenvalues plus a Newton polish. Throws on degree < 1.
std::vector<cplx> roots(const Polynomial& p);

/// count Chebyshev points of the first kind scaled to [lo, hi],
/// in descending order.
std::vector<double> chebyshev_nodes(int count, double lo, double hi);

}  // namespace tqw

#endif
