#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tqw/spectrum.hpp"

using namespace tqw;

namespace {

const cplx I(0.0, 1.0);

double eigvec_residual(const DenseMatrix& t, const std::vector<cplx>& v) {
    const std::vector<cplx> tv = t * v;
    const cplx lam = rayleigh(t, v);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        num = std::max(num, std::abs(tv[i] - lam * v[i]));
        den = std::max(den, std::abs(tv[i]));
    }
    return num / std::max(den, 1e-300);
}

}  // namespace

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("joint eigenbasis at N = 1") {
    const ModelParams p{1, 0.7, 1.3, 0.75};
    const auto vecs = joint_eigenbasis(p);
    REQUIRE(vecs.size() == 2);
    const DenseMatrix t1 = transfer_matrix(1.37, p);  // independent probe
    for (const auto& v : vecs) CHECK(eigvec_residual(t1, v) <= 1e-9);
}

TEST_CASE("diagonal case eigenvectors live in Sz sectors") {
    const ModelParams p{2, 0.7, 1.3, 0.0};
    const auto vecs = joint_eigenbasis(p);
    REQUIRE(vecs.size() == 4);
    // popcount of the basis index = number of down spins = sector label
    for (const auto& v : vecs) {
        int sector = -1;
        for (size_t idx = 0; idx < v.size(); ++idx) {
            if (std::abs(v[idx]) < 1e-10) continue;
            const int s = __builtin_popcount(static_cast<unsigned>(idx));
            if (sector < 0) sector = s;
            CHECK(s == sector);
        }
    }
}

TEST_CASE("H degeneracy resolved by the transfer matrix") {
    // Scan the alpha = beta, xi = 0 line for an H degeneracy; the two
    // fully polarized states are degenerate there for any alpha.
    ModelParams found{};
    bool have = false;
    for (double a = 0.6; a <= 1.4 && !have; a += 0.2) {
        const ModelParams p{2, a, a, 0.0};
        std::vector<double> w;
        (void)joint_eigenbasis(p, 0.63, w);
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] - w[i] < 1e-10 * (w.back() - w.front())) {
                found = p;
                have = true;
            }
    }
    REQUIRE(have);
    const auto vecs = joint_eigenbasis(found, 0.63);
    const DenseMatrix t0 = transfer_matrix(0.63, found);
    for (const auto& v : vecs) CHECK(eigvec_residual(t0, v) <= 1e-9);
}

TEST_CASE("eigenvalue polynomial structure") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> mag(0.4, 1.6);
    for (int n = 1; n <= 3; ++n) {
        const ModelParams p{n, mag(rng), -mag(rng), mag(rng)};
        const SpectralData sd = spectral_data(p);
        REQUIRE(sd.t_polys.size() == static_cast<size_t>(p.quantum_dim()));
        for (size_t i = 0; i < sd.t_polys.size(); ++i) {
            const Polynomial& t = sd.t_polys[i];
            CHECK(t.degree() == 2 * n + 2);
            CHECK(std::abs(t.coeff(2 * n + 2) + 2.0) <= 1e-8 * 2.0);
            const auto [odd, even] = parity_defect(t);
            CHECK(odd <= 1e-9 * even);
            CHECK(sd.recon_residuals[i] <= 1e-9);
        }
        SUBCASE("trace identity") {
            const double u = 1.23;
            const DenseMatrix t = transfer_matrix(u, p);
            cplx sum = 0.0;
            for (const auto& tp : sd.t_polys) sum += tp.eval(u);
            CHECK(std::abs(sum - t.trace()) <= 1e-9 * std::abs(t.trace()));
        }
    }
}

TEST_CASE("N = 1 closed-form eigenvalue oracle") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> mag(0.4, 1.6);
    const ModelParams p{1, mag(rng), mag(rng), mag(rng)};
    const SpectralData sd = spectral_data(p);
    REQUIRE(sd.t_polys.size() == 2);
    for (const double u : {0.52, 0.9, 1.44, 2.2}) {
        const auto [l1, l2] = oracle::eig2(oracle::n1_transfer(u, p.alpha, p.beta, p.xi));
        for (const auto& tp : sd.t_polys) {
            const cplx v = tp.eval(u);
            const double d = std::min(std::abs(v - l1), std::abs(v - l2));
            CHECK(d <= 1e-10 * std::max({std::abs(l1), std::abs(l2), 1.0}));
        }
    }
}

TEST_CASE("held-out consistency at N = 6") {
    const ModelParams p{6, 0.83, -0.61, 0.92};
    const SpectralData sd = spectral_data(p);
    REQUIRE(sd.t_polys.size() == 64);
    for (const double r : sd.recon_residuals) CHECK(r <= 1e-9);
}

TEST_CASE("reconstruction rejects a non-eigenvector") {
    const ModelParams p{2, 0.7, 1.3, 0.75};
    std::vector<cplx> junk(4, 0.5);  // equal-weight vector, not an eigenvector
    junk[1] = -0.5;
    CHECK_THROWS_AS((void)eigenvalue_polynomial(p, junk), std::runtime_error);
}

TEST_SUITE_END();
