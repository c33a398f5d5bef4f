#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tqw/chain.hpp"

using namespace tqw;

namespace {

const cplx I(0.0, 1.0);

double entry_diff(const DenseMatrix& m, const oracle::cmat& o) {
    double worst = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            worst = std::max(worst, std::abs(m.at(i, j) - o[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return worst;
}

cplx random_cplx(std::mt19937& rng, double lo = -1.5, double hi = 1.5) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng)};
}

ModelParams random_params(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> mag(0.4, 1.6);
    std::uniform_real_distribution<double> xim(0.3, 1.5);
    std::bernoulli_distribution flip(0.5);
    ModelParams p;
    p.n_sites = n;
    p.alpha = mag(rng) * (flip(rng) ? 1 : -1);
    p.beta = mag(rng) * (flip(rng) ? 1 : -1);
    p.xi = xim(rng) * (flip(rng) ? 1 : -1);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("model params") {
    ModelParams p{2, 0.7, 1.3, 0.75};
    CHECK(p.root_term() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(p.gamma() == doctest::Approx(0.5).epsilon(1e-14));
    p.xi = 0.0;
    CHECK(p.gamma() == 0.0);
    CHECK_THROWS_AS(ModelParams(1, 0.0, 1.0, 0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1, 1.0, 0.0, 0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(11, 1.0, 1.0, 0.0).validate(), std::invalid_argument);
}

TEST_CASE("r_matrix") {
    const DenseMatrix at_half = r_matrix(0.5 * I);
    // identity part vanishes, leaving i P
    CHECK(std::abs(at_half.at(0, 0) - I) <= 1e-15);
    CHECK(std::abs(at_half.at(1, 2) - I) <= 1e-15);
    CHECK(std::abs(at_half.at(1, 1)) <= 1e-15);

    const DenseMatrix at_mhalf = r_matrix(-0.5 * I);
    CHECK(std::abs(at_mhalf.at(1, 1) + I) <= 1e-15);  // i(P - I) diagonal on swapped states
    CHECK(std::abs(at_mhalf.at(0, 0)) <= 1e-15);

    const cplx u(0.37, -0.82);
    CHECK(std::abs(r_matrix(u).at(0, 0) - (u + 0.5 * I)) <= 1e-15);
}

TEST_CASE("k matrices") {
    const ModelParams p{1, 1.0, 0.9, 0.6};
    SUBCASE("k_right") {
        const DenseMatrix k0 = k_right(0.0, p);
        CHECK(std::abs(k0.at(0, 0) - I * (p.alpha - 0.5)) <= 1e-15);
        CHECK(std::abs(k0.at(1, 1) - I * (p.alpha + 0.5)) <= 1e-15);
        const DenseMatrix k1 = k_right(1.0, ModelParams{1, 1.0, 1.0, 0.0});
        CHECK(std::abs(k1.at(0, 0) - cplx(1.0, 0.5)) <= 1e-15);
        CHECK(std::abs(k1.at(1, 1) - cplx(-1.0, 1.5)) <= 1e-15);
        std::mt19937 rng(3);
        for (int t = 0; t < 5; ++t) {
            const DenseMatrix k = k_right(random_cplx(rng), p);
            CHECK(std::abs(k.at(0, 1)) == 0.0);
            CHECK(std::abs(k.at(1, 0)) == 0.0);
        }
    }
    SUBCASE("k_left") {
        const ModelParams diag{1, 1.0, 0.9, 0.0};
        CHECK(std::abs(k_left(cplx(0.4, 0.2), diag).at(0, 1)) == 0.0);
        std::mt19937 rng(4);
        for (double xi : {0.0, 0.75, -1.2}) {
            ModelParams px = p;
            px.xi = xi;
            const DenseMatrix k = k_left(-0.5 * I, px);
            CHECK(std::abs(k.at(0, 0) - I * px.beta) <= 1e-15);
            CHECK(std::abs(k.at(1, 1) - I * px.beta) <= 1e-15);
            CHECK(std::abs(k.at(0, 1)) <= 1e-15);
            const DenseMatrix kg = k_left(random_cplx(rng), px);
            CHECK(std::abs(kg.at(0, 1) - kg.at(1, 0)) == 0.0);
        }
    }
}

TEST_CASE("monodromy") {
    std::mt19937 rng(11);
    const ModelParams p1{1, 0.7, 1.3, 0.75};
    const cplx u = random_cplx(rng);
    const auto [m1, m1h] = monodromy(u, p1);
    CHECK((m1 - m1h).max_abs() <= 1e-15);
    CHECK(entry_diff(m1, oracle::embed_pair(oracle::r4(u), 0, 1, 2)) <= 1e-15);

    SUBCASE("u = i/2, N = 2: product of permutations") {
        const ModelParams p2{2, 0.7, 1.3, 0.75};
        const auto [m2, m2h] = monodromy(0.5 * I, p2);
        const oracle::cmat p01 = oracle::embed_pair(oracle::r4(0.5 * I), 0, 1, 3);
        const oracle::cmat p02 = oracle::embed_pair(oracle::r4(0.5 * I), 0, 2, 3);
        CHECK(entry_diff(m2, oracle::mul(p01, p02)) <= 1e-14);
        CHECK(entry_diff(m2h, oracle::mul(p02, p01)) <= 1e-14);
    }
    SUBCASE("reversed factor order at N = 3") {
        const ModelParams p3{3, 0.7, 1.3, 0.75};
        const cplx u3 = random_cplx(rng);
        const auto [m3, m3h] = monodromy(u3, p3);
        const oracle::cmat r1 = oracle::embed_pair(oracle::r4(u3), 0, 1, 4);
        const oracle::cmat r2 = oracle::embed_pair(oracle::r4(u3), 0, 2, 4);
        const oracle::cmat r3 = oracle::embed_pair(oracle::r4(u3), 0, 3, 4);
        CHECK(entry_diff(m3, oracle::mul(oracle::mul(r1, r2), r3)) <= 1e-13);
        CHECK(entry_diff(m3h, oracle::mul(oracle::mul(r3, r2), r1)) <= 1e-13);
    }
}

TEST_CASE("transfer matrix vs N=1 oracle") {
    std::mt19937 rng(21);
    for (int t = 0; t < 5; ++t) {
        const ModelParams p = random_params(rng, 1);
        const cplx u = random_cplx(rng);
        const DenseMatrix got = transfer_matrix(u, p);
        const oracle::cmat want = oracle::n1_transfer(u, p.alpha, p.beta, p.xi);
        CHECK(entry_diff(got, want) <= 1e-12 * oracle::max_abs(want));
    }
}

TEST_CASE("transfer matrix parity and leading behavior") {
    std::mt19937 rng(22);
    const ModelParams p = random_params(rng, 2);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 3; ++t) {
        const double u = d(rng);
        const DenseMatrix tp = transfer_matrix(u, p);
        const DenseMatrix tm = transfer_matrix(-u, p);
        CHECK((tp - tm).max_abs() <= 1e-11 * tp.max_abs());
    }
    SUBCASE("T(u)/u^{2N+2} -> -2 I at u = 1e4") {
        const double big = 1e4;
        DenseMatrix t = transfer_matrix(big, p);
        const double scale = std::pow(big, 2 * p.n_sites + 2);
        DenseMatrix want = -2.0 * DenseMatrix::identity(p.quantum_dim());
        CHECK(((1.0 / scale) * t - want).max_abs() <= 1e-6);
    }
    SUBCASE("T(i/2) is a multiple of the identity") {
        const DenseMatrix t = transfer_matrix(0.5 * I, p);
        const cplx want = -2.0 * p.alpha * p.beta * std::pow(I, 2 * p.n_sites);
        CHECK((t - want * DenseMatrix::identity(p.quantum_dim())).max_abs() <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("yang-baxter") {
    // R(u) = (u - i/2) I + i P is the standard rational R-matrix with its
    // argument shifted by i/2, so the difference argument shifts too:
    // R12(u - v + i/2) R13(u) R23(v) = R23(v) R13(u) R12(u - v + i/2).
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        const cplx u = random_cplx(rng), v = random_cplx(rng);
        const DenseMatrix r12 = embed_two_site(r_matrix(u - v + 0.5 * I), 0, 1, 3);
        const DenseMatrix r13 = embed_two_site(r_matrix(u), 0, 2, 3);
        const DenseMatrix r23 = embed_two_site(r_matrix(v), 1, 2, 3);
        const DenseMatrix lhs = r12 * r13 * r23;
        const DenseMatrix rhs = r23 * r13 * r12;
        CHECK((lhs - rhs).max_abs() <= 1e-11 * lhs.max_abs());
    }
}

TEST_CASE("commutativity") {
    std::mt19937 rng(41);
    for (int n = 1; n <= 4; ++n) {
        const ModelParams p = random_params(rng, n);
        for (int t = 0; t < 2; ++t) {
            const cplx u = random_cplx(rng), v = random_cplx(rng);
            const DenseMatrix tu = transfer_matrix(u, p);
            const DenseMatrix tv = transfer_matrix(v, p);
            CHECK(commutator_max_abs(tu, tv) <= 1e-10 * tu.max_abs() * tv.max_abs());
        }
    }
}

TEST_CASE("hamiltonian") {
    SUBCASE("N = 1 closed form") {
        const ModelParams p{1, 0.8, 1.7, 0.45};
        const DenseMatrix h = hamiltonian(p);
        const double dz = 1.0 / p.alpha - 1.0 / p.beta;
        CHECK(std::abs(h.at(0, 0) - dz) <= 1e-15);
        CHECK(std::abs(h.at(1, 1) + dz) <= 1e-15);
        CHECK(std::abs(h.at(0, 1) + p.xi / p.beta) <= 1e-15);
    }
    SUBCASE("real symmetric") {
        std::mt19937 rng(51);
        const ModelParams p = random_params(rng, 3);
        const DenseMatrix h = hamiltonian(p);
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                CHECK(std::abs(h.at(i, j).imag()) == 0.0);
                CHECK(std::abs(h.at(i, j) - h.at(j, i)) == 0.0);
            }
    }
    SUBCASE("U(1) symmetry at xi = 0") {
        const ModelParams p{2, 0.7, 1.3, 0.0};
        const DenseMatrix h = hamiltonian(p);
        DenseMatrix sz(2);
        sz.at(0, 0) = 1.0;
        sz.at(1, 1) = -1.0;
        DenseMatrix total_sz = embed_one_site(sz, 0, 2) + embed_one_site(sz, 1, 2);
        CHECK(commutator_max_abs(h, total_sz) <= 1e-14 * h.max_abs());
        ModelParams pn = p;
        pn.xi = 0.6;
        CHECK(commutator_max_abs(hamiltonian(pn), total_sz) > 1e-3);
    }
}

TEST_CASE("hamiltonian link") {
    std::mt19937 rng(61);
    for (int n = 1; n <= 4; ++n) {
        const ModelParams p = random_params(rng, n);
        const double step = 1e-5;
        const DenseMatrix tp = transfer_matrix(cplx(step, 0.5), p);
        const DenseMatrix tm = transfer_matrix(cplx(-step, 0.5), p);
        const DenseMatrix dt = (1.0 / (2.0 * step)) * (tp - tm);
        const DenseMatrix h = hamiltonian(p);
        // fit c1 from the largest off-diagonal H entry, c2 from a diagonal one
        int bi = 0, bj = 1;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j)
                if (i != j && std::abs(h.at(i, j)) > std::abs(h.at(bi, bj))) bi = i, bj = j;
        const cplx c1 = dt.at(bi, bj) / h.at(bi, bj);
        const cplx c2 = dt.at(0, 0) - c1 * h.at(0, 0);
        double defect = 0.0;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                const cplx iv = (i == j) ? cplx(1.0) : cplx(0.0);
                defect = std::max(defect, std::abs(dt.at(i, j) - c1 * h.at(i, j) - c2 * iv));
            }
        CHECK(defect <= 1e-6 * dt.max_abs());
    }
}

TEST_CASE("charge conjugation") {
    const ModelParams p1{1, 0.7, 1.3, 0.4};
    const DenseMatrix c1 = charge_conjugation(p1);
    CHECK(std::abs(c1.at(0, 1) - 1.0) == 0.0);
    CHECK(std::abs(c1.at(0, 0)) == 0.0);

    const ModelParams p3{3, 0.7, 1.3, 0.4};
    const DenseMatrix c3 = charge_conjugation(p3);
    CHECK((c3 * c3 - DenseMatrix::identity(8)).max_abs() <= 1e-15);

    SUBCASE("duality conjugation identity") {
        std::mt19937 rng(71);
        for (int n = 1; n <= 4; ++n) {
            const ModelParams p = random_params(rng, n);
            ModelParams neg = p;
            neg.alpha = -p.alpha;
            neg.beta = -p.beta;
            neg.xi = -p.xi;
            const cplx u = random_cplx(rng);
            const DenseMatrix c = charge_conjugation(p);
            const DenseMatrix lhs = c * transfer_matrix(u, p) * c;
            const DenseMatrix rhs = transfer_matrix(u, neg);
            CHECK((lhs - rhs).max_abs() <= 1e-11 * rhs.max_abs());
        }
    }
}

TEST_SUITE_END();
