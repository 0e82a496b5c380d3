#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <cmath>
#include <random>
#include <vector>

#include "fhent/errors.hpp"
#include "fhent/finite_chain.hpp"
#include "fhent/group_matrices.hpp"
#include "fhent/linalg.hpp"
#include "fhent/special_functions.hpp"

using namespace fhent;

namespace {

CouplingSpec xx(double alpha, int M) { return xx_preset(alpha, M); }

double symbol_entropy(const EvenStepSymbol& g, int N, SymmetryClass cls) {
    return entropy(nu_spectrum(build_symbol_matrix(g, N, cls).entries));
}

}  // namespace

TEST_CASE("circulant matrices for the XX chain") {
    auto h = build_matrices(xx(2.0, 4), SymmetryClass::Unitary);
    Eigen::RowVector4d row(-2, 2, 0, 2);
    CHECK((h.A_bar.row(0) - row).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.B_bar.cwiseAbs().maxCoeff() == 0.0);
    CHECK((h.A_bar - h.A_bar.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("XY chain B matrix") {
    const double alpha = 1.3, gamma = 1.0;
    auto h = build_matrices(xy_preset(alpha, gamma, 6), SymmetryClass::Unitary);
    CHECK((h.B_bar + h.B_bar.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.B_bar(1, 0) == doctest::Approx(-alpha * gamma));
    CHECK(h.B_bar(0, 1) == doctest::Approx(alpha * gamma));
    CHECK(h.B_bar(0, 5) == doctest::Approx(-alpha * gamma));
    CHECK(h.B_bar(0, 2) == 0.0);
    CHECK_THROWS_AS(build_matrices(xy_preset(alpha, 0.5, 16), SymmetryClass::Sp), ClassConstraintError);
}

TEST_CASE("Hankel structure") {
    CouplingSpec s = xx(2.0, 12);
    s.a[2] = s.a[-2] = 0.3;
    auto am = [&](int d) { return s.a_at(((d % 12) + 12 + 6) % 12 - 6); };
    auto h = build_matrices(s, SymmetryClass::OPlusEven);
    for (int j = 0; j < 12; ++j)
        for (int l = 0; l < 12; ++l) CHECK(h.A_bar(j, l) == doctest::Approx(am(j - l) + am(j + l)));
    auto sp = build_matrices(s, SymmetryClass::Sp);
    CHECK(sp.A_bar(1, 2) == doctest::Approx(am(-1) - am(5)));
    auto oo = build_matrices(s, SymmetryClass::OPlusOdd);
    CHECK(oo.A_bar(0, 0) == doctest::Approx(am(0) - am(1)));
    auto om = build_matrices(s, SymmetryClass::OMinusOdd);
    CHECK(om.A_bar(0, 0) == doctest::Approx(am(0) + am(1)));
}

TEST_CASE("general matrices") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3) * -2.0;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(3, 3);
    auto m = diagonalize(general_matrices(a, b));
    for (int k = 0; k < 3; ++k) CHECK(m.lambdas(k) == doctest::Approx(2.0));
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(general_matrices(a, b), DomainError);
}

TEST_CASE("dispersion of the XX chain") {
    for (int M : {8, 9}) {
        auto m = diagonalize(build_matrices(xx(2.0, M), SymmetryClass::Unitary));
        std::vector<double> got(m.lambdas.data(), m.lambdas.data() + M), want;
        for (int l = 0; l < M; ++l) want.push_back(std::abs(4.0 * std::cos(2 * kPi * l / M) - 2.0));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        for (int l = 0; l < M; ++l) CHECK(got[l] == doctest::Approx(want[l]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("mode residuals") {
    for (auto spec : {xy_preset(1.7, 0.6, 40), xy_preset(2.5, 0.0, 41)}) {
        auto h = build_matrices(spec, SymmetryClass::Unitary);
        auto m = diagonalize(h);
        Eigen::MatrixXd d = h.A_bar + h.B_bar;
        Eigen::MatrixXd r1 = d * m.phis - m.psis * m.lambdas.asDiagonal();
        Eigen::MatrixXd r2 = d.transpose() * m.psis - m.phis * m.lambdas.asDiagonal();
        CHECK(r1.cwiseAbs().maxCoeff() < 1e-8);
        CHECK(r2.cwiseAbs().maxCoeff() < 1e-8);
        const auto I = Eigen::MatrixXd::Identity(spec.M, spec.M);
        CHECK((m.phis.transpose() * m.phis - I).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((m.psis.transpose() * m.psis - I).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("psi = sign(Lambda) phi without B") {
    auto m = diagonalize(build_matrices(xx(2.0, 30), SymmetryClass::Unitary));
    REQUIRE(m.signed_lambdas.size() == 30);
    for (int k = 0; k < 30; ++k) {
        double s = m.signed_lambdas(k) < 0 ? -1.0 : 1.0;
        CHECK((m.psis.col(k) - s * m.phis.col(k)).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("correlation matrix of the XX chain is the finite Fourier sum") {
    const int M = 64;
    auto c = correlation_matrix(diagonalize(build_matrices(xx(2.0, M), SymmetryClass::Unitary)));
    for (int j = 0; j < M; j += 5) {
        for (int l = 0; l < M; l += 3) {
            double s = 0.0;
            for (int q = 0; q < M; ++q) {
                double k = 2 * kPi * q / M;
                double lam = 4.0 * std::cos(k) - 2.0;
                s += (lam > 0 ? 1.0 : -1.0) * std::cos(k * (j - l));
            }
            CHECK(c.T(j, l) == doctest::Approx(s / M).epsilon(1e-12).scale(1.0));
        }
    }
    CHECK(c.degenerate_pairs > 0);
}

TEST_CASE("positive spectrum gives T = I") {
    auto s = xx(0.5, 20);
    s.a[0] = 2.0;
    auto c = correlation_matrix(diagonalize(build_matrices(s, SymmetryClass::Unitary)));
    CHECK((c.T - Eigen::MatrixXd::Identity(20, 20)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("zero mode policy") {
    auto m = diagonalize(build_matrices(xx(2.0, 6), SymmetryClass::Unitary));
    int zeros = int((m.lambdas.array() < kZeroModeTol).count());
    REQUIRE(zeros == 2);
    auto drop = correlation_matrix(m, ZeroModePolicy::Drop);
    auto plus = correlation_matrix(m, ZeroModePolicy::KeepPlus);
    auto minus = correlation_matrix(m, ZeroModePolicy::KeepMinus);
    CHECK(std::abs(drop.T.trace() - plus.T.trace() + 2.0) < 1e-12);
    CHECK(std::abs(drop.T.trace() - minus.T.trace() - 2.0) < 1e-12);
    CHECK(nu_spectrum(plus.T).cwiseAbs().maxCoeff() <= 1.0);
}

TEST_CASE("restrict") {
    Eigen::MatrixXd d = Eigen::VectorXd::LinSpaced(6, 0.1, 0.6).asDiagonal();
    CorrelationMatrix c{d, SymmetryClass::Unitary, 0};
    CHECK(restrict(c, 6).T == d);
    CHECK(restrict(c, 3).T == d.topLeftCorner(3, 3));
    CHECK(restrict(c, 1).T.size() == 1);
    CHECK_THROWS_AS(restrict(c, 0), DimensionError);
    CHECK_THROWS_AS(restrict(c, 7), DimensionError);
    CorrelationMatrix h{d, SymmetryClass::Sp, 0};
    CHECK_THROWS_AS(restrict(h, 3), DimensionError);
}

TEST_CASE("nu spectrum") {
    auto one = nu_spectrum(Eigen::MatrixXd::Identity(4, 4));
    CHECK((one.array() == 1.0).all());
    auto zero = nu_spectrum(Eigen::MatrixXd::Zero(3, 3));
    CHECK(zero.cwiseAbs().maxCoeff() < 1e-300);
    CHECK_THROWS_AS(nu_spectrum(2.0 * Eigen::MatrixXd::Identity(2, 2)), SpectrumRangeError);
    CHECK_THROWS_AS(nu_spectrum((1.0 + 1e-9) * Eigen::MatrixXd::Identity(2, 2)), SpectrumRangeError);
    CHECK(nu_spectrum((1.0 + 1e-11) * Eigen::MatrixXd::Identity(2, 2)).maxCoeff() == 1.0);
    Eigen::MatrixXd nonsym(2, 2);
    nonsym << 0, 0.5, 0, 0;
    auto sv = nu_spectrum(nonsym);
    CHECK(sv.maxCoeff() == doctest::Approx(0.5));
}

TEST_CASE("anisotropic chains use singular values") {
    auto xx = correlation_matrix(diagonalize(build_matrices(xx_preset(2.0, 64), SymmetryClass::Unitary)));
    CHECK(xx.symmetric);
    auto t = correlation_matrix(diagonalize(build_matrices(xy_preset(2.0, 0.5, 64), SymmetryClass::Unitary)));
    CHECK_FALSE(t.symmetric);
    for (int N : {1, 2, 7}) {
        auto r = restrict(t, N);
        CHECK_FALSE(r.symmetric);
        auto nu = nu_spectrum(r);
        CHECK(nu.minCoeff() >= 0.0);
        CHECK(nu.maxCoeff() <= 1.0);
        CHECK(entropy(nu) == doctest::Approx(entropy(nu_spectrum(r.T))).epsilon(1e-12));
        CHECK(entropy(nu) == doctest::Approx(chain_entropy(xy_preset(2.0, 0.5, 64), SymmetryClass::Unitary, N)).epsilon(1e-12));
    }
}

TEST_CASE("entropy values") {
    CHECK(entropy(Eigen::Vector3d(1, -1, 1)) == 0.0);
    CHECK(entropy(Eigen::VectorXd::Zero(1)) == doctest::Approx(1.0));
    double e = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
    CHECK(entropy(Eigen::VectorXd::Constant(1, 0.5)) == doctest::Approx(e).epsilon(1e-15));
}

TEST_CASE("entropy symmetry and bounds") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 17;
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = u(rng);
        double e = entropy(v);
        CHECK(e == entropy(-v));
        CHECK(e >= 0.0);
        CHECK(e <= n + 1e-12);
    }
}

TEST_CASE("no entanglement below the critical coupling") {
    for (int N : {1, 5, 20}) CHECK(std::abs(chain_entropy(xx(0.5, 256), SymmetryClass::Unitary, N)) < 1e-10);
}

TEST_CASE("finite chain spectrum matches the Toeplitz matrix") {
    auto spec = xx(2.0, 2048);
    auto c = correlation_matrix(diagonalize(build_matrices(spec, SymmetryClass::Unitary)));
    auto nu = nu_spectrum(restrict(c, 10).T);
    auto g = find_jumps(spec);
    auto nu_sym = nu_spectrum(build_symbol_matrix(g, 10, SymmetryClass::Unitary).entries);
    CHECK((nu - nu_sym).cwiseAbs().maxCoeff() < 2e-3);
}

TEST_CASE("finite chain converges to the symbol matrix route") {
    // The error oscillates with M mod 6 (the jump at pi/3 against the k grid),
    // so the check is an O(1/M) envelope rather than monotone decrease.
    auto g = make_step_symbol({kPi / 3}, 1);
    for (auto cls : kAllClasses) {
        CAPTURE(info(cls).name);
        for (int N : {4, 12}) {
            double target = symbol_entropy(g, N, cls);
            for (int M : {256, 512, 1024}) {
                CAPTURE(M);
                double d = std::abs(chain_entropy(xx(2.0, M), cls, N) - target);
                CHECK(d * M < 2.0);
            }
        }
    }
}

TEST_CASE("fast restricted entropy equals the full correlation matrix route") {
    auto s = xx(2.0, 96);
    s.a[3] = s.a[-3] = 0.4;
    for (auto cls : kAllClasses) {
        auto c = correlation_matrix(diagonalize(build_matrices(s, cls)));
        double full = entropy(nu_spectrum(restrict(c, 9).T));
        CHECK(chain_entropy(s, cls, 9) == doctest::Approx(full).epsilon(1e-12));
    }
    auto xy = xy_preset(1.5, 0.5, 80);
    auto c = correlation_matrix(diagonalize(build_matrices(xy, SymmetryClass::Unitary)));
    CHECK(chain_entropy(xy, SymmetryClass::Unitary, 7) ==
          doctest::Approx(entropy(nu_spectrum(restrict(c, 7).T))).epsilon(1e-12));
}

TEST_CASE("csv export") {
    std::ostringstream os;
    Eigen::MatrixXd m(2, 2);
    m << 1, 2.5, -3, 0;
    write_csv(os, m);
    CHECK(os.str() == "1,2.5\n-3,0\n");
}
