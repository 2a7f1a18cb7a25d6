#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "locones/division_algebras.hpp"
#include "locones/lo_spheres.hpp"
#include "locones/multistart.hpp"

using namespace locones;

namespace {

using cd = std::complex<double>;

std::vector<FamilyParams> all_cases()
{
    std::vector<FamilyParams> out;
    for (int n = 1; n <= 5; ++n)
        out.push_back(constants(Family::I, n));
    for (int n = 1; n <= 3; ++n)
        out.push_back(constants(Family::II, n));
    out.push_back(constants(Family::III, 1));
    return out;
}

Eigen::VectorXcd random_source(const FamilyParams& p, std::mt19937_64& rng)
{
    return to_complex(random_unit(p.source_ambient(), rng));
}

}  // namespace

TEST_CASE("family constants")
{
    auto p = constants(Family::I, 1);
    CHECK(p.a == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(p.b == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-15));
    p = constants(Family::II, 1);
    CHECK(p.a == doctest::Approx(std::sqrt(12.0 / 21)).epsilon(1e-15));
    CHECK(p.b == doctest::Approx(std::sqrt(9.0 / 21)).epsilon(1e-15));
    p = constants(Family::III, 1);
    CHECK(p.a == doctest::Approx(std::sqrt(28.0 / 45)).epsilon(1e-15));
    CHECK(p.b == doctest::Approx(std::sqrt(17.0 / 45)).epsilon(1e-15));
    p = constants(Family::I, 2);
    CHECK(p.a * p.a == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(p.b * p.b == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(p.normalizer() == doctest::Approx(12.0 / 5).epsilon(1e-15));

    for (const auto& q : all_cases()) {
        CHECK(std::abs(q.a * q.a + q.b * q.b - 1) <= 2.3e-16);
        const int n = q.n;
        if (q.family == Family::I)
            CHECK(q.normalizer() == doctest::Approx(4.0 * (n + 1) / (2 * n + 1)).epsilon(1e-14));
        if (q.family == Family::II)
            CHECK(q.normalizer() == doctest::Approx(8.0 * (n + 1) / (4 * n + 3)).epsilon(1e-14));
        if (q.family != Family::III) {
            CHECK(q.d * q.d == doctest::Approx(2.0 * (n + 1) / n).epsilon(1e-15));
            REQUIRE(static_cast<int>(q.c_alpha.size()) == n);
            for (int al = 1; al <= n; ++al)
                CHECK(q.c_alpha[al - 1] * q.c_alpha[al - 1]
                      == doctest::Approx(double((n + 1) * (n + 1 - al)) / (n * (n + 2 - al))).epsilon(1e-15));
        }
    }
    CHECK(constants(Family::I, 3).target_dim == 22);
    CHECK(constants(Family::II, 2).target_dim == 25);
    CHECK(constants(Family::III, 1).target_dim == 24);
    CHECK_THROWS_AS(constants(Family::III, 2), std::domain_error);
    CHECK_THROWS_AS(constants(Family::I, 0), std::domain_error);
}

TEST_CASE("chart basics")
{
    const std::vector<double> zero(5, 0.0);
    const auto v = chart_value(2, zero);
    CHECK(v[0] == cd(1, 0));
    CHECK(v[1] == cd(0, 0));
    CHECK(v[2] == cd(0, 0));
    const std::vector<double> t{0.3, 0, 0};
    const auto w = chart_value(1, t);
    CHECK(std::abs(w[0] - std::exp(cd(0, 0.3))) < 1e-16);
    CHECK(std::abs(w[1]) < 1e-16);
    const std::vector<double> big{0.6, 0.6, 0.6};
    CHECK_THROWS_AS(chart_value(1, big), std::domain_error);
    const std::vector<double> wrong(4, 0.0);
    CHECK_THROWS_AS(chart_value(1, wrong), std::domain_error);
    const ChartPoint cp = chart_point(1, t);
    CHECK(cp.m == 1);
    CHECK(cp.t.size() == 3);
}

TEST_CASE("chart stays on the sphere and matches the quadratic expansion")
{
    std::mt19937_64 rng(21);
    const int m = 2;
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd t = 1e-3 * random_unit(2 * m + 1, rng);
        const auto z = chart_value(m, {t.data(), static_cast<std::size_t>(t.size())});
        CHECK(std::abs(z.norm() - 1) < 1e-14);
        // t is 0-based here: t[0] = t_1, t[k-1] = t_k, t[m+k-1] = t_{m+k}
        double sum = 0, cross = 0;
        for (int A = 0; A < 2 * m + 1; ++A)
            sum += t[A] * t[A];
        for (int k = 2; k <= m + 1; ++k)
            cross += t[k - 1] * t[m + k - 1];
        const cd z1(1 - 0.5 * sum, t[0] + cross);
        CHECK(std::abs(z[0] - z1) < 5e-9);
        for (int k = 2; k <= m + 1; ++k) {
            const cd zk(t[k - 1] - t[0] * t[m + k - 1], t[m + k - 1] + t[0] * t[k - 1]);
            CHECK(std::abs(z[k - 1] - zk) < 5e-9);
        }
    }
}

TEST_CASE("base point of every family")
{
    for (const auto& p : all_cases()) {
        const Eigen::VectorXd P = base_point(p);
        CHECK(P.size() == p.target_ambient());
        const std::vector<double> zero(static_cast<std::size_t>(p.source_dim), 0.0);
        const Eigen::VectorXd Q = immersion_eval(p, chart_value(p.m(), zero));
        CHECK((P - Q).norm() == 0.0);
        Eigen::VectorXd expect = Eigen::VectorXd::Zero(p.target_ambient());
        expect[0] = p.a;
        expect[p.source_ambient()] = p.b;
        CHECK((P - expect).norm() < 1e-15);
    }
}

TEST_CASE("immersion is unit-valued")
{
    std::mt19937_64 rng(8);
    for (const auto& p : all_cases())
        for (int trial = 0; trial < 50; ++trial)
            CHECK(immersion_eval(p, random_source(p, rng)).norm() == doctest::Approx(1.0).epsilon(1e-12));
    const auto p = constants(Family::I, 1);
    Eigen::VectorXcd z(2);
    z << 1.0, 0.1;
    CHECK_THROWS_AS(immersion_eval(p, z), std::domain_error);
}

TEST_CASE("family I with n = 1 is the classical example")
{
    const auto p = constants(Family::I, 1);
    const double r = 1 / std::sqrt(2.0);
    Eigen::VectorXcd z(2);
    z << r, r;
    Eigen::VectorXd expect(7);
    expect << p.a * r, p.a * r, 0, 0, 0, p.b, 0;
    CHECK((immersion_eval(p, z) - expect).norm() < 1e-15);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::VectorXcd w = random_source(p, rng);
        const Eigen::VectorXd F = immersion_eval(p, w);
        // (2/3 z, sqrt5/3 eta(z)); the pair function uses z1 conj(z2), so the last slot is reflected
        const cd e = 2.0 * std::conj(w[0]) * w[1];
        Eigen::VectorXd ref(7);
        ref << 2.0 / 3 * w[0].real(), 2.0 / 3 * w[1].real(), 2.0 / 3 * w[0].imag(), 2.0 / 3 * w[1].imag(),
            std::sqrt(5.0) / 3 * (std::norm(w[0]) - std::norm(w[1])), std::sqrt(5.0) / 3 * e.real(),
            -std::sqrt(5.0) / 3 * e.imag();
        CHECK((F - ref).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("family II with n = 1 and family III use the Hopf maps")
{
    std::mt19937_64 rng(2);
    const auto p2 = constants(Family::II, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::VectorXcd w = random_source(p2, rng);
        const Eigen::VectorXd F = immersion_eval(p2, w);
        const std::vector<cd> a1{w[0], w[1]}, a2{w[2], w[3]};
        const auto h = hopf_map(Level::H, AlgebraElement::from_complex(Level::H, a1),
                                AlgebraElement::from_complex(Level::H, a2));
        const std::vector<double> ref{h[0], h[1], h[3], h[2], h[4]};
        for (int j = 0; j < 5; ++j)
            CHECK(F[8 + j] == doctest::Approx(p2.b * ref[j]).epsilon(1e-13));
    }
    const auto p3 = constants(Family::III, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::VectorXcd w = random_source(p3, rng);
        const Eigen::VectorXd F = immersion_eval(p3, w);
        const std::vector<cd> u(w.data(), w.data() + 4), v(w.data() + 4, w.data() + 8);
        const auto h = hopf_map(Level::O, AlgebraElement::from_complex(Level::O, u),
                                AlgebraElement::from_complex(Level::O, v));
        for (int j = 0; j < 9; ++j)
            CHECK(F[16 + j] == doctest::Approx(p3.b * h[j]).epsilon(1e-13));
        CHECK((F.head(16) - p3.a * to_real(w)).norm() < 1e-15);
    }
}

TEST_CASE("family I second block is invariant under the circle action")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> phase(0, 2 * M_PI);
    for (int n = 1; n <= 4; ++n) {
        const auto p = constants(Family::I, n);
        const int S = p.source_ambient();
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXcd z = random_source(p, rng);
            const cd u = std::exp(cd(0, phase(rng)));
            const Eigen::VectorXcd uz = u * z;
            const Eigen::VectorXd F = immersion_eval(p, z), G = immersion_eval(p, uz);
            CHECK((F.tail(F.size() - S) - G.tail(G.size() - S)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((G.head(S) - p.a * to_real(uz)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("quadratic forms of the second block")
{
    std::mt19937_64 rng(10);
    for (const auto& p : all_cases()) {
        const auto M = second_block_forms(p);
        CHECK(static_cast<int>(M.size()) == p.target_ambient() - p.source_ambient());
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::VectorXd x = random_unit(p.source_ambient(), rng);
            const Eigen::VectorXd F = immersion_eval(p, to_complex(x));
            for (std::size_t j = 0; j < M.size(); ++j) {
                CHECK((M[j] - M[j].transpose()).norm() == 0.0);
                CHECK(F[p.source_ambient() + static_cast<int>(j)]
                      == doctest::Approx(p.b * x.dot(M[j] * x)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("real and complex flattening round trip")
{
    Eigen::VectorXcd z(2);
    z << cd(1, 2), cd(3, 4);
    const Eigen::VectorXd x = to_real(z);
    Eigen::VectorXd expect(4);
    expect << 1, 3, 2, 4;
    CHECK(x == expect);
    CHECK(to_complex(x) == z);
}
