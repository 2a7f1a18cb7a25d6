#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "locones/division_algebras.hpp"

using namespace locones;

namespace {

using Vec = std::vector<double>;

// Cayley-Dickson doubling on plain real vectors, (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
Vec cd_conj(const Vec& x)
{
    Vec r(x.size());
    r[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        r[i] = -x[i];
    return r;
}

Vec cd_mul(const Vec& x, const Vec& y)
{
    if (x.size() == 1)
        return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    Vec p1 = cd_mul(a, c), p2 = cd_mul(cd_conj(d), b), p3 = cd_mul(d, a), p4 = cd_mul(b, cd_conj(c));
    Vec r(x.size());
    for (std::size_t i = 0; i < h; ++i) {
        r[i] = p1[i] - p2[i];
        r[h + i] = p3[i] + p4[i];
    }
    return r;
}

// doubling basis (1, i, j, k, e, ie, je, ke) -> canonical flattening
constexpr std::array<int, 8> perm_o{0, 4, 1, 5, 2, 6, 3, 7};
constexpr std::array<int, 4> perm_h{0, 2, 1, 3};

struct Table {
    int dim;
    std::vector<std::vector<std::pair<int, int>>> entry;  // (sign, canonical index)
};

Table signed_table(Level level)
{
    const int dim = static_cast<int>(dimension(level));
    auto perm = [&](int i) {
        if (level == Level::O)
            return perm_o[static_cast<std::size_t>(i)];
        if (level == Level::H)
            return perm_h[static_cast<std::size_t>(i)];
        return i;
    };
    Table t{dim, std::vector<std::vector<std::pair<int, int>>>(dim, std::vector<std::pair<int, int>>(dim))};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec x(dim, 0.0), y(dim, 0.0);
            x[i] = 1;
            y[j] = 1;
            const Vec r = cd_mul(x, y);
            int nz = 0;
            for (int k = 0; k < dim; ++k)
                if (r[k] != 0) {
                    ++nz;
                    t.entry[perm(i)][perm(j)] = {r[k] > 0 ? 1 : -1, perm(k)};
                }
            REQUIRE(nz == 1);
        }
    return t;
}

Vec table_mul(const Table& t, std::span<const double> x, std::span<const double> y)
{
    Vec r(t.dim, 0.0);
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j) {
            const auto [s, k] = t.entry[i][j];
            r[k] += s * x[i] * y[j];
        }
    return r;
}

AlgebraElement random_element(Level level, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < dimension(level); ++i)
        c[i] = g(rng);
    return AlgebraElement(level, std::span<const double>(c.data(), dimension(level)));
}

AlgebraElement basis(Level level, int k)
{
    std::array<double, 8> c{};
    c[static_cast<std::size_t>(k)] = 1.0;
    return AlgebraElement(level, std::span<const double>(c.data(), dimension(level)));
}

double dist(const AlgebraElement& x, const AlgebraElement& y)
{
    return (x - y).norm();
}

constexpr std::array<Level, 3> levels{Level::C, Level::H, Level::O};

}  // namespace

TEST_CASE("basis products match the doubling table")
{
    for (Level level : levels) {
        const Table t = signed_table(level);
        for (int i = 0; i < t.dim; ++i)
            for (int j = 0; j < t.dim; ++j) {
                const AlgebraElement p = mul(basis(level, i), basis(level, j));
                const auto [s, k] = t.entry[i][j];
                for (int c = 0; c < t.dim; ++c)
                    CHECK(p[c] == (c == k ? double(s) : 0.0));
            }
    }
}

TEST_CASE("random products match the table oracle")
{
    std::mt19937_64 rng(7);
    for (Level level : levels) {
        const Table t = signed_table(level);
        for (int trial = 0; trial < 200; ++trial) {
            const AlgebraElement x = random_element(level, rng), y = random_element(level, rng);
            const Vec r = table_mul(t, x.coeffs(), y.coeffs());
            const AlgebraElement p = mul(x, y);
            for (int c = 0; c < t.dim; ++c)
                CHECK(p[c] == doctest::Approx(r[c]).epsilon(1e-12));
        }
    }
}

TEST_CASE("named unit squares")
{
    // j is the first coordinate of z2, e the first of z3
    CHECK(dist(mul(basis(Level::H, 1), basis(Level::H, 1)), -1.0 * AlgebraElement::one(Level::H)) == 0.0);
    CHECK(dist(mul(basis(Level::O, 2), basis(Level::O, 2)), -1.0 * AlgebraElement::one(Level::O)) == 0.0);
    for (Level level : levels)
        for (int k = 1; k < static_cast<int>(dimension(level)); ++k)
            CHECK(mul(basis(level, k), basis(level, k)).real() == -1.0);
}

TEST_CASE("z j = j conj(z)")
{
    std::mt19937_64 rng(3);
    const AlgebraElement j = basis(Level::H, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::normal_distribution<double> g;
        const std::complex<double> w(g(rng), g(rng));
        const std::array<std::complex<double>, 2> zc{w, 0.0}, zb{std::conj(w), 0.0};
        const AlgebraElement z = AlgebraElement::from_complex(Level::H, zc);
        const AlgebraElement zbar = AlgebraElement::from_complex(Level::H, zb);
        CHECK(dist(mul(z, j), mul(j, zbar)) < 1e-14);
    }
}

TEST_CASE("norm is multiplicative")
{
    std::mt19937_64 rng(11);
    for (Level level : levels)
        for (int trial = 0; trial < 500; ++trial) {
            const AlgebraElement x = random_element(level, rng), y = random_element(level, rng);
            CHECK(mul(x, y).norm() == doctest::Approx(x.norm() * y.norm()).epsilon(1e-12));
        }
}

TEST_CASE("quaternions associate, octonions are only alternative")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const AlgebraElement x = random_element(Level::H, rng), y = random_element(Level::H, rng),
                             z = random_element(Level::H, rng);
        CHECK(dist(mul(mul(x, y), z), mul(x, mul(y, z))) < 1e-12);
    }
    int non_associative = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const AlgebraElement x = random_element(Level::O, rng), y = random_element(Level::O, rng),
                             z = random_element(Level::O, rng);
        CHECK(dist(mul(mul(x, x), y), mul(x, mul(x, y))) < 1e-12);
        CHECK(dist(mul(mul(y, x), x), mul(y, mul(x, x))) < 1e-12);
        if (dist(mul(mul(x, y), z), mul(x, mul(y, z))) > 1e-3)
            ++non_associative;
    }
    CHECK(non_associative == 200);
    // i, j, e: (ij)e = -i(je)
    const AlgebraElement i = basis(Level::O, 4), j = basis(Level::O, 1), e = basis(Level::O, 2);
    CHECK(dist(mul(mul(i, j), e), -1.0 * mul(i, mul(j, e))) == 0.0);
}

TEST_CASE("conjugation")
{
    std::mt19937_64 rng(9);
    for (Level level : levels) {
        CHECK(dist(conj(AlgebraElement::one(level)), AlgebraElement::one(level)) == 0.0);
        for (int trial = 0; trial < 100; ++trial) {
            const AlgebraElement x = random_element(level, rng), y = random_element(level, rng);
            CHECK(dist(conj(conj(x)), x) == 0.0);
            CHECK(dist(conj(mul(x, y)), mul(conj(y), conj(x))) < 1e-12);
            CHECK(dist(x + conj(x), (2.0 * x.real()) * AlgebraElement::one(level)) < 1e-15);
            CHECK(mul(x, conj(x)).real() == doctest::Approx(x.norm2()).epsilon(1e-13));
        }
    }
    CHECK(dist(conj(basis(Level::H, 1)), -1.0 * basis(Level::H, 1)) == 0.0);
}

TEST_CASE("mixed levels are rejected")
{
    CHECK_THROWS_AS(mul(AlgebraElement::one(Level::H), AlgebraElement::one(Level::O)), std::domain_error);
    const std::array<double, 3> bad{1, 0, 0};
    CHECK_THROWS_AS(AlgebraElement(Level::C, bad), std::domain_error);
}

TEST_CASE("complex hopf map examples")
{
    const double r = 1 / std::sqrt(2.0);
    const std::array<std::complex<double>, 1> one{1.0}, zero{0.0}, half{r};
    auto h = hopf_map(Level::C, AlgebraElement::from_complex(Level::C, one), AlgebraElement::from_complex(Level::C, zero));
    CHECK(h == std::vector<double>{1, 0, 0});
    h = hopf_map(Level::C, AlgebraElement::from_complex(Level::C, half), AlgebraElement::from_complex(Level::C, half));
    CHECK(h[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(h[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(h[2]) < 1e-15);
}

TEST_CASE("hopf maps land on the unit sphere")
{
    std::mt19937_64 rng(13);
    for (Level level : levels)
        for (int trial = 0; trial < 200; ++trial) {
            AlgebraElement p1 = random_element(level, rng), p2 = random_element(level, rng);
            const double s = std::sqrt(p1.norm2() + p2.norm2());
            p1 = (1 / s) * p1;
            p2 = (1 / s) * p2;
            const auto h = hopf_map(level, p1, p2);
            CHECK(h.size() == dimension(level) + 1);
            double n2 = 0;
            for (double v : h)
                n2 += v * v;
            CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
        }
    const std::array<double, 2> big{1, 1}, z{0, 0};
    CHECK_THROWS_AS(hopf_map(Level::C, AlgebraElement(Level::C, big), AlgebraElement(Level::C, z)), std::domain_error);
}

TEST_CASE("octonionic hopf map matches the explicit a_k expansion")
{
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::array<std::complex<double>, 8> z;
        double n2 = 0;
        for (auto& w : z) {
            w = {g(rng), g(rng)};
            n2 += std::norm(w);
        }
        for (auto& w : z)
            w /= std::sqrt(n2);
        auto cj = [](std::complex<double> w) { return std::conj(w); };
        const std::complex<double> a1 = cj(z[0]) * z[4] + z[1] * cj(z[5]) + z[2] * cj(z[6]) + cj(z[3]) * z[7];
        const std::complex<double> a2 = cj(z[0]) * z[5] - z[1] * cj(z[4]) - cj(z[2]) * z[7] + z[3] * cj(z[6]);
        const std::complex<double> a3 = cj(z[0]) * z[6] + cj(z[1]) * z[7] - z[2] * cj(z[4]) - z[3] * cj(z[5]);
        const std::complex<double> a4 = z[0] * z[7] - z[1] * z[6] + z[2] * z[5] - z[3] * z[4];
        const std::array<std::complex<double>, 4> a{a1, a2, a3, a4};
        double f1 = 0;
        for (int k = 0; k < 4; ++k)
            f1 += std::norm(z[k]) - std::norm(z[k + 4]);
        std::array<double, 9> f{};
        f[0] = f1;
        for (int k = 0; k < 4; ++k) {
            f[1 + k] = 2 * a[k].real();
            f[5 + k] = 2 * a[k].imag();
        }
        const auto h = hopf_map(Level::O, AlgebraElement::from_complex(Level::O, std::span(z.data(), 4)),
                                AlgebraElement::from_complex(Level::O, std::span(z.data() + 4, 4)));
        for (int k = 0; k < 9; ++k)
            worst = std::max(worst, std::abs(h[k] - f[k]));
    }
    CHECK(worst < 1e-12);
}
