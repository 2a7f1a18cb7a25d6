#include "locones/lo_spheres.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locones {

namespace {

using cd = std::complex<double>;

double c_coeff(int n, int alpha)
{
    return std::sqrt(double((n + 1) * (n + 1 - alpha)) / double(n * (n + 2 - alpha)));
}

void require_unit(const Eigen::VectorXcd& z)
{
    if (std::abs(z.squaredNorm() - 1.0) > 1e-12)
        throw std::domain_error("source point is not on the unit sphere");
}

Eigen::VectorXd eval_I(const FamilyParams& p, const Eigen::VectorXcd& z)
{
    const int n = p.n, K = n + 1;
    Eigen::VectorXd out(p.target_ambient());
    int o = 0;
    for (int k = 0; k < K; ++k)
        out[o++] = p.a * z[k].real();
    for (int k = 0; k < K; ++k)
        out[o++] = p.a * z[k].imag();
    for (int al = 1; al <= n; ++al) {
        double tail = 0.0;
        for (int k = al + 1; k <= K; ++k)
            tail += std::norm(z[k - 1]);
        out[o++] = p.b * p.c_alpha[al - 1] * (std::norm(z[al - 1]) - tail / (n + 1 - al));
    }
    for (bool im : {false, true})
        for (int k = 0; k < K; ++k)
            for (int l = k + 1; l < K; ++l) {
                const cd w = z[k] * std::conj(z[l]);
                out[o++] = p.b * p.d * (im ? w.imag() : w.real());
            }
    return out;
}

Eigen::VectorXd eval_II(const FamilyParams& p, const Eigen::VectorXcd& z)
{
    const int n = p.n, K = 2 * n + 2;
    Eigen::VectorXd out(p.target_ambient());
    int o = 0;
    for (int k = 0; k < K; ++k)
        out[o++] = p.a * z[k].real();
    for (int k = 0; k < K; ++k)
        out[o++] = p.a * z[k].imag();
    auto q = [&](int k) { return std::norm(z[2 * k - 2]) + std::norm(z[2 * k - 1]); };
    for (int al = 1; al <= n; ++al) {
        double tail = 0.0;
        for (int k = al + 1; k <= n + 1; ++k)
            tail += q(k);
        out[o++] = p.b * p.c_alpha[al - 1] * (q(al) - tail / (n + 1 - al));
    }
    for (int blk = 0; blk < 4; ++blk) {
        const bool tilde = blk >= 2, im = blk % 2 == 1;
        for (int k = 1; k <= n + 1; ++k)
            for (int l = k + 1; l <= n + 1; ++l) {
                const cd z1 = z[2 * k - 2], z2 = z[2 * k - 1], w1 = z[2 * l - 2], w2 = z[2 * l - 1];
                const cd v = tilde ? std::conj(z1) * w2 - z2 * std::conj(w1) : std::conj(z1) * w1 + z2 * std::conj(w2);
                out[o++] = p.b * p.d * (im ? v.imag() : v.real());
            }
    }
    return out;
}

Eigen::VectorXd eval_III(const FamilyParams& p, const Eigen::VectorXcd& zz)
{
    auto z = [&](int k) { return zz[k - 1]; };
    auto cj = [](cd w) { return std::conj(w); };
    const cd a1 = cj(z(1)) * z(5) + z(2) * cj(z(6)) + z(3) * cj(z(7)) + cj(z(4)) * z(8);
    const cd a2 = cj(z(1)) * z(6) - z(2) * cj(z(5)) - cj(z(3)) * z(8) + z(4) * cj(z(7));
    const cd a3 = cj(z(1)) * z(7) + cj(z(2)) * z(8) - z(3) * cj(z(5)) - z(4) * cj(z(6));
    const cd a4 = z(1) * z(8) - z(2) * z(7) + z(3) * z(6) - z(4) * z(5);
    Eigen::VectorXd out(25);
    for (int k = 0; k < 8; ++k) {
        out[k] = p.a * zz[k].real();
        out[8 + k] = p.a * zz[k].imag();
    }
    double top = 0.0;
    for (int k = 0; k < 4; ++k)
        top += std::norm(zz[k]) - std::norm(zz[4 + k]);
    out[16] = p.b * top;
    const cd as[] = {a1, a2, a3, a4};
    for (int k = 0; k < 4; ++k) {
        out[17 + k] = p.b * 2.0 * as[k].real();
        out[21 + k] = p.b * 2.0 * as[k].imag();
    }
    return out;
}

}  // namespace

FamilyParams constants(Family family, int n)
{
    FamilyParams p;
    p.family = family;
    p.n = n;
    switch (family) {
    case Family::I:
        if (n < 1)
            throw std::domain_error("family I needs n >= 1");
        p.a = std::sqrt(2.0 * (n + 1) / ((2.0 * n + 1) * (n + 2)));
        p.b = std::sqrt(double(n) * (2 * n + 3) / ((2.0 * n + 1) * (n + 2)));
        p.d = std::sqrt(2.0 * (n + 1) / n);
        p.source_dim = 2 * n + 1;
        p.target_dim = (n + 1) * (n + 1) + 2 * n;
        break;
    case Family::II:
        if (n < 1)
            throw std::domain_error("family II needs n >= 1");
        p.a = std::sqrt(6.0 * (n + 1) / ((n + 2.0) * (4 * n + 3)));
        p.b = std::sqrt(double(n) * (4 * n + 5) / ((n + 2.0) * (4 * n + 3)));
        p.d = std::sqrt(2.0 * (n + 1) / n);
        p.source_dim = 4 * n + 3;
        p.target_dim = 2 * n * n + 7 * n + 3;
        break;
    case Family::III:
        if (n != 1)
            throw std::domain_error("family III exists only for n = 1 (got n = " + std::to_string(n) + ")");
        p.a = std::sqrt(28.0 / 45.0);
        p.b = std::sqrt(17.0 / 45.0);
        p.d = 2.0;
        p.source_dim = 15;
        p.target_dim = 24;
        break;
    }
    if (family != Family::III)
        for (int al = 1; al <= n; ++al)
            p.c_alpha.push_back(c_coeff(n, al));
    return p;
}

Eigen::VectorXcd chart_value(int m, std::span<const double> t)
{
    if (m < 1 || static_cast<int>(t.size()) != 2 * m + 1)
        throw std::domain_error("chart parameters must have length 2m+1");
    double r2 = 0.0;
    for (double v : t)
        r2 += v * v;
    if (r2 >= 1.0)
        throw std::domain_error("chart parameter outside |t| < 1");
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(m + 1);
    w[0] = 1.0;
    w[0] *= std::polar(1.0, t[0]);
    w[1] *= std::polar(1.0, -t[0]);
    for (int k = 2; k <= m + 1; ++k) {
        const double c = std::cos(t[k - 1]), s = std::sin(t[k - 1]);
        const cd w0 = w[0], wk = w[k - 1];
        w[0] = w0 * c - wk * s;
        w[k - 1] = w0 * s + wk * c;
    }
    const cd I(0.0, 1.0);
    for (int k = 2; k <= m + 1; ++k) {
        const double c = std::cos(t[m + k - 1]), s = std::sin(t[m + k - 1]);
        const cd w0 = w[0], wk = w[k - 1];
        w[0] = w0 * c + I * wk * s;
        w[k - 1] = I * w0 * s + wk * c;
    }
    return w;
}

ChartPoint chart_point(int m, std::span<const double> t)
{
    ChartPoint p;
    p.m = m;
    p.t = Eigen::Map<const Eigen::VectorXd>(t.data(), static_cast<Eigen::Index>(t.size()));
    p.value = chart_value(m, t);
    return p;
}

Eigen::VectorXd immersion_eval(const FamilyParams& p, const Eigen::VectorXcd& z)
{
    if (z.size() != p.complex_dim())
        throw std::domain_error("source point has the wrong dimension");
    require_unit(z);
    switch (p.family) {
    case Family::I: return eval_I(p, z);
    case Family::II: return eval_II(p, z);
    case Family::III: return eval_III(p, z);
    }
    throw std::domain_error("bad family");
}

Eigen::VectorXd base_point(const FamilyParams& p)
{
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(p.complex_dim());
    e1[0] = 1.0;
    return immersion_eval(p, e1);
}

Eigen::VectorXcd to_complex(const Eigen::VectorXd& x)
{
    const Eigen::Index k = x.size() / 2;
    Eigen::VectorXcd z(k);
    for (Eigen::Index i = 0; i < k; ++i)
        z[i] = cd(x[i], x[k + i]);
    return z;
}

Eigen::VectorXd to_real(const Eigen::VectorXcd& z)
{
    const Eigen::Index k = z.size();
    Eigen::VectorXd x(2 * k);
    x.head(k) = z.real();
    x.tail(k) = z.imag();
    return x;
}

std::vector<Eigen::MatrixXd> second_block_forms(const FamilyParams& p)
{
    const int D = p.source_ambient();
    const int first = D, count = p.target_ambient() - D;
    auto block = [&](const Eigen::VectorXd& x) {
        return Eigen::VectorXd(immersion_eval(p, to_complex(x)).segment(first, count) / p.b);
    };
    std::vector<Eigen::VectorXd> diag(D);
    for (int i = 0; i < D; ++i)
        diag[i] = block(Eigen::VectorXd::Unit(D, i));
    std::vector<Eigen::MatrixXd> forms(count, Eigen::MatrixXd::Zero(D, D));
    const double r = std::sqrt(0.5);
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < count; ++j)
            forms[j](i, i) = diag[i][j];
        for (int k = i + 1; k < D; ++k) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(D);
            x[i] = r;
            x[k] = r;
            const Eigen::VectorXd v = block(x);
            for (int j = 0; j < count; ++j) {
                const double off = v[j] - 0.5 * (diag[i][j] + diag[k][j]);
                forms[j](i, k) = off;
                forms[j](k, i) = off;
            }
        }
    }
    return forms;
}

}  // namespace locones
