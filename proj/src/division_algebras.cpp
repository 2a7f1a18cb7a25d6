#include "locones/division_algebras.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locones {

namespace {

using cd = std::complex<double>;

struct Quat {
    cd z1, z2;
};

Quat qmul(const Quat& a, const Quat& b)
{
    // (z1 + z2 j)(w1 + w2 j) with z j = j conj(z)
    return {a.z1 * b.z1 - a.z2 * std::conj(b.z2), a.z1 * b.z2 + a.z2 * std::conj(b.z1)};
}

Quat qconj(const Quat& a) { return {std::conj(a.z1), -a.z2}; }
Quat qadd(const Quat& a, const Quat& b) { return {a.z1 + b.z1, a.z2 + b.z2}; }
Quat qsub(const Quat& a, const Quat& b) { return {a.z1 - b.z1, a.z2 - b.z2}; }

void require_same(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.level() != y.level())
        throw std::domain_error("division algebra operands at different levels");
}

}  // namespace

AlgebraElement::AlgebraElement(Level level, std::span<const double> coeffs) : level_(level)
{
    if (coeffs.size() != dimension(level))
        throw std::domain_error("expected " + std::to_string(dimension(level)) + " coefficients, got "
                                + std::to_string(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c_[i] = coeffs[i];
}

AlgebraElement AlgebraElement::zero(Level level)
{
    std::array<double, 8> z{};
    return AlgebraElement(level, std::span<const double>(z.data(), dimension(level)));
}

AlgebraElement AlgebraElement::one(Level level)
{
    std::array<double, 8> z{};
    z[0] = 1.0;
    return AlgebraElement(level, std::span<const double>(z.data(), dimension(level)));
}

AlgebraElement AlgebraElement::from_complex(Level level, std::span<const std::complex<double>> z)
{
    const std::size_t k = dimension(level) / 2;
    if (z.size() != k)
        throw std::domain_error("wrong number of complex coordinates");
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = z[i].real();
        c[k + i] = z[i].imag();
    }
    return AlgebraElement(level, std::span<const double>(c.data(), 2 * k));
}

std::complex<double> AlgebraElement::z(std::size_t k) const
{
    const std::size_t h = size() / 2;
    return {c_[k], c_[h + k]};
}

std::vector<std::complex<double>> AlgebraElement::complex_coords() const
{
    std::vector<cd> out(size() / 2);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = z(k);
    return out;
}

double AlgebraElement::norm2() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        s += c_[i] * c_[i];
    return s;
}

double AlgebraElement::norm() const { return std::sqrt(norm2()); }

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y)
{
    require_same(x, y);
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < x.size(); ++i)
        c[i] = x[i] + y[i];
    return AlgebraElement(x.level(), std::span<const double>(c.data(), x.size()));
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y)
{
    require_same(x, y);
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < x.size(); ++i)
        c[i] = x[i] - y[i];
    return AlgebraElement(x.level(), std::span<const double>(c.data(), x.size()));
}

AlgebraElement operator*(double s, const AlgebraElement& x)
{
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < x.size(); ++i)
        c[i] = s * x[i];
    return AlgebraElement(x.level(), std::span<const double>(c.data(), x.size()));
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y)
{
    require_same(x, y);
    switch (x.level()) {
    case Level::C: {
        const cd r[] = {x.z(0) * y.z(0)};
        return AlgebraElement::from_complex(Level::C, r);
    }
    case Level::H: {
        Quat q = qmul({x.z(0), x.z(1)}, {y.z(0), y.z(1)});
        const cd r[] = {q.z1, q.z2};
        return AlgebraElement::from_complex(Level::H, r);
    }
    case Level::O: {
        // p = a1 + a2 e, q = a3 + a4 e
        // pq = (a1 a3 - conj(a4) a2) + (a4 a1 + a2 conj(a3)) e
        const Quat a1{x.z(0), x.z(1)}, a2{x.z(2), x.z(3)};
        const Quat a3{y.z(0), y.z(1)}, a4{y.z(2), y.z(3)};
        const Quat lo = qsub(qmul(a1, a3), qmul(qconj(a4), a2));
        const Quat hi = qadd(qmul(a4, a1), qmul(a2, qconj(a3)));
        const cd r[] = {lo.z1, lo.z2, hi.z1, hi.z2};
        return AlgebraElement::from_complex(Level::O, r);
    }
    }
    throw std::domain_error("bad level");
}

AlgebraElement conj(const AlgebraElement& x)
{
    std::array<double, 8> c{};
    for (std::size_t i = 1; i < x.size(); ++i)
        c[i] = -x[i];
    c[0] = x[0];
    return AlgebraElement(x.level(), std::span<const double>(c.data(), x.size()));
}

std::vector<double> hopf_map(Level level, const AlgebraElement& p1, const AlgebraElement& p2)
{
    if (p1.level() != level || p2.level() != level)
        throw std::domain_error("hopf_map operands at the wrong level");
    const double n1 = p1.norm2(), n2 = p2.norm2();
    if (std::abs(n1 + n2 - 1.0) > 1e-12)
        throw std::domain_error("hopf_map needs |p1|^2 + |p2|^2 = 1");
    const AlgebraElement w = mul(conj(p1), p2);
    std::vector<double> out(1 + w.size());
    out[0] = n1 - n2;
    for (std::size_t i = 0; i < w.size(); ++i)
        out[1 + i] = 2.0 * w[i];
    return out;
}

}  // namespace locones
