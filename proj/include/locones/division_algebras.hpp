#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace locones {

enum class Level { C, H, O };

constexpr std::size_t dimension(Level l)
{
    return l == Level::C ? 2 : (l == Level::H ? 4 : 8);
}

// Coefficients use the complex identification: an element is written with
// k = dim/2 complex coordinates (z1 for C, z1 + z2 j for H,
// (z1 + z2 j) + (z3 + z4 j) e for O) and flattened as
// (Re z1, ..., Re zk, Im z1, ..., Im zk).
class AlgebraElement {
public:
    AlgebraElement(Level level, std::span<const double> coeffs);

    static AlgebraElement zero(Level level);
    static AlgebraElement one(Level level);
    static AlgebraElement from_complex(Level level, std::span<const std::complex<double>> z);

    Level level() const { return level_; }
    std::size_t size() const { return dimension(level_); }
    double operator[](std::size_t i) const { return c_[i]; }
    std::span<const double> coeffs() const { return {c_.data(), size()}; }

    std::complex<double> z(std::size_t k) const;  // 0-based complex coordinate
    std::vector<std::complex<double>> complex_coords() const;

    double norm2() const;
    double norm() const;
    double real() const { return c_[0]; }

private:
    Level level_;
    std::array<double, 8> c_{};
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(double s, const AlgebraElement& x);

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conj(const AlgebraElement& x);

// (|p1|^2 - |p2|^2, coefficients of 2 conj(p1) p2); length 3, 5 or 9.
std::vector<double> hopf_map(Level level, const AlgebraElement& p1, const AlgebraElement& p2);

}  // namespace locones
