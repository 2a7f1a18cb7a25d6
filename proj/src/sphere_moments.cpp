#include "locones/sphere_moments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace locones {

Rational monomial_moment(int D, std::span<const int> exponents)
{
    if (D < 2)
        throw std::domain_error("monomial_moment needs D >= 2");
    if (static_cast<int>(exponents.size()) > D)
        throw std::domain_error("more exponents than coordinates");
    int total = 0;
    Rational num = 1;
    for (int e : exponents) {
        if (e < 0)
            throw std::domain_error("negative exponent");
        if (e % 2 != 0)
            return Rational(0);
        for (int k = e - 1; k > 1; k -= 2)
            num *= k;
        total += e;
    }
    Rational den = 1;
    for (int j = 0; j < total / 2; ++j)
        den *= D + 2 * j;
    return num / den;
}

QuadraticForm::QuadraticForm(int d, std::string name)
    : dim(d), m(static_cast<std::size_t>(d * d), Rational(0)), label(std::move(name))
{
}

void QuadraticForm::add_monomial(int i, int j, const Rational& coef)
{
    if (i == j) {
        m[static_cast<std::size_t>(i * dim + i)] += coef;
        return;
    }
    const Rational half = coef / 2;
    m[static_cast<std::size_t>(i * dim + j)] += half;
    m[static_cast<std::size_t>(j * dim + i)] += half;
}

Rational QuadraticForm::trace() const
{
    Rational t = 0;
    for (int i = 0; i < dim; ++i)
        t += at(i, i);
    return t;
}

double QuadraticForm::eval(std::span<const double> x) const
{
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Rational& v = at(i, j);
            if (v != 0)
                s += static_cast<double>(v) * x[i] * x[j];
        }
    return std::sqrt(static_cast<double>(scale_sq)) * s;
}

double ScaledValue::value() const
{
    return static_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand));
}

namespace {

struct Entry {
    int i, j;
    Rational v;
};

std::vector<Entry> nonzeros(const QuadraticForm& f)
{
    std::vector<Entry> out;
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
            if (f.at(i, j) != 0)
                out.push_back({i, j, f.at(i, j)});
    return out;
}

// E[x_i x_j x_k x_l]; only the patterns (4) and (2,2) survive
class QuarticMoments {
public:
    explicit QuarticMoments(int D)
    {
        const int e4[] = {4};
        const int e22[] = {2, 2};
        four_ = monomial_moment(D, e4);
        two_two_ = monomial_moment(D, e22);
    }

    const Rational* operator()(int i, int j, int k, int l) const
    {
        std::map<int, int> count;
        ++count[i];
        ++count[j];
        ++count[k];
        ++count[l];
        for (auto& [idx, c] : count)
            if (c % 2 != 0)
                return nullptr;
        return count.size() == 1 ? &four_ : &two_two_;
    }

private:
    Rational four_, two_two_;
};

Rational expectation(const std::vector<Entry>& f, const std::vector<Entry>& g, const QuarticMoments& mom)
{
    Rational s = 0;
    for (const auto& a : f)
        for (const auto& b : g)
            if (const Rational* e = mom(a.i, a.j, b.i, b.j))
                s += a.v * b.v * *e;
    return s;
}

Rational c_sq(int n, int alpha)
{
    return Rational((n + 1) * (n + 1 - alpha), n * (n + 2 - alpha));
}

Rational d_sq(int n) { return Rational(2 * (n + 1), n); }

// coef * Re or Im of u v with u = z_a or conj(z_a), v = z_b or conj(z_b);
// z_a = x_a + i x_{K+a}
void add_product(QuadraticForm& f, int K, int a, bool conj_a, int b, bool conj_b, bool imag_part,
                 const Rational& coef)
{
    const int sa = conj_a ? -1 : 1, sb = conj_b ? -1 : 1;
    if (!imag_part) {
        f.add_monomial(a, b, coef);
        f.add_monomial(K + a, K + b, -sa * sb * coef);
    } else {
        f.add_monomial(K + a, b, sa * coef);
        f.add_monomial(a, K + b, sb * coef);
    }
}

}  // namespace

ScaledValue l2_inner(const QuadraticForm& f, const QuadraticForm& g, int normalization)
{
    if (f.dim != g.dim)
        throw std::invalid_argument("l2_inner: dimension mismatch");
    const QuarticMoments mom(f.dim);
    ScaledValue r;
    r.coeff = normalization * expectation(nonzeros(f), nonzeros(g), mom);
    r.radicand = f.scale_sq * g.scale_sq;
    return r;
}

int basis_count(Family family, int n)
{
    switch (family) {
    case Family::I: return n * (n + 2);
    case Family::II: return 2 * n * n + 3 * n;
    case Family::III: return 9;
    }
    return 0;
}

std::vector<QuadraticForm> eigen_basis(Family family, int n)
{
    if (n < 1)
        throw std::domain_error("n must be >= 1");
    std::vector<QuadraticForm> out;
    if (family == Family::I) {
        const int K = n + 1, D = 2 * K;
        auto mod2 = [&](QuadraticForm& f, int k, const Rational& c) {
            f.add_monomial(k, k, c);
            f.add_monomial(K + k, K + k, c);
        };
        for (int al = 1; al <= n; ++al) {
            QuadraticForm f(D, "phi_" + std::to_string(al));
            mod2(f, al - 1, 1);
            for (int k = al + 1; k <= n + 1; ++k)
                mod2(f, k - 1, Rational(-1, n + 1 - al));
            f.scale_sq = c_sq(n, al);
            out.push_back(std::move(f));
        }
        for (bool im : {false, true})
            for (int k = 1; k <= n + 1; ++k)
                for (int l = k + 1; l <= n + 1; ++l) {
                    QuadraticForm f(D, (im ? "phi_bar_" : "phi_") + std::to_string(k) + "_" + std::to_string(l));
                    add_product(f, K, k - 1, false, l - 1, true, im, 1);
                    f.scale_sq = d_sq(n);
                    out.push_back(std::move(f));
                }
        return out;
    }
    if (family == Family::II) {
        const int K = 2 * n + 2, D = 2 * K;
        auto modq = [&](QuadraticForm& f, int k, const Rational& c) {
            for (int i : {2 * k - 2, 2 * k - 1}) {
                f.add_monomial(i, i, c);
                f.add_monomial(K + i, K + i, c);
            }
        };
        for (int al = 1; al <= n; ++al) {
            QuadraticForm f(D, "phi_" + std::to_string(al));
            modq(f, al, 1);
            for (int k = al + 1; k <= n + 1; ++k)
                modq(f, k, Rational(-1, n + 1 - al));
            f.scale_sq = c_sq(n, al);
            out.push_back(std::move(f));
        }
        // block order: phi_kl, phi_kbar_lbar, phi~_kl, phi~_kbar_lbar
        for (int blk = 0; blk < 4; ++blk) {
            const bool tilde = blk >= 2, im = blk % 2 == 1;
            for (int k = 1; k <= n + 1; ++k)
                for (int l = k + 1; l <= n + 1; ++l) {
                    std::string name = std::string(tilde ? "phit_" : "phi_") + (im ? "bar_" : "")
                                       + std::to_string(k) + "_" + std::to_string(l);
                    QuadraticForm f(D, name);
                    const int a1 = 2 * k - 2, a2 = 2 * k - 1, b1 = 2 * l - 2, b2 = 2 * l - 1;
                    if (!tilde) {
                        // conj(z_{2k-1}) z_{2l-1} + z_{2k} conj(z_{2l})
                        add_product(f, K, a1, true, b1, false, im, 1);
                        add_product(f, K, a2, false, b2, true, im, 1);
                    } else {
                        // conj(z_{2k-1}) z_{2l} - z_{2k} conj(z_{2l-1})
                        add_product(f, K, a1, true, b2, false, im, 1);
                        add_product(f, K, a2, false, b1, true, im, -1);
                    }
                    f.scale_sq = d_sq(n);
                    out.push_back(std::move(f));
                }
        }
        return out;
    }
    throw std::domain_error("eigen_basis is defined for families I and II");
}

GramMatrix gram_matrix(Family family, int n)
{
    const auto basis = eigen_basis(family, n);
    const int count = static_cast<int>(basis.size());
    const QuarticMoments mom(basis.front().dim);
    std::vector<std::vector<Entry>> nz;
    for (const auto& f : basis)
        nz.push_back(nonzeros(f));
    GramMatrix g(count, std::vector<ScaledValue>(count));
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j) {
            ScaledValue v;
            v.coeff = count * expectation(nz[i], nz[j], mom);
            v.radicand = basis[i].scale_sq * basis[j].scale_sq;
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

bool is_exact_identity(const GramMatrix& g)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j ? !g[i][j].is_one() : !g[i][j].is_zero())
                return false;
        }
    return true;
}

}  // namespace locones
