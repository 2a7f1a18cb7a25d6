#include "locones/second_fundamental.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "locones/errors.hpp"

namespace locones {

namespace {

std::string num(int v) { return std::to_string(v); }

std::string pair_label(const char* kind, int k, int l)
{
    return std::string(kind) + "_" + num(k) + "_" + num(l);
}

std::vector<std::pair<int, int>> pairs(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= n + 1; ++k)
        for (int l = k + 1; l <= n + 1; ++l)
            out.emplace_back(k, l);
    return out;
}

int pair_index(int n, int k, int l)
{
    // lexicographic position of (k, l) among 1 <= k < l <= n+1
    int idx = 0;
    for (int kk = 1; kk < k; ++kk)
        idx += n + 1 - kk;
    return idx + (l - k - 1);
}

class FrameBuilder {
public:
    FrameBuilder(int target, int d) : T_(target) { tangent_.reserve(d); }

    Eigen::VectorXd zero() const { return Eigen::VectorXd::Zero(T_); }

    void tangent(const Eigen::VectorXd& v)
    {
        scale_.push_back(v.norm());
        tangent_.push_back(v / v.norm());
    }

    void normal(const Eigen::VectorXd& v, std::string label, bool diag)
    {
        normal_.push_back(v / v.norm());
        labels_.push_back(std::move(label));
        diag_.push_back(diag);
    }

    Frame finish(const Eigen::VectorXd& base)
    {
        Frame f;
        f.tangent.resize(static_cast<Eigen::Index>(tangent_.size()), T_);
        for (std::size_t i = 0; i < tangent_.size(); ++i)
            f.tangent.row(static_cast<Eigen::Index>(i)) = tangent_[i];
        f.normal.resize(static_cast<Eigen::Index>(normal_.size()), T_);
        for (std::size_t i = 0; i < normal_.size(); ++i)
            f.normal.row(static_cast<Eigen::Index>(i)) = normal_[i];
        f.labels = std::move(labels_);
        f.diagonal_class = std::move(diag_);
        f.tangent_scale = std::move(scale_);
        f.base = base;
        return f;
    }

private:
    int T_;
    std::vector<Eigen::VectorXd> tangent_, normal_;
    std::vector<std::string> labels_;
    std::vector<bool> diag_;
    std::vector<double> scale_;
};

Frame frame_I(const FamilyParams& p)
{
    const int n = p.n;
    const double a = p.a, b = p.b, d = p.d;
    const int npair = n * (n + 1) / 2;
    const int xi = 0, eta = n + 1, mu = 2 * n + 2, sg = 3 * n + 2, ta = sg + npair;
    FrameBuilder fb(p.target_ambient(), p.source_dim);

    auto v = fb.zero();
    v[eta] = a;
    fb.tangent(v);
    for (int k = 2; k <= n + 1; ++k) {
        v = fb.zero();
        v[xi + k - 1] = a;
        v[sg + pair_index(n, 1, k)] = b * d;
        fb.tangent(v);
    }
    for (int k = 2; k <= n + 1; ++k) {
        v = fb.zero();
        v[eta + k - 1] = a;
        v[ta + pair_index(n, 1, k)] = -b * d;
        fb.tangent(v);
    }

    v = fb.zero();
    v[xi] = -b;
    v[mu] = a;
    fb.normal(v, num(2 * n + 2), true);
    for (int k = 2; k <= n + 1; ++k) {
        v = fb.zero();
        v[xi + k - 1] = -b * d;
        v[sg + pair_index(n, 1, k)] = a;
        fb.normal(v, num(2 * n + 1 + k), false);
    }
    for (int k = 2; k <= n + 1; ++k) {
        v = fb.zero();
        v[eta + k - 1] = b * d;
        v[ta + pair_index(n, 1, k)] = a;
        fb.normal(v, num(3 * n + 1 + k), false);
    }
    for (int al = 2; al <= n; ++al) {
        v = fb.zero();
        v[mu + al - 1] = 1.0;
        fb.normal(v, num(4 * n + 1 + al), true);
    }
    for (auto [blk, kind] : {std::pair{sg, "kl"}, std::pair{ta, "kbar"}})
        for (auto [k, l] : pairs(n))
            if (k >= 2) {
                v = fb.zero();
                v[blk + pair_index(n, k, l)] = 1.0;
                fb.normal(v, pair_label(kind, k, l), false);
            }
    return fb.finish(base_point(p));
}

Frame frame_II(const FamilyParams& p)
{
    const int n = p.n;
    const double a = p.a, b = p.b, d = p.d;
    const int npair = n * (n + 1) / 2;
    const int xi = 0, eta = 2 * n + 2, mu = 4 * n + 4, sg = mu + n, ta = sg + npair, sgt = ta + npair,
              tat = sgt + npair;
    const int D = p.source_dim;
    FrameBuilder fb(p.target_ambient(), D);

    std::vector<Eigen::VectorXd> Fs(D + 1, fb.zero());
    Fs[1][eta] = a;
    Fs[2][xi + 1] = a;
    Fs[2 * n + 3][eta + 1] = a;
    for (int k = 2; k <= n + 1; ++k) {
        const int pi = pair_index(n, 1, k);
        Fs[2 * k - 1][xi + 2 * k - 2] = a;
        Fs[2 * k - 1][sg + pi] = b * d;
        Fs[2 * k][xi + 2 * k - 1] = a;
        Fs[2 * k][sgt + pi] = b * d;
        Fs[2 * n + 2 * k][eta + 2 * k - 2] = a;
        Fs[2 * n + 2 * k][ta + pi] = b * d;
        Fs[2 * n + 1 + 2 * k][eta + 2 * k - 1] = a;
        Fs[2 * n + 1 + 2 * k][tat + pi] = b * d;
    }
    for (int A = 1; A <= D; ++A)
        fb.tangent(Fs[A]);

    auto v = fb.zero();
    v[xi] = -b;
    v[mu] = a;
    fb.normal(v, num(4 * n + 4), true);
    for (int k = 2; k <= n + 1; ++k) {
        const int pi = pair_index(n, 1, k);
        v = fb.zero();
        v[xi + 2 * k - 2] = -b * d;
        v[sg + pi] = a;
        fb.normal(v, num(4 * n + 2 * k + 1), false);
        v = fb.zero();
        v[xi + 2 * k - 1] = -b * d;
        v[sgt + pi] = a;
        fb.normal(v, num(4 * n + 2 * k + 2), false);
    }
    for (int k = 2; k <= n + 1; ++k) {
        const int pi = pair_index(n, 1, k);
        v = fb.zero();
        v[eta + 2 * k - 2] = -b * d;
        v[ta + pi] = a;
        fb.normal(v, num(6 * n + 2 * k + 1), false);
        v = fb.zero();
        v[eta + 2 * k - 1] = -b * d;
        v[tat + pi] = a;
        fb.normal(v, num(6 * n + 2 * k + 2), false);
    }
    for (int al = 2; al <= n; ++al) {
        v = fb.zero();
        v[mu + al - 1] = 1.0;
        fb.normal(v, num(8 * n + 3 + al), true);
    }
    for (auto [blk, kind] :
         {std::pair{sg, "kl"}, std::pair{ta, "kbar"}, std::pair{sgt, "tkl"}, std::pair{tat, "tkbar"}})
        for (auto [k, l] : pairs(n))
            if (k >= 2) {
                v = fb.zero();
                v[blk + pair_index(n, k, l)] = 1.0;
                fb.normal(v, pair_label(kind, k, l), false);
            }
    return fb.finish(base_point(p));
}

Frame frame_III(const FamilyParams& p)
{
    const double a = p.a, b = p.b;
    FrameBuilder fb(25, 15);
    const int f0 = 16;  // slot of f_1
    std::vector<Eigen::VectorXd> Fs(16, fb.zero());
    Fs[1][8] = a;
    for (int k = 2; k <= 4; ++k) {
        Fs[k][k - 1] = a;
        Fs[7 + k][8 + k - 1] = a;
    }
    for (int l = 5; l <= 8; ++l) {
        Fs[l][l - 1] = a;
        Fs[l][f0 + (l - 3) - 1] = 2.0 * b;
        Fs[7 + l][8 + l - 1] = a;
        Fs[7 + l][f0 + (l + 1) - 1] = 2.0 * b;
    }
    for (int A = 1; A <= 15; ++A)
        fb.tangent(Fs[A]);

    auto v = fb.zero();
    v[0] = -b;
    v[f0] = a;
    fb.normal(v, "16", true);
    const double u = std::sqrt(17.0 / 24.0), w = std::sqrt(7.0 / 24.0);
    for (int k = 5; k <= 8; ++k) {
        v = fb.zero();
        v[k - 1] = -u;
        v[f0 + (k - 3) - 1] = w;
        fb.normal(v, num(12 + k), false);
    }
    for (int k = 5; k <= 8; ++k) {
        v = fb.zero();
        v[8 + k - 1] = -u;
        v[f0 + (k + 1) - 1] = w;
        fb.normal(v, num(16 + k), false);
    }
    return fb.finish(base_point(p));
}

Eigen::VectorXd eval_chart(const FamilyParams& p, const Eigen::VectorXd& t)
{
    return immersion_eval(p, chart_value(p.m(), std::span<const double>(t.data(), static_cast<std::size_t>(t.size()))));
}

// d x T matrix of first derivatives at t = 0, central differences plus one Richardson pass
Eigen::MatrixXd jacobian(const FamilyParams& p, double h)
{
    const int d = p.source_dim;
    Eigen::MatrixXd J(d, p.target_ambient());
    for (int A = 0; A < d; ++A) {
        auto diff = [&](double s) {
            Eigen::VectorXd t = Eigen::VectorXd::Zero(d);
            t[A] = s;
            Eigen::VectorXd fp = eval_chart(p, t);
            t[A] = -s;
            return Eigen::VectorXd((fp - eval_chart(p, t)) / (2.0 * s));
        };
        J.row(A) = (4.0 * diff(h / 2) - diff(h)) / 3.0;
    }
    return J;
}

}  // namespace

int Frame::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw std::out_of_range("no normal labelled " + label);
    return static_cast<int>(it - labels.begin());
}

std::string distinguished_label(const FamilyParams& p)
{
    switch (p.family) {
    case Family::I: return num(2 * p.n + 2);
    case Family::II: return num(4 * p.n + 4);
    case Family::III: return "16";
    }
    return {};
}

double tangent_fd_error(const FamilyParams& p, const Frame& f)
{
    const Eigen::MatrixXd J = jacobian(p, 1e-4);
    double err = 0.0;
    for (int A = 0; A < f.d(); ++A)
        err = std::max(err, (J.row(A) / f.tangent_scale[A] - f.tangent.row(A)).cwiseAbs().maxCoeff());
    return err;
}

double normal_projector_error(const FamilyParams& p, const Frame& f)
{
    const Eigen::MatrixXd J = jacobian(p, 1e-4);
    const int T = p.target_ambient();
    std::vector<Eigen::VectorXd> basis;
    auto absorb = [&](Eigen::VectorXd v) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis)
                v -= u.dot(v) * u;
        basis.push_back(v / v.norm());
    };
    absorb(f.base);
    for (int A = 0; A < J.rows(); ++A)
        absorb(J.row(A).transpose());
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(T, T);
    for (const auto& u : basis)
        P -= u * u.transpose();
    return (f.normal.transpose() * f.normal - P).cwiseAbs().maxCoeff();
}

Frame frames(const FamilyParams& p)
{
    Frame f;
    switch (p.family) {
    case Family::I: f = frame_I(p); break;
    case Family::II: f = frame_II(p); break;
    case Family::III: f = frame_III(p); break;
    }
    if (f.q() != p.normal_dim() || f.d() != p.source_dim)
        throw InternalConsistencyError("frame has the wrong number of vectors");

    const int T = p.target_ambient();
    Eigen::MatrixXd all(T, T);
    all << f.tangent, f.normal, f.base.transpose();
    const double orth = (all * all.transpose() - Eigen::MatrixXd::Identity(T, T)).cwiseAbs().maxCoeff();
    if (orth > 1e-12)
        throw InternalConsistencyError("frame not orthonormal (error " + std::to_string(orth) + ")");
    const double tan_err = tangent_fd_error(p, f);
    if (tan_err > 1e-8)
        throw InternalConsistencyError("tangent frame disagrees with the differential (error "
                                       + std::to_string(tan_err) + ")");
    return f;
}

SffTensor sff_numeric(const FamilyParams& p, double step)
{
    if (!(step >= 1e-4 && step <= 1e-2))
        throw std::invalid_argument("finite-difference step must lie in [1e-4, 1e-2]");
    SffTensor s{p, frames(p), {}};
    const int d = p.source_dim, q = s.q();
    s.h.assign(q, Eigen::MatrixXd::Zero(d, d));
    const Eigen::VectorXd f0 = eval_chart(p, Eigen::VectorXd::Zero(d));

    auto second = [&](int A, int B, double h) {
        Eigen::VectorXd t = Eigen::VectorXd::Zero(d);
        if (A == B) {
            t[A] = h;
            Eigen::VectorXd fp = eval_chart(p, t);
            t[A] = -h;
            return Eigen::VectorXd((fp - 2.0 * f0 + eval_chart(p, t)) / (h * h));
        }
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(p.target_ambient());
        for (int sa : {1, -1})
            for (int sb : {1, -1}) {
                t.setZero();
                t[A] = sa * h;
                t[B] = sb * h;
                acc += double(sa * sb) * eval_chart(p, t);
            }
        return Eigen::VectorXd(acc / (4.0 * h * h));
    };

    for (int A = 0; A < d; ++A)
        for (int B = A; B < d; ++B) {
            const Eigen::VectorXd F = (4.0 * second(A, B, step / 2) - second(A, B, step)) / 3.0;
            const Eigen::VectorXd H = F / (s.frame.tangent_scale[A] * s.frame.tangent_scale[B]);
            const Eigen::VectorXd proj = s.frame.normal * H;
            for (int tau = 0; tau < q; ++tau) {
                s.h[tau](A, B) = proj[tau];
                s.h[tau](B, A) = proj[tau];
            }
        }
    return s;
}

namespace {

class Table {
public:
    explicit Table(SffTensor& s) : s_(s)
    {
        s_.h.assign(s_.q(), Eigen::MatrixXd::Zero(s_.d(), s_.d()));
    }
    // 1-based A, B; symmetric slot filled
    void set(const std::string& label, int A, int B, double v)
    {
        Eigen::MatrixXd& m = s_.h[s_.frame.index_of(label)];
        m(A - 1, B - 1) = v;
        m(B - 1, A - 1) = v;
    }

private:
    SffTensor& s_;
};

void closed_I(const FamilyParams& p, Table& t)
{
    const int n = p.n, D = 2 * n + 1;
    const double a = p.a, b = p.b, d = p.d, N = p.normalizer();
    const double g = b * d / N;
    t.set(num(2 * n + 2), 1, 1, b / a);
    for (int A = 2; A <= D; ++A)
        t.set(num(2 * n + 2), A, A, -(n + 2) * a * b / (n * N));
    for (int k = 2; k <= n + 1; ++k) {
        t.set(num(2 * n + 1 + k), 1, n + k, g);
        t.set(num(3 * n + 1 + k), 1, k, g);
    }
    for (int al = 2; al <= n; ++al) {
        const double c = p.c_alpha[al - 1];
        const std::string lab = num(4 * n + 1 + al);
        for (int k = al + 1; k <= n + 1; ++k) {
            t.set(lab, k, k, -2.0 * b * c / ((n + 1 - al) * N));
            t.set(lab, n + k, n + k, -2.0 * b * c / ((n + 1 - al) * N));
        }
        t.set(lab, al, al, 2.0 * b * c / N);
        t.set(lab, n + al, n + al, 2.0 * b * c / N);
    }
    for (auto [k, l] : pairs(n)) {
        if (k < 2)
            continue;
        t.set(pair_label("kl", k, l), k, l, g);
        t.set(pair_label("kl", k, l), n + k, n + l, g);
        t.set(pair_label("kbar", k, l), k, n + l, -g);
        t.set(pair_label("kbar", k, l), l, n + k, g);
    }
}

void closed_II(const FamilyParams& p, Table& t)
{
    const int n = p.n, D = 4 * n + 3;
    const double a = p.a, b = p.b, d = p.d, N = p.normalizer();
    const double g = b * d / N;
    const std::string top = num(4 * n + 4);
    for (int A = 1; A <= D; ++A) {
        const bool special = A == 1 || A == 2 || A == 2 * n + 3;
        t.set(top, A, A, special ? b / a : -(n + 2) * a * b / (n * N));
    }
    for (int k = 2; k <= n + 1; ++k) {
        const std::string l1 = num(4 * n + 1 + 2 * k), l2 = num(4 * n + 2 + 2 * k);
        const std::string l3 = num(6 * n + 1 + 2 * k), l4 = num(6 * n + 2 + 2 * k);
        t.set(l1, 1, 2 * n + 2 * k, g);
        t.set(l1, 2, 2 * k, g);
        t.set(l1, 2 * n + 3, 2 * n + 1 + 2 * k, g);
        t.set(l2, 1, 2 * n + 1 + 2 * k, g);
        t.set(l2, 2, 2 * k - 1, -g);
        t.set(l2, 2 * n + 3, 2 * n + 2 * k, -g);
        t.set(l3, 1, 2 * k - 1, -g);
        t.set(l3, 2, 2 * n + 1 + 2 * k, -g);
        t.set(l3, 2 * n + 3, 2 * k, g);
        t.set(l4, 1, 2 * k, -g);
        t.set(l4, 2, 2 * n + 2 * k, g);
        t.set(l4, 2 * n + 3, 2 * k - 1, -g);
    }
    for (int al = 2; al <= n; ++al) {
        const double c = p.c_alpha[al - 1];
        const std::string lab = num(8 * n + 3 + al);
        for (int k = al + 1; k <= n + 1; ++k)
            for (int A : {2 * k - 1, 2 * k, 2 * n + 2 * k, 2 * n + 1 + 2 * k})
                t.set(lab, A, A, -2.0 * b * c / ((n + 1 - al) * N));
        for (int A : {2 * al - 1, 2 * al, 2 * n + 2 * al, 2 * n + 1 + 2 * al})
            t.set(lab, A, A, 2.0 * b * c / N);
    }
    for (auto [k, l] : pairs(n)) {
        if (k < 2)
            continue;
        const std::string kl = pair_label("kl", k, l), kb = pair_label("kbar", k, l);
        const std::string tkl = pair_label("tkl", k, l), tkb = pair_label("tkbar", k, l);
        t.set(kl, 2 * k - 1, 2 * l - 1, g);
        t.set(kl, 2 * k, 2 * l, g);
        t.set(kl, 2 * n + 2 * k, 2 * n + 2 * l, g);
        t.set(kl, 2 * n + 1 + 2 * k, 2 * n + 1 + 2 * l, g);
        t.set(kb, 2 * k - 1, 2 * n + 2 * l, g);
        t.set(kb, 2 * k, 2 * n + 1 + 2 * l, -g);
        t.set(kb, 2 * l - 1, 2 * n + 2 * k, -g);
        t.set(kb, 2 * l, 2 * n + 1 + 2 * k, g);
        t.set(tkl, 2 * k - 1, 2 * l, g);
        t.set(tkl, 2 * k, 2 * l - 1, -g);
        t.set(tkl, 2 * n + 2 * k, 2 * n + 1 + 2 * l, g);
        t.set(tkl, 2 * n + 1 + 2 * k, 2 * n + 2 * l, -g);
        t.set(tkb, 2 * k - 1, 2 * n + 1 + 2 * l, g);
        t.set(tkb, 2 * k, 2 * n + 2 * l, g);
        t.set(tkb, 2 * l - 1, 2 * n + 1 + 2 * k, -g);
        t.set(tkb, 2 * l, 2 * n + 2 * k, -g);
    }
}

void closed_III(Table& t)
{
    const double r = std::sqrt(17.0 / 28.0), q = -std::sqrt(119.0) / 16.0, g = std::sqrt(85.0) / 16.0;
    for (int A : {1, 2, 3, 4, 9, 10, 11})
        t.set("16", A, A, r);
    for (int A : {5, 6, 7, 8, 12, 13, 14, 15})
        t.set("16", A, A, q);
    struct E {
        int A, B, sign;
    };
    const std::map<int, std::vector<E>> table = {
        {17, {{1, 12, 1}, {2, 6, 1}, {3, 7, 1}, {4, 8, 1}, {9, 13, 1}, {10, 14, 1}, {11, 15, 1}}},
        {18, {{1, 13, 1}, {2, 5, -1}, {3, 8, -1}, {4, 7, 1}, {9, 12, -1}, {10, 15, -1}, {11, 14, 1}}},
        {19, {{1, 14, 1}, {2, 8, 1}, {3, 5, -1}, {4, 6, -1}, {9, 15, 1}, {10, 12, -1}, {11, 13, -1}}},
        {20, {{1, 15, -1}, {2, 7, -1}, {3, 6, 1}, {4, 5, -1}, {9, 14, 1}, {10, 13, -1}, {11, 12, 1}}},
        {21, {{1, 5, -1}, {2, 13, -1}, {3, 14, -1}, {4, 15, 1}, {6, 9, 1}, {7, 10, 1}, {8, 11, -1}}},
        {22, {{1, 6, -1}, {2, 12, 1}, {3, 15, -1}, {4, 14, -1}, {5, 9, -1}, {7, 11, 1}, {8, 10, 1}}},
        {23, {{1, 7, -1}, {2, 15, 1}, {3, 12, 1}, {4, 13, 1}, {5, 10, -1}, {6, 11, -1}, {8, 9, -1}}},
        {24, {{1, 8, 1}, {2, 14, -1}, {3, 13, 1}, {4, 12, -1}, {5, 11, -1}, {6, 10, 1}, {7, 9, -1}}},
    };
    for (const auto& [tau, entries] : table)
        for (const E& e : entries)
            t.set(num(tau), e.A, e.B, e.sign * g);
}

}  // namespace

SffTensor sff_closed_form(const FamilyParams& p)
{
    SffTensor s{p, frames(p), {}};
    Table t(s);
    switch (p.family) {
    case Family::I: closed_I(p, t); break;
    case Family::II: closed_II(p, t); break;
    case Family::III: closed_III(t); break;
    }
    return s;
}

double max_abs_diff(const SffTensor& x, const SffTensor& y)
{
    if (x.q() != y.q() || x.d() != y.d())
        throw std::invalid_argument("tensors of different shape");
    double m = 0.0;
    for (int tau = 0; tau < x.q(); ++tau)
        m = std::max(m, (x[tau] - y[tau]).cwiseAbs().maxCoeff());
    return m;
}

NormalDirection::NormalDirection(Eigen::VectorXd l) : lambda(std::move(l))
{
    if (std::abs(lambda.norm() - 1.0) > 1e-12)
        throw std::domain_error("normal direction is not a unit vector");
}

NormalDirection NormalDirection::axis(int q, int tau, double sign)
{
    Eigen::VectorXd l = Eigen::VectorXd::Zero(q);
    l[tau] = sign;
    return NormalDirection(l);
}

Eigen::MatrixXd direction_matrix(const SffTensor& s, const Eigen::VectorXd& lambda)
{
    if (lambda.size() != s.q())
        throw std::invalid_argument("normal direction has the wrong length");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s.d(), s.d());
    for (int tau = 0; tau < s.q(); ++tau)
        if (lambda[tau] != 0.0)
            m += lambda[tau] * s[tau];
    return m;
}

Eigen::MatrixXd direction_matrix(const SffTensor& s, const NormalDirection& nu)
{
    return direction_matrix(s, nu.lambda);
}

Eigen::MatrixXd gram_Q(const SffTensor& s)
{
    const int q = s.q();
    Eigen::MatrixXd Q(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j)
            Q(i, j) = Q(j, i) = s[i].cwiseProduct(s[j]).sum();
    return Q;
}

CurvatureBound s_max(const SffTensor& s)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_Q(s));
    const Eigen::Index top = es.eigenvalues().size() - 1;
    CurvatureBound c;
    c.s_squared = es.eigenvalues()[top];
    c.s = std::sqrt(c.s_squared);
    c.direction = es.eigenvectors().col(top).normalized();
    // fix the sign so the largest component is positive
    Eigen::Index imax;
    c.direction.cwiseAbs().maxCoeff(&imax);
    if (c.direction[imax] < 0)
        c.direction = -c.direction;
    return c;
}

double s_squared_closed_form(Family family, int n)
{
    switch (family) {
    case Family::I: return (2.0 * n + 1) * (2.0 * n + 3) / (4.0 * (n + 1));
    case Family::II: return (4.0 * n + 3) * (4.0 * n + 5) / (8.0 * (n + 1));
    case Family::III: return 255.0 / 32.0;
    }
    return 0.0;
}

namespace {

std::string full(double v)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

void write_sff_csv(std::ostream& os, const SffTensor& numeric, const SffTensor* closed)
{
    os << "tau_label,A,B,value";
    if (closed)
        os << ",closed_form,abs_diff";
    os << '\n';
    const int d = numeric.d();
    for (int tau = 0; tau < numeric.q(); ++tau) {
        const std::string& lab = numeric.frame.labels[tau];
        for (int A = 0; A < d; ++A)
            for (int B = A; B < d; ++B) {
                os << lab << ',' << A + 1 << ',' << B + 1 << ',' << full(numeric[tau](A, B));
                if (closed)
                    os << ',' << full((*closed)[tau](A, B)) << ','
                       << full(std::abs(numeric[tau](A, B) - (*closed)[tau](A, B)));
                os << '\n';
            }
        const double tr = numeric[tau].trace();
        os << lab << ",trace,trace," << full(tr);
        if (closed)
            os << ',' << full((*closed)[tau].trace()) << ',' << full(std::abs(tr - (*closed)[tau].trace()));
        os << '\n';
    }
}

}  // namespace locones
