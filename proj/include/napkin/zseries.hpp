#pragma once

#include "napkin/xypoly.hpp"

#include <stdexcept>
#include <vector>

namespace napkin {

// Truncated power series in z. Coefficients are XYPoly; coeff(n) is the
// ordinary coefficient of z^n, egf_coeff(n) is the coefficient of z^n/n!.
//
// An optional cap on the total (x,y)-degree of every coefficient turns the
// ring into its quotient by the ideal of higher-degree terms; the moment
// computations use cap = 2 with shifted variables.
class ZSeries {
public:
    explicit ZSeries(int order, int xy_cap = -1)
        : order_(order), cap_(xy_cap), c_(size_t(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static ZSeries constant(const XYPoly& p, int order, int cap = -1) {
        ZSeries s(order, cap);
        s.set_coeff(0, p);
        return s;
    }
    static ZSeries zero(int order, int cap = -1) { return ZSeries(order, cap); }
    static ZSeries one(int order, int cap = -1) { return constant(XYPoly(1), order, cap); }

    // z^k * p
    static ZSeries monomial(int k, const XYPoly& p, int order, int cap = -1) {
        ZSeries s(order, cap);
        if (k <= order) s.set_coeff(k, p);
        return s;
    }

    int order() const { return order_; }
    int xy_cap() const { return cap_; }

    const XYPoly& coeff(int n) const { return c_.at(size_t(n)); }
    XYPoly egf_coeff(int n) const {
        return c_.at(size_t(n)).scaled(Rational(factorial(unsigned(n))));
    }
    void set_coeff(int n, const XYPoly& p) { c_.at(size_t(n)) = p.truncated(cap_); }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    // Index of the first nonzero coefficient where *this and o disagree, or -1.
    int first_difference(const ZSeries& o) const {
        check_order(o);
        for (int n = 0; n <= order_; ++n)
            if (c_[size_t(n)] != o.c_[size_t(n)]) return n;
        return -1;
    }

    ZSeries& operator+=(const ZSeries& o) {
        check_order(o);
        for (int n = 0; n <= order_; ++n) c_[size_t(n)] += o.c_[size_t(n)];
        return *this;
    }
    ZSeries& operator-=(const ZSeries& o) {
        check_order(o);
        for (int n = 0; n <= order_; ++n) c_[size_t(n)] -= o.c_[size_t(n)];
        return *this;
    }
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }

    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        a.check_order(b);
        ZSeries r(a.order_, a.cap_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[size_t(i)].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.c_[size_t(j)].is_zero()) continue;
                r.c_[size_t(i + j)] += a.c_[size_t(i)].mul(b.c_[size_t(j)], a.cap_);
            }
        }
        return r;
    }

    ZSeries scaled(const Rational& c) const {
        ZSeries r(order_, cap_);
        for (int n = 0; n <= order_; ++n) r.c_[size_t(n)] = c_[size_t(n)].scaled(c);
        return r;
    }
    ZSeries scaled(const XYPoly& p) const {
        ZSeries r(order_, cap_);
        for (int n = 0; n <= order_; ++n) r.c_[size_t(n)] = c_[size_t(n)].mul(p, cap_);
        return r;
    }

    // Multiplication by z; the top coefficient of the input falls off the end.
    ZSeries shifted_up() const {
        ZSeries r(order_, cap_);
        for (int n = 1; n <= order_; ++n) r.c_[size_t(n)] = c_[size_t(n - 1)];
        return r;
    }

    ZSeries truncated(int new_order) const {
        if (new_order > order_) throw std::invalid_argument("cannot extend truncation order");
        ZSeries r(new_order, cap_);
        for (int n = 0; n <= new_order; ++n) r.c_[size_t(n)] = c_[size_t(n)];
        return r;
    }

    // Term-wise d/dz; result has truncation order N-1.
    ZSeries derivative() const {
        if (order_ == 0) return ZSeries(0, cap_);
        ZSeries r(order_ - 1, cap_);
        for (int n = 1; n <= order_; ++n)
            r.c_[size_t(n - 1)] = c_[size_t(n)].scaled(Rational(n));
        return r;
    }

    // Term-wise antiderivative with zero constant term.
    ZSeries integrated() const {
        ZSeries r(order_, cap_);
        for (int n = 0; n < order_; ++n)
            r.c_[size_t(n + 1)] = c_[size_t(n)].scaled(Rational(1, n + 1));
        return r;
    }

    ZSeries diff_x() const { return map([](const XYPoly& p) { return p.diff_x(); }); }
    ZSeries diff_y() const { return map([](const XYPoly& p) { return p.diff_y(); }); }
    ZSeries eval_x(const Rational& v) const {
        return map([&](const XYPoly& p) { return p.eval_x(v); });
    }
    ZSeries eval_y(const Rational& v) const {
        return map([&](const XYPoly& p) { return p.eval_y(v); });
    }
    ZSeries eval_x1() const { return eval_x(1); }
    ZSeries eval_y1() const { return eval_y(1); }

    bool operator==(const ZSeries& o) const {
        return order_ == o.order_ && c_ == o.c_;
    }
    bool operator!=(const ZSeries& o) const { return !(*this == o); }

private:
    template <typename F>
    ZSeries map(F f) const {
        ZSeries r(order_, cap_);
        for (int n = 0; n <= order_; ++n) r.c_[size_t(n)] = f(c_[size_t(n)]);
        return r;
    }
    void check_order(const ZSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("truncation order mismatch");
    }

    int order_;
    int cap_;
    std::vector<XYPoly> c_;
};

// exp(c*z) when ydeg == 0, exp(c*y*z) when ydeg == 1, truncated at order N.
// Coefficients are built by rising products: t_{k} = t_{k-1} * c / k.
inline ZSeries exp_monomial(const Rational& c, int ydeg, int order, int cap = -1) {
    if (ydeg != 0 && ydeg != 1) throw std::invalid_argument("ydeg must be 0 or 1");
    ZSeries r(order, cap);
    Rational t = 1;
    r.set_coeff(0, XYPoly(1));
    for (int k = 1; k <= order; ++k) {
        t = t * c / k;
        r.set_coeff(k, XYPoly::monomial(0, ydeg * k, t));
    }
    return r;
}

// Unique S with S(0) = s0 and S' = rhs * S^2, computed coefficient by
// coefficient: (n+1) S_{n+1} = [z^n](rhs * S^2) uses only S_0..S_n.
inline ZSeries solve_ode_quadratic(const ZSeries& rhs, const XYPoly& s0, int order) {
    ZSeries s(order, rhs.xy_cap());
    s.set_coeff(0, s0);
    std::vector<XYPoly> sq(size_t(order) + 1); // running coefficients of S^2
    int cap = rhs.xy_cap();
    for (int n = 0; n < order; ++n) {
        // S^2 coefficient at z^n is now fully determined.
        XYPoly q;
        for (int i = 0; i <= n; ++i) q += s.coeff(i).mul(s.coeff(n - i), cap);
        sq[size_t(n)] = q;
        XYPoly conv;
        for (int k = 0; k <= n && k <= rhs.order(); ++k)
            conv += rhs.coeff(k).mul(sq[size_t(n - k)], cap);
        s.set_coeff(n + 1, conv.scaled(Rational(1, n + 1)));
    }
    return s;
}

} // namespace napkin
