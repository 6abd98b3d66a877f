#pragma once

#include "napkin/rational.hpp"

#include <map>
#include <utility>

namespace napkin {

// Polynomial in x and y with exact rational coefficients. Zero coefficients
// are never stored.
class XYPoly {
public:
    using Key = std::pair<int, int>; // (x-degree, y-degree)

    XYPoly() = default;
    XYPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    XYPoly(int c) : XYPoly(Rational(c)) {}

    static XYPoly monomial(int xdeg, int ydeg, const Rational& c) {
        XYPoly p;
        if (c != 0) p.terms_[{xdeg, ydeg}] = c;
        return p;
    }
    static XYPoly x() { return monomial(1, 0, 1); }
    static XYPoly y() { return monomial(0, 1, 1); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int xdeg, int ydeg) const {
        auto it = terms_.find({xdeg, ydeg});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int xdeg, int ydeg, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find({xdeg, ydeg});
        if (it == terms_.end()) {
            terms_[{xdeg, ydeg}] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    XYPoly& operator+=(const XYPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    XYPoly& operator-=(const XYPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
    friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }

    XYPoly operator-() const {
        XYPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    // Product, optionally dropping terms of total degree > cap (cap < 0: keep all).
    XYPoly mul(const XYPoly& o, int cap = -1) const {
        XYPoly r;
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                int xd = ka.first + kb.first;
                int yd = ka.second + kb.second;
                if (cap >= 0 && xd + yd > cap) continue;
                r.add_term(xd, yd, ca * cb);
            }
        }
        return r;
    }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b) { return a.mul(b); }

    XYPoly scaled(const Rational& c) const {
        XYPoly r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }

    XYPoly diff_x() const {
        XYPoly r;
        for (const auto& [k, c] : terms_)
            if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * k.first;
        return r;
    }
    XYPoly diff_y() const {
        XYPoly r;
        for (const auto& [k, c] : terms_)
            if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * k.second;
        return r;
    }

    // Substitute x = v; result depends on y only.
    XYPoly eval_x(const Rational& v) const {
        XYPoly r;
        for (const auto& [k, c] : terms_)
            r.add_term(0, k.second, c * pow_rational(v, unsigned(k.first)));
        return r;
    }
    XYPoly eval_y(const Rational& v) const {
        XYPoly r;
        for (const auto& [k, c] : terms_)
            r.add_term(k.first, 0, c * pow_rational(v, unsigned(k.second)));
        return r;
    }

    Rational eval(const Rational& xv, const Rational& yv) const {
        Rational r = 0;
        for (const auto& [k, c] : terms_)
            r += c * pow_rational(xv, unsigned(k.first)) * pow_rational(yv, unsigned(k.second));
        return r;
    }

    XYPoly truncated(int cap) const {
        if (cap < 0) return *this;
        XYPoly r;
        for (const auto& [k, c] : terms_)
            if (k.first + k.second <= cap) r.terms_[k] = c;
        return r;
    }

    bool operator==(const XYPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const XYPoly& o) const { return !(*this == o); }

private:
    std::map<Key, Rational> terms_;
};

} // namespace napkin
