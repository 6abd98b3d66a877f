#pragma once

#include "napkin/model.hpp"
#include "napkin/zseries.hpp"

namespace napkin {

// All the table generating functions at a fixed p, built to one truncation
// order. S comes out of the quadratic ODE; the closed forms with denominator
// D are kept as cross-multiplication oracles in the identity suite.
struct GFSet {
    Params params;
    int order;
    ZSeries H, Hbar;       // single-block gf and its p<->q swap
    ZSeries S, N_, L, R, B; // straight table
    ZSeries C;             // circular table
};

// H(p;y,z) = sum_{n>=1} p (qy)^{n-1} z^n / n!.
// With shift_y set, y is replaced by 1+y and coefficients are truncated to
// the series' total-degree cap (used for moment extraction around y=1).
inline ZSeries build_H(const Params& params, int order, int cap = -1, bool shift_y = false) {
    ZSeries h(order, cap);
    Rational term = params.p; // p q^{n-1} / n!
    for (int n = 1; n <= order; ++n) {
        if (n > 1) term = term * params.q / n;
        else term = term / n;
        XYPoly coeff;
        if (!shift_y) {
            coeff = XYPoly::monomial(0, n - 1, term);
        } else {
            // (1+y)^{n-1}, truncated by the cap
            int top = n - 1;
            if (cap >= 0) top = std::min(top, cap);
            Rational binom = 1;
            for (int k = 0; k <= top; ++k) {
                if (k > 0) binom = binom * (n - k) / k;
                coeff.add_term(0, k, term * binom);
            }
        }
        h.set_coeff(n, coeff);
    }
    return h;
}

// L(0,y,z) = H + H^2 + H^3 + ... = (1-H)^{-1} - 1, via Horner since H has
// no constant term.
inline ZSeries build_L0(const Params& params, int order) {
    ZSeries h = build_H(params, order);
    ZSeries g = ZSeries::zero(order);
    ZSeries one = ZSeries::one(order);
    for (int k = 0; k < order; ++k) g = h * (one + g);
    return g;
}

struct EveryoneServed {
    ZSeries C0, S0, B0, L0, R0;
};

// C(0,y,z), S(0,y,z), B(0,y,z) from L(0,y,z) and its p<->q swap.
inline EveryoneServed build_everyone_served(const Params& params, int order) {
    ZSeries l0 = build_L0(params, order);
    ZSeries r0 = build_L0(params.swapped(), order);
    ZSeries one = ZSeries::one(order);
    XYPoly y = XYPoly::y();
    XYPoly p_plus_qy = XYPoly(params.p) + y.scaled(params.q);
    XYPoly py_plus_q = XYPoly(params.q) + y.scaled(params.p);
    ZSeries c0 = (one + l0.scaled(p_plus_qy) + r0.scaled(py_plus_q)).shifted_up();
    ZSeries s0 = (l0 + one) * (r0 + one);
    ZSeries b0 = l0 * r0;
    return {c0, s0, b0, l0, r0};
}

namespace detail {

// (x-y) H Hbar + q(y-1) H + p(y-1) Hbar + 1; in shifted variables x = 1+x',
// y = 1+y' this reads (x'-y') H Hbar + q y' H + p y' Hbar + 1.
inline ZSeries ode_rhs(const Params& params, const ZSeries& h, const ZSeries& hbar,
                       int order, int cap, bool shifted) {
    XYPoly x = XYPoly::x(), y = XYPoly::y();
    XYPoly x_minus_y = x - y;
    XYPoly y_term = shifted ? y : y - XYPoly(1);
    ZSeries rhs = (h * hbar).scaled(x_minus_y);
    rhs += h.scaled(y_term.scaled(params.q));
    rhs += hbar.scaled(y_term.scaled(params.p));
    rhs += ZSeries::one(order, cap);
    return rhs;
}

inline ZSeries circular_from_S(const Params& params, const ZSeries& s, const ZSeries& h,
                               const ZSeries& hbar, int order, int cap, bool shifted) {
    return (s * ode_rhs(params, h, hbar, order, cap, shifted)).shifted_up();
}

} // namespace detail

inline GFSet build_full(const Params& params, int order) {
    ZSeries h = build_H(params, order);
    ZSeries hbar = build_H(params.swapped(), order);
    ZSeries rhs = detail::ode_rhs(params, h, hbar, order, -1, false);
    ZSeries s = solve_ode_quadratic(rhs, XYPoly(1), order);
    ZSeries one = ZSeries::one(order);
    ZSeries n_ = s * (one - h) * (one - hbar);
    ZSeries l = s * h * (one - hbar);
    ZSeries r = s * (one - h) * hbar;
    ZSeries b = s * h * hbar;
    ZSeries c = detail::circular_from_S(params, s, h, hbar, order, -1, false);
    return GFSet{params, order, std::move(h), std::move(hbar), std::move(s),
                 std::move(n_), std::move(l), std::move(r), std::move(b), std::move(c)};
}

// C(x,y,z) in shifted variables x = 1+x', y = 1+y' with coefficients cut at
// total degree <= cap. The z^n coefficient then reads off factorial moments:
// [x'] = E(o), [y'] = E(m), [x'^2] = E(o(o-1))/2, [x'y'] = E(om), and so on.
inline ZSeries build_moment_gf(const Params& params, int order, int cap = 2) {
    ZSeries h = build_H(params, order, cap, /*shift_y=*/true);
    ZSeries hbar = build_H(params.swapped(), order, cap, /*shift_y=*/true);
    ZSeries rhs = detail::ode_rhs(params, h, hbar, order, cap, true);
    ZSeries s = solve_ode_quadratic(rhs, XYPoly(1), order);
    return detail::circular_from_S(params, s, h, hbar, order, cap, true);
}

} // namespace napkin
