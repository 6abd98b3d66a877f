#pragma once

#include "napkin/genfun.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace napkin {

// ---- exact expectation -----------------------------------------------------

// Truncated exponential: sum_{k<=n} x^k / k!.
inline Rational truncated_exp(const Rational& x, int n) {
    Rational sum = 1, term = 1;
    for (int k = 1; k <= n; ++k) {
        term = term * x / k;
        sum += term;
    }
    return sum;
}

// E_n(o) = n (1 - p exp_n(q) - q exp_n(p) + pq exp_n(1)) / (pq).
inline Rational expected_napkinless_exact(int n, const Params& params) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (params.p == 0 || params.p == 1) return 0; // everyone reaches the same way
    Rational pq = params.p * params.q;
    Rational v = 1 - params.p * truncated_exp(params.q, n) -
                 params.q * truncated_exp(params.p, n) + pq * truncated_exp(Rational(1), n);
    return Rational(n) * v / pq;
}

// Same numbers from the recurrence n f(n+1) = (n+1) f(n) + (1-p^n-q^n)/(n-1)!.
inline Rational expected_napkinless_recurrence(int n, const Params& params) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (params.p == 0 || params.p == 1) return 0;
    Rational f = 0; // f(1)
    Rational pk = params.p, qk = params.q;
    Integer fact = 1; // (k-1)!
    for (int k = 1; k < n; ++k) {
        if (k > 1) fact *= (k - 1);
        f = (Rational(k + 1) * f + (1 - pk - qk) / Rational(fact)) / k;
        pk *= params.p;
        qk *= params.q;
    }
    return f;
}

// E(z) = z ( pq(2-z)e^z + (p^2+pqz-1)e^{pz} + (q^2+pqz-1)e^{qz} + 1 ) / (pq(1-z)^2),
// assembled as numerator * sum (n+1) z^n; no series division is involved.
inline ZSeries expectation_gf(const Params& params, int order) {
    if (params.p == 0 || params.p == 1) return ZSeries::zero(order);
    Rational pq = params.p * params.q;
    ZSeries ez = exp_monomial(1, 0, order);
    ZSeries epz = exp_monomial(params.p, 0, order);
    ZSeries eqz = exp_monomial(params.q, 0, order);

    auto linear_poly = [&](const Rational& c0, const Rational& c1) {
        ZSeries s(order);
        s.set_coeff(0, XYPoly(c0));
        if (order >= 1) s.set_coeff(1, XYPoly(c1));
        return s;
    };
    ZSeries num = linear_poly(2 * pq, -pq) * ez;
    num += linear_poly(params.p * params.p - 1, pq) * epz;
    num += linear_poly(params.q * params.q - 1, pq) * eqz;
    num += ZSeries::one(order);
    num = num.shifted_up();

    ZSeries geom2(order); // 1/(1-z)^2
    for (int k = 0; k <= order; ++k) geom2.set_coeff(k, XYPoly(Rational(k + 1)));
    return (num * geom2).scaled(1 / pq);
}

// ---- moments ---------------------------------------------------------------

struct StatReport {
    int n = 0;
    Rational p;
    Rational e_napkinless, e_frustrated, e_happy;
    Rational var_napkinless, var_frustrated, covar;
};

// Moments through second order from a full bivariate GFSet (n <= order).
inline StatReport moments(const GFSet& g, int n) {
    if (n < 0 || n > g.order) throw std::invalid_argument("n beyond truncation order");
    auto scalar = [&](const ZSeries& s) { return s.coeff(n).coeff(0, 0); };
    ZSeries cx = g.C.diff_x();
    ZSeries cy = g.C.diff_y();
    StatReport r;
    r.n = n;
    r.p = g.params.p;
    r.e_napkinless = scalar(cx.eval_x1().eval_y1());
    r.e_frustrated = scalar(cy.eval_x1().eval_y1());
    r.e_happy = Rational(n) - r.e_napkinless - r.e_frustrated;
    Rational e_oo = scalar(cx.diff_x().eval_x1().eval_y1()); // E(o(o-1))
    Rational e_mm = scalar(cy.diff_y().eval_x1().eval_y1());
    Rational e_om = scalar(cx.diff_y().eval_x1().eval_y1());
    r.var_napkinless = e_oo + r.e_napkinless - r.e_napkinless * r.e_napkinless;
    r.var_frustrated = e_mm + r.e_frustrated - r.e_frustrated * r.e_frustrated;
    r.covar = e_om - r.e_napkinless * r.e_frustrated;
    return r;
}

// Same report from the degree-capped shifted series of build_moment_gf;
// usable at much higher orders than the full bivariate build.
inline StatReport moments_shifted(const ZSeries& moment_c, int n, const Params& params) {
    if (n < 0 || n > moment_c.order()) throw std::invalid_argument("n beyond truncation order");
    const XYPoly& c = moment_c.coeff(n);
    StatReport r;
    r.n = n;
    r.p = params.p;
    r.e_napkinless = c.coeff(1, 0);
    r.e_frustrated = c.coeff(0, 1);
    r.e_happy = Rational(n) - r.e_napkinless - r.e_frustrated;
    Rational e_oo = 2 * c.coeff(2, 0); // E(o(o-1))
    Rational e_mm = 2 * c.coeff(0, 2);
    Rational e_om = c.coeff(1, 1);
    r.var_napkinless = e_oo + r.e_napkinless - r.e_napkinless * r.e_napkinless;
    r.var_frustrated = e_mm + r.e_frustrated - r.e_frustrated * r.e_frustrated;
    r.covar = e_om - r.e_napkinless * r.e_frustrated;
    return r;
}

// ---- pole-at-1 asymptotics -------------------------------------------------

struct AsymptoticExpansion {
    int pole_order = 2;
    Float100 b_minus2, b_minus1; // closed forms
    Float100 b_minus2_numeric, b_minus1_numeric;
};

struct AsymptoticReport {
    Float100 e_napkinless_slope; // (1-pe^q)(1-qe^p)/(pq)
    Float100 var_napkinless_slope;
    AsymptoticExpansion expansion;
    // Only stated in closed form at p = 1/2:
    std::optional<Float100> e_frustrated_slope;
    std::optional<Float100> var_frustrated_slope;
    std::optional<Float100> covar_slope;
    std::optional<Float100> e_happy_slope;
};

namespace detail {

// (1-u)^2 E(z) recentered at u = 1-z, evaluated as an analytic expression.
inline Float100 ebar(const Float100& u, const Float100& p, const Float100& q) {
    Float100 pq = p * q;
    Float100 w = 1 - u;
    return (1 - u) *
           (pq * (1 + u) * exp(w) + (p * p + pq * w - 1) * exp(p * w) +
            (q * q + pq * w - 1) * exp(q * w) + 1) /
           pq;
}

} // namespace detail

inline AsymptoticReport asymptotic_slopes(const Params& params) {
    if (params.p == 0 || params.p == 1)
        throw std::invalid_argument("asymptotics need 0 < p < 1");
    Float100 p(params.p), q(params.q);
    Float100 pq = p * q;
    Float100 e1 = exp(Float100(1)), ep = exp(p), eq = exp(q);

    AsymptoticReport r;
    r.e_napkinless_slope = (1 - p * eq) * (1 - q * ep) / pq;
    r.var_napkinless_slope = (1 - p * eq) * (1 - q * ep) *
                             (1 - (p * p - pq) * eq - (q * q - pq) * ep - pq * (e1 + 1)) /
                             (pq * pq);

    r.expansion.b_minus2 = (pq * e1 + (p * p + pq - 1) * ep + (q * q + pq - 1) * eq + 1) / pq;
    r.expansion.b_minus1 =
        -(pq * (e1 + ep + eq) + (1 + p) * (p * p + pq - 1) * ep +
          (1 + q) * (q * q + pq - 1) * eq + 1) /
        pq;
    r.expansion.b_minus2_numeric = detail::ebar(Float100(0), p, q);
    Float100 h = pow(Float100(10), -20);
    r.expansion.b_minus1_numeric =
        (detail::ebar(h, p, q) - detail::ebar(-h, p, q)) / (2 * h);

    if (params.p == Rational(1, 2)) {
        Float100 se = sqrt(e1);
        r.e_frustrated_slope = 6 * se - e1 - 7;
        r.var_frustrated_slope = 6 * se * e1 - e1 * e1 - e1 - 38 * se + 46;
        r.covar_slope = -(2 - se) * (se * e1 - 3 * e1 - 5 * se + 12);
        r.e_happy_slope = 4 - 2 * se;
    }
    return r;
}

// ---- Monte Carlo -----------------------------------------------------------

// splitmix64; per-trial streams are derived from (seed, trial index) so the
// aggregate is independent of trial execution order.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // unbiased bounded draw by rejection
    uint64_t bounded(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do r = next();
        while (r >= lim);
        return r % n;
    }
};

inline SplitMix64 trial_stream(uint64_t seed, uint64_t trial) {
    SplitMix64 g{seed ^ (0xD1B54A32D192ED03ull * (trial + 1))};
    g.next();
    return g;
}

struct MonteCarloReport {
    int n = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    // exact accumulators (bit-reproducible)
    uint64_t sum_o = 0, sum_m = 0, sum_happy = 0;
    uint64_t sum_o2 = 0, sum_m2 = 0, sum_happy2 = 0;
    double mean_o_frac = 0, mean_m_frac = 0, mean_happy_frac = 0;
    double se_o_frac = 0, se_m_frac = 0, se_happy_frac = 0;
};

inline MonteCarloReport montecarlo(int n, const Params& params, uint64_t trials,
                                   uint64_t seed) {
    if (n < 1 || trials < 1) throw std::invalid_argument("need n >= 1 and trials >= 1");
    uint64_t den = 0, num = 0;
    {
        Integer d = denominator(params.p), nu = numerator(params.p);
        if (d > Integer(uint64_t(1) << 32))
            throw std::invalid_argument("simulation needs p with denominator < 2^32");
        den = d.convert_to<uint64_t>();
        num = nu.convert_to<uint64_t>();
    }

    MonteCarloReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;

    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<char> taken(static_cast<size_t>(n));
    for (uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
        for (int i = n - 1; i > 0; --i) {
            int j = int(rng.bounded(uint64_t(i) + 1));
            std::swap(perm[size_t(i)], perm[size_t(j)]);
        }
        std::fill(taken.begin(), taken.end(), 0);
        int o = 0, m = 0;
        for (int i = 0; i < n; ++i) {
            int s = perm[size_t(i)];
            bool left_pref = rng.bounded(den) < num;
            int left = s == 0 ? n - 1 : s - 1;
            int pref = left_pref ? left : s;
            int other = left_pref ? s : left;
            if (!taken[size_t(pref)]) taken[size_t(pref)] = 1;
            else if (!taken[size_t(other)]) { taken[size_t(other)] = 1; ++m; }
            else ++o;
        }
        int happy = n - o - m;
        rep.sum_o += uint64_t(o);
        rep.sum_m += uint64_t(m);
        rep.sum_happy += uint64_t(happy);
        rep.sum_o2 += uint64_t(o) * uint64_t(o);
        rep.sum_m2 += uint64_t(m) * uint64_t(m);
        rep.sum_happy2 += uint64_t(happy) * uint64_t(happy);
    }

    auto finish = [&](uint64_t sum, uint64_t sum2, double& mean, double& se) {
        double T = double(trials);
        double mu = double(sum) / T;
        double var = double(sum2) / T - mu * mu;
        if (var < 0) var = 0;
        mean = mu / n;
        se = std::sqrt(var / T) / n;
    };
    finish(rep.sum_o, rep.sum_o2, rep.mean_o_frac, rep.se_o_frac);
    finish(rep.sum_m, rep.sum_m2, rep.mean_m_frac, rep.se_m_frac);
    finish(rep.sum_happy, rep.sum_happy2, rep.mean_happy_frac, rep.se_happy_frac);
    return rep;
}

} // namespace napkin
