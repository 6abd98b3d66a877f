#pragma once

#include "napkin/model.hpp"
#include "napkin/xypoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace napkin {

// Ground truth by exhaustive enumeration of all 2^n n! signed permutations.
// Deliberately naive: permutations in lexicographic order, signs as bitmasks,
// streaming aggregation into integer counters keyed by (o, m, neg, class).

struct JointDistribution {
    int n = 0;
    Rational p;
    TableKind kind = TableKind::Circular;
    std::map<std::pair<int, int>, Rational> probs; // (napkinless, frustrated) -> P
    // linear tables only: distribution restricted to each end class
    std::map<EndClass, std::map<std::pair<int, int>, Rational>> by_class;
    std::array<uint64_t, 4> class_cardinality{}; // raw |N_n|, |L_n|, |R_n|, |B_n|

    Rational total_mass() const {
        Rational s = 0;
        for (const auto& [k, v] : probs) s += v;
        return s;
    }
};

// Sum P(i,j) x^i y^j as an exact polynomial.
inline XYPoly to_polynomial(const std::map<std::pair<int, int>, Rational>& probs) {
    XYPoly poly;
    for (const auto& [k, v] : probs) poly.add_term(k.first, k.second, v);
    return poly;
}

namespace detail {

struct RawOutcome {
    int o, m;
    int end_class; // 0 N, 1 L, 2 R, 3 B (circular: always 0)
};

// mask bit r set: the r-th guest to arrive prefers left.
inline RawOutcome replay_fast(const std::vector<int>& arrival, unsigned mask, bool circular) {
    int n = int(arrival.size());
    unsigned taken = 0;
    int o = 0, m = 0;
    for (int r = 0; r < n; ++r) {
        int s = arrival[size_t(r)];
        bool left_pref = (mask >> r) & 1u;
        int left, right;
        if (circular) {
            left = s == 0 ? n - 1 : s - 1;
            right = s;
        } else {
            left = s;
            right = s + 1;
        }
        int pref = left_pref ? left : right;
        int other = left_pref ? right : left;
        if (!(taken & (1u << pref))) taken |= 1u << pref;
        else if (!(taken & (1u << other))) { taken |= 1u << other; ++m; }
        else ++o;
    }
    int cls = 0;
    if (!circular && n > 0) {
        bool le = taken & 1u;
        bool re = (taken >> n) & 1u;
        cls = le ? (re ? 3 : 1) : (re ? 2 : 0);
    }
    return {o, m, cls};
}

inline void check_guard(int n, bool allow_large) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > 8 && !allow_large)
        throw std::invalid_argument("n > 8 needs an explicit override (2^n n! cases)");
    if (n > 20) throw std::invalid_argument("n too large to enumerate");
}

} // namespace detail

inline JointDistribution enumerate(int n, const Params& params, TableKind kind,
                                   bool allow_large = false) {
    detail::check_guard(n, allow_large);
    bool circular = kind == TableKind::Circular;
    if (circular && n < 1) throw std::invalid_argument("circular table needs n >= 1");

    // counts[o][m][neg][class]
    size_t dim = size_t(n) + 1;
    std::vector<uint64_t> counts(dim * dim * dim * 4, 0);
    auto at = [&](int o, int m, int neg, int cls) -> uint64_t& {
        return counts[((size_t(o) * dim + size_t(m)) * dim + size_t(neg)) * 4 + size_t(cls)];
    };

    std::vector<int> arrival(static_cast<size_t>(n));
    std::iota(arrival.begin(), arrival.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            auto out = detail::replay_fast(arrival, mask, circular);
            int neg = int(std::popcount(mask));
            ++at(out.o, out.m, neg, out.end_class);
        }
    } while (std::next_permutation(arrival.begin(), arrival.end()));

    JointDistribution dist;
    dist.n = n;
    dist.p = params.p;
    dist.kind = kind;
    Rational nfact = Rational(factorial(unsigned(n)));
    std::vector<Rational> ppow(dim), qpow(dim);
    for (int k = 0; k <= n; ++k) {
        ppow[size_t(k)] = pow_rational(params.p, unsigned(k));
        qpow[size_t(k)] = pow_rational(params.q, unsigned(k));
    }
    for (int o = 0; o <= n; ++o)
        for (int m = 0; m <= n; ++m)
            for (int neg = 0; neg <= n; ++neg)
                for (int cls = 0; cls < 4; ++cls) {
                    uint64_t c = at(o, m, neg, cls);
                    if (!c) continue;
                    Rational prob = Rational(c) * ppow[size_t(neg)] * qpow[size_t(n - neg)] / nfact;
                    dist.probs[{o, m}] += prob;
                    dist.class_cardinality[size_t(cls)] += c;
                    if (!circular)
                        dist.by_class[static_cast<EndClass>(cls)][{o, m}] += prob;
                }
    return dist;
}

struct Seat1Napkinless {
    Rational probability;
    uint64_t cardinality = 0; // |C_n^1|
};

inline Seat1Napkinless enumerate_napkinless_seat1(int n, const Params& params,
                                                  bool allow_large = false) {
    detail::check_guard(n, allow_large);
    if (n < 1) throw std::invalid_argument("circular table needs n >= 1");
    Seat1Napkinless result;
    result.probability = 0;
    Rational nfact = Rational(factorial(unsigned(n)));

    std::vector<int> arrival(static_cast<size_t>(n));
    std::iota(arrival.begin(), arrival.end(), 0);
    std::vector<uint64_t> by_neg(size_t(n) + 1, 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            // replay, tracking the status of seat 0 ("guest 1")
            unsigned taken = 0;
            bool seat1_napkinless = false;
            for (int r = 0; r < n; ++r) {
                int s = arrival[size_t(r)];
                bool left_pref = (mask >> r) & 1u;
                int left = s == 0 ? n - 1 : s - 1;
                int pref = left_pref ? left : s;
                int other = left_pref ? s : left;
                if (!(taken & (1u << pref))) taken |= 1u << pref;
                else if (!(taken & (1u << other))) taken |= 1u << other;
                else if (s == 0) seat1_napkinless = true;
            }
            if (seat1_napkinless) ++by_neg[size_t(std::popcount(mask))];
        }
    } while (std::next_permutation(arrival.begin(), arrival.end()));

    for (int neg = 0; neg <= n; ++neg) {
        uint64_t c = by_neg[size_t(neg)];
        if (!c) continue;
        result.cardinality += c;
        result.probability += Rational(c) * pow_rational(params.p, unsigned(neg)) *
                              pow_rational(params.q, unsigned(n - neg)) / nfact;
    }
    return result;
}

} // namespace napkin
