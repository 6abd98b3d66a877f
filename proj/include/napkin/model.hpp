#pragma once

#include "napkin/rational.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace napkin {

struct Params {
    Rational p;
    Rational q; // always 1 - p

    explicit Params(const Rational& left_prob) : p(left_prob), q(1 - left_prob) {
        if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
    }

    Params swapped() const { return Params(q); }
};

// Entry at seat i (0-based here, 1-based in the text format) has magnitude
// equal to the arrival rank of that seat's guest; a negative sign means the
// guest prefers the left napkin.
using SignedPermutation = std::vector<int>;

enum class SeatStatus { Happy, Frustrated, Napkinless };
enum class EndClass { N, L, R, B };
enum class TableKind { Circular, Linear };

inline char end_class_char(EndClass c) {
    switch (c) {
        case EndClass::N: return 'N';
        case EndClass::L: return 'L';
        case EndClass::R: return 'R';
        case EndClass::B: return 'B';
    }
    return '?';
}

struct TableOutcome {
    std::vector<SeatStatus> status; // per seat
    int o = 0;                      // napkinless count
    int m = 0;                      // frustrated count
    int neg_count = 0;
    int pos_count = 0;
    int napkins_left = 0;
    EndClass end_class = EndClass::N; // meaningful for linear tables only

    int happy_count() const { return int(status.size()) - o - m; }
};

// p^neg * q^pos * x^o * y^m as a single monomial.
struct Weight {
    Rational coeff;
    int xdeg = 0;
    int ydeg = 0;
};

inline void validate_permutation(const SignedPermutation& pi) {
    int n = int(pi.size());
    std::vector<char> seen(size_t(n) + 1, 0);
    for (int e : pi) {
        int v = std::abs(e);
        if (v < 1 || v > n || seen[size_t(v)])
            throw std::invalid_argument("entries must be a signed permutation of 1..n");
        seen[size_t(v)] = 1;
    }
}

namespace detail {

inline std::vector<int> seats_by_rank(const SignedPermutation& pi) {
    int n = int(pi.size());
    std::vector<int> seat(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) seat[size_t(std::abs(pi[size_t(s)])) - 1] = s;
    return seat;
}

} // namespace detail

// Circular table: napkin i lies between seat i and seat i+1 (mod n);
// seat i's left napkin is i-1, its right napkin is i.
inline TableOutcome replay_circular(const SignedPermutation& pi) {
    int n = int(pi.size());
    if (n < 1) throw std::invalid_argument("circular table needs at least one guest");
    validate_permutation(pi);

    TableOutcome out;
    out.status.assign(size_t(n), SeatStatus::Happy);
    std::vector<char> taken(size_t(n), 0);
    for (int s : detail::seats_by_rank(pi)) {
        bool left_pref = pi[size_t(s)] < 0;
        if (left_pref) ++out.neg_count; else ++out.pos_count;
        int left = (s + n - 1) % n;
        int right = s;
        int pref = left_pref ? left : right;
        int other = left_pref ? right : left;
        if (!taken[size_t(pref)]) {
            taken[size_t(pref)] = 1;
        } else if (!taken[size_t(other)]) {
            taken[size_t(other)] = 1;
            out.status[size_t(s)] = SeatStatus::Frustrated;
            ++out.m;
        } else {
            out.status[size_t(s)] = SeatStatus::Napkinless;
            ++out.o;
        }
    }
    for (char t : taken) out.napkins_left += !t;
    return out;
}

// Linear table: napkins 0..n, seat i's left napkin is i-1, right napkin is i
// (1-based seats). end_class records which end napkins were taken.
inline TableOutcome replay_linear(const SignedPermutation& pi) {
    int n = int(pi.size());
    validate_permutation(pi);

    TableOutcome out;
    out.status.assign(size_t(n), SeatStatus::Happy);
    std::vector<char> taken(size_t(n) + 1, 0);
    for (int s : detail::seats_by_rank(pi)) {
        bool left_pref = pi[size_t(s)] < 0;
        if (left_pref) ++out.neg_count; else ++out.pos_count;
        int left = s;
        int right = s + 1;
        int pref = left_pref ? left : right;
        int other = left_pref ? right : left;
        if (!taken[size_t(pref)]) {
            taken[size_t(pref)] = 1;
        } else if (!taken[size_t(other)]) {
            taken[size_t(other)] = 1;
            out.status[size_t(s)] = SeatStatus::Frustrated;
            ++out.m;
        } else {
            out.status[size_t(s)] = SeatStatus::Napkinless;
            ++out.o;
        }
    }
    for (char t : taken) out.napkins_left += !t;
    bool left_end = n > 0 && taken[0];
    bool right_end = n > 0 && taken[size_t(n)];
    out.end_class = left_end ? (right_end ? EndClass::B : EndClass::L)
                             : (right_end ? EndClass::R : EndClass::N);
    return out;
}

inline TableOutcome replay(const SignedPermutation& pi, TableKind kind) {
    return kind == TableKind::Circular ? replay_circular(pi) : replay_linear(pi);
}

inline Weight weight_of(const SignedPermutation& pi, const Params& params, TableKind kind) {
    TableOutcome out = replay(pi, kind);
    Weight w;
    w.coeff = pow_rational(params.p, unsigned(out.neg_count)) *
              pow_rational(params.q, unsigned(out.pos_count));
    w.xdeg = out.o;
    w.ydeg = out.m;
    return w;
}

// Text format: comma-separated signed integers, e.g. "2,-3,4,-1".
inline SignedPermutation parse_permutation(const std::string& s) {
    SignedPermutation pi;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size() || v == 0)
            throw std::invalid_argument("bad permutation entry '" + tok + "'");
        pi.push_back(v);
    }
    validate_permutation(pi);
    return pi;
}

inline std::string format_permutation(const SignedPermutation& pi) {
    std::string s;
    for (size_t i = 0; i < pi.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pi[i]);
    }
    return s;
}

} // namespace napkin
