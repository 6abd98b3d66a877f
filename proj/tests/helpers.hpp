#pragma once

#include "napkin/model.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace napkin::testing {

// Visits all 2^n n! signed permutations of 1..n.
template <typename F>
void for_each_signed_permutation(int n, F f) {
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPermutation pi = base;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) pi[size_t(i)] = -pi[size_t(i)];
            f(pi);
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

inline SignedPermutation random_signed_permutation(int n, std::mt19937& rng) {
    SignedPermutation pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    for (auto& e : pi)
        if (rng() & 1u) e = -e;
    return pi;
}

} // namespace napkin::testing
