#pragma once

#include "napkin/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace napkin {

// A block of an (ordered or cyclic) bipartition. Elements are kept sorted
// ascending; the print order (descending for plain blocks, ascending for
// underlined ones) is derived from the underline flag.
struct Block {
    std::vector<int> elems; // sorted ascending
    bool underlined = false;

    Block() = default;
    Block(std::vector<int> e, bool u) : elems(std::move(e)), underlined(u) {
        std::sort(elems.begin(), elems.end());
    }

    int min() const { return elems.front(); }
    int max() const { return elems.back(); }
    size_t size() const { return elems.size(); }
    bool contains(int v) const {
        return std::binary_search(elems.begin(), elems.end(), v);
    }

    bool operator==(const Block& o) const {
        return underlined == o.underlined && elems == o.elems;
    }
    bool operator!=(const Block& o) const { return !(*this == o); }
};

struct OrderedBipartition {
    std::vector<Block> blocks;

    size_t element_count() const {
        size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        return n;
    }
    bool operator==(const OrderedBipartition& o) const { return blocks == o.blocks; }
    bool operator!=(const OrderedBipartition& o) const { return !(*this == o); }
};

// Blocks are stored in the canonical rotation: the block containing the
// distinguished element is last if it is not underlined, first if it is.
struct CyclicBipartition {
    std::vector<Block> blocks;
    int distinguished = 0;

    size_t element_count() const {
        size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        return n;
    }
    bool operator==(const CyclicBipartition& o) const {
        return distinguished == o.distinguished && blocks == o.blocks;
    }
    bool operator!=(const CyclicBipartition& o) const { return !(*this == o); }
};

struct BipartitionStats {
    int o = 0;
    int m = 0;
    int neg_count = 0;
    int pos_count = 0;
};

inline std::vector<int> ground_set(const OrderedBipartition& a) {
    std::vector<int> g;
    for (const auto& b : a.blocks) g.insert(g.end(), b.elems.begin(), b.elems.end());
    std::sort(g.begin(), g.end());
    return g;
}
inline std::vector<int> ground_set(const CyclicBipartition& c) {
    std::vector<int> g;
    for (const auto& b : c.blocks) g.insert(g.end(), b.elems.begin(), b.elems.end());
    std::sort(g.begin(), g.end());
    return g;
}

inline void validate_cover(const std::vector<Block>& blocks) {
    std::set<int> seen;
    size_t n = 0;
    for (const auto& b : blocks) {
        if (b.elems.empty()) throw std::invalid_argument("empty block");
        n += b.size();
        seen.insert(b.elems.begin(), b.elems.end());
    }
    if (seen.size() != n) throw std::invalid_argument("blocks are not disjoint");
}

namespace detail {

struct RawBlock {
    std::vector<int> elems;
    bool underlined;
    int start_pos; // leftmost position of the block in pi
};

// The straight-table encoding: repeatedly take the least unassigned entry;
// a positive seed opens an underlined block and absorbs the increasing run
// of negatives to its right, a negative seed absorbs the increasing run of
// positives to its left.
inline std::vector<RawBlock> encode_blocks(const SignedPermutation& pi, bool cyclic) {
    int n = int(pi.size());
    std::vector<int> pos_of(size_t(n) + 1);
    for (int i = 0; i < n; ++i) pos_of[size_t(std::abs(pi[size_t(i)]))] = i;
    std::vector<char> assigned(size_t(n), 0);
    std::vector<RawBlock> blocks;

    auto mag = [&](int j) { return std::abs(pi[size_t(j)]); };

    for (int v = 1; v <= n; ++v) {
        int i = pos_of[size_t(v)];
        if (assigned[size_t(i)]) continue;
        RawBlock blk;
        blk.elems.push_back(v);
        assigned[size_t(i)] = 1;
        if (pi[size_t(i)] > 0) {
            blk.underlined = true;
            blk.start_pos = i;
            int prev = i;
            int j = i + 1;
            if (cyclic) j %= n;
            while (j >= 0 && j < n && !assigned[size_t(j)] &&
                   mag(j) > mag(prev) && pi[size_t(j)] < 0) {
                blk.elems.push_back(mag(j));
                assigned[size_t(j)] = 1;
                prev = j;
                j = j + 1;
                if (cyclic) j %= n;
            }
        } else {
            blk.underlined = false;
            int prev = i;
            int j = i - 1;
            if (cyclic) j = (j + n) % n;
            while (j >= 0 && j < n && !assigned[size_t(j)] &&
                   mag(j) > mag(prev) && pi[size_t(j)] > 0) {
                blk.elems.push_back(mag(j));
                assigned[size_t(j)] = 1;
                prev = j;
                j = j - 1;
                if (cyclic) j = (j + n) % n;
            }
            blk.start_pos = prev; // leftmost absorbed position (may wrap)
        }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

} // namespace detail

inline OrderedBipartition encode_linear(const SignedPermutation& pi) {
    validate_permutation(pi);
    auto raw = detail::encode_blocks(pi, /*cyclic=*/false);
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.start_pos < b.start_pos; });
    OrderedBipartition alpha;
    for (auto& b : raw) alpha.blocks.emplace_back(std::move(b.elems), b.underlined);
    return alpha;
}

// Pattern characterization of the image of the straight-table encoding:
// an underlined block with maximum a may not be followed by a plain
// singleton {b} with a < b, and an underlined singleton {b} may not be
// followed by a plain block with maximum a < b.
inline bool is_valid_image(const OrderedBipartition& alpha) {
    validate_cover(alpha.blocks);
    for (size_t k = 0; k + 1 < alpha.blocks.size(); ++k) {
        const Block& x = alpha.blocks[k];
        const Block& y = alpha.blocks[k + 1];
        if (!x.underlined || y.underlined) continue;
        if (y.size() == 1 && y.max() > x.max()) return false;
        if (x.size() == 1 && x.max() > y.max()) return false;
    }
    return true;
}

namespace detail {

// Signed run of a single block: a plain block reads descending with a minus
// on its least element; an underlined block reads ascending with minus signs
// on all but its least element.
inline void append_run(const Block& b, SignedPermutation& pi) {
    if (b.underlined) {
        pi.push_back(b.elems.front());
        for (size_t i = 1; i < b.size(); ++i) pi.push_back(-b.elems[i]);
    } else {
        for (size_t i = b.size(); i-- > 1;) pi.push_back(b.elems[i]);
        pi.push_back(-b.elems.front());
    }
}

} // namespace detail

inline SignedPermutation decode_linear(const OrderedBipartition& alpha) {
    if (!is_valid_image(alpha))
        throw std::invalid_argument("bipartition contains a forbidden pattern");
    SignedPermutation pi;
    for (const auto& b : alpha.blocks) detail::append_run(b, pi);
    validate_permutation(pi);
    return pi;
}

inline BipartitionStats stats_from_bipartition(const OrderedBipartition& alpha) {
    BipartitionStats st;
    int n = int(alpha.element_count());
    int num_blocks = int(alpha.blocks.size());
    int und_elems = 0, und_blocks = 0;
    for (size_t k = 0; k < alpha.blocks.size(); ++k) {
        const Block& b = alpha.blocks[k];
        if (b.underlined) {
            und_elems += int(b.size());
            ++und_blocks;
        }
        if (k + 1 < alpha.blocks.size() && b.underlined && !alpha.blocks[k + 1].underlined)
            ++st.o;
    }
    int plain_blocks = num_blocks - und_blocks;
    st.m = n - num_blocks - st.o;
    st.neg_count = (und_elems - und_blocks) + plain_blocks;
    st.pos_count = n - st.neg_count;
    return st;
}

inline CyclicBipartition encode_circular(const SignedPermutation& pi) {
    int n = int(pi.size());
    if (n < 1) throw std::invalid_argument("circular table needs at least one guest");
    validate_permutation(pi);
    auto raw = detail::encode_blocks(pi, /*cyclic=*/true);

    // Walk seats clockwise from the seat after the distinguished block's arc
    // end to recover the cyclic block order.
    std::vector<int> block_of(static_cast<size_t>(n));
    for (size_t k = 0; k < raw.size(); ++k)
        for (int v : raw[k].elems) {
            // find the position of v
            for (int s = 0; s < n; ++s)
                if (std::abs(pi[size_t(s)]) == v) block_of[size_t(s)] = int(k);
        }

    CyclicBipartition c;
    c.distinguished = std::abs(pi[0]);
    int dblk = block_of[0];
    // arc end of the distinguished block: last seat (clockwise) in the block
    int e = 0;
    while (block_of[size_t((e + 1) % n)] == dblk && ((e + 1) % n) != 0) ++e;
    if (raw.size() == 1) {
        c.blocks.emplace_back(std::move(raw[0].elems), raw[0].underlined);
        return c;
    }
    std::vector<int> order;
    for (int step = 1; step <= n; ++step) {
        int s = (e + step) % n;
        int k = block_of[size_t(s)];
        if (k == dblk) break;
        if (order.empty() || order.back() != k) order.push_back(k);
    }
    if (raw[size_t(dblk)].underlined) {
        c.blocks.emplace_back(std::move(raw[size_t(dblk)].elems), true);
        for (int k : order) c.blocks.emplace_back(std::move(raw[size_t(k)].elems), raw[size_t(k)].underlined);
    } else {
        for (int k : order) c.blocks.emplace_back(std::move(raw[size_t(k)].elems), raw[size_t(k)].underlined);
        c.blocks.emplace_back(std::move(raw[size_t(dblk)].elems), false);
    }
    return c;
}

inline SignedPermutation decode_circular(const CyclicBipartition& c) {
    validate_cover(c.blocks);
    SignedPermutation word;
    for (const auto& b : c.blocks) detail::append_run(b, word);
    size_t at = 0;
    while (at < word.size() && std::abs(word[at]) != c.distinguished) ++at;
    if (at == word.size())
        throw std::invalid_argument("distinguished element missing");
    SignedPermutation pi(word.begin() + long(at), word.end());
    pi.insert(pi.end(), word.begin(), word.begin() + long(at));
    validate_permutation(pi);
    if (encode_circular(pi) != c)
        throw std::invalid_argument("cyclic bipartition is not in the image of the encoding");
    return pi;
}

struct MarkedBipartition {
    OrderedBipartition alpha;
    int marked = 0;
};

// Split a marked ordered bipartition into a (cyclic, ordered) pair: after the
// marked block when it is plain, before it when it is underlined. Weights
// multiply across the split.
inline std::pair<CyclicBipartition, OrderedBipartition>
split_marked(const OrderedBipartition& alpha, int marked) {
    size_t k = 0;
    while (k < alpha.blocks.size() && !alpha.blocks[k].contains(marked)) ++k;
    if (k == alpha.blocks.size())
        throw std::invalid_argument("marked element not in the bipartition");
    CyclicBipartition c;
    OrderedBipartition s;
    c.distinguished = marked;
    if (!alpha.blocks[k].underlined) {
        c.blocks.assign(alpha.blocks.begin(), alpha.blocks.begin() + long(k) + 1);
        s.blocks.assign(alpha.blocks.begin() + long(k) + 1, alpha.blocks.end());
    } else {
        c.blocks.assign(alpha.blocks.begin() + long(k), alpha.blocks.end());
        s.blocks.assign(alpha.blocks.begin(), alpha.blocks.begin() + long(k));
    }
    return {c, s};
}

// Inverse of split_marked; c and s must have disjoint ground sets.
inline MarkedBipartition join_pair(const CyclicBipartition& c, const OrderedBipartition& s) {
    MarkedBipartition out;
    out.marked = c.distinguished;
    bool und = false;
    for (const auto& b : c.blocks)
        if (b.contains(c.distinguished)) und = b.underlined;
    if (und) {
        out.alpha.blocks = s.blocks;
        out.alpha.blocks.insert(out.alpha.blocks.end(), c.blocks.begin(), c.blocks.end());
    } else {
        out.alpha.blocks = c.blocks;
        out.alpha.blocks.insert(out.alpha.blocks.end(), s.blocks.begin(), s.blocks.end());
    }
    validate_cover(out.alpha.blocks);
    return out;
}

// Replace the k-th smallest element with labels[k] everywhere.
template <typename Bip>
inline Bip relabel(const Bip& b, const std::vector<int>& labels) {
    std::vector<int> g = ground_set(b);
    if (g.size() != labels.size()) throw std::invalid_argument("label count mismatch");
    Bip out = b;
    for (auto& blk : out.blocks) {
        for (auto& v : blk.elems) {
            size_t idx = size_t(std::lower_bound(g.begin(), g.end(), v) - g.begin());
            v = labels[idx];
        }
        std::sort(blk.elems.begin(), blk.elems.end());
    }
    if constexpr (requires { out.distinguished; }) {
        size_t idx = size_t(std::lower_bound(g.begin(), g.end(), out.distinguished) - g.begin());
        out.distinguished = labels[idx];
    }
    return out;
}

// The end-of-table bijection: an N-shaped image bipartition (leftmost block
// underlined, rightmost plain) maps to the cyclic bipartition whose
// distinguished guest is the leftmost napkinless one.
inline CyclicBipartition napkinless_rotation(const OrderedBipartition& alpha) {
    if (alpha.blocks.size() < 2 || !alpha.blocks.front().underlined ||
        alpha.blocks.back().underlined)
        throw std::invalid_argument("bipartition is not N-shaped");
    size_t k = 0;
    while (!(alpha.blocks[k].underlined && !alpha.blocks[k + 1].underlined)) ++k;
    // leftmost napkinless guest: the first (maximal) element of the plain
    // block after the first underlined->plain junction
    CyclicBipartition c;
    c.distinguished = alpha.blocks[k + 1].max();
    c.blocks.assign(alpha.blocks.begin() + long(k) + 2, alpha.blocks.end());
    c.blocks.insert(c.blocks.end(), alpha.blocks.begin(), alpha.blocks.begin() + long(k) + 2);
    return c;
}

inline OrderedBipartition napkinless_rotation_inverse(const CyclicBipartition& c) {
    size_t nb = c.blocks.size();
    for (size_t r = 0; r < nb; ++r) {
        OrderedBipartition cand;
        for (size_t k = 0; k < nb; ++k) cand.blocks.push_back(c.blocks[(r + k) % nb]);
        if (!cand.blocks.front().underlined || cand.blocks.back().underlined) continue;
        size_t k = 0;
        while (k + 1 < nb && !(cand.blocks[k].underlined && !cand.blocks[k + 1].underlined)) ++k;
        if (k + 1 < nb && cand.blocks[k + 1].max() == c.distinguished) return cand;
    }
    throw std::invalid_argument("no valid rotation; input not in the image of the bijection");
}

// ---- text format -----------------------------------------------------------
// Blocks print as brace-delimited comma lists, underline as a leading "u",
// the distinguished element in parentheses: "u{5,6,(7)} u{1,3} {4,2}".

namespace detail {

inline std::string format_block(const Block& b, int distinguished) {
    std::string s = b.underlined ? "u{" : "{";
    std::vector<int> order = b.elems;
    if (!b.underlined) std::reverse(order.begin(), order.end());
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) s += ',';
        if (order[i] == distinguished)
            s += "(" + std::to_string(order[i]) + ")";
        else
            s += std::to_string(order[i]);
    }
    s += '}';
    return s;
}

struct ParsedBlocks {
    std::vector<Block> blocks;
    int distinguished = 0; // 0 if none
};

inline ParsedBlocks parse_blocks(const std::string& text) {
    ParsedBlocks out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        bool und = false;
        if (text[i] == 'u') {
            und = true;
            ++i;
        }
        if (i >= text.size() || text[i] != '{')
            throw std::invalid_argument("expected '{' in bipartition text");
        ++i;
        std::vector<int> elems;
        while (true) {
            skip_ws();
            bool paren = i < text.size() && text[i] == '(';
            if (paren) ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("expected element in block");
            int v = std::stoi(text.substr(i, j - i));
            i = j;
            if (paren) {
                if (i >= text.size() || text[i] != ')')
                    throw std::invalid_argument("unclosed '('");
                ++i;
                if (out.distinguished != 0)
                    throw std::invalid_argument("more than one distinguished element");
                out.distinguished = v;
            }
            elems.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != '}')
            throw std::invalid_argument("expected '}' in bipartition text");
        ++i;
        out.blocks.emplace_back(std::move(elems), und);
        skip_ws();
    }
    return out;
}

} // namespace detail

inline std::string format_bipartition(const OrderedBipartition& alpha) {
    std::string s;
    for (size_t k = 0; k < alpha.blocks.size(); ++k) {
        if (k) s += ' ';
        s += detail::format_block(alpha.blocks[k], 0);
    }
    return s;
}

inline std::string format_bipartition(const CyclicBipartition& c) {
    std::string s;
    for (size_t k = 0; k < c.blocks.size(); ++k) {
        if (k) s += ' ';
        s += detail::format_block(c.blocks[k], c.distinguished);
    }
    return s;
}

inline OrderedBipartition parse_ordered_bipartition(const std::string& text) {
    auto parsed = detail::parse_blocks(text);
    if (parsed.distinguished != 0)
        throw std::invalid_argument("ordered bipartition may not mark an element");
    OrderedBipartition alpha;
    alpha.blocks = std::move(parsed.blocks);
    validate_cover(alpha.blocks);
    return alpha;
}

inline CyclicBipartition parse_cyclic_bipartition(const std::string& text) {
    auto parsed = detail::parse_blocks(text);
    if (parsed.distinguished == 0)
        throw std::invalid_argument("cyclic bipartition needs a distinguished element");
    CyclicBipartition c;
    c.blocks = std::move(parsed.blocks);
    c.distinguished = parsed.distinguished;
    validate_cover(c.blocks);
    return c;
}

} // namespace napkin
