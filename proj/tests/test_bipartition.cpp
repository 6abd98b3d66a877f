#include "napkin/bipartition.hpp"

#include "helpers.hpp"
#include "napkin/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

using namespace napkin;
using napkin::testing::for_each_signed_permutation;
using napkin::testing::random_signed_permutation;

TEST_CASE("straight-table encoding of a worked example") {
    SignedPermutation pi = parse_permutation("9,1,-3,2,5,6,-4,-7,8");
    OrderedBipartition alpha = encode_linear(pi);
    CHECK(format_bipartition(alpha) == "u{9} u{1,3} u{2} u{5} {6,4} {7} u{8}");
    CHECK(decode_linear(alpha) == pi);

    BipartitionStats st = stats_from_bipartition(alpha);
    TableOutcome out = replay_linear(pi);
    CHECK(st.o == out.o);
    CHECK(st.m == out.m);
    CHECK(st.neg_count == out.neg_count);
}

TEST_CASE("circular-table encoding of a worked example") {
    SignedPermutation pi = parse_permutation("-7,1,-3,4,-2,5,-6");
    CyclicBipartition c = encode_circular(pi);
    CHECK(format_bipartition(c) == "u{5,6,(7)} u{1,3} {4,2}");
    CHECK(decode_circular(c) == pi);
}

TEST_CASE("one-element tables") {
    CHECK(format_bipartition(encode_linear({-1})) == "{1}");
    CHECK(format_bipartition(encode_linear({1})) == "u{1}");
    CHECK(format_bipartition(encode_circular({-1})) == "{(1)}");
    CHECK(format_bipartition(encode_circular({1})) == "u{(1)}");
    CHECK(decode_circular(parse_cyclic_bipartition("{(1)}")) == SignedPermutation{-1});
    CHECK(decode_circular(parse_cyclic_bipartition("u{(1)}")) == SignedPermutation{1});
}

TEST_CASE("encode/decode roundtrip, exhaustive") {
    for (int n = 1; n <= 6; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            REQUIRE(decode_linear(encode_linear(pi)) == pi);
            REQUIRE(decode_circular(encode_circular(pi)) == pi);
        });
    }
}

TEST_CASE("encode/decode roundtrip, randomized larger tables") {
    std::mt19937 rng(20240817);
    for (int n = 7; n <= 12; ++n) {
        for (int rep = 0; rep < 200; ++rep) {
            SignedPermutation pi = random_signed_permutation(n, rng);
            REQUIRE(decode_linear(encode_linear(pi)) == pi);
            REQUIRE(decode_circular(encode_circular(pi)) == pi);
        }
    }
}

namespace {

// All ordered bipartitions of 1..n: ordered set partitions times underline
// flags, deduplicated through the text form.
std::vector<OrderedBipartition> all_ordered_bipartitions(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> seen;
    std::vector<OrderedBipartition> out;
    do {
        for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
            std::vector<std::vector<int>> groups(1);
            for (int i = 0; i < n; ++i) {
                groups.back().push_back(perm[size_t(i)]);
                if (i + 1 < n && ((cuts >> i) & 1u)) groups.emplace_back();
            }
            for (unsigned flags = 0; flags < (1u << groups.size()); ++flags) {
                OrderedBipartition alpha;
                for (size_t k = 0; k < groups.size(); ++k)
                    alpha.blocks.emplace_back(groups[k], (flags >> k) & 1u);
                std::string key = format_bipartition(alpha);
                if (seen.insert(key).second) out.push_back(std::move(alpha));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST_CASE("pattern predicate characterizes the encoding's image") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> image;
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            image.insert(format_bipartition(encode_linear(pi)));
        });
        // the encoding is injective
        uint64_t count = uint64_t(1) << n;
        for (int k = 2; k <= n; ++k) count *= uint64_t(k);
        REQUIRE(image.size() == count);

        for (const OrderedBipartition& alpha : all_ordered_bipartitions(n)) {
            bool in_image = image.count(format_bipartition(alpha)) > 0;
            REQUIRE(is_valid_image(alpha) == in_image);
            if (!in_image)
                REQUIRE_THROWS_AS(decode_linear(alpha), std::invalid_argument);
        }
    }
}

TEST_CASE("statistic dictionary matches replay, exhaustive") {
    for (int n = 1; n <= 6; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            OrderedBipartition alpha = encode_linear(pi);
            BipartitionStats st = stats_from_bipartition(alpha);
            TableOutcome out = replay_linear(pi);
            REQUIRE(st.o == out.o);
            REQUIRE(st.m == out.m);
            REQUIRE(st.neg_count == out.neg_count);
            REQUIRE(st.pos_count == out.pos_count);

            // end napkins are read off the outer blocks
            bool left_taken = !alpha.blocks.front().underlined;
            bool right_taken = alpha.blocks.back().underlined;
            EndClass want = left_taken ? (right_taken ? EndClass::B : EndClass::L)
                                       : (right_taken ? EndClass::R : EndClass::N);
            REQUIRE(out.end_class == want);
        });
    }
}

TEST_CASE("split at a marked element and join back") {
    for (int n = 1; n <= 4; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            OrderedBipartition alpha = encode_linear(pi);
            for (int v = 1; v <= n; ++v) {
                auto [c, s] = split_marked(alpha, v);
                REQUIRE(c.distinguished == v);
                MarkedBipartition back = join_pair(c, s);
                REQUIRE(back.marked == v);
                REQUIRE(back.alpha == alpha);
            }
        });
    }
}

TEST_CASE("relabeling keeps block shapes") {
    OrderedBipartition alpha = parse_ordered_bipartition("u{1,3} {4,2}");
    OrderedBipartition r = relabel(alpha, {5, 6, 8, 9});
    CHECK(format_bipartition(r) == "u{5,8} {9,6}");
    CyclicBipartition c = parse_cyclic_bipartition("u{5,6,(7)} u{1,3} {4,2}");
    CyclicBipartition rc = relabel(c, std::vector<int>{2, 4, 6, 8, 10, 12, 14});
    CHECK(rc.distinguished == 14);
    CHECK(format_bipartition(rc) == "u{10,12,(14)} u{2,6} {8,4}");
}

TEST_CASE("rotation at the leftmost napkinless guest, worked example") {
    OrderedBipartition alpha = parse_ordered_bipartition("u{8} {9,6,1} {2} u{3,5} {7,4}");
    CyclicBipartition c = napkinless_rotation(alpha);
    CHECK(format_bipartition(c) == "{2} u{3,5} {7,4} u{8} {(9),6,1}");
    CHECK(napkinless_rotation_inverse(c) == alpha);
}

TEST_CASE("rotation map is a bijection onto seat-1-napkinless tables") {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> targets;
        uint64_t n_class = 0;
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (replay_linear(pi).end_class != EndClass::N) return;
            ++n_class;
            OrderedBipartition alpha = encode_linear(pi);
            CyclicBipartition c = napkinless_rotation(alpha);
            REQUIRE(napkinless_rotation_inverse(c) == alpha);
            REQUIRE(targets.insert(format_bipartition(c)).second);
        });
        Seat1Napkinless seat1 = enumerate_napkinless_seat1(n, Params(Rational(1, 2)));
        REQUIRE(targets.size() == n_class);
        REQUIRE(n_class == seat1.cardinality);
    }
}

TEST_CASE("bipartition text format roundtrip") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        SignedPermutation pi = random_signed_permutation(9, rng);
        OrderedBipartition alpha = encode_linear(pi);
        CHECK(parse_ordered_bipartition(format_bipartition(alpha)) == alpha);
        CyclicBipartition c = encode_circular(pi);
        CHECK(parse_cyclic_bipartition(format_bipartition(c)) == c);
    }
    CHECK_THROWS_AS(parse_ordered_bipartition("u{1,(2)}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclic_bipartition("u{1,2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordered_bipartition("{1,1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordered_bipartition("{1"), std::invalid_argument);
}
