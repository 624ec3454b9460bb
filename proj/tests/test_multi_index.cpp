#include <doctest.h>

#include "dfc/multi_index.hpp"
#include "oracles.hpp"

using dfc::MultiIndex;

TEST_CASE("multi-index construction validates its invariants") {
    CHECK_NOTHROW(MultiIndex(4, {1, 3, 4}));
    CHECK_THROWS_AS(MultiIndex(4, {3, 1}), dfc::InvalidIndex);
    CHECK_THROWS_AS(MultiIndex(4, {1, 1}), dfc::InvalidIndex);
    CHECK_THROWS_AS(MultiIndex(4, {0, 2}), dfc::InvalidIndex);
    CHECK_THROWS_AS(MultiIndex(4, {2, 5}), dfc::InvalidIndex);
    CHECK_THROWS_AS(MultiIndex(11, {1}), dfc::DimensionExceeded);
}

TEST_CASE("complement returns the increasing complement with its sign") {
    SUBCASE("identity permutation") {
        auto [comp, sign] = dfc::complement(MultiIndex(4, {1, 2}));
        CHECK(comp.indices() == std::vector<int>{3, 4});
        CHECK(sign == 1);
    }
    SUBCASE("sign from the inversion count of (2,3,1,4)") {
        auto [comp, sign] = dfc::complement(MultiIndex(4, {2, 3}));
        CHECK(comp.indices() == std::vector<int>{1, 4});
        CHECK(sign == oracles::permutation_sign({2, 3, 1, 4}));
        CHECK(sign == 1);
    }
    SUBCASE("empty prefix") {
        auto [comp, sign] = dfc::complement(MultiIndex(3));
        CHECK(comp.indices() == std::vector<int>{1, 2, 3});
        CHECK(sign == 1);
    }
}

TEST_CASE("complement signs match brute-force permutation signs everywhere") {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint16_t mask = 0; mask < (1u << n); ++mask) {
            const MultiIndex index = MultiIndex::from_mask(n, mask);
            auto [comp, sign] = dfc::complement(index);

            std::vector<int> concat = index.indices();
            concat.insert(concat.end(), comp.indices().begin(), comp.indices().end());
            CHECK(sign == oracles::permutation_sign(concat));

            // Involution: complementing twice returns the original index, and
            // the two signs multiply to the sign of swapping the two blocks.
            auto [back, sign_back] = dfc::complement(comp);
            CHECK(back == index);
            const int k = index.size();
            const int swap_sign = ((k * (n - k)) % 2 == 0) ? 1 : -1;
            CHECK(sign * sign_back == swap_sign);
        }
    }
}

TEST_CASE("shuffles enumerate all splits with signs") {
    SUBCASE("the two splits of (1,2)") {
        const auto splits = dfc::shuffles(MultiIndex(4, {1, 2}), 1);
        REQUIRE(splits.size() == 2);
        CHECK(splits[0].left.indices() == std::vector<int>{1});
        CHECK(splits[0].right.indices() == std::vector<int>{2});
        CHECK(splits[0].sign == 1);
        CHECK(splits[1].left.indices() == std::vector<int>{2});
        CHECK(splits[1].right.indices() == std::vector<int>{1});
        CHECK(splits[1].sign == -1);
    }
    SUBCASE("empty and full splits") {
        const auto empty = dfc::shuffles(MultiIndex(3, {1, 2, 3}), 0);
        REQUIRE(empty.size() == 1);
        CHECK(empty[0].left.empty());
        CHECK(empty[0].sign == 1);
        const auto full = dfc::shuffles(MultiIndex(3, {1, 2, 3}), 3);
        REQUIRE(full.size() == 1);
        CHECK(full[0].right.empty());
        CHECK(full[0].sign == 1);
    }
    SUBCASE("count, reassembly, and lexicographic order") {
        const MultiIndex index(6, {1, 3, 4, 6});
        for (int k = 0; k <= index.size(); ++k) {
            const auto splits = dfc::shuffles(index, k);
            CHECK(static_cast<std::int64_t>(splits.size()) == dfc::binomial(index.size(), k));
            std::vector<int> previous;
            bool first = true;
            for (const auto& s : splits) {
                std::vector<int> concat = s.left.indices();
                concat.insert(concat.end(), s.right.indices().begin(), s.right.indices().end());
                CHECK(s.sign == oracles::permutation_sign(concat));
                if (!first) CHECK(previous < s.left.indices());
                previous = s.left.indices();
                first = false;
            }
        }
    }
    SUBCASE("split size out of range") {
        CHECK_THROWS_AS(dfc::shuffles(MultiIndex(3, {1, 2}), 3), dfc::InvalidSplit);
        CHECK_THROWS_AS(dfc::shuffles(MultiIndex(3, {1, 2}), -1), dfc::InvalidSplit);
    }
}

TEST_CASE("index basis enumerations are lexicographic and invertible") {
    const dfc::IndexBasis& basis = dfc::index_basis(4, 2);
    REQUIRE(basis.count() == 6);
    CHECK(MultiIndex::from_mask(4, basis.masks[0]).indices() == std::vector<int>{1, 2});
    CHECK(MultiIndex::from_mask(4, basis.masks[1]).indices() == std::vector<int>{1, 3});
    CHECK(MultiIndex::from_mask(4, basis.masks[2]).indices() == std::vector<int>{1, 4});
    CHECK(MultiIndex::from_mask(4, basis.masks[3]).indices() == std::vector<int>{2, 3});
    for (int r = 0; r < basis.count(); ++r) CHECK(basis.rank_of(basis.masks[size_t(r)]) == r);
}
