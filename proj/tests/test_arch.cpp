#include <doctest.h>

#include <set>
#include <stdexcept>

#include "meandric/arch.hpp"
#include "oracles.hpp"

using namespace meandric;

TEST_CASE("planarity matches the pairwise interleaving oracle") {
    for (int n = 1; n <= 6; ++n) {
        testing::for_each_permutation(n, [&](const Permutation& rho) {
            CHECK(is_planar(rho) == testing::is_planar_naive(rho));
        });
    }
}

TEST_CASE("planarity basics") {
    for (int n = 1; n <= 8; ++n) CHECK(is_planar(Permutation::identity(n)));

    // The unique non-planar element of S_3.
    CHECK_FALSE(is_planar(Permutation({3, 1, 2})));
    int non_planar = 0;
    testing::for_each_permutation(3, [&](const Permutation& rho) {
        if (!is_planar(rho)) ++non_planar;
    });
    CHECK(non_planar == 1);
}

TEST_CASE("planar census is Catalan") {
    const std::vector<long> expected = {1, 2, 5, 14, 42, 132};  // n = 1..6
    for (int n = 1; n <= 6; ++n) {
        long count = 0;
        testing::for_each_permutation(n, [&](const Permutation& rho) {
            if (is_planar(rho)) ++count;
        });
        CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(planar_count_u64(n) == static_cast<std::uint64_t>(count));
    }
    CHECK(planar_count_u64(10) == 16796);
}

TEST_CASE("arch configuration pairs every position exactly once") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation rho = testing::random_permutation(7, rng);
        const ArchConfiguration arch = arch_of(rho);
        REQUIRE(arch.partner.size() == 14);
        for (int p = 1; p <= 14; ++p) {
            const int q = arch.partner[static_cast<std::size_t>(p - 1)];
            CHECK(q != p);
            CHECK(arch.partner[static_cast<std::size_t>(q - 1)] == p);
        }
    }
}

TEST_CASE("Dyck profiles of small configurations") {
    CHECK(to_dyck(Permutation::identity(1)).heights() == std::vector<int>{1});
    CHECK(to_dyck(Permutation::identity(2)).heights() == std::vector<int>{1, 0, 1});
    CHECK(to_dyck(Permutation({2, 1})).heights() == std::vector<int>{1, 2, 1});

    CHECK(from_dyck(DyckPath({1})) == Permutation::identity(1));
    CHECK(from_dyck(DyckPath({1, 0, 1})) == Permutation::identity(2));
    CHECK(from_dyck(DyckPath({1, 2, 1})) == Permutation({2, 1}));

    CHECK_THROWS_AS(to_dyck(Permutation({3, 1, 2})), std::invalid_argument);
}

TEST_CASE("Dyck profile validation") {
    CHECK_THROWS_AS(DyckPath({}), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath({1, 0}), std::invalid_argument);       // even length
    CHECK_THROWS_AS(DyckPath({2}), std::invalid_argument);          // bad start
    CHECK_THROWS_AS(DyckPath({1, 2, 0}), std::invalid_argument);    // jump by 2
    CHECK_THROWS_AS(DyckPath({1, 0, -1}), std::invalid_argument);   // negative
    CHECK_THROWS_AS(DyckPath({1, 2, 3}), std::invalid_argument);    // nonzero end
}

TEST_CASE("to_dyck and from_dyck are mutually inverse on all planar rho") {
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t seen = 0;
        for_each_planar(n, [&](const std::vector<int>& images) {
            const Permutation rho(images);
            ++seen;
            const DyckPath d = to_dyck(rho);
            CHECK(from_dyck(d) == rho);
            CHECK(to_dyck(from_dyck(d)) == d);
        });
        CHECK(seen == planar_count_u64(n));
    }
}

TEST_CASE("enumeration emits exactly the planar permutations, no duplicates") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> emitted;
        for_each_planar(n, [&](const std::vector<int>& images) {
            CHECK(is_planar(Permutation(images)));
            CHECK(emitted.insert(images).second);
        });
        std::set<std::vector<int>> filtered;
        testing::for_each_permutation(n, [&](const Permutation& rho) {
            if (is_planar(rho)) filtered.insert(rho.images());
        });
        CHECK(emitted == filtered);
    }
}

TEST_CASE("enumeration splits into independent sub-ranges") {
    const int n = 7;
    const std::uint64_t total = planar_count_u64(n);
    std::vector<std::vector<int>> whole;
    for_each_planar(n, [&](const std::vector<int>& images) { whole.push_back(images); });

    for (const int pieces : {2, 3, 5}) {
        std::vector<std::vector<int>> stitched;
        for (int w = 0; w < pieces; ++w) {
            const std::uint64_t lo = total * w / pieces;
            const std::uint64_t hi = total * (w + 1) / pieces;
            for_each_planar(n, lo, hi,
                            [&](const std::vector<int>& images) { stitched.push_back(images); });
        }
        CHECK(stitched == whole);
    }

    for (std::uint64_t i = 0; i < total; i += 37)
        CHECK(planar_at(n, i).images() == whole[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(planar_at(n, total), std::out_of_range);
}

TEST_CASE("planarity is invariant under reversing the line") {
    // Reversing position p to 2n+1-p swaps vertex colors; the reversed
    // configuration is that of r o rho^{-1} o r with r(i) = n+1-i. Checked
    // against the interleaving oracle on explicitly reversed arcs.
    for (int n = 1; n <= 6; ++n) {
        testing::for_each_permutation(n, [&](const Permutation& rho) {
            auto arcs = testing::arcs_of(rho);
            for (auto& [a, b] : arcs) {
                const int ra = 2 * n + 1 - b;
                const int rb = 2 * n + 1 - a;
                a = ra;
                b = rb;
            }
            CHECK(is_planar(rho) == testing::crossing_free(arcs));

            std::vector<int> reversed(static_cast<std::size_t>(n));
            const Permutation inv = inverse(rho);
            for (int i = 1; i <= n; ++i)
                reversed[static_cast<std::size_t>(i - 1)] = n + 1 - inv(n + 1 - i);
            CHECK(is_planar(rho) == is_planar(Permutation(reversed)));
        });
    }
}
