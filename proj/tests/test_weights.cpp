#include <doctest.h>

#include "weylcalc/weights.hpp"

using namespace weylcalc;

namespace {

Weight w(std::map<int, long long> entries) {
    return Weight(std::move(entries));
}

OrbitSignature sig(std::map<long long, long long> mult) {
    return OrbitSignature(std::move(mult));
}

}  // namespace

TEST_CASE("canonicalize counts multiplicities of nonzero values") {
    CHECK(canonicalize(w({{0, 2}, {1, 1}})) == sig({{2, 1}, {1, 1}}));
    CHECK(canonicalize(Weight{}) == OrbitSignature{});
    CHECK(canonicalize(w({{5, -1}, {9, -1}})) == sig({{-1, 2}}));
}

TEST_CASE("orbit equality is signature equality") {
    CHECK(orbit_equal(w({{0, 2}, {1, 1}}), w({{7, 1}, {3, 2}})));
    CHECK_FALSE(orbit_equal(w({{0, 1}}), w({{0, -1}})));
    CHECK(orbit_equal(w({{0, 2}, {1, -1}}), w({{0, 2}, {1, -1}})));
}

TEST_CASE("split_signs gives disjoint non-negative parts") {
    auto [plus, minus] = split_signs(w({{0, 2}, {1, -1}}));
    CHECK(plus == w({{0, 2}}));
    CHECK(minus == w({{1, 1}}));

    auto [p2, m2] = split_signs(w({{0, 3}}));
    CHECK(p2 == w({{0, 3}}));
    CHECK(m2.is_zero());

    auto [p3, m3] = split_signs(Weight{});
    CHECK(p3.is_zero());
    CHECK(m3.is_zero());
}

TEST_CASE("partition pair round trips") {
    Weight lambda = w({{0, 2}, {1, 1}, {2, -3}});
    PartitionPair pair = to_partition_pair(lambda);
    CHECK(pair.plus == std::vector<long long>{2, 1});
    CHECK(pair.minus == std::vector<long long>{3});
    CHECK(from_partition_pair(pair) == lambda);

    CHECK(to_partition_pair(Weight{}) == PartitionPair{});
    CHECK(from_partition_pair(PartitionPair{}).is_zero());

    // Round trip through the orbit: signature preserved.
    Weight scattered = w({{4, 1}, {9, 2}, {11, -3}, {2, -3}});
    CHECK(orbit_equal(from_partition_pair(to_partition_pair(scattered)), scattered));
}

TEST_CASE("canonical representative places values in decreasing order") {
    Weight lambda = from_partition_pair({{2, 1}, {3, 1}});
    CHECK(lambda == w({{0, 2}, {1, 1}, {2, -1}, {3, -3}}));
    CHECK(canonical_weight(canonicalize(lambda)) == lambda);
}

TEST_CASE("contractivity is exactly l1 norm one") {
    CHECK(is_contractive(w({{4, 1}})));
    CHECK(is_contractive(w({{4, -1}})));
    CHECK_FALSE(is_contractive(w({{4, 2}})));
    CHECK_FALSE(is_contractive(w({{0, 1}, {1, 1}})));
    CHECK_FALSE(is_contractive(Weight{}));
}

TEST_CASE("l1 norm matches the signature formula") {
    Weight lambda = w({{0, 3}, {2, -2}, {5, 3}});
    long long from_sig = 0;
    OrbitSignature s = canonicalize(lambda);
    for (const auto& [v, m] : s.multiplicities()) {
        from_sig += (v < 0 ? -v : v) * m;
    }
    CHECK(lambda.l1_norm() == from_sig);
    CHECK(lambda.l1_norm() == 8);
}

TEST_CASE("weights reject zero values and negative indices") {
    using Entries = std::map<int, long long>;
    CHECK_THROWS_AS(Weight(Entries{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Weight(Entries{{-1, 2}}), std::invalid_argument);
}
