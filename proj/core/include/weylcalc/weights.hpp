#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Finitely supported signed integer function on the index set J = {0,1,2,...}.
/// Zero values are never stored; the empty map is the zero weight.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::map<int, long long> entries);

    /// Places the given values at indices 0..m-1, skipping zeros.
    static Weight from_values(const std::vector<long long>& values);

    const std::map<int, long long>& entries() const { return entries_; }
    long long at(int j) const;
    void set(int j, long long value);  // value 0 erases the entry

    bool is_zero() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    /// Largest support index + 1; 0 for the zero weight.
    int support_end() const;
    long long l1_norm() const;
    long long total() const;
    bool is_nonnegative() const;

    Weight plus_part() const;   // max(lambda, 0)
    Weight minus_part() const;  // max(-lambda, 0)
    Weight negated() const;

    /// Values sorted in decreasing order (no zero padding).
    std::vector<long long> sorted_values() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.entries_ < b.entries_; }

private:
    std::map<int, long long> entries_;
};

/// Multiplicities m_k of each nonzero value k; the canonical form of a Weyl
/// orbit. Two weights are finite permutations of each other iff their
/// signatures coincide.
class OrbitSignature {
public:
    OrbitSignature() = default;
    explicit OrbitSignature(std::map<long long, long long> multiplicities);

    const std::map<long long, long long>& multiplicities() const { return mult_; }
    long long count(long long value) const;
    void add(long long value, long long count = 1);

    bool empty() const { return mult_.empty(); }
    long long size() const;  // total number of nonzero entries
    long long l1_norm() const;

    friend bool operator==(const OrbitSignature& a, const OrbitSignature& b) {
        return a.mult_ == b.mult_;
    }
    friend bool operator<(const OrbitSignature& a, const OrbitSignature& b) {
        return a.mult_ < b.mult_;
    }

private:
    std::map<long long, long long> mult_;
};

/// Pair of partitions classifying a Weyl orbit: multiplicities of the
/// positive values and of the magnitudes of the negative values.
struct PartitionPair {
    std::vector<long long> plus;   // weakly decreasing positive integers
    std::vector<long long> minus;  // weakly decreasing positive integers

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

OrbitSignature canonicalize(const Weight& lambda);
bool orbit_equal(const Weight& lambda, const Weight& mu);
std::pair<Weight, Weight> split_signs(const Weight& lambda);
PartitionPair to_partition_pair(const Weight& lambda);
Weight from_partition_pair(const PartitionPair& pair);

/// Canonical orbit representative: values in decreasing order, positives at
/// indices 0,1,..., then the negative values, largest magnitude last.
Weight canonical_weight(const OrbitSignature& signature);

/// True iff lambda = +-eps_j for some j, i.e. ||lambda||_1 = 1; exactly the
/// weights whose representation satisfies the unit Lipschitz bound.
bool is_contractive(const Weight& lambda);

}  // namespace weylcalc
