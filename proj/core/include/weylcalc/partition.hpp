#pragma once

#include <vector>

#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    int part(int i) const { return i < rows() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    /// Column lengths of the diagram.
    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of n, in descending lexicographic order: (n) first,
/// (1,...,1) last.
std::vector<Partition> partitions(int n);

/// Number of standard tableaux of the given shape (hook length formula).
long long standard_tableaux_count(const Partition& shape);

/// Number of semistandard tableaux with entries <= n (hook content formula);
/// 0 when the shape has more than n rows.
long long semistandard_tableaux_count(const Partition& shape, int n);

/// Symmetric group character chi^lambda evaluated on the class of the given
/// cycle type, by the border-strip recursion.
long long character_value(const Partition& shape, const Partition& cycle_type);

}  // namespace weylcalc
