#pragma once

#include <map>
#include <vector>

#include "weylcalc/partition.hpp"
#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Permutation of {0..k-1} stored as the image table.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int k);
    static Perm transposition(int k, int a, int b);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    /// (a.compose(b))(x) = a(b(x)).
    Perm compose(const Perm& other) const;
    Perm inverse() const;
    int sign() const;
    Partition cycle_type() const;
    bool is_identity() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

/// All k! elements of S_k; guarded against k > 8.
std::vector<Perm> symmetric_group(int k);

/// Rational-coefficient formal sum of permutations of {0..k-1}. Houses the
/// row/column symmetrizers, the Young symmetrizers and the central
/// projections.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree) : degree_(degree) {}
    static GroupAlgebraElement unit(int degree);

    int degree() const { return degree_; }
    const std::map<Perm, Rat>& terms() const { return terms_; }
    Rat coefficient(const Perm& p) const;
    void add_term(const Perm& p, const Rat& c);
    bool is_zero() const { return terms_.empty(); }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
    GroupAlgebraElement scaled(const Rat& c) const;

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    std::map<Perm, Rat> terms_;
};

}  // namespace weylcalc
