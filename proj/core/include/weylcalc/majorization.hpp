#pragma once

#include <map>
#include <set>
#include <vector>

#include "weylcalc/rational.hpp"
#include "weylcalc/weights.hpp"

namespace weylcalc {

/// Finitely supported function J -> Q with nonzero exact rational values.
/// Membership queries against integral hulls live here.
class RationalWeight {
public:
    RationalWeight() = default;
    explicit RationalWeight(std::map<int, Rat> entries);
    explicit RationalWeight(const Weight& w);

    /// Places the given values at indices 0..m-1, skipping zeros.
    static RationalWeight from_values(const std::vector<Rat>& values);

    const std::map<int, Rat>& entries() const { return entries_; }
    Rat at(int j) const;
    void set(int j, const Rat& value);  // 0 erases

    bool is_zero() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    int support_end() const;

    RationalWeight plus_part() const;
    RationalWeight minus_part() const;
    RationalWeight negated() const;
    friend RationalWeight operator-(const RationalWeight& a, const RationalWeight& b);

    std::vector<Rat> sorted_values() const;  // decreasing

    friend bool operator==(const RationalWeight& a, const RationalWeight& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<int, Rat> entries_;
};

/// L_k: maximum sum of mu over k distinct indices of the infinite index set.
/// Indices outside the support contribute 0, so this is the sum of the k
/// largest elements of values(mu) union {0,0,...}. Throws for k < 1.
Rat l_k(const RationalWeight& mu, int k);

/// S(mu) = sum of all values.
Rat total(const RationalWeight& mu);

/// (I1)+(I2): L_k(mu) <= L_k(lambda) and L_k(-mu) <= L_k(-lambda) for all k.
/// Both sides are eventually constant, so k runs to |supp mu| + |supp lambda|.
bool in_weakstar_hull(const RationalWeight& mu, const Weight& lambda);

/// (I1)-(I3): weak-* conditions plus total(mu) = total(lambda).
bool in_norm_hull(const RationalWeight& mu, const Weight& lambda);

/// mu lies in the weak-* closure of the orbit of lambda iff every nonzero
/// value occurs in mu at most as often as in lambda.
bool in_orbit_closure(const Weight& mu, const Weight& lambda);

/// Finite set of orbit signatures, all satisfying one extreme-point predicate.
class HullExtremeSet {
public:
    HullExtremeSet() = default;
    explicit HullExtremeSet(std::set<OrbitSignature> signatures)
        : signatures_(std::move(signatures)) {}

    const std::set<OrbitSignature>& signatures() const { return signatures_; }
    bool contains(const OrbitSignature& s) const { return signatures_.count(s) > 0; }
    void insert(OrbitSignature s) { signatures_.insert(std::move(s)); }
    std::size_t size() const { return signatures_.size(); }

    friend bool operator==(const HullExtremeSet& a, const HullExtremeSet& b) {
        return a.signatures_ == b.signatures_;
    }

private:
    std::set<OrbitSignature> signatures_;
};

/// For lambda >= 0: signatures of the restrictions lambda_F where F picks,
/// for each cardinality c, the c largest values. Exactly the extreme points
/// of the weak-* hull up to the Weyl action. Throws if lambda has a negative
/// entry.
HullExtremeSet upper_parts(const Weight& lambda);

/// Predicted extreme-point signatures of the weak-* hull of the orbit:
/// lambda_+ minus an upper part of lambda_-, or an upper part of lambda_+
/// minus lambda_-.
HullExtremeSet extreme_points_weakstar_hull(const Weight& lambda);

bool is_extreme_weakstar(const Weight& mu, const Weight& lambda);

/// Extreme points of the norm-closed hull: just the orbit of lambda.
HullExtremeSet extreme_points_norm_hull(const Weight& lambda);

enum class SeparationDirection {
    OutsideCoLambda,    // mu(x) exceeds the support functional of co(lambda)
    LambdaOutsideCoMu,  // lambda(x) exceeds the support functional of co(mu)
};

/// Constructive separation between distinct orbits. The 0/1 witness x acts on
/// the positive parts when on_minus_parts is false, and on the negative parts
/// (through the evaluation vector -x) when it is true; the gap is the strict
/// difference between the outside evaluation and the inside support value.
struct SeparationCertificate {
    SeparationDirection direction;
    bool on_minus_parts;
    RationalWeight witness;  // finitely supported, values in {0,1}
    Rat gap;                 // > 0; >= 1 on integral inputs

    /// The actual separating functional: witness itself, or its negation when
    /// the certificate compares the negative parts.
    RationalWeight evaluation_vector() const;
};

/// Requires !orbit_equal(lambda, mu). Compares the positive parts first, then
/// the negative parts, taking the smallest k where some L_k inequality is
/// strict; the witness is the indicator of the k relevant positions of the
/// outside weight.
SeparationCertificate separating_vector(const Weight& lambda, const Weight& mu);

/// s_lambda(x) = max over finite permutations w of <w lambda, x>, computed by
/// zero-padding both value lists to a common length and pairing them in
/// decreasing order.
Rat support_functional(const Weight& lambda, const RationalWeight& x);

/// x_lambda = lambda viewed as the direction exposing lambda in its hull.
RationalWeight exposing_vector(const Weight& lambda);

/// Is v a non-negative rational combination of the roots eps_i - eps_j with
/// lambda_i > lambda_j (indices over the joint support)? Decided by exact LP
/// feasibility.
bool in_cone_c_lambda(const RationalWeight& v, const Weight& lambda);

}  // namespace weylcalc
