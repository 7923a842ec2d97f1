#pragma once

#include <map>
#include <vector>

#include "weylcalc/partition.hpp"
#include "weylcalc/permutation.hpp"
#include "weylcalc/rational.hpp"
#include "weylcalc/weights.hpp"

namespace weylcalc {

/// Young tableau: a bijective assignment of 0..n-1 to the boxes of a shape.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    /// Boxes filled row by row with 0,1,2,... ("i_j = r when j sits in row r").
    static Tableau row_canonical(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<std::vector<int>> columns() const;
    int size() const { return shape_.sum(); }
    /// Row index of each entry.
    std::vector<int> row_of_entry() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Element of V^{otimes k} for V = C^n, stored sparsely over the basis of
/// index tuples; coefficients are exact Gaussian rationals.
class TensorVector {
public:
    using IndexTuple = std::vector<int>;

    TensorVector(int dim, int rank) : dim_(dim), rank_(rank) {}
    static TensorVector basis(int dim, const IndexTuple& tuple);

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    const std::map<IndexTuple, GaussianRat>& coefficients() const { return coeffs_; }
    GaussianRat coefficient(const IndexTuple& t) const;
    void add(const IndexTuple& t, const GaussianRat& c);
    bool is_zero() const { return coeffs_.empty(); }

    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector scaled(const GaussianRat& c) const;

    /// Hermitian inner product, linear in the first argument.
    GaussianRat inner(const TensorVector& o) const;

    /// Content of a tuple: how often each of 0..n-1 occurs. Constant across
    /// the support iff the vector is a weight vector of the diagonal torus.
    static std::vector<int> content(const IndexTuple& t, int dim);

    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
    }

private:
    int dim_;
    int rank_;
    std::map<IndexTuple, GaussianRat> coeffs_;
};

/// Place permutation: sigma moves the factor in slot sigma^{-1}(p) to slot p.
TensorVector permute_tensor(const Perm& sigma, const TensorVector& v);

/// Linear extension of the place-permutation action to the group algebra.
TensorVector act_on_tensor(const GroupAlgebraElement& a, const TensorVector& v);

GroupAlgebraElement row_symmetrizer(const Tableau& t);
GroupAlgebraElement column_antisymmetrizer(const Tableau& t);

/// s(T) = c(T) r(T).
GroupAlgebraElement young_symmetrizer(const Tableau& t);

/// c(T) e_T for the row-canonical tableau: a nonzero highest weight vector of
/// diagonal weight lambda, annihilated by every raising operator. Throws when
/// lambda has more than n parts (the vector would vanish).
TensorVector highest_weight_vector(const Partition& lambda, int n);

/// Central idempotent P_lambda cutting the lambda-isotypic component of the
/// S_k-action, via characters.
GroupAlgebraElement isotypic_projector(const Partition& lambda, int k);

struct IsotypicComponent {
    Partition partition;
    long long dim_schur;   // dim S_lambda(V): semistandard tableaux, entries <= n
    long long dim_specht;  // dim M^lambda: standard tableaux
};

/// Rank of P_lambda acting on (C^n)^{otimes k}, computed blockwise over
/// content classes with exact arithmetic.
long long isotypic_rank(const Partition& lambda, int n, int k);

/// Full decomposition of V^{otimes k}: one entry per partition of k, with the
/// projector rank checked against dim_schur * dim_specht. Throws
/// ResourceLimitError when n^k is out of desk range.
std::vector<IsotypicComponent> schur_weyl_decompose(int n, int k);

/// Diagonal-torus weights (with multiplicity) of the Schur module
/// S_lambda(C^n): content-class ranks of P_lambda divided by dim M^lambda.
std::map<Weight, long long> weight_multiset(const Partition& lambda, int n);

}  // namespace weylcalc
