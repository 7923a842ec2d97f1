#pragma once

#include <vector>

#include "weylcalc/majorization.hpp"
#include "weylcalc/matrix.hpp"
#include "weylcalc/partition.hpp"
#include "weylcalc/tensor.hpp"
#include "weylcalc/weights.hpp"

namespace weylcalc {

/// D_lambda: diagonal matrix with entries lambda_j. Requires supp(lambda)
/// inside {0..n-1}.
Matrix d_lambda(const Weight& lambda, int n);

/// psi_lambda(X) = -i Tr(D_lambda X), real-valued on skew-hermitian X.
Rat psi_eval(const Weight& lambda, const Matrix& x);

/// Weight of lambda read off a partition: part j at index j.
Weight weight_of_partition(const Partition& lambda);

/// dpi(X) v = sum over slots of (1 x ... x X x ... x 1) v.
TensorVector apply_derivation(const Matrix& x, const TensorVector& v);

/// Momentum map of the U(n)-action on the lambda-isotypic tensor model:
/// Phi([v])(X) = <-i dpi(X) v, v> / <v, v> for skew-hermitian X.
Rat momentum_value(const Partition& lambda, int n, const TensorVector& v, const Matrix& x);

/// Sum of the k largest eigenvalues of a hermitian matrix; exact when the
/// spectrum is rational, otherwise a certified enclosure.
struct SpectralSum {
    bool exact = false;
    Rat value;    // meaningful when exact
    Rat lo, hi;   // always a valid enclosure
};
SpectralSum spectral_s_k(const Matrix& x, int k);

/// Eigenvalues of a hermitian matrix as a rational weight (nonzero
/// eigenvalues placed at indices 0,1,...). Throws when the spectrum is not
/// fully rational.
RationalWeight eigenvalue_weight(const Matrix& x);

/// Momentum-set membership at the matrix level: the eigenvalue list must lie
/// in the weak-* (resp. norm-closed) hull of the Weyl orbit of lambda.
bool in_momentum_set_matrix(const Matrix& x, const Weight& lambda);
bool in_norm_momentum_set_matrix(const Matrix& x, const Weight& lambda);

/// Splitting along the spectral scale of D_lambda: entry (i,j) is lowering
/// when lambda_i < lambda_j, commuting when equal, raising when greater.
struct TripleDecomposition {
    Matrix lower;           // N_lambda part
    Matrix block_diagonal;  // commutant of D_lambda
    Matrix upper;           // N_lambda^* part

    TripleDecomposition(int n) : lower(n), block_diagonal(n), upper(n) {}
};
TripleDecomposition triple_decompose(const Matrix& x, const Weight& lambda);

/// Kaehler form value psi_lambda([X, IX]) for X = Z - Z*, IX = i (Z + Z*),
/// Z supported on raising positions; computed both by the closed formula
/// 2 sum |z_jk|^2 (lambda_j - lambda_k) and by the direct commutator trace,
/// which must agree exactly.
Rat kaehler_value(const Weight& lambda, const Matrix& z);

/// Highest-weight eigenvector identities in the tensor model: eigenvalue
/// identity with eigenvalue Tr(D_lambda X) on the raising-plus-commutant
/// component, orthogonality <dpi(X) v, v> = 0 on the lowering component.
bool eigenvector_identity_check(const Partition& lambda, int n, const Matrix& x);

/// Does X lie on the unitary orbit of D_lambda? Exact: the characteristic
/// polynomials must coincide.
bool coadjoint_orbit_member(const Matrix& x, const Weight& lambda);

/// Strong-exposure data for a momentum-set member T at the exposing
/// functional f = Tr(D_lambda .): always hs_dist_sq <= 2 gap.
struct ExposureGap {
    Rat gap;         // f(D_lambda) - f(T) >= 0
    Rat hs_dist_sq;  // ||T - D_lambda||_2^2
    bool trace_dist_exact = false;
    Rat trace_dist;           // exact value when available
    Rat trace_dist_lo, trace_dist_hi;  // certified enclosure otherwise
};
ExposureGap strong_exposure_gap(const Matrix& t, const Weight& lambda);

/// ||dpi_lambda(i diag(x))|| = max over the weight multiset of |<alpha, x>|.
Rat diagonal_rep_norm(const Partition& lambda, int n, const std::vector<Rat>& x);

}  // namespace weylcalc
