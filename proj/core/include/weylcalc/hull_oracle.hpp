#pragma once

#include <vector>

#include "weylcalc/majorization.hpp"
#include "weylcalc/rational.hpp"
#include "weylcalc/weights.hpp"

namespace weylcalc {

/// Dense point of the finite ambient space Q^n (the truncation J_n = {0..n-1}).
using AmbientVector = std::vector<Rat>;

AmbientVector embed(const Weight& w, int n);
AmbientVector embed(const RationalWeight& w, int n);

/// All distinct permutations of the padded value vector of lambda in
/// ambient dimension n. Throws ResourceLimitError for n > 7.
std::vector<AmbientVector> weyl_orbit_vectors(const Weight& lambda, int n);

/// Exact LP: does mu lie in the convex hull of all permutations of lambda
/// (duplicates collapsed)? Both vectors must have the same size n <= 7.
bool hull_member_bruteforce(const AmbientVector& mu, const AmbientVector& lambda);

/// Vertices of R_n = { mu in Q^n : sum_{i in A} mu_i <= L_|A|(lambda) and
/// sum_{i in A} -mu_i <= L_|A|(-lambda) for all nonempty A }, found by
/// enumerating full-rank n-subsets of the 2(2^n - 1) constraints and keeping
/// the feasible solutions. Throws ResourceLimitError for n > 5.
std::vector<AmbientVector> polytope_vertices(const Weight& lambda, int n);

/// Vertices of the permutahedron conv(S_n lambda): exactly the orbit points.
std::vector<AmbientVector> permutahedron_vertices(const Weight& lambda, int n);

/// Exact LP value of min over nu in conv(S_n lambda) of the sup-distance
/// ||mu - nu||_inf. Requires supp(mu) and supp(lambda) inside {0..n-1} and
/// n <= 7.
Rat weakstar_distance(const Weight& mu, const Weight& lambda, int n);

/// Independent weak-* hull oracle in a finite ambient: for each signed part,
/// checks by LP whether some point of conv(S_n lambda_part) dominates
/// mu_part coordinatewise. Requires n >= |supp mu| + |supp lambda|.
bool weakstar_member_oracle(const RationalWeight& mu, const Weight& lambda, int n);

}  // namespace weylcalc
