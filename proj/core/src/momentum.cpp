#include "weylcalc/momentum.hpp"

#include <algorithm>

namespace weylcalc {

Matrix d_lambda(const Weight& lambda, int n) {
    if (lambda.support_end() > n) {
        throw std::invalid_argument("d_lambda: support does not fit in dimension");
    }
    Matrix m(n);
    for (const auto& [j, v] : lambda.entries()) m.at(j, j) = GaussianRat(Rat(static_cast<long>(v)));
    return m;
}

Rat psi_eval(const Weight& lambda, const Matrix& x) {
    if (lambda.support_end() > x.size()) {
        throw std::invalid_argument("psi_eval: support does not fit in dimension");
    }
    if (!x.is_skew_hermitian()) {
        throw std::invalid_argument("psi_eval: argument must be skew-hermitian");
    }
    // -i Tr(D X): diagonal entries of a skew matrix are purely imaginary.
    Rat value(0);
    for (const auto& [j, v] : lambda.entries()) {
        value += Rat(static_cast<long>(v)) * x.at(j, j).im;
    }
    return value;
}

Weight weight_of_partition(const Partition& lambda) {
    std::vector<long long> vals(lambda.parts().begin(), lambda.parts().end());
    return Weight::from_values(vals);
}

TensorVector apply_derivation(const Matrix& x, const TensorVector& v) {
    TensorVector out(v.dim(), v.rank());
    for (const auto& [t, c] : v.coefficients()) {
        for (int slot = 0; slot < v.rank(); ++slot) {
            int col = t[slot];
            for (int row = 0; row < x.size(); ++row) {
                const GaussianRat& entry = x.at(row, col);
                if (entry.is_zero()) continue;
                TensorVector::IndexTuple moved = t;
                moved[slot] = row;
                out.add(moved, c * entry);
            }
        }
    }
    return out;
}

Rat momentum_value(const Partition& lambda, int n, const TensorVector& v, const Matrix& x) {
    if (v.is_zero()) throw std::invalid_argument("momentum_value: zero vector");
    if (v.dim() != n || x.size() != n) throw std::invalid_argument("momentum_value: dimension mismatch");
    if (v.rank() != lambda.sum()) throw std::invalid_argument("momentum_value: rank mismatch");
    if (!x.is_skew_hermitian()) {
        throw std::invalid_argument("momentum_value: argument must be skew-hermitian");
    }
    GaussianRat num = apply_derivation(x, v).inner(v);
    GaussianRat den = v.inner(v);
    // <-i dpi(x) v, v> = -i num; real for skew-hermitian x.
    GaussianRat value = GaussianRat(Rat(0), Rat(-1)) * num / den;
    if (value.im != 0) throw std::logic_error("momentum value must be real");
    return value.re;
}

SpectralSum spectral_s_k(const Matrix& x, int k) {
    if (!x.is_hermitian()) throw std::invalid_argument("spectral_s_k: hermitian input required");
    if (k < 1 || k > x.size()) throw std::invalid_argument("spectral_s_k: k out of range");
    Spectrum spec = rational_spectrum(x);
    SpectralSum out;
    if (spec.all_rational) {
        out.exact = true;
        Rat s(0);
        for (int i = 0; i < k; ++i) s += spec.roots[i];
        out.value = s;
        out.lo = out.hi = s;
        return out;
    }
    // Certified enclosure: enclose every eigenvalue, then sum the k largest
    // by upper and lower interval ends respectively.
    std::vector<std::pair<Rat, Rat>> intervals;
    for (const Rat& r : spec.roots) intervals.push_back({r, r});
    for (const RootInterval& ri : spec.irrational) {
        for (int m = 0; m < ri.multiplicity; ++m) intervals.push_back({ri.lo, ri.hi});
    }
    if (static_cast<int>(intervals.size()) != x.size()) {
        throw std::logic_error("eigenvalue count mismatch");
    }
    auto desc_hi = intervals;
    std::sort(desc_hi.begin(), desc_hi.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    auto desc_lo = intervals;
    std::sort(desc_lo.begin(), desc_lo.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Rat hi(0), lo(0);
    for (int i = 0; i < k; ++i) {
        hi += desc_hi[i].second;
        lo += desc_lo[i].first;
    }
    out.exact = false;
    out.lo = lo;
    out.hi = hi;
    out.value = (lo + hi) / 2;
    return out;
}

RationalWeight eigenvalue_weight(const Matrix& x) {
    Spectrum spec = rational_spectrum(x);
    if (!spec.all_rational) {
        throw std::invalid_argument("eigenvalue_weight: spectrum is not rational");
    }
    RationalWeight w;
    int idx = 0;
    for (const Rat& r : spec.roots) {
        if (r != 0) w.set(idx++, r);
    }
    return w;
}

bool in_momentum_set_matrix(const Matrix& x, const Weight& lambda) {
    if (!x.is_hermitian()) {
        throw std::invalid_argument("momentum set test: hermitian input required");
    }
    return in_weakstar_hull(eigenvalue_weight(x), lambda);
}

bool in_norm_momentum_set_matrix(const Matrix& x, const Weight& lambda) {
    if (!x.is_hermitian()) {
        throw std::invalid_argument("momentum set test: hermitian input required");
    }
    return in_norm_hull(eigenvalue_weight(x), lambda);
}

TripleDecomposition triple_decompose(const Matrix& x, const Weight& lambda) {
    int n = x.size();
    if (lambda.support_end() > n) {
        throw std::invalid_argument("triple_decompose: support does not fit in dimension");
    }
    TripleDecomposition out(n);
    for (int i = 0; i < n; ++i) {
        long long li = lambda.at(i);
        for (int j = 0; j < n; ++j) {
            long long lj = lambda.at(j);
            if (li < lj) {
                out.lower.at(i, j) = x.at(i, j);
            } else if (li == lj) {
                out.block_diagonal.at(i, j) = x.at(i, j);
            } else {
                out.upper.at(i, j) = x.at(i, j);
            }
        }
    }
    return out;
}

Rat kaehler_value(const Weight& lambda, const Matrix& z) {
    int n = z.size();
    if (lambda.support_end() > n) {
        throw std::invalid_argument("kaehler_value: support does not fit in dimension");
    }
    Rat closed(0);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (z.at(j, k).is_zero()) continue;
            long long gap = lambda.at(j) - lambda.at(k);
            if (gap <= 0) {
                throw std::invalid_argument("kaehler_value: Z must sit on raising positions");
            }
            closed += Rat(2) * z.at(j, k).norm_sq() * Rat(static_cast<long>(gap));
        }
    }

    // Direct route: X = Z - Z*, IX = i (Z + Z*), value = psi_lambda([X, IX]).
    Matrix zs = z.adjoint();
    Matrix x = z - zs;
    Matrix ix = (z + zs).scaled(GaussianRat::i());
    Matrix bracket = x * ix - ix * x;
    Rat direct = psi_eval(lambda, bracket);
    if (direct != closed) {
        throw std::logic_error("kaehler_value: closed formula and commutator disagree");
    }
    return closed;
}

bool eigenvector_identity_check(const Partition& lambda, int n, const Matrix& x) {
    if (x.size() != n) throw std::invalid_argument("eigenvector_identity_check: dimension mismatch");
    Weight lam = weight_of_partition(lambda);
    TensorVector v = highest_weight_vector(lambda, n);

    TripleDecomposition parts = triple_decompose(x, lam);
    Matrix stabilizer = parts.block_diagonal + parts.upper;  // p_F^* component

    if (!stabilizer.is_zero()) {
        // dpi(X) v = Tr(D_lambda X) v, the trace seeing only the commutant part.
        GaussianRat eigen;
        for (const auto& [j, val] : lam.entries()) {
            eigen += GaussianRat(Rat(static_cast<long>(val))) * stabilizer.at(j, j);
        }
        TensorVector lhs = apply_derivation(stabilizer, v);
        if (!(lhs == v.scaled(eigen))) return false;
    }
    if (!parts.lower.is_zero()) {
        // Lowering operators move v into lower weight spaces.
        if (!apply_derivation(parts.lower, v).inner(v).is_zero()) return false;
    }
    return true;
}

bool coadjoint_orbit_member(const Matrix& x, const Weight& lambda) {
    if (!x.is_hermitian()) {
        throw std::invalid_argument("coadjoint_orbit_member: hermitian input required");
    }
    if (lambda.support_end() > x.size()) return false;
    // Same eigenvalue multiset iff same characteristic polynomial.
    return char_poly(x) == char_poly(d_lambda(lambda, x.size()));
}

ExposureGap strong_exposure_gap(const Matrix& t, const Weight& lambda) {
    if (!in_momentum_set_matrix(t, lambda)) {
        throw std::invalid_argument("strong_exposure_gap: T is not a momentum-set member");
    }
    int n = t.size();
    Matrix d = d_lambda(lambda, n);
    GaussianRat f_d = (d * d).trace();
    GaussianRat f_t = (d * t).trace();
    if (f_d.im != 0 || f_t.im != 0) throw std::logic_error("trace functional must be real");

    ExposureGap out;
    out.gap = f_d.re - f_t.re;
    Matrix diff = t - d;
    out.hs_dist_sq = diff.hs_norm_sq();

    Spectrum spec = rational_spectrum(diff);
    if (spec.all_rational) {
        out.trace_dist_exact = true;
        Rat s(0);
        for (const Rat& r : spec.roots) s += abs(r);
        out.trace_dist = s;
        out.trace_dist_lo = out.trace_dist_hi = s;
    } else {
        Rat lo(0), hi(0);
        for (const Rat& r : spec.roots) {
            lo += abs(r);
            hi += abs(r);
        }
        for (const RootInterval& ri : spec.irrational) {
            Rat abs_lo = abs(ri.lo);
            Rat abs_hi = abs(ri.hi);
            Rat lo_bound = abs_lo < abs_hi ? abs_lo : abs_hi;
            if (ri.lo <= 0 && ri.hi >= 0) lo_bound = 0;
            Rat hi_bound = abs_lo < abs_hi ? abs_hi : abs_lo;
            for (int m = 0; m < ri.multiplicity; ++m) {
                lo += lo_bound;
                hi += hi_bound;
            }
        }
        out.trace_dist_exact = false;
        out.trace_dist_lo = lo;
        out.trace_dist_hi = hi;
        out.trace_dist = (lo + hi) / 2;
    }
    return out;
}

Rat diagonal_rep_norm(const Partition& lambda, int n, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("diagonal_rep_norm: dimension mismatch");
    }
    Rat best(0);
    for (const auto& [alpha, mult] : weight_multiset(lambda, n)) {
        Rat value(0);
        for (const auto& [j, v] : alpha.entries()) value += Rat(static_cast<long>(v)) * x[j];
        if (abs(value) > best) best = abs(value);
    }
    return best;
}

}  // namespace weylcalc
