#pragma once

#include <optional>
#include <vector>

#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Dense square matrix with exact complex-rational entries.
class Matrix {
public:
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Rat>& d);
    /// Single matrix unit E_{jk} = <., e_k> e_j (1 in row j, column k).
    static Matrix unit(int n, int j, int k);

    int size() const { return n_; }
    const GaussianRat& at(int i, int j) const { return a_[idx(i, j)]; }
    GaussianRat& at(int i, int j) { return a_[idx(i, j)]; }

    Matrix adjoint() const;
    GaussianRat trace() const;
    bool is_zero() const;
    bool is_hermitian() const;
    bool is_skew_hermitian() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const GaussianRat& c) const;

    /// Frobenius norm squared: sum of |entry|^2 (exact).
    Rat hs_norm_sq() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::invalid_argument("index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<GaussianRat> a_;
};

/// Monic characteristic polynomial of a hermitian matrix, as real rational
/// coefficients c[0] + c[1] t + ... + c[n] t^n with c[n] = 1
/// (Faddeev-LeVerrier). Throws if the matrix is not hermitian.
std::vector<Rat> char_poly(const Matrix& x);

/// Isolating intervals [lo, hi] for the distinct real roots of a rational
/// polynomial, each refined to width <= tol, with multiplicities; via
/// square-free reduction and Sturm chains.
struct RootInterval {
    Rat lo, hi;
    int multiplicity;
};
std::vector<RootInterval> isolate_real_roots(const std::vector<Rat>& poly, const Rat& tol);

struct Spectrum {
    bool all_rational = false;
    std::vector<Rat> roots;                // rational eigenvalues, sorted decreasing
    std::vector<RootInterval> irrational;  // certified enclosures for the rest
};

/// Eigenvalues of a hermitian matrix. Rational roots are found exactly (the
/// integerized characteristic polynomial is monic, so its rational roots are
/// integers, isolated by Sturm bisection); the remaining real roots come back
/// as certified enclosures.
Spectrum rational_spectrum(const Matrix& x);

}  // namespace weylcalc
