#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weylcalc {

using Rat = mpq_class;

/// Thrown when an operation would exceed the desk-scale resource caps
/// (ambient dimension, tensor-space dimension, orbit size).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" into an exact rational.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& r);

/// Complex number with exact rational real and imaginary parts.
/// Entries of momentum-module matrices and tensor coefficients live here.
struct GaussianRat {
    Rat re{0};
    Rat im{0};

    GaussianRat() = default;
    GaussianRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit from Rat is intended
    GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRat(long r) : re(r) {}  // NOLINT

    static GaussianRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRat conj() const { return {re, -im}; }
    Rat norm_sq() const { return re * re + im * im; }

    GaussianRat operator-() const { return {-re, -im}; }
    GaussianRat& operator+=(const GaussianRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRat& operator-=(const GaussianRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
    friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
    friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRat& operator*=(const GaussianRat& o) { return *this = *this * o; }
    friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
        Rat n = b.norm_sq();
        if (n == 0) throw std::invalid_argument("division by zero");
        GaussianRat num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }
};

std::string to_string(const GaussianRat& z);

}  // namespace weylcalc
