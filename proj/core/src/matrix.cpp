#include "weylcalc/matrix.hpp"

#include <algorithm>

namespace weylcalc {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRat(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rat>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::unit(int n, int j, int k) {
    Matrix m(n);
    m.at(j, k) = GaussianRat(1);
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j).conj();
    }
    return m;
}

GaussianRat Matrix::trace() const {
    GaussianRat t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GaussianRat& z) { return z.is_zero(); });
}

bool Matrix::is_hermitian() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if (at(i, j) != at(j, i).conj()) return false;
        }
    }
    return true;
}

bool Matrix::is_skew_hermitian() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if (at(i, j) != -at(j, i).conj()) return false;
        }
    }
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const GaussianRat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (!o.at(k, j).is_zero()) m.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return m;
}

Matrix Matrix::scaled(const GaussianRat& c) const {
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

Rat Matrix::hs_norm_sq() const {
    Rat s(0);
    for (const GaussianRat& z : a_) s += z.norm_sq();
    return s;
}

std::vector<Rat> char_poly(const Matrix& x) {
    if (!x.is_hermitian()) throw std::invalid_argument("char_poly requires a hermitian matrix");
    int n = x.size();
    // Faddeev-LeVerrier: M_1 = X, c_{n-1} = -tr M_1,
    // M_{k} = X (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    Matrix m = x;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += GaussianRat(coeffs[n - k + 1]);
            m = x * shifted;
        }
        GaussianRat tr = m.trace();
        if (tr.im != 0) throw std::logic_error("hermitian trace must be real");
        coeffs[n - k] = -tr.re / k;
    }
    return coeffs;
}

namespace {

Rat eval_poly(const std::vector<Rat>& poly, const Rat& t) {
    Rat v(0);
    for (std::size_t i = poly.size(); i-- > 0;) v = v * t + poly[i];
    return v;
}

}  // namespace

namespace {

using Poly = std::vector<Rat>;  // coefficients, low degree first

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return trim(std::move(d));
}

Poly rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = trim(std::move(a));
    }
    return trim(std::move(q));
}

Poly gcd(Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{trim(p), derivative(p)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& t) {
    int v = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        Rat value = eval_poly(p, t);
        int s = value > 0 ? 1 : (value < 0 ? -1 : 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
    }
    return v;
}

int roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const std::vector<Rat>& poly, const Rat& tol) {
    Poly p = trim(poly);
    if (p.size() <= 1) return {};

    // Square-free part carries the distinct roots; multiplicity of a root of
    // the square-free part q is recovered from successive gcd reductions.
    Poly d = derivative(p);
    Poly g = gcd(p, d);
    Poly squarefree = g.size() <= 1 ? p : poly_div(p, g);

    // Cauchy bound on root magnitude.
    Rat bound(1);
    for (std::size_t i = 0; i + 1 < squarefree.size(); ++i) {
        Rat c = abs(squarefree[i] / squarefree.back());
        if (c > bound) bound = c;
    }
    bound += 1;

    std::vector<Poly> chain = sturm_chain(squarefree);
    std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int count = roots_in(chain, lo, hi);
        if (count == 0) continue;
        if (count == 1 && hi - lo <= tol) {
            isolated.push_back({lo, hi});
            continue;
        }
        Rat mid = (lo + hi) / 2;
        // Nudge off a root so interval endpoints stay regular.
        while (eval_poly(squarefree, mid) == 0) {
            // mid is itself a root: isolate it exactly.
            if (count >= 1) {
                isolated.push_back({mid, mid});
            }
            // Remove that root from further search by splitting around it.
            Rat eps = (hi - lo) / 1024;
            while (roots_in(chain, mid - eps, mid + eps) > 1) eps /= 2;
            work.push_back({lo, mid - eps});
            work.push_back({mid + eps, hi});
            count = 0;
            break;
        }
        if (count == 0) continue;
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }

    std::sort(isolated.begin(), isolated.end());
    std::vector<RootInterval> out;
    for (const auto& [lo, hi] : isolated) {
        RootInterval ri{lo, hi, 1};
        // Multiplicity: order of vanishing of the original polynomial. For a
        // point interval evaluate directly; otherwise count via gcd towers.
        if (lo == hi) {
            Poly q = p;
            int mult = 0;
            while (!q.empty() && eval_poly(q, lo) == 0) {
                ++mult;
                q = poly_div(q, Poly{-lo, Rat(1)});
            }
            ri.multiplicity = mult;
        } else {
            Poly current = p;
            int mult = 0;
            while (current.size() > 1) {
                Poly cd = derivative(current);
                Poly cg = gcd(current, cd);
                Poly sf = cg.size() <= 1 ? current : poly_div(current, cg);
                std::vector<Poly> sfchain = sturm_chain(sf);
                if (roots_in(sfchain, lo, hi) == 0) break;
                ++mult;
                current = cg;
            }
            ri.multiplicity = std::max(mult, 1);
        }
        out.push_back(std::move(ri));
    }
    return out;
}

Spectrum rational_spectrum(const Matrix& x) {
    int n = x.size();

    // Fast path for diagonal matrices: the spectrum is on display.
    bool diagonal = true;
    for (int i = 0; i < n && diagonal; ++i) {
        for (int j = 0; j < n && diagonal; ++j) {
            if (i != j && !x.at(i, j).is_zero()) diagonal = false;
            if (i == j && x.at(i, j).im != 0) diagonal = false;
        }
    }
    Spectrum spec;
    if (diagonal) {
        spec.all_rational = true;
        for (int i = 0; i < n; ++i) spec.roots.push_back(x.at(i, i).re);
        std::sort(spec.roots.begin(), spec.roots.end(), std::greater<>());
        return spec;
    }

    std::vector<Rat> poly = char_poly(x);

    // Substitute t = u/m for m = lcm of denominators: monic with integer
    // coefficients, so its rational roots are exactly its integer roots.
    mpz_class m(1);
    for (const Rat& c : poly) m = lcm(m, c.get_den());
    Poly upoly(n + 1);
    mpz_class power(1);
    for (int i = n; i >= 0; --i) {
        Rat scaled = poly[i] * Rat(power);
        if (scaled.get_den() != 1) throw std::logic_error("integerization failed");
        upoly[i] = scaled;
        power *= m;
    }

    spec.all_rational = true;
    Rat rm(m);
    for (const RootInterval& ri : isolate_real_roots(upoly, Rat(1, 4096))) {
        // The interval holds one distinct root; a rational root is an
        // integer u in [lo, hi].
        mpz_class lo_ceil = ri.lo.get_num() / ri.lo.get_den();
        bool found = false;
        for (mpz_class cand = lo_ceil - 1; cand <= lo_ceil + 2; ++cand) {
            if (Rat(cand) < ri.lo || Rat(cand) > ri.hi) continue;
            if (eval_poly(upoly, Rat(cand)) == 0) {
                for (int mult = 0; mult < ri.multiplicity; ++mult) {
                    spec.roots.push_back(Rat(cand) / rm);
                }
                found = true;
                break;
            }
        }
        if (!found) {
            spec.all_rational = false;
            spec.irrational.push_back({ri.lo / rm, ri.hi / rm, ri.multiplicity});
        }
    }
    std::sort(spec.roots.begin(), spec.roots.end(), std::greater<>());
    return spec;
}

}  // namespace weylcalc
