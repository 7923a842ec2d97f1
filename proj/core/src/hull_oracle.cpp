#include "weylcalc/hull_oracle.hpp"

#include <algorithm>
#include <set>

#include "weylcalc/linear_program.hpp"

namespace weylcalc {

namespace {

constexpr int kMaxOrbitAmbient = 7;
constexpr int kMaxVertexAmbient = 5;

void check_ambient(int n, int cap, const char* what) {
    if (n < 0) throw std::invalid_argument("negative ambient dimension");
    if (n > cap) {
        throw ResourceLimitError(std::string(what) + ": ambient dimension " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    }
}

std::vector<AmbientVector> distinct_permutations(AmbientVector values) {
    std::sort(values.begin(), values.end());
    std::vector<AmbientVector> out;
    do {
        out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

}  // namespace

AmbientVector embed(const Weight& w, int n) {
    if (w.support_end() > n) {
        throw std::invalid_argument("weight support does not fit in the ambient dimension");
    }
    AmbientVector v(n, Rat(0));
    for (const auto& [j, val] : w.entries()) v[j] = Rat(static_cast<long>(val));
    return v;
}

AmbientVector embed(const RationalWeight& w, int n) {
    if (w.support_end() > n) {
        throw std::invalid_argument("weight support does not fit in the ambient dimension");
    }
    AmbientVector v(n, Rat(0));
    for (const auto& [j, val] : w.entries()) v[j] = val;
    return v;
}

std::vector<AmbientVector> weyl_orbit_vectors(const Weight& lambda, int n) {
    check_ambient(n, kMaxOrbitAmbient, "weyl_orbit_vectors");
    return distinct_permutations(embed(lambda, n));
}

bool hull_member_bruteforce(const AmbientVector& mu, const AmbientVector& lambda) {
    if (mu.size() != lambda.size()) {
        throw std::invalid_argument("hull_member_bruteforce: dimension mismatch");
    }
    int n = static_cast<int>(mu.size());
    check_ambient(n, kMaxOrbitAmbient, "hull_member_bruteforce");
    if (mu == lambda) return true;

    std::vector<AmbientVector> orbit = distinct_permutations(lambda);
    int p = static_cast<int>(orbit.size());

    // Convex weights t with sum(t) = 1 and sum(t_p * orbit_p) = mu.
    LinearProgram lp(p);
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(p);
        for (int q = 0; q < p; ++q) row[q] = orbit[q][i];
        lp.add_row(std::move(row), RowSense::Eq, mu[i]);
    }
    lp.add_row(std::vector<Rat>(p, Rat(1)), RowSense::Eq, Rat(1));
    return lp_feasible(lp);
}

namespace {

struct Constraint {
    std::vector<Rat> coeffs;  // 0/+-1 entries
    Rat bound;
};

std::vector<Constraint> region_constraints(const Weight& lambda, int n) {
    RationalWeight lam(lambda);
    RationalWeight neg = lam.negated();
    std::vector<Constraint> cons;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        Constraint plus, minus;
        plus.coeffs.assign(n, Rat(0));
        minus.coeffs.assign(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                plus.coeffs[i] = 1;
                minus.coeffs[i] = -1;
            }
        }
        plus.bound = l_k(lam, size);
        minus.bound = l_k(neg, size);
        cons.push_back(std::move(plus));
        cons.push_back(std::move(minus));
    }
    return cons;
}

// Solve the square system rows * x = rhs; returns nullopt when singular.
std::optional<AmbientVector> solve_square(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rat p = m[col][col];
        for (int j = col; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

// Depth-first enumeration of n-subsets of constraints whose normals are
// linearly independent; rank-deficient prefixes are pruned via an
// incrementally maintained echelon form.
class VertexEnumerator {
public:
    VertexEnumerator(const std::vector<Constraint>& cons, int n) : cons_(cons), n_(n) {}

    std::set<AmbientVector> run() {
        chosen_.clear();
        echelon_.clear();
        descend(0);
        return std::move(found_);
    }

private:
    void descend(std::size_t start) {
        if (static_cast<int>(chosen_.size()) == n_) {
            try_vertex();
            return;
        }
        int needed = n_ - static_cast<int>(chosen_.size());
        for (std::size_t i = start; i + needed <= cons_.size(); ++i) {
            std::vector<Rat> reduced = reduce(cons_[i].coeffs);
            if (reduced.empty()) continue;  // dependent on the chosen rows
            chosen_.push_back(i);
            echelon_.push_back(std::move(reduced));
            descend(i + 1);
            chosen_.pop_back();
            echelon_.pop_back();
        }
    }

    // Reduces a row against the echelon; empty result means dependence.
    std::vector<Rat> reduce(std::vector<Rat> row) const {
        for (const auto& e : echelon_) {
            int lead = leading(e);
            if (row[lead] != 0) {
                Rat f = row[lead] / e[lead];
                for (int j = 0; j < n_; ++j) row[j] -= f * e[j];
            }
        }
        for (int j = 0; j < n_; ++j) {
            if (row[j] != 0) return row;
        }
        return {};
    }

    static int leading(const std::vector<Rat>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) return static_cast<int>(j);
        }
        return -1;
    }

    void try_vertex() {
        std::vector<std::vector<Rat>> m;
        std::vector<Rat> rhs;
        for (std::size_t i : chosen_) {
            m.push_back(cons_[i].coeffs);
            rhs.push_back(cons_[i].bound);
        }
        auto point = solve_square(std::move(m), std::move(rhs));
        if (!point) return;
        for (const Constraint& c : cons_) {
            Rat lhs(0);
            for (int j = 0; j < n_; ++j) {
                if (c.coeffs[j] != 0) lhs += c.coeffs[j] * (*point)[j];
            }
            if (lhs > c.bound) return;
        }
        found_.insert(*point);
    }

    const std::vector<Constraint>& cons_;
    int n_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<Rat>> echelon_;
    std::set<AmbientVector> found_;
};

}  // namespace

std::vector<AmbientVector> polytope_vertices(const Weight& lambda, int n) {
    check_ambient(n, kMaxVertexAmbient, "polytope_vertices");
    if (n == 0) return {AmbientVector{}};
    std::vector<Constraint> cons = region_constraints(lambda, n);
    VertexEnumerator enumerator(cons, n);
    std::set<AmbientVector> found = enumerator.run();
    return {found.begin(), found.end()};
}

std::vector<AmbientVector> permutahedron_vertices(const Weight& lambda, int n) {
    return weyl_orbit_vectors(lambda, n);
}

Rat weakstar_distance(const Weight& mu, const Weight& lambda, int n) {
    check_ambient(n, kMaxOrbitAmbient, "weakstar_distance");
    AmbientVector target = embed(mu, n);
    std::vector<AmbientVector> orbit = weyl_orbit_vectors(lambda, n);
    int p = static_cast<int>(orbit.size());

    // Variables: convex weights t_0..t_{p-1}, then the distance d.
    LinearProgram lp(p + 1);
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> upper(p + 1, Rat(0));
        std::vector<Rat> lower(p + 1, Rat(0));
        for (int q = 0; q < p; ++q) {
            upper[q] = orbit[q][i];
            lower[q] = -orbit[q][i];
        }
        upper[p] = -1;  // sum_q t_q orbit_qi - d <= mu_i
        lower[p] = -1;  // mu_i - sum_q t_q orbit_qi <= d
        lp.add_row(std::move(upper), RowSense::LessEq, target[i]);
        lp.add_row(std::move(lower), RowSense::LessEq, -target[i]);
    }
    std::vector<Rat> ones(p + 1, Rat(1));
    ones[p] = 0;
    lp.add_row(std::move(ones), RowSense::Eq, Rat(1));

    std::vector<Rat> objective(p + 1, Rat(0));
    objective[p] = 1;
    lp.set_objective(std::move(objective));
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::Optimal) {
        throw std::logic_error("weakstar_distance: LP must be feasible and bounded");
    }
    return r.objective_value;
}

namespace {

// Is there a point of conv(S_n part) dominating target coordinatewise?
bool dominated_by_hull(const RationalWeight& target, const Weight& part, int n) {
    std::vector<AmbientVector> orbit = weyl_orbit_vectors(part, n);
    int p = static_cast<int>(orbit.size());
    AmbientVector t = embed(target, n);
    LinearProgram lp(p);
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(p);
        for (int q = 0; q < p; ++q) row[q] = orbit[q][i];
        lp.add_row(std::move(row), RowSense::GreaterEq, t[i]);
    }
    lp.add_row(std::vector<Rat>(p, Rat(1)), RowSense::Eq, Rat(1));
    return lp_feasible(lp);
}

}  // namespace

bool weakstar_member_oracle(const RationalWeight& mu, const Weight& lambda, int n) {
    if (n < mu.support_size() + lambda.support_size()) {
        throw std::invalid_argument("weakstar_member_oracle: ambient too small");
    }
    check_ambient(n, kMaxOrbitAmbient, "weakstar_member_oracle");
    // Part-wise reduction: mu in co(lambda) iff mu_+ in co(lambda_+) and
    // mu_- in co(lambda_-); for non-negative pairs, membership is equivalent
    // to coordinatewise domination by a hull point once the ambient has room
    // for both supports.
    auto fits = [&](const RationalWeight& part_mu, const Weight& part_lam) {
        RationalWeight shifted_mu;
        int i = 0;
        for (const auto& [j, v] : part_mu.entries()) shifted_mu.set(i++, v);
        Weight shifted_lam;
        i = 0;
        for (const auto& [j, v] : part_lam.entries()) shifted_lam.set(i++, v);
        return dominated_by_hull(shifted_mu, shifted_lam, n);
    };
    return fits(mu.plus_part(), lambda.plus_part()) &&
           fits(mu.minus_part(), lambda.minus_part());
}

}  // namespace weylcalc
