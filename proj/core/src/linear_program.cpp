#include "weylcalc/linear_program.hpp"

#include <algorithm>

namespace weylcalc {

void LinearProgram::add_row(std::vector<Rat> coeffs, RowSense sense, Rat bound) {
    if (static_cast<int>(coeffs.size()) != num_vars) {
        throw std::invalid_argument("LP row dimension mismatch");
    }
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(bound));
}

void LinearProgram::set_objective(std::vector<Rat> coeffs, bool maximize_objective) {
    if (static_cast<int>(coeffs.size()) != num_vars) {
        throw std::invalid_argument("LP objective dimension mismatch");
    }
    objective = std::move(coeffs);
    maximize = maximize_objective;
}

void LinearProgram::mark_free(int var) {
    if (var < 0 || var >= num_vars) throw std::invalid_argument("LP variable out of range");
    if (free_vars.empty()) free_vars.assign(num_vars, false);
    free_vars[var] = true;
}

namespace {

// Dense simplex tableau in standard form: min c^T x, A x = b, x >= 0, b >= 0.
// Bland's rule on both the entering and leaving choices guarantees
// termination with exact arithmetic.
class SimplexTableau {
public:
    SimplexTableau(std::vector<std::vector<Rat>> a, std::vector<Rat> b, int cols)
        : a_(std::move(a)), b_(std::move(b)), m_(static_cast<int>(a_.size())), n_(cols) {}

    // Phase 1: artificial basis, minimize sum of artificials.
    bool run_phase1() {
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
        for (int i = 0; i < m_; ++i) {
            a_[i].resize(n_ + m_, Rat(0));
            a_[i][n_ + i] = 1;
        }
        std::vector<Rat> cost(n_ + m_, Rat(0));
        for (int j = n_; j < n_ + m_; ++j) cost[j] = 1;
        Rat value = optimize(cost);
        if (value != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Phase 2 on the original cost vector; returns nullopt when unbounded.
    std::optional<Rat> run_phase2(std::vector<Rat> cost) {
        cost.resize(n_ + m_, Rat(0));
        // Forbid re-entering artificial columns.
        artificial_barrier_ = true;
        Rat value = optimize(cost);
        if (unbounded_) return std::nullopt;
        return value;
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(n_, Rat(0));
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = b_[i];
        }
        return x;
    }

private:
    Rat optimize(const std::vector<Rat>& cost) {
        unbounded_ = false;
        while (true) {
            // Reduced costs via the basic cost row: z_j - c_j computed lazily.
            std::vector<Rat> y = basic_cost_multipliers(cost);
            int enter = -1;
            int limit = artificial_barrier_ ? n_ : n_ + m_;
            for (int j = 0; j < limit; ++j) {
                if (is_basic(j)) continue;
                Rat reduced = cost[j];
                for (int i = 0; i < m_; ++i) {
                    if (y[i] != 0 && a_[i][j] != 0) reduced -= y[i] * a_[i][j];
                }
                if (reduced < 0) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter < 0) break;
            // Column of the entering variable in the current basis.
            std::vector<Rat> col = solve_column(enter);
            int leave = -1;
            Rat best_ratio(0);
            for (int i = 0; i < m_; ++i) {
                if (col[i] > 0) {
                    Rat ratio = b_[i] / col[i];
                    if (leave < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && basis_[i] < basis_[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) {
                unbounded_ = true;
                break;
            }
            pivot(leave, enter, col);
        }
        Rat value(0);
        for (int i = 0; i < m_; ++i) value += cost[basis_[i]] * b_[i];
        return value;
    }

    // The tableau is kept in "revised dense" form: rows of A are updated in
    // place so that the basic columns form the identity.
    std::vector<Rat> basic_cost_multipliers(const std::vector<Rat>& cost) const {
        std::vector<Rat> y(m_);
        for (int i = 0; i < m_; ++i) y[i] = cost[basis_[i]];
        return y;
    }

    std::vector<Rat> solve_column(int j) const {
        std::vector<Rat> col(m_);
        for (int i = 0; i < m_; ++i) col[i] = a_[i][j];
        return col;
    }

    bool is_basic(int j) const {
        return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
    }

    void pivot(int row, int col, const std::vector<Rat>& column) {
        Rat p = column[row];
        int width = static_cast<int>(a_[row].size());
        for (int j = 0; j < width; ++j) a_[row][j] /= p;
        b_[row] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || column[i] == 0) continue;
            Rat f = a_[i][col];
            if (f == 0) continue;
            for (int j = 0; j < width; ++j) {
                if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
            }
            b_[i] -= f * b_[row];
        }
        basis_[row] = col;
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            // Basic columns form the identity, so any nonzero original entry
            // in this row is automatically nonbasic.
            int enter = -1;
            for (int j = 0; j < n_; ++j) {
                if (a_[i][j] != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) {
                pivot(i, enter, solve_column(enter));
            }
        }
        // Rows still owned by an artificial are all-zero, hence redundant.
        for (int i = m_; i-- > 0;) {
            if (basis_[i] >= n_) {
                a_.erase(a_.begin() + i);
                b_.erase(b_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
            }
        }
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    int m_;
    int n_;
    std::vector<int> basis_;
    bool unbounded_ = false;
    bool artificial_barrier_ = false;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.rows.size());
    const bool any_free = !lp.free_vars.empty();

    // Standard form: split free variables, add slack/surplus columns.
    int cols = 0;
    std::vector<int> var_col(lp.num_vars);      // first column of variable j
    std::vector<bool> split(lp.num_vars, false);
    for (int j = 0; j < lp.num_vars; ++j) {
        var_col[j] = cols;
        split[j] = any_free && lp.free_vars[j];
        cols += split[j] ? 2 : 1;
    }
    int slack_base = cols;
    for (int i = 0; i < m; ++i) {
        if (lp.senses[i] != RowSense::Eq) ++cols;
    }

    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> b = lp.rhs;
    int slack = slack_base;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < lp.num_vars; ++j) {
            const Rat& c = lp.rows[i][j];
            if (c == 0) continue;
            a[i][var_col[j]] = c;
            if (split[j]) a[i][var_col[j] + 1] = -c;
        }
        if (lp.senses[i] == RowSense::LessEq) {
            a[i][slack++] = 1;
        } else if (lp.senses[i] == RowSense::GreaterEq) {
            a[i][slack++] = -1;
        }
        if (b[i] < 0) {
            for (auto& c : a[i]) c = -c;
            b[i] = -b[i];
        }
    }

    SimplexTableau tableau(std::move(a), std::move(b), cols);
    LpResult result;
    if (!tableau.run_phase1()) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    std::vector<Rat> cost(cols, Rat(0));
    if (!lp.objective.empty()) {
        for (int j = 0; j < lp.num_vars; ++j) {
            Rat c = lp.objective[j];
            if (lp.maximize) c = -c;
            cost[var_col[j]] = c;
            if (split[j]) cost[var_col[j] + 1] = -c;
        }
    }
    auto value = tableau.run_phase2(cost);
    if (!value) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.objective_value = lp.maximize ? Rat(-*value) : *value;
    std::vector<Rat> x = tableau.solution();
    result.point.resize(lp.num_vars);
    for (int j = 0; j < lp.num_vars; ++j) {
        result.point[j] = x[var_col[j]];
        if (split[j]) result.point[j] -= x[var_col[j] + 1];
    }
    return result;
}

bool lp_feasible(const LinearProgram& lp, std::vector<Rat>* witness) {
    LinearProgram copy = lp;
    copy.objective.clear();
    LpResult r = lp_solve(copy);
    if (r.status != LpStatus::Optimal) return false;
    if (witness) *witness = r.point;
    return true;
}

bool fourier_motzkin_feasible(const std::vector<std::vector<Rat>>& rows,
                              const std::vector<Rat>& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("FM dimension mismatch");
    std::size_t nvars = rows.empty() ? 0 : rows[0].size();
    if (nvars > 4) throw std::invalid_argument("Fourier-Motzkin limited to 4 variables");
    for (const auto& r : rows) {
        if (r.size() != nvars) throw std::invalid_argument("FM dimension mismatch");
    }

    std::vector<std::vector<Rat>> sys = rows;
    std::vector<Rat> bound = rhs;
    for (std::size_t v = nvars; v-- > 0;) {
        std::vector<std::vector<Rat>> next;
        std::vector<Rat> next_bound;
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            if (sys[i][v] > 0) {
                pos.push_back(i);
            } else if (sys[i][v] < 0) {
                neg.push_back(i);
            } else {
                auto row = sys[i];
                row.resize(v);
                next.push_back(std::move(row));
                next_bound.push_back(bound[i]);
            }
        }
        for (std::size_t i : pos) {
            for (std::size_t j : neg) {
                // Eliminate v from a_i x <= b_i (coef > 0) and a_j x <= b_j.
                Rat ci = sys[i][v], cj = -sys[j][v];
                std::vector<Rat> row(v);
                for (std::size_t t = 0; t < v; ++t) row[t] = cj * sys[i][t] + ci * sys[j][t];
                next.push_back(std::move(row));
                next_bound.push_back(cj * bound[i] + ci * bound[j]);
            }
        }
        sys = std::move(next);
        bound = std::move(next_bound);
    }
    for (const Rat& b : bound) {
        if (b < 0) return false;
    }
    return true;
}

}  // namespace weylcalc
