#pragma once

#include <optional>
#include <vector>

#include "weylcalc/rational.hpp"

namespace weylcalc {

enum class RowSense { LessEq, Eq, GreaterEq };

/// Exact-rational linear program. Variables are non-negative unless marked
/// free. Rows are a^T x (sense) b.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<RowSense> senses;
    std::vector<Rat> objective;  // empty means feasibility only
    bool maximize = false;
    std::vector<bool> free_vars;  // empty means all non-negative

    explicit LinearProgram(int vars) : num_vars(vars) {}
    void add_row(std::vector<Rat> coeffs, RowSense sense, Rat bound);
    void set_objective(std::vector<Rat> coeffs, bool maximize_objective = false);
    void mark_free(int var);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective_value{0};
    std::vector<Rat> point;  // values of the original variables
};

/// Two-phase simplex over exact rationals with Bland's rule (no cycling).
LpResult lp_solve(const LinearProgram& lp);

/// Feasibility check; fills *witness with a feasible point when provided.
bool lp_feasible(const LinearProgram& lp, std::vector<Rat>* witness = nullptr);

/// Fourier-Motzkin feasibility for small inequality systems a^T x <= b over
/// free variables; exact, exponential, restricted to <= 4 variables. Used as
/// an independent cross-check of the simplex on tiny instances.
bool fourier_motzkin_feasible(const std::vector<std::vector<Rat>>& rows,
                              const std::vector<Rat>& rhs);

}  // namespace weylcalc
