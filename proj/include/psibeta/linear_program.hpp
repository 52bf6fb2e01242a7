#pragma once

// Dense bounded-variable revised simplex:
//   maximize c'x  subject to  A x = b,  lower <= x <= upper.
// Sized for problems with few rows and many columns (dual forms of discrete
// approximation problems). Lower bounds must be finite.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace psibeta {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct BoundedLp {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper; ///< may hold +infinity
};

struct LpOptions {
    std::size_t max_iterations = 200'000;
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-11;
    /// Optional starting vertex: nonbasic variables flagged here start at
    /// their (finite) upper bound instead of the lower one.
    std::vector<bool> start_at_upper;
};

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    Eigen::VectorXd x;
    Eigen::VectorXd duals; ///< y with c_B' = y' B at the final basis
    double objective = 0.0;
    std::size_t iterations = 0;
};

LpSolution solve_bounded_lp(const BoundedLp& lp, const LpOptions& options = {});

} // namespace psibeta
