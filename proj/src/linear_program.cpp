#include "psibeta/linear_program.hpp"

#include "psibeta/error.hpp"

#include <cmath>
#include <limits>

namespace psibeta {

namespace {

enum class State { Basic, AtLower, AtUpper };

class Simplex {
  public:
    Simplex(const BoundedLp& lp, const LpOptions& options)
        : lp_(lp), opt_(options), m_(lp.A.rows()), n_(lp.A.cols()), total_(n_ + m_) {
        lower_.resize(total_);
        upper_.resize(total_);
        lower_.head(n_) = lp.lower;
        upper_.head(n_) = lp.upper;
        lower_.tail(m_).setZero();
        upper_.tail(m_).setConstant(std::numeric_limits<double>::infinity());

        x_.resize(total_);
        state_.assign(total_, State::AtLower);
        for (Eigen::Index j = 0; j < n_; ++j) {
            const bool hi = static_cast<std::size_t>(j) < opt_.start_at_upper.size() && opt_.start_at_upper[j] &&
                            std::isfinite(upper_[j]);
            state_[j] = hi ? State::AtUpper : State::AtLower;
            x_[j] = hi ? upper_[j] : lower_[j];
        }
        const Eigen::VectorXd residual = lp.b - lp.A * x_.head(n_);
        art_sign_.resize(m_);
        basis_.resize(m_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            art_sign_[i] = residual[i] < 0.0 ? -1.0 : 1.0;
            basis_[i] = n_ + i;
            state_[n_ + i] = State::Basic;
            x_[n_ + i] = std::abs(residual[i]);
        }
        binv_ = art_sign_.asDiagonal();
    }

    LpSolution run() {
        LpSolution out;
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(total_);
        cost.tail(m_).setConstant(-1.0);
        auto status = iterate(cost, out.iterations);
        if (status != LpStatus::Optimal) {
            out.status = status;
            return out;
        }
        if (x_.tail(m_).sum() > opt_.feasibility_tol * (1.0 + lp_.b.lpNorm<Eigen::Infinity>())) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        for (Eigen::Index i = 0; i < m_; ++i)
            upper_[n_ + i] = 0.0;

        cost.setZero();
        cost.head(n_) = lp_.c;
        status = iterate(cost, out.iterations);
        out.status = status;
        out.x = x_.head(n_);
        out.duals = duals(cost);
        out.objective = lp_.c.dot(out.x);
        return out;
    }

  private:
    Eigen::VectorXd column(Eigen::Index j) const {
        if (j < n_)
            return lp_.A.col(j);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
        e[j - n_] = art_sign_[j - n_];
        return e;
    }

    Eigen::VectorXd duals(const Eigen::VectorXd& cost) const {
        Eigen::VectorXd cb(m_);
        for (Eigen::Index i = 0; i < m_; ++i)
            cb[i] = cost[basis_[i]];
        return binv_.transpose() * cb;
    }

    void refactor() {
        Eigen::MatrixXd B(m_, m_);
        for (Eigen::Index i = 0; i < m_; ++i)
            B.col(i) = column(basis_[i]);
        binv_ = B.partialPivLu().inverse();
        Eigen::VectorXd rhs = lp_.b;
        for (Eigen::Index j = 0; j < total_; ++j)
            if (state_[j] != State::Basic && x_[j] != 0.0)
                rhs -= column(j) * x_[j];
        const Eigen::VectorXd xb = binv_ * rhs;
        for (Eigen::Index i = 0; i < m_; ++i)
            x_[basis_[i]] = xb[i];
    }

    LpStatus iterate(const Eigen::VectorXd& cost, std::size_t& iterations) {
        constexpr double pivot_tol = 1e-9;
        constexpr std::size_t refactor_every = 64;
        constexpr std::size_t degenerate_limit = 50;
        const double dual_tol = opt_.optimality_tol * (1.0 + cost.lpNorm<Eigen::Infinity>());
        std::size_t since_refactor = 0;
        std::size_t degenerate_run = 0;

        for (;;) {
            if (iterations >= opt_.max_iterations)
                return LpStatus::IterationLimit;
            const Eigen::VectorXd y = duals(cost);
            Eigen::VectorXd reduced(total_);
            reduced.head(n_) = cost.head(n_) - lp_.A.transpose() * y;
            for (Eigen::Index i = 0; i < m_; ++i)
                reduced[n_ + i] = cost[n_ + i] - art_sign_[i] * y[i];

            const bool bland = degenerate_run > degenerate_limit;
            Eigen::Index entering = -1;
            double best = 0.0;
            int direction = 0;
            for (Eigen::Index j = 0; j < total_; ++j) {
                if (state_[j] == State::Basic || !(upper_[j] > lower_[j]))
                    continue;
                const double d = reduced[j];
                int dir = 0;
                if (state_[j] == State::AtLower && d > dual_tol)
                    dir = 1;
                else if (state_[j] == State::AtUpper && d < -dual_tol)
                    dir = -1;
                if (dir == 0)
                    continue;
                if (bland) {
                    entering = j;
                    direction = dir;
                    break;
                }
                if (std::abs(d) > best) {
                    best = std::abs(d);
                    entering = j;
                    direction = dir;
                }
            }
            if (entering < 0)
                return LpStatus::Optimal;

            const Eigen::VectorXd alpha = binv_ * column(entering);
            double step = upper_[entering] - lower_[entering];
            Eigen::Index leaving = -1;
            double leaving_rate = 0.0;
            for (Eigen::Index i = 0; i < m_; ++i) {
                const double rate = -direction * alpha[i];
                const Eigen::Index var = basis_[i];
                double limit = std::numeric_limits<double>::infinity();
                if (rate < -pivot_tol)
                    limit = std::max(0.0, x_[var] - lower_[var]) / -rate;
                else if (rate > pivot_tol && std::isfinite(upper_[var]))
                    limit = std::max(0.0, upper_[var] - x_[var]) / rate;
                else
                    continue;
                const bool better = limit < step ||
                                    (leaving >= 0 && limit == step &&
                                     (bland ? var < basis_[leaving] : std::abs(rate) > std::abs(leaving_rate)));
                if (better) {
                    step = limit;
                    leaving = i;
                    leaving_rate = rate;
                }
            }
            if (!std::isfinite(step))
                return LpStatus::Unbounded;

            ++iterations;
            degenerate_run = step < 1e-13 ? degenerate_run + 1 : 0;
            for (Eigen::Index i = 0; i < m_; ++i)
                x_[basis_[i]] += -direction * alpha[i] * step;
            x_[entering] += direction * step;

            if (leaving < 0) {
                state_[entering] = direction > 0 ? State::AtUpper : State::AtLower;
                x_[entering] = direction > 0 ? upper_[entering] : lower_[entering];
                continue;
            }

            const Eigen::Index out_var = basis_[leaving];
            state_[out_var] = leaving_rate < 0.0 ? State::AtLower : State::AtUpper;
            x_[out_var] = leaving_rate < 0.0 ? lower_[out_var] : upper_[out_var];
            state_[entering] = State::Basic;
            basis_[leaving] = entering;

            const double pivot = alpha[leaving];
            const Eigen::RowVectorXd pivot_row = binv_.row(leaving) / pivot;
            for (Eigen::Index i = 0; i < m_; ++i)
                if (i != leaving)
                    binv_.row(i) -= alpha[i] * pivot_row;
            binv_.row(leaving) = pivot_row;

            if (++since_refactor >= refactor_every) {
                refactor();
                since_refactor = 0;
            }
        }
    }

    const BoundedLp& lp_;
    const LpOptions& opt_;
    Eigen::Index m_, n_, total_;
    Eigen::VectorXd lower_, upper_, x_, art_sign_;
    std::vector<State> state_;
    std::vector<Eigen::Index> basis_;
    Eigen::MatrixXd binv_;
};

} // namespace

LpSolution solve_bounded_lp(const BoundedLp& lp, const LpOptions& options) {
    const auto m = lp.A.rows();
    const auto n = lp.A.cols();
    if (lp.b.size() != m || lp.c.size() != n || lp.lower.size() != n || lp.upper.size() != n)
        throw Error(ErrorKind::InvalidRange, "linear program dimensions are inconsistent");
    for (Eigen::Index j = 0; j < n; ++j)
        if (!std::isfinite(lp.lower[j]) || lp.upper[j] < lp.lower[j])
            throw Error(ErrorKind::InvalidRange, "linear program bounds must satisfy -inf < lower <= upper",
                        static_cast<std::size_t>(j));
    Simplex simplex(lp, options);
    return simplex.run();
}

} // namespace psibeta
