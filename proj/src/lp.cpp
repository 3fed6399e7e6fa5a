#include "alcove/lp.hpp"

#include <stdexcept>

namespace alcove::lp {

namespace {

// Dense simplex tableau, minimization form. Column `width - 1` holds the
// right-hand side; the objective row stores reduced costs and -z.
class Tableau {
public:
    Tableau(int rows, int cols)
        : rows_(rows), cols_(cols), t_(static_cast<std::size_t>(rows)),
          obj_(static_cast<std::size_t>(cols + 1)), basis_(static_cast<std::size_t>(rows), -1),
          allowed_(static_cast<std::size_t>(cols), true), live_(static_cast<std::size_t>(rows), true)
    {
        for (auto& row : t_)
            row.assign(static_cast<std::size_t>(cols + 1), Rational(0));
    }

    Rational& at(int i, int j) { return t_[idx(i)][idx(j)]; }
    Rational& rhs(int i) { return t_[idx(i)][idx(cols_)]; }
    Rational& cost(int j) { return obj_[idx(j)]; }
    Rational& neg_value() { return obj_[idx(cols_)]; }
    int& basic(int i) { return basis_[idx(i)]; }
    bool live(int i) const { return live_[idx(i)]; }
    void kill(int i) { live_[idx(i)] = false; }
    void allow(int j, bool on) { allowed_[idx(j)] = on; }

    void pivot(int r, int c)
    {
        auto& pr = t_[idx(r)];
        const Rational p = pr[idx(c)];
        nonzero_.clear();
        for (int j = 0; j <= cols_; ++j) {
            auto& e = pr[idx(j)];
            if (e != 0) {
                if (j != c)
                    e /= p;
                nonzero_.push_back(j);
            }
        }
        pr[idx(c)] = 1;
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational f = row[idx(c)];
            if (f == 0)
                return;
            for (int j : nonzero_)
                row[idx(j)] -= f * pr[idx(j)];
            row[idx(c)] = 0;
        };
        for (int i = 0; i < rows_; ++i)
            if (i != r)
                eliminate(t_[idx(i)]);
        eliminate(obj_);
        basis_[idx(r)] = c;
    }

    /// Runs simplex iterations until optimal (true) or unbounded (false).
    bool optimize()
    {
        int degenerate_streak = 0;
        constexpr int kBlandAfter = 8;
        for (;;) {
            const bool bland = degenerate_streak >= kBlandAfter;
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (!allowed_[idx(j)] || obj_[idx(j)] >= 0)
                    continue;
                if (enter < 0) {
                    enter = j;
                    if (bland)
                        break;
                } else if (obj_[idx(j)] < obj_[idx(enter)]) {
                    enter = j;
                }
            }
            if (enter < 0)
                return true;

            int leave = -1;
            Rational best;
            for (int i = 0; i < rows_; ++i) {
                if (!live_[idx(i)])
                    continue;
                const Rational& a = t_[idx(i)][idx(enter)];
                if (a <= 0)
                    continue;
                Rational ratio = t_[idx(i)][idx(cols_)] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[idx(i)] < basis_[idx(leave)])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave < 0)
                return false;
            degenerate_streak = best == 0 ? degenerate_streak + 1 : 0;
            pivot(leave, enter);
        }
    }

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    int rows_;
    int cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
    std::vector<bool> allowed_;
    std::vector<bool> live_;
    std::vector<int> nonzero_;
};

} // namespace

StandardFormResult solve_standard_form(const RationalMatrix& M, const RationalVector& rhs,
                                       const RationalVector& cost)
{
    const int m = static_cast<int>(M.rows());
    const int n = static_cast<int>(M.cols());
    if (rhs.size() != m || cost.size() != n)
        throw DimensionMismatch("solve_standard_form: inconsistent shapes");

    Tableau tab(m, n + m);
    for (int i = 0; i < m; ++i) {
        const bool flip = rhs(i) < 0;
        for (int j = 0; j < n; ++j)
            if (M(i, j) != 0)
                tab.at(i, j) = flip ? Rational(-M(i, j)) : M(i, j);
        tab.at(i, n + i) = 1;
        tab.rhs(i) = flip ? Rational(-rhs(i)) : rhs(i);
        tab.basic(i) = n + i;
    }
    // Phase one: minimize the sum of artificials.
    for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i)
            s += tab.at(i, j);
        tab.cost(j) = -s;
    }
    {
        Rational s = 0;
        for (int i = 0; i < m; ++i)
            s += tab.rhs(i);
        tab.neg_value() = -s;
    }
    tab.optimize();

    StandardFormResult result;
    if (tab.neg_value() != 0) {
        result.status = Status::Infeasible;
        return result;
    }

    for (int i = 0; i < m; ++i) {
        if (tab.basic(i) < n)
            continue;
        int col = -1;
        for (int j = 0; j < n && col < 0; ++j)
            if (tab.at(i, j) != 0)
                col = j;
        if (col >= 0)
            tab.pivot(i, col);
        else
            tab.kill(i);
    }

    for (int j = n; j < n + m; ++j)
        tab.allow(j, false);
    for (int j = 0; j < n; ++j) {
        Rational s = cost(j);
        for (int i = 0; i < m; ++i)
            if (tab.live(i) && tab.at(i, j) != 0)
                s -= cost(tab.basic(i)) * tab.at(i, j);
        tab.cost(j) = s;
    }
    for (int j = n; j < n + m; ++j)
        tab.cost(j) = 0;
    {
        Rational s = 0;
        for (int i = 0; i < m; ++i)
            if (tab.live(i))
                s += cost(tab.basic(i)) * tab.rhs(i);
        tab.neg_value() = -s;
    }
    if (!tab.optimize()) {
        result.status = Status::Unbounded;
        return result;
    }

    result.status = Status::Optimal;
    result.value = -tab.neg_value();
    result.solution = RationalVector::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (!tab.live(i))
            continue;
        result.solution(tab.basic(i)) = tab.rhs(i);
        result.rows.push_back(i);
        result.basis.push_back(tab.basic(i));
    }
    return result;
}

bool feasible(const RationalMatrix& A, const RationalVector& c)
{
    const auto m = A.rows();
    const auto n = A.cols();
    if (c.size() != m)
        throw DimensionMismatch("feasible: rhs length differs from constraint count");
    if (m == 0)
        return true;
    // A y <= c is infeasible iff some u >= 0 has A^T u = 0, c . u < 0.
    RationalMatrix M(n + 1, m);
    M.topRows(n) = A.transpose();
    M.row(n).setConstant(Rational(1));
    RationalVector rhs = RationalVector::Zero(n + 1);
    rhs(n) = 1;
    const auto res = solve_standard_form(M, rhs, c);
    if (res.status != Status::Optimal)
        return true;
    return res.value >= 0;
}

Result maximize(const RationalMatrix& A, const RationalVector& c, const RationalVector& d)
{
    const auto m = A.rows();
    const auto n = A.cols();
    if (c.size() != m || d.size() != n)
        throw DimensionMismatch("maximize: inconsistent shapes");

    Result out;
    if (m == 0) {
        out.status = d.isZero() ? Status::Optimal : Status::Unbounded;
        out.value = 0;
        out.argmax = RationalVector::Zero(n);
        return out;
    }

    // Dual: minimize c . u subject to A^T u = d, u >= 0.
    const RationalMatrix At = A.transpose();
    const auto dual = solve_standard_form(At, d, c);
    if (dual.status == Status::Unbounded) {
        out.status = Status::Infeasible;
        return out;
    }
    if (dual.status == Status::Infeasible) {
        out.status = feasible(A, c) ? Status::Unbounded : Status::Infeasible;
        return out;
    }

    // Simplex multipliers of the optimal dual basis form the primal optimum.
    const auto k = static_cast<Eigen::Index>(dual.rows.size());
    RationalMatrix system(k, k);
    RationalVector target(k);
    for (Eigen::Index r = 0; r < k; ++r) {
        const int constraint = dual.basis[static_cast<std::size_t>(r)];
        for (Eigen::Index s = 0; s < k; ++s)
            system(r, s) = A(constraint, dual.rows[static_cast<std::size_t>(s)]);
        target(r) = c(constraint);
    }
    const RationalVector pi = solve_linear(system, target);
    out.argmax = RationalVector::Zero(n);
    for (Eigen::Index s = 0; s < k; ++s)
        out.argmax(dual.rows[static_cast<std::size_t>(s)]) = pi(s);

    out.status = Status::Optimal;
    out.value = dual.value;
    out.active = dual.basis;
    if (inner_product(d, out.argmax) != out.value)
        throw std::logic_error("maximize: primal and dual objective disagree");
    for (Eigen::Index i = 0; i < m; ++i)
        if (inner_product(A.row(i).transpose().eval(), out.argmax) > c(i))
            throw std::logic_error("maximize: recovered primal point is infeasible");
    return out;
}

} // namespace alcove::lp
