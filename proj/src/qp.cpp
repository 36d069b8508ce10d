#include "rsvo/qp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rsvo/errors.hpp"

namespace rsvo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-12;

// Dense QP in n <= 3 variables with diagonal objective weights:
//   min sum_k w_k (z_k - c_k)^2   s.t.  G z <= g
// solved by enumerating candidate active sets of size <= n. Every equality-
// restricted minimizer that is feasible is a candidate; the optimum of a
// nonempty polytope is always among them, so the feasible minimum is global.
struct SmallQp {
    int n = 2;
    std::array<double, 3> w{1.0, 1.0, 1.0};
    std::array<double, 3> c{0.0, 0.0, 0.0};
    std::vector<std::array<double, 3>> G;
    std::vector<double> g;

    void add_row(double a0, double a1, double a2, double rhs) {
        G.push_back({a0, a1, a2});
        g.push_back(rhs);
    }
};

double objective(const SmallQp& qp, const std::array<double, 3>& z) {
    double f = 0.0;
    for (int k = 0; k < qp.n; ++k) {
        const double d = z[k] - qp.c[k];
        f += qp.w[k] * d * d;
    }
    return f;
}

bool feasible(const SmallQp& qp, const std::array<double, 3>& z) {
    for (std::size_t r = 0; r < qp.G.size(); ++r) {
        double lhs = 0.0;
        for (int k = 0; k < qp.n; ++k) lhs += qp.G[r][k] * z[k];
        const double tol = kQpFeasTol * std::max(1.0, std::abs(qp.g[r]));
        if (lhs > qp.g[r] + tol) return false;
    }
    return true;
}

// Gaussian elimination with partial pivoting for k <= 3. Returns false when
// the system is singular to kPivotTol (dependent active rows: skip the set).
bool solve_linear(int k, std::array<std::array<double, 4>, 3>& m) {
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < kPivotTol) return false;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int cc = col; cc <= k; ++cc) m[r][cc] -= f * m[col][cc];
        }
    }
    for (int r = 0; r < k; ++r) m[r][3] /= m[r][r];
    return true;
}

// Minimizer restricted to the active set S (rows forced to equality).
// KKT: z = c - (1/2) W^-1 G_S^T lambda with (G_S W^-1 G_S^T) lambda = 2 (G_S c - g_S).
bool restricted_minimizer(const SmallQp& qp, const int* set, int k, std::array<double, 3>& z) {
    std::array<std::array<double, 4>, 3> m{};
    for (int r = 0; r < k; ++r) {
        const auto& gr = qp.G[set[r]];
        for (int cc = 0; cc < k; ++cc) {
            const auto& gc = qp.G[set[cc]];
            double v = 0.0;
            for (int d = 0; d < qp.n; ++d) v += gr[d] * gc[d] / qp.w[d];
            m[r][cc] = v;
        }
        double rc = 0.0;
        for (int d = 0; d < qp.n; ++d) rc += gr[d] * qp.c[d];
        m[r][3] = 2.0 * (rc - qp.g[set[r]]);
    }
    if (!solve_linear(k, m)) return false;
    for (int d = 0; d < qp.n; ++d) {
        double corr = 0.0;
        for (int r = 0; r < k; ++r) corr += qp.G[set[r]][d] * m[r][3];
        z[d] = qp.c[d] - 0.5 * corr / qp.w[d];
    }
    return true;
}

// Enumerates active sets in order (empty, singles, pairs, triples), keeping
// the strictly best feasible candidate so the lowest-index set wins ties.
bool enumerate(const SmallQp& qp, std::array<double, 3>& best) {
    const int m = static_cast<int>(qp.G.size());
    double best_obj = kInf;
    bool found = false;
    auto consider = [&](const int* set, int k) {
        std::array<double, 3> z{};
        if (!restricted_minimizer(qp, set, k, z)) return;
        if (!feasible(qp, z)) return;
        const double obj = objective(qp, z);
        if (obj < best_obj) {
            best_obj = obj;
            best = z;
            found = true;
        }
    };
    consider(nullptr, 0);
    for (int i = 0; i < m; ++i) {
        consider(&i, 1);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int set2[2] = {i, j};
            consider(set2, 2);
        }
    if (qp.n >= 3) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    const int set3[3] = {i, j, k};
                    consider(set3, 3);
                }
    }
    return found;
}

void add_box_rows(SmallQp& qp, const QpProblem& p) {
    if (p.u_max.x < kInf) qp.add_row(1.0, 0.0, 0.0, p.u_max.x);
    if (p.u_min.x > -kInf) qp.add_row(-1.0, 0.0, 0.0, -p.u_min.x);
    if (p.u_max.y < kInf) qp.add_row(0.0, 1.0, 0.0, p.u_max.y);
    if (p.u_min.y > -kInf) qp.add_row(0.0, -1.0, 0.0, -p.u_min.y);
}

void check_box(const QpProblem& p) {
    if (!(p.u_min.x <= p.u_max.x && p.u_min.y <= p.u_max.y))
        throw ValidationError("qp box bounds must satisfy u_min <= u_max componentwise");
}

std::vector<int> tight_rows(const QpProblem& p, Vec2 u) {
    std::vector<int> active;
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        const double margin = p.rows[r].b_rhs - dot(p.rows[r].a_row, u);
        if (margin <= kQpFeasTol * std::max(1.0, std::abs(p.rows[r].b_rhs))) active.push_back(static_cast<int>(r));
    }
    return active;
}

}  // namespace

const char* to_string(QpStatus s) {
    switch (s) {
        case QpStatus::Optimal: return "optimal";
        case QpStatus::Infeasible: return "infeasible";
        case QpStatus::RelaxedFeasible: return "relaxed";
    }
    return "unknown";
}

QpSolution solve(const QpProblem& problem) {
    check_box(problem);
    SmallQp qp;
    qp.n = 2;
    qp.c = {problem.u_nominal.x, problem.u_nominal.y, 0.0};
    for (const auto& row : problem.rows) qp.add_row(row.a_row.x, row.a_row.y, 0.0, row.b_rhs);
    add_box_rows(qp, problem);

    QpSolution sol;
    std::array<double, 3> z{};
    if (!enumerate(qp, z)) {
        sol.status = QpStatus::Infeasible;
        sol.u_star = clamp(problem.u_nominal, problem.u_min, problem.u_max);
        return sol;
    }
    sol.status = QpStatus::Optimal;
    sol.u_star = {z[0], z[1]};
    sol.active_set = tight_rows(problem, sol.u_star);
    return sol;
}

QpSolution solve_relaxed(const QpProblem& problem, double slack_penalty) {
    if (!(slack_penalty > 0.0)) throw ValidationError("slack_penalty must be > 0");
    QpSolution hard = solve(problem);
    if (hard.status == QpStatus::Optimal) return hard;

    SmallQp qp;
    qp.n = 3;
    qp.w = {1.0, 1.0, slack_penalty};
    qp.c = {problem.u_nominal.x, problem.u_nominal.y, 0.0};
    for (const auto& row : problem.rows) qp.add_row(row.a_row.x, row.a_row.y, -1.0, row.b_rhs);
    add_box_rows(qp, problem);
    qp.add_row(0.0, 0.0, -1.0, 0.0);  // s >= 0

    std::array<double, 3> z{};
    // The relaxed polytope is never empty: any box point is feasible for
    // large enough s, and the box was validated nonempty.
    if (!enumerate(qp, z)) {
        const Vec2 u = clamp(problem.u_nominal, problem.u_min, problem.u_max);
        double worst = 0.0;
        for (const auto& row : problem.rows) worst = std::max(worst, dot(row.a_row, u) - row.b_rhs);
        z = {u.x, u.y, worst};
    }
    QpSolution sol;
    sol.u_star = {z[0], z[1]};
    sol.slack_used = std::max(0.0, z[2]);
    sol.status = sol.slack_used > kQpFeasTol ? QpStatus::RelaxedFeasible : QpStatus::Optimal;
    sol.active_set = tight_rows(problem, sol.u_star);
    return sol;
}

}  // namespace rsvo
