#include "copbench/simplex.hpp"

#include "copbench/errors.hpp"

namespace copbench {

// Tableau layout: rows 0..m-1 are constraints over columns 0..n+m-1
// (original variables then slacks) with the rhs in column n+m; row m is
// the objective row holding reduced costs z_j - c_j and the negated
// objective value in the rhs cell.
SimplexResult simplex_max(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    check(static_cast<int>(b.size()) == m, "b size mismatch");
    for (const auto& row : A) check(static_cast<int>(row.size()) == n, "A row size mismatch");
    for (const auto& bi : b) check(bi >= 0, "simplex_max needs b >= 0");

    const int cols = n + m + 1;
    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols - 1] = b[i];
    }
    for (int j = 0; j < n; ++j) T[m][j] = -c[j];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering = lowest-index column with negative reduced cost
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break; // optimal
        // ratio test, ties by lowest basis variable index
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols - 1] / T[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) {
            SimplexResult r;
            r.status = SimplexResult::Status::Unbounded;
            return r;
        }
        // pivot on (leave, enter)
        Rational piv = T[leave][enter];
        for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    SimplexResult r;
    r.status = SimplexResult::Status::Optimal;
    r.objective = T[m][cols - 1]; // z accumulates as +objective here
    r.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) r.x[basis[i]] = T[i][cols - 1];
    r.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) r.dual[i] = T[m][n + i]; // reduced costs of slacks
    return r;
}

} // namespace copbench
