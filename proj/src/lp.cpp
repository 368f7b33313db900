#include "pmv/lp.hpp"

#include <algorithm>
#include <limits>

namespace pmv::lp {

namespace {

// Dense tableau: rows 0..m-1 hold [coeffs | rhs], row m holds the reduced
// objective with the negated objective value in the last column.
struct Tableau {
    std::size_t m, n;  // constraint rows, structural+artificial columns
    linalg::Mat t;
    std::vector<int> basis;

    void pivot(std::size_t row, std::size_t col) {
        const Rat inv = Rat(1) / t[row][col];
        for (auto& v : t[row]) v *= inv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rat f = t[i][col];
            for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = static_cast<int>(col);
    }

    // Bland's rule: entering = lowest-index negative reduced cost,
    // leaving = lexicographically smallest ratio / basis index.
    // Returns false when optimal, throws nothing; sets unbounded flag.
    bool step(bool& unbounded) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j)
            if (t[m][j] < 0) { enter = j; break; }
        if (enter == n) return false;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rat lhs = t[i][n] * t[leave][enter];
            const Rat rhs = t[leave][n] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) { unbounded = true; return false; }
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

Result solve(const linalg::Mat& a, const Vec& b, const Vec& c) {
    const std::size_t m = a.size();
    const std::size_t nvars = c.size();
    for (const auto& row : a)
        if (row.size() != nvars) throw std::invalid_argument("lp::solve: ragged matrix");
    if (b.size() != m) throw std::invalid_argument("lp::solve: rhs size mismatch");

    Tableau tb;
    tb.m = m;
    tb.n = nvars + m;  // artificials appended
    tb.t.assign(m + 1, Vec(tb.n + 1, Rat(0)));
    tb.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < nvars; ++j) tb.t[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
        tb.t[i][tb.n] = flip ? Rat(-b[i]) : b[i];
        tb.t[i][nvars + i] = 1;
        tb.basis[i] = static_cast<int>(nvars + i);
    }
    // Phase one objective: sum of artificials, expressed in nonbasic terms.
    for (std::size_t j = 0; j <= tb.n; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < m; ++i) s += tb.t[i][j];
        if (j < nvars || j == tb.n) tb.t[m][j] = -s;
    }

    bool unbounded = false;
    while (tb.step(unbounded)) {}
    if (unbounded) throw std::logic_error("lp::solve: phase one unbounded");
    if (tb.t[m][tb.n] != 0) return {Status::infeasible, {}, Rat(0)};

    // Drive surviving artificials out of the basis; rows that cannot pivot on
    // a structural column are redundant and get neutralized.
    for (std::size_t i = 0; i < m; ++i) {
        if (tb.basis[i] < static_cast<int>(nvars)) continue;
        std::size_t col = nvars;
        for (std::size_t j = 0; j < nvars; ++j)
            if (tb.t[i][j] != 0) { col = j; break; }
        if (col < nvars) {
            tb.pivot(i, col);
        } else {
            for (std::size_t j = 0; j <= tb.n; ++j) tb.t[i][j] = 0;
            tb.t[i][tb.basis[i]] = 1;  // keep the zeroed artificial basic
        }
    }
    // Forbid artificials from re-entering.
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = nvars; j < tb.n; ++j) tb.t[i][j] = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] >= static_cast<int>(nvars)) tb.t[i][tb.basis[i]] = 1;

    // Phase two objective row.
    for (std::size_t j = 0; j <= tb.n; ++j) tb.t[m][j] = 0;
    for (std::size_t j = 0; j < nvars; ++j) tb.t[m][j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const int bj = tb.basis[i];
        if (bj >= static_cast<int>(nvars)) continue;
        if (tb.t[m][bj] == 0) continue;
        const Rat f = tb.t[m][bj];
        for (std::size_t j = 0; j <= tb.n; ++j) tb.t[m][j] -= f * tb.t[i][j];
    }

    unbounded = false;
    while (tb.step(unbounded)) {}
    if (unbounded) return {Status::unbounded, {}, Rat(0)};

    Result res;
    res.status = Status::optimal;
    res.x.assign(nvars, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] < static_cast<int>(nvars)) res.x[tb.basis[i]] = tb.t[i][tb.n];
    res.objective = 0;
    for (std::size_t j = 0; j < nvars; ++j) res.objective += c[j] * res.x[j];
    return res;
}

Result feasible_point(const linalg::Mat& a, const Vec& b) {
    const std::size_t nvars = a.empty() ? 0 : a[0].size();
    return solve(a, b, Vec(nvars, Rat(0)));
}

}  // namespace pmv::lp
