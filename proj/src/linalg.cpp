#include "pmv/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace pmv::linalg {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

RowBasis::RowBasis(std::size_t cols) : cols_(cols) {}

bool RowBasis::insert(Vec row, Rat rhs) {
    if (row.size() != cols_) throw std::invalid_argument("RowBasis::insert: wrong width");
    // Reduce against the current basis.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int p = pivots_[r];
        if (row[p] == 0) continue;
        const Rat f = row[p];
        for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
        rhs -= f * rhs_[r];
    }
    int pivot = -1;
    for (std::size_t j = 0; j < cols_; ++j)
        if (row[j] != 0) { pivot = static_cast<int>(j); break; }
    if (pivot < 0) {
        if (rhs != 0) consistent_ = false;
        return false;
    }
    const Rat inv = Rat(1) / row[pivot];
    for (std::size_t j = 0; j < cols_; ++j) row[j] *= inv;
    rhs *= inv;
    // Eliminate the new pivot from the stored rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][pivot] == 0) continue;
        const Rat f = rows_[r][pivot];
        for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * row[j];
        rhs_[r] -= f * rhs;
    }
    // Keep pivot columns increasing.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    rhs_.insert(rhs_.begin() + pos, std::move(rhs));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

Vec RowBasis::particular_solution() const {
    if (!consistent_) throw std::logic_error("RowBasis: inconsistent system");
    Vec x(cols_, Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = rhs_[r];
    return x;
}

std::vector<Vec> RowBasis::nullspace_basis() const {
    std::vector<char> is_pivot(cols_, 0);
    for (int p : pivots_) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_affine: row count mismatch");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    RowBasis basis(cols);
    for (std::size_t i = 0; i < a.size(); ++i) basis.insert(a[i], b[i]);
    AffineSolution out;
    out.consistent = basis.consistent();
    if (out.consistent) {
        out.particular = basis.particular_solution();
        out.null_basis = basis.nullspace_basis();
    }
    return out;
}

int affine_rank(const std::vector<Vec>& points) {
    if (points.size() <= 1) return 0;
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(vec_sub(points[i], points[0]));
    return rank(std::move(diffs));
}

std::optional<Vec> affine_dependency(const std::vector<Vec>& points) {
    if (points.empty()) return std::nullopt;
    const std::size_t dim = points[0].size(), k = points.size();
    // Columns are the points, one extra all-ones row forces coefficients to
    // sum to zero.
    Mat m(dim + 1, Vec(k, Rat(0)));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = points[j][i];
        m[dim][j] = 1;
    }
    AffineSolution sol = solve_affine(m, Vec(dim + 1, Rat(0)));
    if (sol.null_basis.empty()) return std::nullopt;
    return sol.null_basis.front();
}

namespace {

struct ColReduction {
    IMat a;  // column-echelon form
    IMat u;  // unimodular: original * u == a (columns transformed)
};

// Unimodular column reduction: after the sweep each row has at most one
// nonzero entry among its pivot-column candidates and leading rows of the
// nonzero columns strictly increase.
ColReduction column_reduce(IMat a) {
    const std::size_t rows = a.size();
    const std::size_t n = rows ? a[0].size() : 0;
    IMat u(n, std::vector<Int>(n, Int(0)));
    for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;

    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < rows; ++i) a[i][x] = -a[i][x];
        for (std::size_t i = 0; i < n; ++i) u[i][x] = -u[i][x];
    };

    std::size_t col = 0;
    for (std::size_t r = 0; r < rows && col < n; ++r) {
        for (;;) {
            std::size_t best = n;
            int nonzero = 0;
            for (std::size_t j = col; j < n; ++j) {
                if (a[r][j] == 0) continue;
                ++nonzero;
                if (best == n || abs(a[r][j]) < abs(a[r][best])) best = j;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                col_swap(col, best);
                if (a[r][col] < 0) col_negate(col);
                ++col;
                break;
            }
            for (std::size_t j = col; j < n; ++j) {
                if (j == best || a[r][j] == 0) continue;
                const Int q = a[r][j] / a[r][best];  // truncated division
                if (q != 0) col_addmul(j, best, q);
            }
        }
    }
    return {std::move(a), std::move(u)};
}

}  // namespace

IMat integer_kernel_basis(const IMat& a) {
    if (a.empty()) return {};
    const std::size_t rows = a.size(), n = a[0].size();
    ColReduction red = column_reduce(a);
    IMat basis;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows && zero; ++i) zero = red.a[i][j] == 0;
        if (!zero) continue;
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = red.u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool lattice_member(const std::vector<Vec>& gens, const Vec& target) {
    if (gens.empty()) return vec_is_zero(target);
    const std::size_t dim = target.size();
    for (const Vec& g : gens) require_same_dim(g, target, "lattice_member");
    // Clear denominators with one common scale.
    Int scale = 1;
    const auto fold = [&scale](const Vec& v) {
        for (const Rat& x : v) scale = lcm(scale, denominator(x));
    };
    for (const Vec& g : gens) fold(g);
    fold(target);
    const auto lift = [&scale](const Rat& x) -> Int {
        return numerator(x) * (scale / denominator(x));
    };

    IMat cols(dim, std::vector<Int>(gens.size(), Int(0)));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) cols[i][j] = lift(gens[j][i]);
    std::vector<Int> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = lift(target[i]);

    ColReduction red = column_reduce(std::move(cols));
    // Forward-substitute through the echelon columns.
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::size_t lead = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if (red.a[i][j] != 0) { lead = i; break; }
        if (lead == dim) continue;
        if (x[lead] % red.a[lead][j] != 0) return false;
        const Int c = x[lead] / red.a[lead][j];
        for (std::size_t i = 0; i < dim; ++i) x[i] -= c * red.a[i][j];
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (x[i] != 0) return false;
    return true;
}

}  // namespace pmv::linalg
