#pragma once

#include "pmv/rational.hpp"

#include <optional>
#include <vector>

namespace pmv::linalg {

/// Dense rational matrix, row-major.
using Mat = std::vector<Vec>;

/// Integer matrix for lattice work.
using IMat = std::vector<std::vector<Int>>;

/// In-place reduced row echelon form. Returns the pivot column of each pivot
/// row; rank = returned size. Zero rows sink to the bottom.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Maintains an independent-row basis in reduced form; insert() returns false
/// when the row (with its right-hand side) is already implied, and throws
/// nothing on inconsistency — check consistent() instead. Used to assemble
/// large redundant equality systems without quadratic blowup.
class RowBasis {
  public:
    explicit RowBasis(std::size_t cols);
    /// Reduces [row | rhs] against the basis and adopts it if independent.
    /// Returns true when the row added new information.
    bool insert(Vec row, Rat rhs);
    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::size_t cols() const { return cols_; }
    const Mat& rows() const { return rows_; }
    const Vec& rhs() const { return rhs_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// One solution of the accumulated system (free variables set to 0).
    /// Only valid while consistent().
    Vec particular_solution() const;
    /// Basis of the homogeneous solution space, one vector per free column.
    std::vector<Vec> nullspace_basis() const;

  private:
    std::size_t cols_;
    Mat rows_;           // reduced rows, pivot entries 1, pivot cols increasing
    Vec rhs_;
    std::vector<int> pivots_;
    bool consistent_ = true;
};

struct AffineSolution {
    bool consistent = false;
    Vec particular;               // one solution of a x = b
    std::vector<Vec> null_basis;  // basis of {x : a x = 0}
};

/// Solves a x = b exactly.
AffineSolution solve_affine(const Mat& a, const Vec& b);

/// Rank of the difference set {p_i - p_0}: the affine dimension of the points.
int affine_rank(const std::vector<Vec>& points);

/// A nontrivial affine dependency (coefficients summing to 0 with
/// sum lambda_i p_i = 0), or nullopt when the points are affinely independent.
std::optional<Vec> affine_dependency(const std::vector<Vec>& points);

/// Basis (as rows) of the integer kernel {x in Z^n : a x = 0} of an integer
/// matrix, via unimodular column reduction.
IMat integer_kernel_basis(const IMat& a);

/// Membership of target in the Z-span of the generator vectors (all rational;
/// denominators are cleared internally). Empty generator list spans {0}.
bool lattice_member(const std::vector<Vec>& gens, const Vec& target);

}  // namespace pmv::linalg
