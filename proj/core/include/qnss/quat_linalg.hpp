#pragma once

#include <cstddef>
#include <vector>

#include "qnss/quaternion.hpp"

namespace qnss {

using QuatVec = std::vector<Quaternion>;

/// Dense matrix over H. Entries are exact; there is no pivoting for
/// stability, only the deterministic first-nonzero rule.
class QuatMatrix {
 public:
  QuatMatrix() : rows_(0), cols_(0) {}
  QuatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows, QuatVec(cols)) {}
  explicit QuatMatrix(std::vector<QuatVec> rows);

  static QuatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Quaternion& at(std::size_t r, std::size_t c) { return entries_[r][c]; }
  const Quaternion& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const QuatVec& row(std::size_t r) const { return entries_[r]; }

  bool is_zero() const;
  QuatMatrix conjugate_transpose() const;

  QuatMatrix operator+(const QuatMatrix& rhs) const;
  QuatMatrix operator-(const QuatMatrix& rhs) const;
  QuatMatrix operator*(const QuatMatrix& rhs) const;
  QuatVec apply(const QuatVec& v) const;  // matrix * column vector

  friend bool operator==(const QuatMatrix& x, const QuatMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<QuatVec> entries_;
};

enum class Side { Left, Right };

/// One elementary operation of the reduction, replayable on any matrix of
/// matching shape. For Side::Left these are row operations with left
/// scalar multiplication; for Side::Right, column operations with right
/// scalar multiplication.
struct ElimOp {
  enum Kind { Swap, Scale, AddMul } kind;
  std::size_t target;
  std::size_t source;  // for Swap/AddMul
  Quaternion factor;   // for Scale/AddMul
};

struct RowReduceResult {
  QuatMatrix echelon;
  std::size_t rank = 0;
  Side side = Side::Left;
  std::vector<ElimOp> ops;
  std::vector<std::size_t> pivot_cols;  // pivot columns (Left) or rows (Right)
};

/// Gauss reduction over H. Side::Left produces the reduced row echelon
/// form of the left row space (unit pivots, zeros above and below);
/// Side::Right the analogous reduced form of the right column space.
RowReduceResult row_reduce(const QuatMatrix& m, Side side);

/// Replays a transform record on a fresh matrix.
QuatMatrix apply_ops(const QuatMatrix& m, const std::vector<ElimOp>& ops, Side side);

/// Finitely generated left or right subspace of H^n in canonical reduced
/// echelon form. Left subspaces collect row vectors closed under left
/// scalar multiplication, right subspaces column vectors closed under
/// right scalar multiplication.
class QuatSubspace {
 public:
  QuatSubspace(Side side, std::size_t ambient_dim)
      : side_(side), ambient_(ambient_dim) {}
  QuatSubspace(Side side, std::size_t ambient_dim, const std::vector<QuatVec>& generators);

  Side side() const { return side_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QuatVec>& basis() const { return basis_; }

  bool contains(const QuatVec& v) const;

  friend bool operator==(const QuatSubspace& x, const QuatSubspace& y) {
    return x.side_ == y.side_ && x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

 private:
  Side side_;
  std::size_t ambient_;
  std::vector<QuatVec> basis_;  // canonical echelon basis
};

/// The correspondence S -> S° between left and right subspaces: for a
/// left subspace, all columns m with <s, m> = 0 for every s in S; for a
/// right subspace, all rows m with <m, t> = 0. Applying it twice returns
/// the input, and dim S + dim S° = ambient_dim.
QuatSubspace annihilator(const QuatSubspace& s);

struct LinearSolution {
  bool consistent = false;
  QuatVec particular;                    // one solution of A x = b
  std::vector<QuatVec> nullspace_basis;  // right basis of {x : A x = 0}
};

/// Solves A x = b over H (x a column, scalars acting on the right of the
/// null space basis). Inconsistency is a valid result, not an error.
LinearSolution solve_linear(const QuatMatrix& a, const QuatVec& b);

/// Right null space {x : A x = 0} as a right subspace of H^cols.
QuatSubspace null_space_right(const QuatMatrix& a);

}  // namespace qnss
