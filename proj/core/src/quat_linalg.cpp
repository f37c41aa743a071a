#include "qnss/quat_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qnss {

QuatMatrix::QuatMatrix(std::vector<QuatVec> rows) : rows_(rows.size()), cols_(0) {
  if (!rows.empty()) cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
  }
  entries_ = std::move(rows);
}

QuatMatrix QuatMatrix::identity(std::size_t n) {
  QuatMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t) m.at(t, t) = Quaternion::one();
  return m;
}

bool QuatMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& q : row)
      if (!q.is_zero()) return false;
  return true;
}

QuatMatrix QuatMatrix::conjugate_transpose() const {
  QuatMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = entries_[r][c].conjugate();
  return m;
}

QuatMatrix QuatMatrix::operator+(const QuatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  QuatMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = entries_[r][c] + rhs.entries_[r][c];
  return m;
}

QuatMatrix QuatMatrix::operator-(const QuatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  QuatMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = entries_[r][c] - rhs.entries_[r][c];
  return m;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  QuatMatrix m(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      Quaternion acc;
      for (std::size_t t = 0; t < cols_; ++t) acc += entries_[r][t] * rhs.entries_[t][c];
      m.at(r, c) = acc;
    }
  return m;
}

QuatVec QuatMatrix::apply(const QuatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  QuatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Quaternion acc;
    for (std::size_t c = 0; c < cols_; ++c) acc += entries_[r][c] * v[c];
    out[r] = acc;
  }
  return out;
}

namespace {

// Reduced row echelon form with left scalar multiplication. Pivot rule:
// first nonzero entry in column order.
RowReduceResult reduce_left(const QuatMatrix& m) {
  RowReduceResult res;
  res.side = Side::Left;
  res.echelon = m;
  QuatMatrix& w = res.echelon;
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
    std::size_t p = r;
    while (p < w.rows() && w.at(p, col).is_zero()) ++p;
    if (p == w.rows()) continue;
    if (p != r) {
      for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w.at(p, c), w.at(r, c));
      res.ops.push_back({ElimOp::Swap, r, p, Quaternion()});
    }
    Quaternion inv = w.at(r, col).inverse();
    if (inv != Quaternion::one()) {
      for (std::size_t c = 0; c < w.cols(); ++c) w.at(r, c) = inv * w.at(r, c);
      res.ops.push_back({ElimOp::Scale, r, 0, inv});
    }
    for (std::size_t q = 0; q < w.rows(); ++q) {
      if (q == r || w.at(q, col).is_zero()) continue;
      Quaternion f = w.at(q, col);
      for (std::size_t c = 0; c < w.cols(); ++c) w.at(q, c) -= f * w.at(r, c);
      res.ops.push_back({ElimOp::AddMul, q, r, -f});
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

RowReduceResult row_reduce(const QuatMatrix& m, Side side) {
  if (side == Side::Left) return reduce_left(m);
  // Column reduction with right scalars is row reduction of the
  // conjugate transpose; factors conjugate back when replayed as
  // column operations.
  RowReduceResult lhs = reduce_left(m.conjugate_transpose());
  RowReduceResult res;
  res.side = Side::Right;
  res.echelon = lhs.echelon.conjugate_transpose();
  res.rank = lhs.rank;
  res.pivot_cols = lhs.pivot_cols;  // pivot row indices of the column form
  res.ops.reserve(lhs.ops.size());
  for (const auto& op : lhs.ops) {
    ElimOp t = op;
    if (op.kind != ElimOp::Swap) t.factor = op.factor.conjugate();
    res.ops.push_back(t);
  }
  return res;
}

QuatMatrix apply_ops(const QuatMatrix& m, const std::vector<ElimOp>& ops, Side side) {
  QuatMatrix w = m;
  for (const auto& op : ops) {
    if (side == Side::Left) {
      switch (op.kind) {
        case ElimOp::Swap:
          for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w.at(op.target, c), w.at(op.source, c));
          break;
        case ElimOp::Scale:
          for (std::size_t c = 0; c < w.cols(); ++c) w.at(op.target, c) = op.factor * w.at(op.target, c);
          break;
        case ElimOp::AddMul:
          for (std::size_t c = 0; c < w.cols(); ++c) w.at(op.target, c) += op.factor * w.at(op.source, c);
          break;
      }
    } else {
      switch (op.kind) {
        case ElimOp::Swap:
          for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w.at(r, op.target), w.at(r, op.source));
          break;
        case ElimOp::Scale:
          for (std::size_t r = 0; r < w.rows(); ++r) w.at(r, op.target) = w.at(r, op.target) * op.factor;
          break;
        case ElimOp::AddMul:
          for (std::size_t r = 0; r < w.rows(); ++r) w.at(r, op.target) += w.at(r, op.source) * op.factor;
          break;
      }
    }
  }
  return w;
}

QuatSubspace::QuatSubspace(Side side, std::size_t ambient_dim,
                           const std::vector<QuatVec>& generators)
    : side_(side), ambient_(ambient_dim) {
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("generator dimension mismatch");
  }
  if (generators.empty()) return;
  QuatMatrix m(generators);  // generators as rows
  if (side == Side::Left) {
    RowReduceResult r = reduce_left(m);
    for (std::size_t t = 0; t < r.rank; ++t) basis_.push_back(r.echelon.row(t));
  } else {
    // Column vectors: reduce the matrix whose columns are the generators.
    QuatMatrix cols(ambient_dim, generators.size());
    for (std::size_t c = 0; c < generators.size(); ++c)
      for (std::size_t r = 0; r < ambient_dim; ++r) cols.at(r, c) = generators[c][r];
    RowReduceResult rr = row_reduce(cols, Side::Right);
    for (std::size_t c = 0; c < rr.rank; ++c) {
      QuatVec v(ambient_dim);
      for (std::size_t r = 0; r < ambient_dim; ++r) v[r] = rr.echelon.at(r, c);
      basis_.push_back(v);
    }
  }
}

bool QuatSubspace::contains(const QuatVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
  QuatVec w = v;
  if (side_ == Side::Left) {
    for (const auto& b : basis_) {
      std::size_t p = 0;
      while (p < ambient_ && b[p].is_zero()) ++p;
      if (p == ambient_) continue;
      Quaternion f = w[p];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) w[c] -= f * b[c];
    }
  } else {
    for (const auto& b : basis_) {
      std::size_t p = 0;
      while (p < ambient_ && b[p].is_zero()) ++p;
      if (p == ambient_) continue;
      Quaternion f = w[p];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) w[c] -= b[c] * f;
    }
  }
  for (const auto& q : w)
    if (!q.is_zero()) return false;
  return true;
}

QuatSubspace null_space_right(const QuatMatrix& a) {
  RowReduceResult r = reduce_left(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<QuatVec> gens;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QuatVec x(a.cols());
    x[f] = Quaternion::one();
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
      x[r.pivot_cols[t]] = -r.echelon.at(t, f);
    gens.push_back(std::move(x));
  }
  return QuatSubspace(Side::Right, a.cols(), gens);
}

QuatSubspace annihilator(const QuatSubspace& s) {
  const std::size_t m = s.ambient_dim();
  if (s.dim() == 0) {
    std::vector<QuatVec> full;
    for (std::size_t t = 0; t < m; ++t) {
      QuatVec e(m);
      e[t] = Quaternion::one();
      full.push_back(e);
    }
    return QuatSubspace(s.side() == Side::Left ? Side::Right : Side::Left, m, full);
  }
  if (s.side() == Side::Left) {
    // S° = right null space of the matrix whose rows are the basis of S.
    return null_space_right(QuatMatrix(s.basis()));
  }
  // T_o = {m : m B = 0} with B the column matrix of T; conjugating turns
  // it into the right null space of B*.
  QuatMatrix b(m, s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c)
    for (std::size_t r = 0; r < m; ++r) b.at(r, c) = s.basis()[c][r];
  QuatSubspace ns = null_space_right(b.conjugate_transpose());
  std::vector<QuatVec> rows;
  for (const auto& y : ns.basis()) {
    QuatVec row(m);
    for (std::size_t t = 0; t < m; ++t) row[t] = y[t].conjugate();
    rows.push_back(row);
  }
  return QuatSubspace(Side::Left, m, rows);
}

LinearSolution solve_linear(const QuatMatrix& a, const QuatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("matrix/vector shape mismatch");
  QuatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RowReduceResult red = reduce_left(aug);
  LinearSolution sol;
  for (std::size_t p : red.pivot_cols) {
    if (p == a.cols()) return sol;  // pivot in the constant column
  }
  sol.consistent = true;
  sol.particular.assign(a.cols(), Quaternion());
  for (std::size_t t = 0; t < red.pivot_cols.size(); ++t)
    sol.particular[red.pivot_cols[t]] = red.echelon.at(t, a.cols());
  QuatSubspace null_space = null_space_right(a);
  sol.nullspace_basis = null_space.basis();
  return sol;
}

}  // namespace qnss
