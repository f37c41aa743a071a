#pragma once

#include <vector>

#include "qnss/ncpoly.hpp"
#include "qnss/submodule.hpp"

namespace qnss {

/// Square matrix over a polynomial ring with involution. Entry is QPoly
/// (rings Q[x] and H_c[x]) or NCPoly (H[x]); the involution is the
/// conjugated transpose [a_ij]* = [a*_ji].
template <typename Entry>
class PolyMatrix {
 public:
  PolyMatrix(int nvars, int n)
      : nvars_(nvars), n_(n), entries_(n, std::vector<Entry>(n, Entry(nvars))) {}
  explicit PolyMatrix(std::vector<std::vector<Entry>> entries)
      : nvars_(0), n_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
    for (const auto& row : entries_) {
      if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix is not square");
      for (const Entry& e : row) nvars_ = e.nvars();
    }
    for (const auto& row : entries_)
      for (const Entry& e : row)
        if (e.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
  }

  static PolyMatrix identity(int nvars, int n) {
    PolyMatrix m(nvars, n);
    for (int t = 0; t < n; ++t)
      m.at(t, t) = Entry::constant(nvars, Quaternion::one());
    return m;
  }

  int n() const { return n_; }
  int nvars() const { return nvars_; }
  Entry& at(int r, int c) { return entries_[r][c]; }
  const Entry& at(int r, int c) const { return entries_[r][c]; }
  const std::vector<Entry>& row(int r) const { return entries_[r]; }

  bool is_zero() const {
    for (const auto& row : entries_)
      for (const Entry& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix involute() const {
    PolyMatrix m(nvars_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m.at(c, r) = entries_[r][c].involute();
    return m;
  }

  PolyMatrix operator+(const PolyMatrix& rhs) const {
    check_shape(rhs);
    PolyMatrix m(nvars_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m.at(r, c) = entries_[r][c] + rhs.entries_[r][c];
    return m;
  }

  PolyMatrix operator-(const PolyMatrix& rhs) const {
    check_shape(rhs);
    PolyMatrix m(nvars_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m.at(r, c) = entries_[r][c] - rhs.entries_[r][c];
    return m;
  }

  PolyMatrix operator*(const PolyMatrix& rhs) const {
    check_shape(rhs);
    PolyMatrix m(nvars_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        Entry acc(nvars_);
        for (int t = 0; t < n_; ++t) acc = acc + entries_[r][t] * rhs.entries_[t][c];
        m.at(r, c) = acc;
      }
    return m;
  }

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.n_ == y.n_ && x.nvars_ == y.nvars_ && x.entries_ == y.entries_;
  }

 private:
  void check_shape(const PolyMatrix& rhs) const {
    if (n_ != rhs.n_ || nvars_ != rhs.nvars_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int nvars_;
  int n_;
  std::vector<std::vector<Entry>> entries_;
};

using QMat = PolyMatrix<QPoly>;
using NCMat = PolyMatrix<NCPoly>;

/// P(a) v for rational points a.
QuatVec mat_evaluate(const QMat& p, std::span<const Rat> point, const QuatVec& v);
/// F(a) v for quaternionic points a; equals phi_n(F)(rho(a)) v.
QuatVec mat_evaluate(const NCMat& f, std::span<const Quaternion> point, const QuatVec& v);

/// Entrywise phi: M_n(H[x1..xd]) -> M_n(H_c[y_{1,1}..y_{d,4}]).
QMat phi_n(const NCMat& f);

/// Left ideal of M_n(A) in its row-submodule normal form: a matrix
/// belongs iff all of its rows do.
struct LeftIdeal {
  Submodule rows;

  bool contains(const QMat& m) const;
};

/// The left ideal generated by matrices, i.e. the submodule generated by
/// all of their rows.
LeftIdeal ideal_of_rows(RingTag ring, const std::vector<QMat>& mats,
                        MonoOrderKind term_order = MonoOrderKind::DegRevLex);
/// H[x] matrices are transported through phi_n first.
LeftIdeal ideal_of_rows(const std::vector<NCMat>& mats,
                        MonoOrderKind term_order = MonoOrderKind::DegRevLex);

/// For each k = 1..n the row sum_{i,j} a*_{i,j,k} a_{i,j} over all rows
/// a_{i,j} of all matrices; these are exactly the rows of sum_i A_i* A_i.
std::vector<QRow> hermitian_square_rows(const std::vector<QMat>& mats);

/// Matrix with the given first row and zero elsewhere (the lifting that
/// carries row witnesses to matrix witnesses).
QMat first_row_matrix(const QRow& f);

}  // namespace qnss
