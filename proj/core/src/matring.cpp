#include "qnss/matring.hpp"

#include <stdexcept>

namespace qnss {

QuatVec mat_evaluate(const QMat& p, std::span<const Rat> point, const QuatVec& v) {
  if (static_cast<int>(v.size()) != p.n()) throw std::invalid_argument("vector rank mismatch");
  QuatMatrix m(p.n(), p.n());
  for (int r = 0; r < p.n(); ++r)
    for (int c = 0; c < p.n(); ++c) m.at(r, c) = p.at(r, c).evaluate(point);
  return m.apply(v);
}

QuatVec mat_evaluate(const NCMat& f, std::span<const Quaternion> point, const QuatVec& v) {
  if (static_cast<int>(v.size()) != f.n()) throw std::invalid_argument("vector rank mismatch");
  QuatMatrix m(f.n(), f.n());
  for (int r = 0; r < f.n(); ++r)
    for (int c = 0; c < f.n(); ++c) m.at(r, c) = f.at(r, c).evaluate(point);
  return m.apply(v);
}

QMat phi_n(const NCMat& f) {
  QMat out(4 * f.nvars(), f.n());
  for (int r = 0; r < f.n(); ++r)
    for (int c = 0; c < f.n(); ++c) out.at(r, c) = phi(f.at(r, c));
  return out;
}

bool LeftIdeal::contains(const QMat& m) const {
  if (m.n() != rows.rank() || m.nvars() != rows.nvars())
    throw std::invalid_argument("matrix shape mismatch");
  for (int r = 0; r < m.n(); ++r) {
    if (!rows.member(m.row(r))) return false;
  }
  return true;
}

LeftIdeal ideal_of_rows(RingTag ring, const std::vector<QMat>& mats, MonoOrderKind term_order) {
  if (mats.empty()) throw std::invalid_argument("no generator matrices");
  const int n = mats.front().n();
  const int nvars = mats.front().nvars();
  std::vector<QRow> gens;
  for (const QMat& m : mats) {
    if (m.n() != n || m.nvars() != nvars) throw std::invalid_argument("matrix shape mismatch");
    for (int r = 0; r < n; ++r) gens.push_back(m.row(r));
  }
  return LeftIdeal{Submodule(ring, nvars, n, std::move(gens), term_order)};
}

LeftIdeal ideal_of_rows(const std::vector<NCMat>& mats, MonoOrderKind term_order) {
  std::vector<QMat> imgs;
  imgs.reserve(mats.size());
  for (const NCMat& m : mats) imgs.push_back(phi_n(m));
  return ideal_of_rows(RingTag::QuaternionCentral, imgs, term_order);
}

std::vector<QRow> hermitian_square_rows(const std::vector<QMat>& mats) {
  if (mats.empty()) throw std::invalid_argument("no matrices");
  const int n = mats.front().n();
  const int nvars = mats.front().nvars();
  std::vector<QRow> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    QRow acc = qrow_zero(nvars, n);
    for (const QMat& m : mats) {
      if (m.n() != n || m.nvars() != nvars) throw std::invalid_argument("matrix shape mismatch");
      for (int j = 0; j < n; ++j) {
        acc = qrow_add(std::move(acc), qrow_left_mul(m.at(j, k).involute(), m.row(j)));
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

QMat first_row_matrix(const QRow& f) {
  const int n = static_cast<int>(f.size());
  const int nvars = f.empty() ? 0 : f.front().nvars();
  QMat m(nvars, n);
  for (int c = 0; c < n; ++c) m.at(0, c) = f[c];
  return m;
}

}  // namespace qnss
