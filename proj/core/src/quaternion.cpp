#include "qnss/quaternion.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qnss {

Quaternion Quaternion::unit(int index) {
  switch (index) {
    case 1: return one();
    case 2: return i();
    case 3: return j();
    case 4: return k();
    default: throw std::invalid_argument("quaternion basis index must be 1..4");
  }
}

const Rat& Quaternion::component(int index) const {
  switch (index) {
    case 1: return a_;
    case 2: return b_;
    case 3: return c_;
    case 4: return d_;
    default: throw std::invalid_argument("quaternion component index must be 1..4");
  }
}

bool Quaternion::is_zero() const {
  return rat_is_zero(a_) && rat_is_zero(b_) && rat_is_zero(c_) && rat_is_zero(d_);
}

Quaternion Quaternion::inverse() const {
  Rat n = norm();
  if (rat_is_zero(n)) throw std::domain_error("zero quaternion has no inverse");
  Rat inv = 1 / n;
  return Quaternion(a_ * inv, -b_ * inv, -c_ * inv, -d_ * inv);
}

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  d_ += rhs.d_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  d_ -= rhs.d_;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
  // Hamilton product in the (1, i, j, k) basis, ij = k.
  Rat a = a_ * rhs.a_ - b_ * rhs.b_ - c_ * rhs.c_ - d_ * rhs.d_;
  Rat b = a_ * rhs.b_ + b_ * rhs.a_ + c_ * rhs.d_ - d_ * rhs.c_;
  Rat c = a_ * rhs.c_ - b_ * rhs.d_ + c_ * rhs.a_ + d_ * rhs.b_;
  Rat d = a_ * rhs.d_ + b_ * rhs.c_ - c_ * rhs.b_ + d_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

namespace {

// (z - izi - jzj - kzk)/4: scalar part of z computed by two-sided
// multiplications alone.
Quaternion scalar_part_by_ring_ops(const Quaternion& z) {
  const Quaternion qi = Quaternion::i();
  const Quaternion qj = Quaternion::j();
  const Quaternion qk = Quaternion::k();
  Quaternion sum = z - qi * z * qi - qj * z * qj - qk * z * qk;
  return Rat(1, 4) * sum;
}

}  // namespace

Rat component_extract(const Quaternion& w, int index) {
  if (index < 1 || index > 4) {
    throw std::invalid_argument("component index must be 1..4");
  }
  // Left-multiplying by the conjugate basis unit moves the wanted
  // coefficient into the scalar slot: conj(u)*u = 1 for u in (1,i,j,k).
  Quaternion shifted = Quaternion::unit(index).conjugate() * w;
  return scalar_part_by_ring_ops(shifted).a();
}

std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  static const char* units[4] = {"", "i", "j", "k"};
  bool first = true;
  for (int idx = 1; idx <= 4; ++idx) {
    const Rat& c = q.component(idx);
    if (rat_is_zero(c)) continue;
    Rat abs_c = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (idx == 1 || abs_c != 1) os << abs_c.get_str();
    os << units[idx - 1];
  }
  if (first) os << "0";
  return os;
}

}  // namespace qnss
