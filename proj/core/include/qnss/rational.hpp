#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qnss {

/// Exact rational scalar. All kernel arithmetic is over Q; no floating
/// point anywhere in the library.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("invalid rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace qnss
