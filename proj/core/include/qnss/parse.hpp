#pragma once

#include <stdexcept>
#include <string>

#include "qnss/matring.hpp"
#include "qnss/ncpoly.hpp"

namespace qnss {

struct SourcePos {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message, const std::string& expected)
      : std::runtime_error("parse error at " + std::to_string(pos.line) + ":" +
                           std::to_string(pos.col) + ": " + message +
                           (expected.empty() ? "" : " (expected " + expected + ")")),
        pos_(pos),
        expected_(expected) {}

  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string expected_;
};

/// Commutative expression over Q[x1..xd]; quaternion units are rejected.
Poly parse_poly(const std::string& text, int nvars);

/// Commutative expression over H_c[x1..xd]: units are central constants,
/// `*` is required between factors.
QPoly parse_qpoly(const std::string& text, int nvars);

/// Free expression over H<x1..xd>: factor order is significant and
/// juxtaposition multiplies, so `x1*i - i*x1` is nonzero.
NCPoly parse_ncpoly(const std::string& text, int nvars);

/// Quaternion literal, e.g. `3/2 + 2i - j + 0k`. Unit letters may be
/// juxtaposed directly onto their rational coefficient.
Quaternion parse_quaternion(const std::string& text);

Rat parse_rational(const std::string& text);

/// Matrix literal `[a, b; c, d]` with entries in the selected grammar.
QMat parse_qmat(const std::string& text, int nvars, bool rational_entries);
NCMat parse_ncmat(const std::string& text, int nvars);

}  // namespace qnss
