#include "qnss/print.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qnss {

namespace {

struct PrintTerm {
  Monomial mon;
  Rat coeff;
  int unit;  // 0 none (rational), 2..4 for i, j, k
};

std::string term_body(const PrintTerm& t, const VarNamer& names) {
  std::ostringstream os;
  Rat mag = abs(t.coeff);
  bool coeff_shown = mag != 1 || (t.mon.is_one() && t.unit == 0);
  if (coeff_shown) os << mag.get_str();
  bool first = !coeff_shown;
  for (const auto& [v, e] : t.mon.exps()) {
    if (!first) os << "*";
    os << names(v);
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (t.unit != 0) {
    if (!first) os << "*";
    os << (t.unit == 2 ? "i" : t.unit == 3 ? "j" : "k");
  }
  return os.str();
}

std::string render_terms(std::vector<PrintTerm> terms, const VarNamer& names) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    bool neg = sgn(terms[t].coeff) < 0;
    if (t == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    os << term_body(terms[t], names);
  }
  return os.str();
}

void collect(const Poly& p, int unit, std::vector<PrintTerm>& out) {
  std::vector<PrintTerm> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back({m, c, unit});
  // Decreasing degrevlex within the component.
  std::sort(terms.begin(), terms.end(), [&](const PrintTerm& x, const PrintTerm& y) {
    return mono_cmp(x.mon, y.mon, MonoOrderKind::DegRevLex, 0, p.nvars()) > 0;
  });
  out.insert(out.end(), terms.begin(), terms.end());
}

std::string quotable_quaternion(const Quaternion& q) {
  // Word coefficients: bare when unambiguous as a single factor,
  // parenthesized otherwise.
  int nonzero = 0;
  for (int s = 1; s <= 4; ++s)
    if (!rat_is_zero(q.component(s))) ++nonzero;
  if (nonzero == 1) {
    for (int s = 1; s <= 4; ++s) {
      const Rat& c = q.component(s);
      if (rat_is_zero(c)) continue;
      if (s == 1 && sgn(c) > 0) return c.get_str();
      if (c == 1 && s > 1) return s == 2 ? "i" : s == 3 ? "j" : "k";
    }
  }
  return "(" + to_string(q) + ")";
}

}  // namespace

VarNamer x_names() {
  return [](int v) { return "x" + std::to_string(v + 1); };
}

VarNamer y_names() {
  return [](int v) {
    return "y" + std::to_string(v / 4 + 1) + "_" + std::to_string(v % 4 + 1);
  };
}

std::string to_string(const Poly& p, const VarNamer& names) {
  std::vector<PrintTerm> terms;
  collect(p, 0, terms);
  return render_terms(std::move(terms), names);
}

std::string to_string(const QPoly& p, const VarNamer& names) {
  std::vector<PrintTerm> terms;
  for (int s = 1; s <= 4; ++s) collect(p.comp(s), s == 1 ? 0 : s, terms);
  return render_terms(std::move(terms), names);
}

std::string to_string(const NCPoly& f) {
  if (f.words().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const NCWord& w : f.words()) {
    Quaternion lead = w.coeffs.front();
    bool neg = lead.is_real() && sgn(lead.a()) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Quaternion shown = neg ? -lead : lead;
    std::vector<std::string> factors;
    if (shown != Quaternion::one() || w.vars.empty()) factors.push_back(quotable_quaternion(shown));
    for (std::size_t t = 0; t < w.vars.size(); ++t) {
      factors.push_back("x" + std::to_string(w.vars[t] + 1));
      const Quaternion& c = w.coeffs[t + 1];
      if (c != Quaternion::one()) factors.push_back(quotable_quaternion(c));
    }
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (t) os << "*";
      os << factors[t];
    }
  }
  return os.str();
}

std::string to_string(const QMat& m, const VarNamer& names) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.n(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.n(); ++c) {
      if (c) os << ", ";
      os << to_string(m.at(r, c), names);
    }
  }
  os << "]";
  return os.str();
}

std::string to_string(const NCMat& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.n(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.n(); ++c) {
      if (c) os << ", ";
      os << to_string(m.at(r, c));
    }
  }
  os << "]";
  return os.str();
}

std::string to_string(const QRow& row, const VarNamer& names) {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (t) os << ", ";
    os << to_string(row[t], names);
  }
  os << "]";
  return os.str();
}

std::string format_basis(const Submodule& n, const VarNamer& names) {
  std::ostringstream os;
  for (const QRow& row : n.canonical_basis()) os << to_string(row, names) << "\n";
  return os.str();
}

}  // namespace qnss
