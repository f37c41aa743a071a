#pragma once

#include <functional>
#include <string>

#include "qnss/matring.hpp"
#include "qnss/ncpoly.hpp"
#include "qnss/submodule.hpp"

namespace qnss {

using VarNamer = std::function<std::string(int)>;

/// Default naming x1..xd.
VarNamer x_names();
/// Naming for phi-images: variable 4(t-1)+s-1 prints as y<t>_<s>.
VarNamer y_names();

/// Canonical, reparsable rendering. Terms are listed in decreasing
/// degrevlex order, quaternion components in basis order.
std::string to_string(const Poly& p, const VarNamer& names = x_names());
std::string to_string(const QPoly& p, const VarNamer& names = x_names());
std::string to_string(const NCPoly& f);
std::string to_string(const QMat& m, const VarNamer& names = x_names());
std::string to_string(const NCMat& m);
std::string to_string(const QRow& row, const VarNamer& names = x_names());

/// One line per basis row, e.g. `[x1*x2, 0]`; stable across runs.
std::string format_basis(const Submodule& n, const VarNamer& names = x_names());

}  // namespace qnss
