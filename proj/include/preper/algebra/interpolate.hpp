#pragma once

#include <vector>

#include "preper/algebra/unipoly.hpp"

namespace preper {

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Nodes must be distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace preper
