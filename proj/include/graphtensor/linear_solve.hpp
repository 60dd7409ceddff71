#pragma once

#include "graphtensor/bigint.hpp"

#include <optional>
#include <vector>

namespace graphtensor {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves m * x = b exactly by Gaussian elimination over the rationals.
/// Returns nullopt when m is singular. Throws ArgumentError if m is not
/// square or b has the wrong length.
std::optional<std::vector<Rational>> solve_linear_exact(RationalMatrix m, std::vector<Rational> b);

}  // namespace graphtensor
