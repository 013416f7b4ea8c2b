#pragma once

#include <span>

#include "opdet/rational.hpp"

namespace opdet {

/// k-th elementary symmetric function of values; sigma_0 = 1.
/// Throws std::out_of_range when k > values.size().
Rational elem_sym(std::size_t k, std::span<const Rational> values);

/// prod_{i<j} (t_j - t_i); 1 for fewer than two nodes.
Rational vandermonde(std::span<const Rational> nodes);

}  // namespace opdet
