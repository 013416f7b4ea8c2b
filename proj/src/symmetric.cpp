#include "opdet/symmetric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace opdet {

Rational elem_sym(std::size_t k, std::span<const Rational> values) {
  if (k > values.size()) {
    throw std::out_of_range("elem_sym: k = " + std::to_string(k) + " exceeds " + std::to_string(values.size()) +
                            " values");
  }
  // e[j] holds sigma_j of the prefix processed so far
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = Rational(1);
  for (const Rational& v : values) {
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

Rational vandermonde(std::span<const Rational> nodes) {
  Rational product(1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) product *= nodes[j] - nodes[i];
  return product;
}

}  // namespace opdet
