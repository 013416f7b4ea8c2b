#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opdet {

/// A finitely specified measure ran out of moments.
class InsufficientMoments : public std::out_of_range {
 public:
  InsufficientMoments(std::size_t required_order, std::size_t available)
      : std::out_of_range("insufficient moments: need moment of order " +
                          std::to_string(required_order) + ", only " +
                          std::to_string(available) + " supplied"),
        required_order_(required_order),
        available_(available) {}

  std::size_t required_order() const noexcept { return required_order_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_order_;
  std::size_t available_;
};

/// A Hankel determinant that must be nonzero vanished.
class DegenerateMeasure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A verification plan cannot be carried out for the requested spec.
class InfeasiblePlan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace opdet
