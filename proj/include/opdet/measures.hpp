#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opdet/matrix.hpp"
#include "opdet/nodeset.hpp"
#include "opdet/rational.hpp"
#include "opdet/unipoly.hpp"

namespace opdet {

enum class MeasureKind { Hermite, Laguerre, Gegenbauer, Explicit, Modified };

/// A moment-sequence provider. Immutable; copies share one internal memo
/// table, which is synchronized and never changes observable results.
///
///   Hermite            e^{-t^2}/sqrt(pi) on R
///   Laguerre(alpha)    t^alpha e^{-t}/Gamma(alpha+1) on [0, inf), alpha > -1
///   Gegenbauer(lambda) c (1-t^2)^{lambda-1/2} on [-1, 1], lambda > -1/2
///   Explicit           a finite list mu_0..mu_{N-1}
///   Modified           prod (t - t_i)^{m_i} d(base)
class MeasureSpec {
 public:
  static MeasureSpec hermite();
  static MeasureSpec laguerre(const Rational& alpha);
  static MeasureSpec gegenbauer(const Rational& lambda);
  static MeasureSpec explicit_moments(std::vector<Rational> moments);
  static MeasureSpec modified(const MeasureSpec& base, NodeSet nodes);

  MeasureKind kind() const;
  bool is_classical() const;
  /// alpha for Laguerre, lambda for Gegenbauer.
  const Rational& parameter() const;
  const std::vector<Rational>& explicit_values() const;
  const MeasureSpec& base() const;
  const NodeSet& nodes() const;

  /// Number of moments that can be produced; nullopt when unbounded.
  std::optional<std::size_t> available_moments() const;

  /// Text form in the measure grammar (round-trips through parse_measure).
  std::string to_string() const;

  friend bool operator==(const MeasureSpec& a, const MeasureSpec& b);

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  explicit MeasureSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Memo storage hung off a spec. Only caches pure functions of the spec.
class MeasureMemo {
 public:
  std::optional<Rational> find_moment(std::size_t k) const;
  void store_moment(std::size_t k, const Rational& value) const;
  std::optional<UniPoly> find_orth(std::size_t n) const;
  void store_orth(std::size_t n, const UniPoly& p) const;
  std::optional<Rational> find_hankel_det(std::size_t n) const;
  void store_hankel_det(std::size_t n, const Rational& value) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, Rational> moments_;
  mutable std::map<std::size_t, UniPoly> orth_;
  mutable std::map<std::size_t, Rational> hankel_;
};

const MeasureMemo& memo_of(const MeasureSpec& spec);

/// mu_k = \int t^k d mu(t).
Rational moment(const MeasureSpec& spec, std::size_t k);

/// M_n = [mu_{i+j}]_{i,j=0}^n
SquareMatrix<Rational> hankel_matrix(const MeasureSpec& spec, std::size_t n);

/// det M_n; n = -1 gives 1 (empty determinant).
Rational hankel_det(const MeasureSpec& spec, long n);

struct ValidationReport {
  /// det M_k for k = 0..order
  std::vector<Rational> determinants;
  std::optional<std::size_t> first_nonpositive;

  bool positive_definite() const { return !first_nonpositive.has_value(); }
};

/// Positivity of the leading Hankel determinants. Signed measures are reported,
/// never raised; only missing moments throw.
ValidationReport validate_measure(const MeasureSpec& spec, std::size_t order);

/// Product formula for det M_n of a classical family.
Rational closed_form_hankel_det(const MeasureSpec& classical, std::size_t n);

/// Parses `hermite` | `laguerre:alpha=<r>` | `gegenbauer:lambda=<r>` |
/// `moments:<r0>,<r1>,...` | `modified(<spec>;<node>^<mult>,...)`.
MeasureSpec parse_measure(std::string_view text);

}  // namespace opdet
