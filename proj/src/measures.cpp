#include "opdet/measures.hpp"

#include <stdexcept>
#include <variant>

#include "opdet/errors.hpp"

namespace opdet {

namespace {

struct HermiteData {};
struct LaguerreData {
  Rational alpha;
};
struct GegenbauerData {
  Rational lambda;
};
struct ExplicitData {
  std::vector<Rational> moments;
};
struct ModifiedData {
  MeasureSpec base;
  NodeSet nodes;
  UniPoly node_polynomial;
};

}  // namespace

struct MeasureSpec::Impl {
  std::variant<HermiteData, LaguerreData, GegenbauerData, ExplicitData, ModifiedData> data;
  MeasureMemo memo;
};

MeasureSpec MeasureSpec::hermite() {
  auto impl = std::make_shared<Impl>();
  impl->data = HermiteData{};
  return MeasureSpec(std::move(impl));
}

MeasureSpec MeasureSpec::laguerre(const Rational& alpha) {
  if (!(alpha > Rational(-1))) {
    throw std::invalid_argument("Laguerre measure requires alpha > -1, got " + alpha.to_string());
  }
  auto impl = std::make_shared<Impl>();
  impl->data = LaguerreData{alpha};
  return MeasureSpec(std::move(impl));
}

MeasureSpec MeasureSpec::gegenbauer(const Rational& lambda) {
  if (!(lambda > Rational(-1, 2))) {
    throw std::invalid_argument("Gegenbauer measure requires lambda > -1/2, got " + lambda.to_string());
  }
  auto impl = std::make_shared<Impl>();
  impl->data = GegenbauerData{lambda};
  return MeasureSpec(std::move(impl));
}

MeasureSpec MeasureSpec::explicit_moments(std::vector<Rational> moments) {
  if (moments.empty()) throw std::invalid_argument("explicit measure needs at least one moment");
  auto impl = std::make_shared<Impl>();
  impl->data = ExplicitData{std::move(moments)};
  return MeasureSpec(std::move(impl));
}

MeasureSpec MeasureSpec::modified(const MeasureSpec& base, NodeSet nodes) {
  auto impl = std::make_shared<Impl>();
  UniPoly poly = nodes.node_polynomial();
  impl->data = ModifiedData{base, std::move(nodes), std::move(poly)};
  return MeasureSpec(std::move(impl));
}

MeasureKind MeasureSpec::kind() const {
  return static_cast<MeasureKind>(impl_->data.index());
}

bool MeasureSpec::is_classical() const {
  const auto k = kind();
  return k == MeasureKind::Hermite || k == MeasureKind::Laguerre || k == MeasureKind::Gegenbauer;
}

const Rational& MeasureSpec::parameter() const {
  if (const auto* l = std::get_if<LaguerreData>(&impl_->data)) return l->alpha;
  if (const auto* g = std::get_if<GegenbauerData>(&impl_->data)) return g->lambda;
  throw std::logic_error("measure has no family parameter");
}

const std::vector<Rational>& MeasureSpec::explicit_values() const {
  if (const auto* e = std::get_if<ExplicitData>(&impl_->data)) return e->moments;
  throw std::logic_error("measure is not an explicit moment list");
}

const MeasureSpec& MeasureSpec::base() const {
  if (const auto* m = std::get_if<ModifiedData>(&impl_->data)) return m->base;
  throw std::logic_error("measure is not a modified measure");
}

const NodeSet& MeasureSpec::nodes() const {
  if (const auto* m = std::get_if<ModifiedData>(&impl_->data)) return m->nodes;
  throw std::logic_error("measure is not a modified measure");
}

std::optional<std::size_t> MeasureSpec::available_moments() const {
  if (const auto* e = std::get_if<ExplicitData>(&impl_->data)) return e->moments.size();
  if (const auto* m = std::get_if<ModifiedData>(&impl_->data)) {
    auto base_count = m->base.available_moments();
    if (!base_count) return std::nullopt;
    const std::size_t shift = m->nodes.total_multiplicity();
    return *base_count > shift ? *base_count - shift : 0;
  }
  return std::nullopt;
}

std::string MeasureSpec::to_string() const {
  switch (kind()) {
    case MeasureKind::Hermite:
      return "hermite";
    case MeasureKind::Laguerre:
      return "laguerre:alpha=" + parameter().to_string();
    case MeasureKind::Gegenbauer:
      return "gegenbauer:lambda=" + parameter().to_string();
    case MeasureKind::Explicit: {
      std::string out = "moments:";
      const auto& values = explicit_values();
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].to_string();
      }
      return out;
    }
    case MeasureKind::Modified: {
      std::string out = "modified(" + base().to_string() + ";";
      const auto& entries = nodes().entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += entries[i].node.to_string() + "^" + std::to_string(entries[i].multiplicity);
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const MeasureSpec& a, const MeasureSpec& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MeasureKind::Hermite:
      return true;
    case MeasureKind::Laguerre:
    case MeasureKind::Gegenbauer:
      return a.parameter() == b.parameter();
    case MeasureKind::Explicit:
      return a.explicit_values() == b.explicit_values();
    case MeasureKind::Modified:
      return a.nodes() == b.nodes() && a.base() == b.base();
  }
  return false;
}

std::optional<Rational> MeasureMemo::find_moment(std::size_t k) const {
  std::lock_guard lock(mutex_);
  auto it = moments_.find(k);
  if (it == moments_.end()) return std::nullopt;
  return it->second;
}

void MeasureMemo::store_moment(std::size_t k, const Rational& value) const {
  std::lock_guard lock(mutex_);
  moments_.emplace(k, value);
}

std::optional<UniPoly> MeasureMemo::find_orth(std::size_t n) const {
  std::lock_guard lock(mutex_);
  auto it = orth_.find(n);
  if (it == orth_.end()) return std::nullopt;
  return it->second;
}

void MeasureMemo::store_orth(std::size_t n, const UniPoly& p) const {
  std::lock_guard lock(mutex_);
  orth_.emplace(n, p);
}

std::optional<Rational> MeasureMemo::find_hankel_det(std::size_t n) const {
  std::lock_guard lock(mutex_);
  auto it = hankel_.find(n);
  if (it == hankel_.end()) return std::nullopt;
  return it->second;
}

void MeasureMemo::store_hankel_det(std::size_t n, const Rational& value) const {
  std::lock_guard lock(mutex_);
  hankel_.emplace(n, value);
}

const MeasureMemo& memo_of(const MeasureSpec& spec) { return spec.impl().memo; }

namespace {

Rational compute_moment(const MeasureSpec& spec, std::size_t k) {
  const auto& data = spec.impl().data;
  return std::visit(
      [&](const auto& d) -> Rational {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, HermiteData>) {
          if (k % 2) return Rational(0);
          const unsigned j = static_cast<unsigned>(k / 2);
          return factorial(2 * j) / (Rational(2).pow(static_cast<long>(2 * j)) * factorial(j));
        } else if constexpr (std::is_same_v<T, LaguerreData>) {
          return rising(d.alpha + Rational(1), static_cast<unsigned>(k));
        } else if constexpr (std::is_same_v<T, GegenbauerData>) {
          if (k % 2) return Rational(0);
          const unsigned j = static_cast<unsigned>(k / 2);
          return rising(Rational(1, 2), j) / rising(d.lambda + Rational(1), j);
        } else if constexpr (std::is_same_v<T, ExplicitData>) {
          if (k >= d.moments.size()) throw InsufficientMoments(k, d.moments.size());
          return d.moments[k];
        } else {
          // \int t^k prod (t - t_i)^{m_i} d(base)
          Rational sum(0);
          const auto& coeffs = d.node_polynomial.coefficients();
          for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            sum += coeffs[j] * moment(d.base, k + j);
          }
          return sum;
        }
      },
      data);
}

}  // namespace

Rational moment(const MeasureSpec& spec, std::size_t k) {
  const auto& memo = memo_of(spec);
  if (auto cached = memo.find_moment(k)) return *cached;
  Rational value = compute_moment(spec, k);
  memo.store_moment(k, value);
  return value;
}

SquareMatrix<Rational> hankel_matrix(const MeasureSpec& spec, std::size_t n) {
  if (auto available = spec.available_moments(); available && 2 * n >= *available) {
    throw InsufficientMoments(2 * n, *available);
  }
  std::vector<Rational> moments(2 * n + 1);
  for (std::size_t k = 0; k <= 2 * n; ++k) moments[k] = moment(spec, k);
  return SquareMatrix<Rational>::generate(n + 1, [&](std::size_t i, std::size_t j) { return moments[i + j]; });
}

Rational hankel_det(const MeasureSpec& spec, long n) {
  if (n < -1) throw std::invalid_argument("hankel_det: order below -1");
  if (n == -1) return Rational(1);
  const auto order = static_cast<std::size_t>(n);
  const auto& memo = memo_of(spec);
  if (auto cached = memo.find_hankel_det(order)) return *cached;
  Rational value = det_exact(hankel_matrix(spec, order));
  memo.store_hankel_det(order, value);
  return value;
}

ValidationReport validate_measure(const MeasureSpec& spec, std::size_t order) {
  ValidationReport report;
  for (std::size_t k = 0; k <= order; ++k) {
    Rational d = hankel_det(spec, static_cast<long>(k));
    if (!report.first_nonpositive && d.sign() <= 0) report.first_nonpositive = k;
    report.determinants.push_back(std::move(d));
  }
  return report;
}

Rational closed_form_hankel_det(const MeasureSpec& classical, std::size_t n) {
  Rational product(1);
  switch (classical.kind()) {
    case MeasureKind::Hermite:
      for (unsigned k = 1; k <= n; ++k) product *= factorial(k) / Rational(2).pow(k);
      return product;
    case MeasureKind::Laguerre: {
      const Rational a1 = classical.parameter() + Rational(1);
      for (unsigned k = 1; k <= n; ++k) product *= factorial(k) * rising(a1, k);
      return product;
    }
    case MeasureKind::Gegenbauer: {
      const Rational& lambda = classical.parameter();
      if (lambda.is_zero()) throw std::invalid_argument("closed_form_hankel_det: lambda = 0 is not supported");
      // lambda^n/(lambda+1)_n prod_k (2 lambda)_k k! / ((lambda)_k^2 2^{2k})
      product = lambda.pow(static_cast<long>(n)) / rising(lambda + Rational(1), static_cast<unsigned>(n));
      for (unsigned k = 1; k <= n; ++k) {
        const Rational lk = rising(lambda, k);
        product *= rising(Rational(2) * lambda, k) * factorial(k) / (lk * lk * Rational(2).pow(2L * k));
      }
      return product;
    }
    default:
      throw std::invalid_argument("closed_form_hankel_det needs a classical family, got " + classical.to_string());
  }
}

}  // namespace opdet
