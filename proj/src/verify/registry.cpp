#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <stdexcept>

#include "common.hpp"
#include "opdet/multipoly.hpp"
#include "opdet/opoly.hpp"

namespace opdet {

namespace {

struct Entry {
  IdentityId id;
  std::string_view name;
};

constexpr std::array<Entry, 28> kIds{{
    {IdentityId::LEC_Q, "LEC_Q"},
    {IdentityId::LEC_R, "LEC_R"},
    {IdentityId::W1M, "W1M"},
    {IdentityId::W2M, "W2M"},
    {IdentityId::COR_LEC_Q, "COR_LEC_Q"},
    {IdentityId::COR_LEC_R, "COR_LEC_R"},
    {IdentityId::MAIN2_Q, "MAIN2_Q"},
    {IdentityId::MAIN2_R, "MAIN2_R"},
    {IdentityId::MAIN, "MAIN"},
    {IdentityId::DELTA_INT, "DELTA_INT"},
    {IdentityId::PN_DETQ, "PN_DETQ"},
    {IdentityId::QN_RECUR, "QN_RECUR"},
    {IdentityId::Q_EQ_R, "Q_EQ_R"},
    {IdentityId::DETQ_INT, "DETQ_INT"},
    {IdentityId::F_SUM, "F_SUM"},
    {IdentityId::F_GAP, "F_GAP"},
    {IdentityId::GAP_3x3_SECOND, "GAP_3x3_SECOND"},
    {IdentityId::GAP_3x3_J, "GAP_3x3_J"},
    {IdentityId::DET_G, "DET_G"},
    {IdentityId::DET_G_PHI, "DET_G_PHI"},
    {IdentityId::TURAN_LAGUERRE_N2, "TURAN_LAGUERRE_N2"},
    {IdentityId::HERMITE_MAIN, "HERMITE_MAIN"},
    {IdentityId::HERMITE_WRONSKIAN, "HERMITE_WRONSKIAN"},
    {IdentityId::LAGUERRE_MAIN, "LAGUERRE_MAIN"},
    {IdentityId::GEGEN_MAIN, "GEGEN_MAIN"},
    {IdentityId::GL_CONVERGENCE, "GL_CONVERGENCE"},
    {IdentityId::LAPLACE_DET_NONNEG, "LAPLACE_DET_NONNEG"},
    {IdentityId::F_DOUBLE_GAP, "F_DOUBLE_GAP"},
}};

std::vector<MeasureSpec> generic_specs() {
  std::vector<Rational> hermite_moments;
  const MeasureSpec h = MeasureSpec::hermite();
  for (std::size_t k = 0; k < 10; ++k) hermite_moments.push_back(moment(h, k));
  return {h,
          MeasureSpec::laguerre(0),
          MeasureSpec::laguerre(Rational(3, 2)),
          MeasureSpec::gegenbauer(Rational(1, 2)),
          MeasureSpec::gegenbauer(Rational(3, 2)),
          MeasureSpec::explicit_moments(std::move(hermite_moments))};
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  throw std::invalid_argument("unknown identity id");
}

IdentityId parse_identity(std::string_view name) {
  for (const auto& e : kIds)
    if (e.name == name) return e.id;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& e : kIds) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool is_conjecture(IdentityId id) { return id == IdentityId::F_DOUBLE_GAP; }

bool applies_to(IdentityId id, const MeasureSpec& spec) {
  switch (id) {
    case IdentityId::HERMITE_MAIN:
    case IdentityId::HERMITE_WRONSKIAN:
      return spec.kind() == MeasureKind::Hermite;
    case IdentityId::LAGUERRE_MAIN:
    case IdentityId::GL_CONVERGENCE:
      return spec.kind() == MeasureKind::Laguerre;
    case IdentityId::GEGEN_MAIN:
      return spec.kind() == MeasureKind::Gegenbauer && !spec.parameter().is_zero();
    default:
      return true;
  }
}

std::vector<MeasureSpec> default_specs(IdentityId id) {
  switch (id) {
    case IdentityId::HERMITE_MAIN:
    case IdentityId::HERMITE_WRONSKIAN:
      return {MeasureSpec::hermite()};
    case IdentityId::LAGUERRE_MAIN:
      return {MeasureSpec::laguerre(0), MeasureSpec::laguerre(Rational(3, 2))};
    case IdentityId::GEGEN_MAIN:
      return {MeasureSpec::gegenbauer(Rational(1, 2)), MeasureSpec::gegenbauer(Rational(3, 2))};
    case IdentityId::GL_CONVERGENCE:
      return {MeasureSpec::laguerre(0)};
    case IdentityId::DET_G:
    case IdentityId::DET_G_PHI:
    case IdentityId::TURAN_LAGUERRE_N2:
      return {MeasureSpec::hermite(), MeasureSpec::laguerre(0), MeasureSpec::laguerre(Rational(3, 2))};
    default:
      return generic_specs();
  }
}

std::vector<Rational> SamplePlan::default_node_pool() {
  return {0, 1, -1, Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3), 2, Rational(5, 2), -3};
}

Rational selberg_integral(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes,
                          const std::optional<Rational>& extra_x, std::size_t cap) {
  if (n > cap) {
    throw std::invalid_argument("selberg_integral: n = " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(cap));
  }
  if (n == 0) return 1;
  UniPoly factor = nodes.node_polynomial();
  if (extra_x) factor *= UniPoly::linear_root(*extra_x);

  MultiPoly integrand = MultiPoly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly::Terms terms;
    for (std::size_t k = 0; k < factor.coefficients().size(); ++k) {
      if (factor.coeff(k).is_zero()) continue;
      MultiPoly::Exponents e(n, 0);
      e[j] = static_cast<unsigned>(k);
      terms.emplace(std::move(e), factor.coeff(k));
    }
    integrand *= MultiPoly(n, std::move(terms));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const MultiPoly d = MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
      integrand *= d * d;
    }
  }
  Rational total;
  for (const auto& [exponents, c] : integrand.terms()) {
    Rational term = c;
    for (unsigned a : exponents) term *= moment(spec, a);
    total += term;
  }
  return total / factorial(static_cast<unsigned>(n));
}

VerifyReport verify_identity(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan) {
  if (!applies_to(id, spec)) {
    throw InfeasiblePlan(std::string(identity_name(id)) + " does not apply to " + spec.to_string());
  }
  VerifyReport report;
  report.identity = std::string(identity_name(id));
  report.spec = spec.to_string();
  report.plan = plan;
  report.conjecture = is_conjecture(id);
  vdetail::CaseLog log(report);
  switch (id) {
    case IdentityId::LEC_Q:
    case IdentityId::LEC_R:
    case IdentityId::W1M:
    case IdentityId::W2M:
    case IdentityId::COR_LEC_Q:
    case IdentityId::COR_LEC_R:
    case IdentityId::MAIN2_Q:
    case IdentityId::MAIN2_R:
    case IdentityId::MAIN:
    case IdentityId::DELTA_INT:
      vdetail::check_slater_family(id, spec, plan, log);
      break;
    case IdentityId::PN_DETQ:
    case IdentityId::QN_RECUR:
    case IdentityId::Q_EQ_R:
    case IdentityId::DETQ_INT:
    case IdentityId::F_SUM:
    case IdentityId::F_GAP:
    case IdentityId::GAP_3x3_SECOND:
    case IdentityId::GAP_3x3_J:
    case IdentityId::F_DOUBLE_GAP:
      vdetail::check_lemmas(id, spec, plan, log);
      break;
    case IdentityId::DET_G:
    case IdentityId::DET_G_PHI:
    case IdentityId::TURAN_LAGUERRE_N2:
    case IdentityId::GL_CONVERGENCE:
    case IdentityId::LAPLACE_DET_NONNEG:
      vdetail::check_jensen(id, spec, plan, log);
      break;
    case IdentityId::HERMITE_MAIN:
    case IdentityId::HERMITE_WRONSKIAN:
    case IdentityId::LAGUERRE_MAIN:
    case IdentityId::GEGEN_MAIN:
      vdetail::check_classical(id, spec, plan, log);
      break;
  }
  return report;
}

std::vector<VerifyReport> verify_all(const SamplePlan& plan, const std::optional<MeasureSpec>& only) {
  std::vector<VerifyReport> reports;
  for (IdentityId id : all_identities()) {
    if (only) {
      if (applies_to(id, *only)) reports.push_back(verify_identity(id, *only, plan));
      continue;
    }
    for (const auto& spec : default_specs(id)) reports.push_back(verify_identity(id, spec, plan));
  }
  return reports;
}

bool suite_passed(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerifyReport& r) { return r.conjecture || r.passed(); });
}

std::string decimal(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("decimal rendering failed");
  return std::string(buf, end);
}

namespace vdetail {

Outcome compare(const Rational& lhs, const Rational& rhs, CaseParams extra) {
  if (lhs == rhs) return std::nullopt;
  return Mismatch{lhs.to_string(), rhs.to_string(), std::move(extra)};
}

Outcome compare(const UniPoly& lhs, const UniPoly& rhs, CaseParams extra) {
  if (lhs == rhs) return std::nullopt;
  return Mismatch{lhs.to_string(), rhs.to_string(), std::move(extra)};
}

std::vector<std::vector<Rational>> Sampler::tuples(const std::vector<Rational>& pool, std::size_t r,
                                                   std::size_t count) {
  std::vector<Rational> distinct;
  for (const auto& v : pool)
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  if (r > distinct.size()) {
    throw InfeasiblePlan("node pool of " + std::to_string(distinct.size()) + " distinct values cannot supply " +
                         std::to_string(r) + " distinct nodes");
  }
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    std::vector<Rational> bag = distinct;
    std::vector<Rational> tuple;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t pick = i + below(bag.size() - i);
      std::swap(bag[i], bag[pick]);
      tuple.push_back(bag[i]);
    }
    if (seen.insert(tuple).second) out.push_back(std::move(tuple));
  }
  return out;
}

std::uint64_t salted(std::uint64_t seed, IdentityId id) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(id) + 1));
}

std::vector<std::vector<unsigned>> compositions(unsigned r_max, unsigned sum_max) {
  std::vector<std::vector<unsigned>> out;
  // by total, then by length, then lexicographic
  for (unsigned total = 1; total <= sum_max; ++total) {
    for (unsigned len = 1; len <= std::min(r_max, total); ++len) {
      std::vector<unsigned> parts(len, 1);
      parts.back() = total - (len - 1);
      auto emit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == len) {
          parts[pos] = left;
          out.push_back(parts);
          return;
        }
        for (unsigned v = 1; v + (len - pos - 1) <= left; ++v) {
          parts[pos] = v;
          self(self, pos + 1, left - v);
        }
      };
      emit(emit, 0, total);
    }
  }
  return out;
}

std::vector<Rational> eval_points(std::size_t count, bool avoid_zero) {
  std::vector<Rational> out;
  auto push = [&](const Rational& v) {
    if (out.size() >= count) return;
    if (avoid_zero && v.is_zero()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& v : SamplePlan::default_node_pool()) push(v);
  for (long k = 3; out.size() < count; ++k) {
    push(k);
    push(-k - 1);
  }
  return out;
}

std::vector<Rational> offset_points(std::size_t count) {
  std::vector<Rational> out = eval_points(count);
  for (auto& v : out) v += Rational(1, 7);
  return out;
}

std::string join(std::span<const Rational> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += values[i].to_string();
  }
  return s;
}

std::string join(std::span<const unsigned> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

NodeSet node_set(std::span<const Rational> nodes, std::span<const unsigned> mults) {
  std::vector<NodeEntry> entries;
  for (std::size_t i = 0; i < nodes.size(); ++i) entries.push_back({nodes[i], mults[i]});
  return NodeSet(std::move(entries));
}

Rational sign(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

Rational det_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 1;
  return det_exact(SquareMatrix<Rational>::from_rows(rows));
}

std::size_t row_degree_bound(const std::vector<std::vector<UniPoly>>& rows) {
  std::size_t total = 0;
  for (const auto& row : rows) {
    int best = 0;
    for (const auto& p : row) best = std::max(best, p.degree());
    total += static_cast<std::size_t>(best);
  }
  return total;
}

Rational det_at(const std::vector<std::vector<UniPoly>>& rows, const Rational& x) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& p : row) r.push_back(p(x));
    values.push_back(std::move(r));
  }
  return det_rows(values);
}

UniPoly det_poly(const std::vector<std::vector<UniPoly>>& rows) {
  if (rows.empty()) return UniPoly::constant(1);
  return det_exact(SquareMatrix<UniPoly>::from_rows(rows));
}

Rational f_plain(const MeasureSpec& spec, std::span<const unsigned> indices, const Rational& x) {
  const std::size_t n = indices.size();
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(q_poly(spec, indices[i] + j)(x));
  return det_rows(rows);
}

std::vector<unsigned> index_range(unsigned lo, unsigned hi, std::initializer_list<unsigned> omit) {
  std::vector<unsigned> out;
  for (unsigned k = lo; k <= hi; ++k)
    if (std::find(omit.begin(), omit.end(), k) == omit.end()) out.push_back(k);
  return out;
}

Rational ref_B(const MeasureSpec& spec, std::size_t n, unsigned m) {
  Rational out = sign(static_cast<long>(n * m));
  for (unsigned k = 1; k < m; ++k) out *= hankel_det(spec, static_cast<long>(k + n) - 1);
  return out;
}

Rational ref_C(const MeasureSpec& spec, std::size_t n, unsigned m) {
  Rational out = sign(static_cast<long>(n * m));
  for (unsigned k = 1; k < m; ++k) out *= factorial(k) * hankel_det(spec, static_cast<long>(k + n) - 1);
  return out;
}

namespace {

Rational node_factorials(std::span<const unsigned> mults, bool printed) {
  Rational out = 1;
  for (unsigned mi : mults) {
    const unsigned top = printed ? mi : mi - 1;
    for (unsigned j = 1; j <= top; ++j) out *= factorial(j);
  }
  return out;
}

unsigned total(std::span<const unsigned> mults) {
  unsigned m = 0;
  for (unsigned v : mults) m += v;
  return m;
}

}  // namespace

Rational ref_BVec(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults, bool printed) {
  const unsigned m = total(mults);
  Rational out = sign(static_cast<long>(n * (m + 1))) * node_factorials(mults, printed);
  for (unsigned k = 1; k <= m; ++k) out *= hankel_det(spec, static_cast<long>(k + n) - 1);
  return out;
}

Rational ref_CVec(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults, bool printed) {
  const unsigned m = total(mults);
  Rational out = sign(static_cast<long>(n * m)) * node_factorials(mults, printed);
  for (unsigned k = 1; k < m; ++k) out *= hankel_det(spec, static_cast<long>(k + n) - 1);
  return out;
}

}  // namespace vdetail
}  // namespace opdet
