#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opdet/measures.hpp"
#include "opdet/nodeset.hpp"
#include "opdet/rational.hpp"

namespace opdet {

enum class IdentityId {
  LEC_Q,
  LEC_R,
  W1M,
  W2M,
  COR_LEC_Q,
  COR_LEC_R,
  MAIN2_Q,
  MAIN2_R,
  MAIN,
  DELTA_INT,
  PN_DETQ,
  QN_RECUR,
  Q_EQ_R,
  DETQ_INT,
  F_SUM,
  F_GAP,
  GAP_3x3_SECOND,
  GAP_3x3_J,
  DET_G,
  DET_G_PHI,
  TURAN_LAGUERRE_N2,
  HERMITE_MAIN,
  HERMITE_WRONSKIAN,
  LAGUERRE_MAIN,
  GEGEN_MAIN,
  GL_CONVERGENCE,
  LAPLACE_DET_NONNEG,
  // the double-gap expansion; reported but never fails a suite
  F_DOUBLE_GAP,
};

std::string_view identity_name(IdentityId id);
/// Throws std::invalid_argument for unknown names.
IdentityId parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();
bool is_conjecture(IdentityId id);
/// Family-specific ids accept only their family; GL_CONVERGENCE needs Laguerre.
bool applies_to(IdentityId id, const MeasureSpec& spec);
/// Specs `verify --all` runs an id against.
std::vector<MeasureSpec> default_specs(IdentityId id);

struct SamplePlan {
  static constexpr std::uint64_t kDefaultSeed = 20240917;

  std::uint64_t seed = kDefaultSeed;
  std::vector<Rational> node_pool = default_node_pool();
  unsigned n_max = 3;
  unsigned m_max = 3;
  unsigned r_max = 3;
  unsigned mult_sum_max = 4;
  std::size_t max_matrix_order = 8;
  unsigned tuples_per_shape = 8;

  /// {0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2, 5/2, -3}
  static std::vector<Rational> default_node_pool();
};

using CaseParams = std::vector<std::pair<std::string, std::string>>;

struct CaseFailure {
  CaseParams params;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string identity;
  std::string spec;
  SamplePlan plan;
  std::size_t cases_run = 0;
  /// Cases an Explicit spec could not feed (not enough moments).
  std::size_t cases_skipped = 0;
  std::vector<CaseFailure> failures;
  bool conjecture = false;

  bool passed() const { return failures.empty(); }
};

/// (1/n!) \int prod_j [prod_i (s_j - t_i)^{m_i} (s_j - x)] prod_{i<j} (s_i - s_j)^2 prod d mu(s_j),
/// the (s_j - x) factor present only with extra_x. Expands the integrand in n
/// variables and contracts each monomial against the moments.
Rational selberg_integral(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes,
                          const std::optional<Rational>& extra_x = std::nullopt, std::size_t cap = 4);

/// Throws InfeasiblePlan when the id does not apply to spec or the pool is too small.
VerifyReport verify_identity(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan = {});

/// Every id over default_specs(id), or over `only` for the ids that apply to it.
std::vector<VerifyReport> verify_all(const SamplePlan& plan, const std::optional<MeasureSpec>& only = std::nullopt);
/// Conjecture reports never count against the suite.
bool suite_passed(const std::vector<VerifyReport>& reports);

/// Strict positivity of the confluent Slater determinant for even multiplicities,
/// over `trials` random distinct-node tuples (or just `nodes` when given), plus
/// the Wronskian on a grid when there is a single node.
VerifyReport positivity_scan(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults,
                             std::size_t trials, std::uint64_t seed, std::span<const Rational> nodes = {});

struct JensenRow {
  std::size_t m = 0;
  /// g_m(L mu; x/m)
  Rational value;
  std::optional<double> target;
  std::optional<double> error;
  /// y^m W(p_1, ..., p_m; 1/y) / prod_{k<m} k! det M_k at y = x/m, small m only.
  std::optional<Rational> wronskian_form;
  /// det[g_{m,i+j}(x/m)]_{i,j<n} for n = 1, 2, 3 (as far as the moments reach).
  std::vector<Rational> laplace_dets;
};

struct JensenTable {
  std::string spec;
  Rational x;
  std::vector<JensenRow> rows;
};

/// Laguerre or Explicit specs, x >= 0.
JensenTable jensen_convergence(const MeasureSpec& spec, const Rational& x, std::size_t m_max);

/// Shortest decimal that round-trips, e.g. "0.6666666666666666".
std::string decimal(double value);

}  // namespace opdet
