#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "opdet/errors.hpp"
#include "opdet/matrix.hpp"
#include "opdet/measures.hpp"
#include "opdet/nodeset.hpp"
#include "opdet/unipoly.hpp"
#include "opdet/verify.hpp"

namespace opdet::vdetail {

struct Mismatch {
  std::string lhs;
  std::string rhs;
  CaseParams extra;
};
using Outcome = std::optional<Mismatch>;

Outcome compare(const Rational& lhs, const Rational& rhs, CaseParams extra = {});
Outcome compare(const UniPoly& lhs, const UniPoly& rhs, CaseParams extra = {});

/// Runs one case; a case that runs out of moments is counted as skipped.
class CaseLog {
 public:
  explicit CaseLog(VerifyReport& report) : report_(report) {}

  template <class F>
  void run(CaseParams params, F&& body) {
    try {
      Outcome outcome = body();
      ++report_.cases_run;
      if (outcome) {
        for (auto& kv : outcome->extra) params.push_back(std::move(kv));
        report_.failures.push_back({std::move(params), std::move(outcome->lhs), std::move(outcome->rhs)});
      }
    } catch (const InsufficientMoments&) {
      ++report_.cases_skipped;
    }
  }

 private:
  VerifyReport& report_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  /// Up to count distinct ordered tuples of r pairwise distinct pool entries.
  std::vector<std::vector<Rational>> tuples(const std::vector<Rational>& pool, std::size_t r, std::size_t count);

 private:
  std::mt19937_64 rng_;
};

std::uint64_t salted(std::uint64_t seed, IdentityId id);

/// All (m_1, ..., m_r) with m_i >= 1, r <= r_max, sum <= sum_max.
std::vector<std::vector<unsigned>> compositions(unsigned r_max, unsigned sum_max);

/// count distinct rationals: small ones first, then growing integers.
std::vector<Rational> eval_points(std::size_t count, bool avoid_zero = false);
/// eval_points shifted by 1/7, so never equal to an eval point.
std::vector<Rational> offset_points(std::size_t count);

std::string join(std::span<const Rational> values);
std::string join(std::span<const unsigned> values);
NodeSet node_set(std::span<const Rational> nodes, std::span<const unsigned> mults);

Rational sign(long exponent);
Rational det_rows(const std::vector<std::vector<Rational>>& rows);
/// sum_i max_j deg(rows[i][j])
std::size_t row_degree_bound(const std::vector<std::vector<UniPoly>>& rows);
Rational det_at(const std::vector<std::vector<UniPoly>>& rows, const Rational& x);
UniPoly det_poly(const std::vector<std::vector<UniPoly>>& rows);

/// q-side F determinant det[q_{l_i+j-1}(x)] from q_poly.
Rational f_plain(const MeasureSpec& spec, std::span<const unsigned> indices, const Rational& x);
/// {lo, ..., hi} minus the listed indices.
std::vector<unsigned> index_range(unsigned lo, unsigned hi, std::initializer_list<unsigned> omit = {});

// Structure constants rebuilt from Hankel determinants.
Rational ref_B(const MeasureSpec& spec, std::size_t n, unsigned m);
Rational ref_C(const MeasureSpec& spec, std::size_t n, unsigned m);
Rational ref_BVec(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults, bool printed = false);
Rational ref_CVec(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults, bool printed = false);

void check_slater_family(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log);
void check_lemmas(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log);
void check_jensen(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log);
void check_classical(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log);

}  // namespace opdet::vdetail
