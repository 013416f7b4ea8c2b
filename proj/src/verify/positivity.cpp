#include <algorithm>
#include <set>

#include "common.hpp"
#include "opdet/dets.hpp"

namespace opdet {

namespace {

// p/q with q <= 4 in [-3, 3]
std::vector<Rational> extended_pool() {
  std::set<Rational> values;
  for (long q = 1; q <= 4; ++q)
    for (long p = -3 * q; p <= 3 * q; ++p) values.insert(Rational(p, q));
  return {values.begin(), values.end()};
}

}  // namespace

VerifyReport positivity_scan(const MeasureSpec& spec, std::size_t n, std::span<const unsigned> mults,
                             std::size_t trials, std::uint64_t seed, std::span<const Rational> nodes) {
  if (mults.empty()) throw std::invalid_argument("positivity_scan needs at least one multiplicity");
  for (unsigned m : mults) {
    if (m == 0 || m % 2 != 0) {
      throw std::invalid_argument("positivity_scan needs even positive multiplicities, got " +
                                  vdetail::join(mults));
    }
  }
  if (!nodes.empty() && nodes.size() != mults.size()) {
    throw std::invalid_argument("positivity_scan: " + std::to_string(nodes.size()) + " nodes for " +
                                std::to_string(mults.size()) + " multiplicities");
  }
  if (!nodes.empty()) vdetail::node_set(nodes, mults).require_distinct("positivity_scan");

  VerifyReport report;
  report.identity = "POSITIVITY";
  report.spec = spec.to_string();
  report.plan.seed = seed;
  report.plan.node_pool = extended_pool();
  vdetail::CaseLog log(report);

  std::vector<std::vector<Rational>> tuples;
  if (!nodes.empty()) {
    tuples.emplace_back(nodes.begin(), nodes.end());
  } else {
    vdetail::Sampler sampler(seed);
    // repeats allowed here: trials may exceed the number of distinct tuples
    const auto pool = report.plan.node_pool;
    for (std::size_t i = 0; i < trials; ++i) tuples.push_back(sampler.tuples(pool, mults.size(), 1).front());
  }
  for (const auto& t : tuples) {
    log.run({{"n", std::to_string(n)}, {"mults", vdetail::join(mults)}, {"nodes", vdetail::join(t)},
             {"relation", ">"}},
            [&]() -> vdetail::Outcome {
              const NodeSet set = vdetail::node_set(t, mults);
              const Rational v = slater_general(spec, n, set, RowPlan::standard(set));
              if (v.sign() > 0) return std::nullopt;
              return vdetail::Mismatch{v.to_string(), "0", {}};
            });
  }
  if (mults.size() == 1) {
    for (long k = -12; k <= 12; ++k) {
      const Rational x(k, 4);
      log.run({{"n", std::to_string(n)}, {"m", std::to_string(mults[0])}, {"x", x.to_string()},
               {"relation", ">="}, {"form", "Wronskian"}},
              [&]() -> vdetail::Outcome {
                const Rational w = wronskian(spec, n, mults[0], x);
                if (w.sign() >= 0) return std::nullopt;
                return vdetail::Mismatch{w.to_string(), "0", {}};
              });
    }
  }
  return report;
}

}  // namespace opdet
