// Determinant side from dets; Hankel side rebuilt here from opoly/measures.

#include "common.hpp"
#include "opdet/dets.hpp"
#include "opdet/opoly.hpp"
#include "opdet/symmetric.hpp"

namespace opdet::vdetail {

namespace {

CaseParams shape(std::size_t n, std::span<const unsigned> mults, std::span<const Rational> t) {
  return {{"n", std::to_string(n)}, {"mults", join(mults)}, {"nodes", join(t)}};
}

Rational hankel_q_local(const MeasureSpec& spec, std::size_t n, const NodeSet& prefix, const Rational& x,
                        std::size_t offset) {
  std::vector<UniPoly> q;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) q.push_back(q_nodes(spec, prefix, k + offset));
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(q[i + j](x));
  return det_rows(rows);
}

Rational hankel_r_local(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes) {
  std::vector<Rational> r;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) r.push_back(r_value(spec, nodes, k));
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(r[i + j]);
  return det_rows(rows);
}

void lec(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, id));
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    for (unsigned m = 1; m <= plan.m_max; ++m) {
      const std::vector<unsigned> ones(m, 1);
      for (const auto& t : sampler.tuples(plan.node_pool, m, plan.tuples_per_shape)) {
        log.run(shape(n, ones, t), [&] {
          const Rational lhs = slater(spec, n, t) / vandermonde(t);
          const NodeSet all = NodeSet::simple(t);
          const Rational h = id == IdentityId::LEC_Q ? hankel_q_local(spec, n, all.prefix(m - 1), t.back(), 1)
                                                     : hankel_r_local(spec, n, all);
          return compare(lhs, ref_B(spec, n, m) * h);
        });
      }
    }
  }
}

// r_j from the sigma-expansion of prod (t - t_i) against the base moments
Rational r_sigma(const MeasureSpec& spec, std::span<const Rational> t, std::size_t j) {
  const std::size_t m = t.size();
  Rational out;
  for (std::size_t k = 0; k <= m; ++k) out += sign(static_cast<long>(k)) * elem_sym(k, t) * moment(spec, j + m - k);
  return out;
}

void w_small(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, id));
  const std::size_t n = id == IdentityId::W1M ? 1 : 2;
  for (unsigned m = 1; m <= plan.m_max; ++m) {
    const std::vector<unsigned> ones(m, 1);
    for (const auto& t : sampler.tuples(plan.node_pool, m, plan.tuples_per_shape)) {
      log.run(shape(n, ones, t), [&] {
        const Rational lhs = slater(spec, n, t) / vandermonde(t);
        Rational rhs;
        if (n == 1) {
          rhs = sign(m);
          for (unsigned k = 1; k < m; ++k) rhs *= hankel_det(spec, k);
          Rational sum;
          for (std::size_t k = 0; k <= m; ++k) sum += sign(static_cast<long>(k)) * elem_sym(k, t) * moment(spec, m - k);
          rhs *= sum;
        } else {
          rhs = 1;
          for (unsigned k = 1; k < m; ++k) rhs *= hankel_det(spec, k + 1);
          const Rational r0 = r_sigma(spec, t, 0), r1 = r_sigma(spec, t, 1), r2 = r_sigma(spec, t, 2);
          rhs *= r2 * r0 - r1 * r1;
        }
        return compare(lhs, rhs);
      });
    }
  }
}

void cor_lec(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    for (unsigned m = 1; m <= plan.m_max; ++m) {
      log.run({{"n", std::to_string(n)}, {"m", std::to_string(m)}}, [&]() -> Outcome {
        std::vector<std::vector<UniPoly>> rows(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            rows[i].push_back(id == IdentityId::COR_LEC_Q ? q_poly(spec, m + i + j) : r_poly(spec, m, i + j));
        const Rational c = ref_C(spec, n, m);
        const std::size_t bound = std::max<std::size_t>(n * m, row_degree_bound(rows));
        for (const auto& x : eval_points(bound + 1)) {
          if (auto bad = compare(wronskian(spec, n, m, x), c * det_at(rows, x), {{"x", x.to_string()}})) return bad;
        }
        return std::nullopt;
      });
    }
  }
  if (id == IdentityId::COR_LEC_R && spec.kind() == MeasureKind::Hermite) {
    // W(p_2, p_3; x) = x^4/8 + 3/32 with C_{2,2} = det M_2 = 1/4
    log.run({{"witness", "W(p_2,p_3)"}}, [&]() -> Outcome {
      if (auto bad = compare(ref_C(spec, 2, 2), Rational(1, 4), {{"quantity", "C_{2,2}"}})) return bad;
      const UniPoly expected{Rational(3, 32), 0, 0, 0, Rational(1, 8)};
      for (const auto& x : eval_points(5)) {
        if (auto bad = compare(wronskian(spec, 2, 2, x), expected(x), {{"x", x.to_string()}})) return bad;
      }
      return std::nullopt;
    });
  }
}

enum class Side { Q, R, Bvec, Selberg };

Rational slater_side(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes) {
  return slater_general(spec, n, nodes, RowPlan::standard(nodes));
}

// One multiplicity-vector identity; `printed` swaps in the uncorrected constant.
Rational general_rhs(Side side, const MeasureSpec& spec, std::size_t n, const NodeSet& nodes,
                     const std::optional<Rational>& x, bool printed) {
  const std::vector<unsigned> mults = nodes.multiplicities();
  switch (side) {
    case Side::Q: {
      const NodeEntry& last = nodes.entries().back();
      return ref_CVec(spec, n, mults, printed) *
             hankel_q_local(spec, n, nodes.prefix(nodes.size() - 1), last.node, last.multiplicity);
    }
    case Side::R:
      return ref_CVec(spec, n, mults, printed) * hankel_r_local(spec, n, nodes);
    case Side::Bvec: {
      Rational out = ref_BVec(spec, n, mults, printed) * nodes.cross_product();
      for (const auto& e : nodes.entries()) out *= (*x - e.node).pow(e.multiplicity);
      return out * hankel_q_local(spec, n, nodes, *x, 1);
    }
    case Side::Selberg:
      return ref_CVec(spec, n, mults, printed) * nodes.cross_product() * selberg_integral(spec, n, nodes);
  }
  return {};
}

Rational general_lhs(Side side, const MeasureSpec& spec, std::size_t n, const NodeSet& nodes,
                     const std::optional<Rational>& x) {
  switch (side) {
    case Side::Q:
    case Side::R:
      return slater_side(spec, n, nodes) / nodes.cross_product();
    case Side::Bvec:
      return slater_side(spec, n, nodes.with({*x, 1}));
    case Side::Selberg:
      return slater_side(spec, n, nodes);
  }
  return {};
}

void general(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  const Side side = id == IdentityId::MAIN2_Q   ? Side::Q
                    : id == IdentityId::MAIN2_R ? Side::R
                    : id == IdentityId::MAIN    ? Side::Bvec
                                                : Side::Selberg;
  const bool with_x = side == Side::Bvec;
  // the integral side expands in n variables; keep its degree small
  const unsigned sum_max = side == Side::Selberg ? std::min(plan.mult_sum_max, 3u) : plan.mult_sum_max;
  Sampler sampler(salted(plan.seed, id));
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    for (const auto& mults : compositions(plan.r_max, sum_max)) {
      unsigned m = 0;
      for (unsigned v : mults) m += v;
      if (m + (with_x ? 1 : 0) > plan.max_matrix_order) continue;
      for (const auto& t : sampler.tuples(plan.node_pool, mults.size() + (with_x ? 1 : 0), plan.tuples_per_shape)) {
        const std::span<const Rational> nodes_only(t.data(), mults.size());
        const NodeSet nodes = node_set(nodes_only, mults);
        const std::optional<Rational> x = with_x ? std::optional<Rational>(t.back()) : std::nullopt;
        CaseParams params = shape(n, mults, nodes_only);
        if (x) params.emplace_back("x", x->to_string());
        log.run(std::move(params), [&] {
          return compare(general_lhs(side, spec, n, nodes, x), general_rhs(side, spec, n, nodes, x, false));
        });
      }
    }
  }
  // the printed prod_{j<=m_i} j! must not agree at n = 1, m = (2)
  const std::vector<unsigned> two{2};
  for (const auto& t0 : plan.node_pool) {
    const NodeSet nodes{{t0, 2}};
    std::optional<Rational> x;
    if (with_x) {
      for (const auto& v : plan.node_pool)
        if (v != t0) {
          x = v;
          break;
        }
      if (!x) continue;
    }
    bool used = false;
    CaseParams params{{"guard", "printed constant"}, {"n", "1"}, {"mults", "2"}, {"nodes", t0.to_string()}};
    if (x) params.emplace_back("x", x->to_string());
    log.run(std::move(params), [&]() -> Outcome {
      const Rational lhs = general_lhs(side, spec, 1, nodes, x);
      if (lhs.is_zero()) return std::nullopt;
      used = true;
      const Rational printed = general_rhs(side, spec, 1, nodes, x, true);
      if (printed != lhs) return std::nullopt;
      return Mismatch{lhs.to_string(), printed.to_string() + " (printed constant agrees)", {}};
    });
    if (used) break;
  }
}

}  // namespace

void check_slater_family(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  switch (id) {
    case IdentityId::LEC_Q:
    case IdentityId::LEC_R:
      lec(id, spec, plan, log);
      break;
    case IdentityId::W1M:
    case IdentityId::W2M:
      w_small(id, spec, plan, log);
      break;
    case IdentityId::COR_LEC_Q:
    case IdentityId::COR_LEC_R:
      cor_lec(id, spec, plan, log);
      break;
    default:
      general(id, spec, plan, log);
      break;
  }
}

}  // namespace opdet::vdetail
