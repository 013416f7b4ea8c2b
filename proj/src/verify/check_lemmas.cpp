// Shifted-moment lemmas: F determinants, gaps, q recursion.

#include "common.hpp"
#include "opdet/dets.hpp"
#include "opdet/opoly.hpp"

namespace opdet::vdetail {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

// q_n(t_1..t_m; x) by peeling nodes off with q_n(..t_m; x) = q_{n+1}(..; x) + (x - t_m) q_n(..; x)
UniPoly q_by_recursion(const MeasureSpec& spec, std::span<const Rational> t, std::size_t n) {
  if (t.empty()) return q_poly(spec, n);
  const auto rest = t.first(t.size() - 1);
  return q_by_recursion(spec, rest, n + 1) + UniPoly::linear_root(t.back()) * q_by_recursion(spec, rest, n);
}

// F[q_l...](t; x) with q_k(t; x) = q_{k+1}(x) + (x - t) q_k(x)
Rational f_one_node(const MeasureSpec& spec, std::span<const unsigned> indices, const Rational& t,
                    const Rational& x) {
  const std::size_t n = indices.size();
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = indices[i] + j;
      rows[i].push_back(q_poly(spec, k + 1)(x) + (x - t) * q_poly(spec, k)(x));
    }
  }
  return det_rows(rows);
}

template <class F>
Outcome over_line(std::size_t degree_bound, F&& both) {
  for (const auto& x : eval_points(degree_bound + 1)) {
    const auto [lhs, rhs] = both(x);
    if (auto bad = compare(lhs, rhs, {{"x", x.to_string()}})) return bad;
  }
  return std::nullopt;
}

template <class F>
Outcome over_grid(const std::vector<Rational>& ts, std::size_t x_bound, F&& both) {
  for (const auto& t : ts) {
    for (const auto& x : eval_points(x_bound + 1)) {
      const auto [lhs, rhs] = both(t, x);
      if (auto bad = compare(lhs, rhs, {{"t", t.to_string()}, {"x", x.to_string()}})) return bad;
    }
  }
  return std::nullopt;
}

void pn_detq(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (std::size_t n = 0; n <= plan.n_max; ++n) {
    log.run({{"n", str(n)}}, [&] {
      std::vector<std::vector<UniPoly>> rows(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(q_poly(spec, i + j + 1));
      return compare(orth_poly(spec, n), sign(static_cast<long>(n)) * det_poly(rows));
    });
  }
}

void qn_recur(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, IdentityId::QN_RECUR));
  for (unsigned m = 1; m <= plan.m_max; ++m) {
    for (const auto& t : sampler.tuples(plan.node_pool, m, plan.tuples_per_shape)) {
      for (std::size_t n = 0; n <= plan.n_max; ++n) {
        log.run({{"item", "1"}, {"n", str(n)}, {"nodes", join(t)}}, [&] {
          return compare(q_nodes(spec, NodeSet::simple(t), n), q_by_recursion(spec, t, n));
        });
      }
    }
  }
  for (unsigned m = 1; m <= plan.m_max; ++m) {
    for (std::size_t n = 0; n <= plan.n_max; ++n) {
      log.run({{"item", "2"}, {"n", str(n)}, {"m", str(m)}}, [&] {
        return over_line(n + m, [&](const Rational& x) {
          return std::pair{q_nodes(spec, NodeSet{{x, m}}, n)(x), q_poly(spec, n + m)(x)};
        });
      });
    }
  }
}

void q_eq_r(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, IdentityId::Q_EQ_R));
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (unsigned m = 1; m <= plan.m_max; ++m) {
      for (const auto& t : sampler.tuples(plan.node_pool, m, plan.tuples_per_shape)) {
        log.run({{"n", str(n)}, {"nodes", join(t)}}, [&]() -> Outcome {
          const Rational r = hankel_r_det(spec, n, NodeSet::simple(t));
          std::vector<Rational> reversed(t.rbegin(), t.rend());
          if (auto bad = compare(hankel_r_det(spec, n, NodeSet::simple(reversed)), r, {{"order", "reversed"}}))
            return bad;
          std::vector<Rational> rotated = t;
          for (unsigned k = 0; k < m; ++k) {
            if (auto bad = compare(hankel_q_det(spec, n, NodeSet::simple(rotated)), r, {{"order", join(rotated)}}))
              return bad;
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
          }
          return std::nullopt;
        });
      }
    }
  }
}

void detq_int(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, IdentityId::DETQ_INT));
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    const std::vector<unsigned> indices = index_range(1, n);
    for (const auto& mults : compositions(plan.r_max, std::min(plan.mult_sum_max, 3u))) {
      for (const auto& t : sampler.tuples(plan.node_pool, mults.size() + 1, plan.tuples_per_shape)) {
        const std::span<const Rational> nodes_only(t.data(), mults.size());
        const NodeSet nodes = node_set(nodes_only, mults);
        const Rational& x = t.back();
        log.run({{"n", str(n)}, {"mults", join(mults)}, {"nodes", join(nodes_only)}, {"x", x.to_string()}}, [&] {
          return compare(f_det(spec, indices, nodes, x), selberg_integral(spec, n, nodes, x));
        });
      }
    }
  }
}

void f_sum(const MeasureSpec& spec, CaseLog& log) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned m = 1; n + m <= 5; ++m) {
      log.run({{"n", str(n)}, {"m", str(m)}}, [&] {
        const std::vector<unsigned> lhs_idx = index_range(m, m + n - 1);
        const std::size_t x_bound = n * m + 2 * n * n + n;
        return over_grid(offset_points(n + 1), x_bound, [&](const Rational& t, const Rational& x) {
          const Rational lhs = f_det(spec, lhs_idx, NodeSet{{t, 1}}, x);
          Rational rhs;
          for (unsigned k = 0; k <= n; ++k)
            rhs += (x - t).pow(k) * f_plain(spec, index_range(m, m + n, {m + k}), x);
          return std::pair{lhs, rhs};
        });
      });
    }
  }
}

void f_gap(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    for (unsigned m = 1; m <= plan.m_max; ++m) {
      const std::vector<unsigned> one_m{1, m};
      for (unsigned k = m; k <= n + m; ++k) {
        log.run({{"n", str(n)}, {"m", str(m)}, {"k", str(k)}}, [&] {
          const Rational c = sign(k - m) * ref_CVec(spec, n, one_m) * factorial(k);
          const std::vector<unsigned> idx = index_range(m, m + n, {k});
          const std::size_t bound = std::max<std::size_t>((m + 1) * (n + m), n * (2 * n + m));
          return over_line(bound, [&](const Rational& x) {
            const Rational lhs = slater_general(spec, n, NodeSet{{x, m + 1}}, RowPlan::gapped(m, k));
            return std::pair{lhs, c * f_plain(spec, idx, x)};
          });
        });
      }
    }
  }
}

void gap_second(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    const std::vector<unsigned> ones{1, 1};
    const Rational b11 = ref_BVec(spec, n, ones);
    for (unsigned k = 3; k <= n + 3; ++k) {
      log.run({{"n", str(n)}, {"k", str(k)}}, [&] {
        const RowPlan rows{{{0, 2, k}}};
        const std::vector<unsigned> idx = index_range(1, n + 2, {2, k});
        const std::size_t bound = std::max<std::size_t>(3 * (n + 2), n * (2 * n + 1));
        return over_line(bound, [&](const Rational& x) {
          const Rational lhs = slater_general(spec, n, NodeSet{{x, 3}}, rows);
          const Rational rhs =
              k <= n + 2 ? -sign(k) * Rational(2) * factorial(k) * b11 * f_plain(spec, idx, x) : Rational(0);
          return std::pair{lhs, rhs};
        });
      });
    }
  }
}

void gap_j(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    const std::vector<unsigned> ones{1, 1};
    const Rational b11 = ref_BVec(spec, n, ones);
    for (unsigned j = 2; j <= n + 3; ++j) {
      log.run({{"n", str(n)}, {"j", str(j)}}, [&] {
        const RowPlan rows{{{0, j}, {0}}};
        const std::size_t x_bound = std::max<std::size_t>(2 * (n + 2), 2 + n * (2 * n + 1));
        return over_grid(offset_points(n + 3), x_bound, [&](const Rational& t, const Rational& x) {
          const Rational lhs = slater_general(spec, n, NodeSet{{x, 2}, {t, 1}}, rows);
          const Rational a = j - 1 <= n + 1 ? f_one_node(spec, index_range(1, n + 1, {j - 1}), t, x) : Rational(0);
          const Rational b = j <= n + 1 ? f_one_node(spec, index_range(1, n + 1, {j}), t, x) : Rational(0);
          const Rational rhs = sign(j) * factorial(j) * b11 * (x - t) * (a - (x - t) * b);
          return std::pair{lhs, rhs};
        });
      });
    }
  }
}

void f_double_gap(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (unsigned n = 1; n <= plan.n_max; ++n) {
    for (unsigned k = 1; k <= n + 1; ++k) {
      log.run({{"n", str(n)}, {"k", str(k)}}, [&] {
        const std::vector<unsigned> lhs_idx = index_range(1, n + 1, {k});
        const std::size_t x_bound = n * (2 * n + 2) + n;
        return over_grid(offset_points(n + 1), x_bound, [&](const Rational& t, const Rational& x) {
          const Rational lhs = f_det(spec, lhs_idx, NodeSet{{t, 1}}, x);
          Rational rhs;
          for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = k + 1; j <= n + 2; ++j)
              rhs += (x - t).pow(i - 1 + j - k - 1) * f_plain(spec, index_range(1, n + 2, {i, j}), x);
          return std::pair{lhs, rhs};
        });
      });
    }
  }
}

}  // namespace

void check_lemmas(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  switch (id) {
    case IdentityId::PN_DETQ:
      return pn_detq(spec, plan, log);
    case IdentityId::QN_RECUR:
      return qn_recur(spec, plan, log);
    case IdentityId::Q_EQ_R:
      return q_eq_r(spec, plan, log);
    case IdentityId::DETQ_INT:
      return detq_int(spec, plan, log);
    case IdentityId::F_SUM:
      return f_sum(spec, log);
    case IdentityId::F_GAP:
      return f_gap(spec, plan, log);
    case IdentityId::GAP_3x3_SECOND:
      return gap_second(spec, plan, log);
    case IdentityId::GAP_3x3_J:
      return gap_j(spec, plan, log);
    case IdentityId::F_DOUBLE_GAP:
      return f_double_gap(spec, plan, log);
    default:
      throw std::logic_error("not a lemma id");
  }
}

}  // namespace opdet::vdetail
