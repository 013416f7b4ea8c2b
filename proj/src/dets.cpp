#include "opdet/dets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "opdet/errors.hpp"
#include "opdet/matrix.hpp"
#include "opdet/opoly.hpp"
#include "opdet/symmetric.hpp"

namespace opdet {

namespace {

// p_k^{(d)}, built lazily for one determinant
class DerivativeTable {
 public:
  explicit DerivativeTable(const MeasureSpec& spec) : spec_(spec) {}

  const UniPoly& get(std::size_t degree, unsigned order) {
    auto key = std::make_pair(degree, order);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    UniPoly p = order == 0 ? orth_poly(spec_, degree) : get(degree, 0).derivative(order);
    return table_.emplace(key, std::move(p)).first->second;
  }

 private:
  const MeasureSpec& spec_;
  std::map<std::pair<std::size_t, unsigned>, UniPoly> table_;
};

Rational sign_power(std::size_t exponent) { return Rational((exponent % 2) ? -1 : 1); }

}  // namespace

Rational slater(const MeasureSpec& spec, std::size_t n, std::span<const Rational> nodes) {
  if (nodes.empty()) throw std::invalid_argument("slater: at least one node is required");
  const std::size_t m = nodes.size();
  std::vector<UniPoly> columns;
  for (std::size_t j = 0; j < m; ++j) columns.push_back(orth_poly(spec, n + j));
  return det_exact(SquareMatrix<Rational>::generate(m, [&](std::size_t i, std::size_t j) { return columns[j](nodes[i]); }));
}

RowPlan RowPlan::standard(const NodeSet& nodes) {
  RowPlan plan;
  for (const auto& e : nodes.entries()) {
    std::vector<unsigned> orders(e.multiplicity);
    std::iota(orders.begin(), orders.end(), 0u);
    plan.groups.push_back(std::move(orders));
  }
  return plan;
}

RowPlan RowPlan::gapped(unsigned m, unsigned k) {
  std::vector<unsigned> orders(m);
  std::iota(orders.begin(), orders.end(), 0u);
  orders.push_back(k);
  return RowPlan{{std::move(orders)}};
}

std::size_t RowPlan::row_count() const {
  std::size_t rows = 0;
  for (const auto& g : groups) rows += g.size();
  return rows;
}

namespace {

void check_plan(const NodeSet& nodes, const RowPlan& plan) {
  if (plan.groups.size() != nodes.size()) {
    throw std::invalid_argument("malformed row plan: " + std::to_string(plan.groups.size()) + " groups for " +
                                std::to_string(nodes.size()) + " nodes");
  }
  for (const auto& g : plan.groups) {
    if (g.empty()) throw std::invalid_argument("malformed row plan: empty derivative group");
    std::vector<unsigned> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("malformed row plan: repeated derivative order within a group");
    }
  }
}

// Rows (t_i, d) scaled by 1/d! when divided is set.
Rational planned_det(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes, const RowPlan& plan,
                     bool divided) {
  check_plan(nodes, plan);
  const std::size_t order = plan.row_count();
  DerivativeTable table(spec);
  std::vector<Rational> entries;
  entries.reserve(order * order);
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const Rational& t = nodes.entries()[g].node;
    for (unsigned d : plan.groups[g]) {
      const Rational scale = divided ? factorial(d).inverse() : Rational(1);
      for (std::size_t j = 0; j < order; ++j) entries.push_back(table.get(n + j, d)(t) * scale);
    }
  }
  return det_exact(SquareMatrix<Rational>(order, std::move(entries)));
}

}  // namespace

Rational slater_general(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes, const RowPlan& plan) {
  nodes.require_distinct("slater_general");
  return planned_det(spec, n, nodes, plan, false);
}

Rational symmetrized(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes) {
  nodes.require_distinct("symmetrized");
  return planned_det(spec, n, nodes, RowPlan::standard(nodes), true) / nodes.cross_product();
}

Rational wronskian(const MeasureSpec& spec, std::size_t n, std::size_t m, const Rational& x) {
  if (m == 0) throw std::invalid_argument("wronskian: m must be at least 1");
  return planned_det(spec, n, NodeSet{{x, static_cast<unsigned>(m)}},
                     RowPlan::standard(NodeSet{{x, static_cast<unsigned>(m)}}), false);
}

Rational hankel_q_det(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes) {
  if (nodes.empty()) throw std::invalid_argument("hankel_q_det: needs at least one node");
  if (n == 0) return Rational(1);
  const NodeSet prefix = nodes.prefix(nodes.size() - 1);
  const NodeEntry& last = nodes.entries().back();
  std::vector<Rational> values(2 * n - 1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = q_nodes(spec, prefix, k + last.multiplicity)(last.node);
  }
  return det_exact(SquareMatrix<Rational>::generate(n, [&](std::size_t i, std::size_t j) { return values[i + j]; }));
}

Rational hankel_r_det(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes) {
  if (n == 0) return Rational(1);
  std::vector<Rational> values(2 * n - 1);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = r_value(spec, nodes, k);
  return det_exact(SquareMatrix<Rational>::generate(n, [&](std::size_t i, std::size_t j) { return values[i + j]; }));
}

StructureConstant structure_constant(StructureKind kind, const MeasureSpec& spec, std::size_t n,
                                     std::span<const unsigned> mults, FactorialLimit limit) {
  if (mults.empty()) throw std::invalid_argument("structure_constant: no multiplicities given");
  const bool scalar = kind == StructureKind::B || kind == StructureKind::C;
  if (scalar && mults.size() != 1) {
    throw std::invalid_argument("structure_constant: B and C take a single m");
  }
  const std::size_t m = std::accumulate(mults.begin(), mults.end(), std::size_t{0});
  if (m == 0) throw std::invalid_argument("structure_constant: m must be positive");

  auto det_m = [&](std::size_t k) {
    Rational d = hankel_det(spec, static_cast<long>(k + n) - 1);
    if (d.is_zero()) throw DegenerateMeasure("det M_" + std::to_string(k + n - 1) + " vanishes");
    return d;
  };

  Rational value(1);
  switch (kind) {
    case StructureKind::B:
      for (std::size_t k = 1; k < m; ++k) value *= det_m(k);
      value *= sign_power(n * m);
      break;
    case StructureKind::C:
      for (std::size_t k = 1; k < m; ++k) value *= factorial(static_cast<unsigned>(k)) * det_m(k);
      value *= sign_power(n * m);
      break;
    case StructureKind::BVec:
    case StructureKind::CVec: {
      for (unsigned mi : mults) {
        const unsigned top = limit == FactorialLimit::Corrected ? mi - 1 : mi;
        for (unsigned j = 1; j <= top; ++j) value *= factorial(j);
      }
      const std::size_t last = kind == StructureKind::BVec ? m : m - 1;
      for (std::size_t k = 1; k <= last; ++k) value *= det_m(k);
      value *= sign_power(kind == StructureKind::BVec ? n * (m + 1) : n * m);
      break;
    }
  }
  return {kind, value};
}

Rational f_det(const MeasureSpec& spec, std::span<const unsigned> indices, const NodeSet& nodes,
               const Rational& x) {
  const std::size_t n = indices.size();
  if (n == 0) return Rational(1);
  std::map<std::size_t, Rational> q_at_x;
  auto q_value = [&](std::size_t degree) -> const Rational& {
    auto it = q_at_x.find(degree);
    if (it == q_at_x.end()) it = q_at_x.emplace(degree, q_nodes(spec, nodes, degree)(x)).first;
    return it->second;
  };
  return det_exact(SquareMatrix<Rational>::generate(n, [&](std::size_t i, std::size_t j) {
    return q_value(indices[i] + j);
  }));
}

PAlphaValue p_alpha(const MeasureSpec& spec, std::span<const unsigned> alpha, std::span<const Rational> nodes) {
  if (alpha.empty()) throw std::invalid_argument("p_alpha: alpha is empty");
  if (alpha.size() != nodes.size()) {
    throw std::invalid_argument("p_alpha: alpha has " + std::to_string(alpha.size()) + " entries for " +
                                std::to_string(nodes.size()) + " nodes");
  }
  if (!std::is_sorted(alpha.begin(), alpha.end())) throw std::invalid_argument("p_alpha: alpha must be weakly increasing");
  NodeSet::simple(nodes).require_distinct("p_alpha");

  const std::size_t m = alpha.size();
  std::vector<UniPoly> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(orth_poly(spec, alpha[i] + i));
  PAlphaValue out;
  out.value = det_exact(SquareMatrix<Rational>::generate(m, [&](std::size_t i, std::size_t j) { return rows[i](nodes[j]); })) /
              vandermonde(nodes);
  for (std::size_t k = 1; k <= m; ++k) out.u.push_back(elem_sym(k, nodes));
  return out;
}

}  // namespace opdet
