#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opdet/measures.hpp"
#include "opdet/nodeset.hpp"
#include "opdet/rational.hpp"

namespace opdet {

/// det[p_{n+j-1}(t_i)]_{i,j=1}^m
Rational slater(const MeasureSpec& spec, std::size_t n, std::span<const Rational> nodes);

/// Derivative orders to take at each node, one group per NodeSet entry.
struct RowPlan {
  std::vector<std::vector<unsigned>> groups;

  /// Group i is (0, 1, ..., m_i - 1).
  static RowPlan standard(const NodeSet& nodes);
  /// One node, orders (0, ..., m-1) followed by k.
  static RowPlan gapped(unsigned m, unsigned k);

  std::size_t row_count() const;
};

/// Row (t_i, d) is (p_n^{(d)}(t_i), ..., p_{n+M-1}^{(d)}(t_i)) with M the row count.
Rational slater_general(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes, const RowPlan& plan);

/// The standard-plan determinant with rows p^{(d)}/d!, divided by
/// prod_{i<j} (t_j - t_i)^{m_i m_j}. Continuous in the nodes.
Rational symmetrized(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes);

/// det[p_{n+j}^{(i)}(x)]_{i,j=0}^{m-1}
Rational wronskian(const MeasureSpec& spec, std::size_t n, std::size_t m, const Rational& x);

/// det[q_{i+j+m_r}(t_1^{m_1}, ..., t_{r-1}^{m_{r-1}}; t_r)]_{i,j=0}^{n-1}; the last
/// node is the evaluation point.
Rational hankel_q_det(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes);

/// det[r_{i+j}(nodes)]_{i,j=0}^{n-1}, the Hankel determinant of the modified measure.
Rational hankel_r_det(const MeasureSpec& spec, std::size_t n, const NodeSet& nodes);

enum class StructureKind { B, C, BVec, CVec };

/// Which upper limit to use on the per-node factorial product prod_j j!.
/// Printed (m_i instead of m_i - 1) is wrong and exists only so tests can show it.
enum class FactorialLimit { Corrected, Printed };

struct StructureConstant {
  StructureKind kind;
  Rational value;
};

/// B and C take mults = {m}; BVec and CVec take (m_1, ..., m_r).
///   B     = (-1)^{nm} prod_{k=1}^{m-1} det M_{k+n-1}
///   C     = (-1)^{nm} prod_{k=1}^{m-1} k! det M_{k+n-1}
///   BVec  = (-1)^{n(m+1)} prod_i prod_{j=1}^{m_i-1} j! prod_{k=1}^{m} det M_{k+n-1}
///   CVec  = (-1)^{nm} prod_i prod_{j=1}^{m_i-1} j! prod_{k=1}^{m-1} det M_{k+n-1}
StructureConstant structure_constant(StructureKind kind, const MeasureSpec& spec, std::size_t n,
                                     std::span<const unsigned> mults,
                                     FactorialLimit limit = FactorialLimit::Corrected);

/// F[q_{l_1}, ..., q_{l_n}](nodes; x) = det[q_{l_i+j-1}(nodes; x)]_{i,j=1}^n
Rational f_det(const MeasureSpec& spec, std::span<const unsigned> indices, const NodeSet& nodes,
               const Rational& x);

struct PAlphaValue {
  Rational value;
  /// u_k = sigma_k(t_1, ..., t_m), k = 1..m
  std::vector<Rational> u;
};

/// det[p_{alpha_i+i-1}(t_j)]_{i,j=1}^m / V(t) for weakly increasing alpha.
PAlphaValue p_alpha(const MeasureSpec& spec, std::span<const unsigned> alpha, std::span<const Rational> nodes);

}  // namespace opdet
