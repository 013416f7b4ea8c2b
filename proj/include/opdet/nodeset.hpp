#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "opdet/rational.hpp"
#include "opdet/unipoly.hpp"

namespace opdet {

struct NodeEntry {
  Rational node;
  unsigned multiplicity = 1;

  friend bool operator==(const NodeEntry&, const NodeEntry&) = default;
};

/// Nodes t_1..t_r with multiplicities m_1..m_r (each >= 1).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeEntry> entries);
  NodeSet(std::initializer_list<NodeEntry> entries) : NodeSet(std::vector<NodeEntry>(entries)) {}
  /// Every node with multiplicity one.
  static NodeSet simple(std::span<const Rational> nodes);

  const std::vector<NodeEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// m = m_1 + ... + m_r
  unsigned total_multiplicity() const noexcept;

  std::vector<Rational> nodes() const;
  std::vector<unsigned> multiplicities() const;
  /// Each node repeated according to its multiplicity.
  std::vector<Rational> expanded() const;

  bool pairwise_distinct() const;
  /// Throws std::invalid_argument naming the operation when two nodes coincide.
  void require_distinct(std::string_view operation) const;

  /// prod_i (t - t_i)^{m_i} as a polynomial in t.
  UniPoly node_polynomial() const;
  /// prod_{i<j} (t_j - t_i)^{m_i m_j}
  Rational cross_product() const;

  /// The first count entries.
  NodeSet prefix(std::size_t count) const;
  NodeSet with(const NodeEntry& entry) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeEntry> entries_;
};

}  // namespace opdet
