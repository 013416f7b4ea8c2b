#include "opdet/nodeset.hpp"

#include <stdexcept>
#include <string>

namespace opdet {

NodeSet::NodeSet(std::vector<NodeEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity == 0) throw std::invalid_argument("node multiplicity must be at least 1");
  }
}

NodeSet NodeSet::simple(std::span<const Rational> nodes) {
  std::vector<NodeEntry> entries;
  entries.reserve(nodes.size());
  for (const auto& t : nodes) entries.push_back({t, 1});
  return NodeSet(std::move(entries));
}

unsigned NodeSet::total_multiplicity() const noexcept {
  unsigned m = 0;
  for (const auto& e : entries_) m += e.multiplicity;
  return m;
}

std::vector<Rational> NodeSet::nodes() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.node);
  return out;
}

std::vector<unsigned> NodeSet::multiplicities() const {
  std::vector<unsigned> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.multiplicity);
  return out;
}

std::vector<Rational> NodeSet::expanded() const {
  std::vector<Rational> out;
  out.reserve(total_multiplicity());
  for (const auto& e : entries_)
    for (unsigned k = 0; k < e.multiplicity; ++k) out.push_back(e.node);
  return out;
}

bool NodeSet::pairwise_distinct() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].node == entries_[j].node) return false;
  return true;
}

void NodeSet::require_distinct(std::string_view operation) const {
  if (!pairwise_distinct()) {
    throw std::invalid_argument(std::string(operation) + ": duplicate nodes (nodes must be pairwise distinct)");
  }
}

UniPoly NodeSet::node_polynomial() const {
  UniPoly product = UniPoly::constant(1);
  for (const auto& e : entries_) product *= UniPoly::linear_root(e.node).pow(e.multiplicity);
  return product;
}

Rational NodeSet::cross_product() const {
  Rational product(1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      product *= (entries_[j].node - entries_[i].node)
                     .pow(static_cast<long>(entries_[i].multiplicity * entries_[j].multiplicity));
    }
  }
  return product;
}

NodeSet NodeSet::prefix(std::size_t count) const {
  if (count > entries_.size()) throw std::out_of_range("NodeSet::prefix past the end");
  return NodeSet(std::vector<NodeEntry>(entries_.begin(), entries_.begin() + static_cast<long>(count)));
}

NodeSet NodeSet::with(const NodeEntry& entry) const {
  auto copy = entries_;
  copy.push_back(entry);
  return NodeSet(std::move(copy));
}

}  // namespace opdet
