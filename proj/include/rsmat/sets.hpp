#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rsmat/errors.hpp"

namespace rsmat {

/// Ordered ground set of distinct element labels. The order is canonical:
/// it fixes column order for matrix encodings and the index order used by
/// every set-valued result. Cheap to copy (shared immutable storage).
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels)
      : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
    if (labels_->empty()) fail(errc::parse_error, "universe needs at least one element");
    for (std::size_t i = 0; i < labels_->size(); ++i)
      for (std::size_t j = i + 1; j < labels_->size(); ++j)
        if ((*labels_)[i] == (*labels_)[j])
          fail(errc::parse_error, "duplicate universe element " + (*labels_)[i]);
  }

  /// x1..xn in index order.
  static Universe standard(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    return Universe(std::move(labels));
  }

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_->size(); ++i)
      if ((*labels_)[i] == label) return i;
    fail(errc::unknown_label, "no element labeled " + label);
  }

  bool contains(const std::string& label) const {
    for (const auto& l : *labels_)
      if (l == label) return true;
    return false;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

inline void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) fail(errc::universe_mismatch, "operands live on different universes");
}

/// Subset of a universe, stored as ascending element indices.
class ElementSet {
 public:
  ElementSet(Universe universe, std::vector<std::size_t> indices)
      : universe_(std::move(universe)), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (std::size_t i : indices_)
      if (i >= universe_.size()) fail(errc::unknown_label, "element index out of range");
  }

  static ElementSet empty(const Universe& u) { return ElementSet(u, {}); }

  static ElementSet full(const Universe& u) {
    std::vector<std::size_t> all(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) all[i] = i;
    return ElementSet(u, std::move(all));
  }

  static ElementSet from_labels(const Universe& u, const std::vector<std::string>& labels) {
    std::vector<std::size_t> idx;
    idx.reserve(labels.size());
    for (const auto& l : labels) idx.push_back(u.index_of(l));
    return ElementSet(u, std::move(idx));
  }

  /// Decodes a bitmask over the universe's index order.
  static ElementSet from_mask(const Universe& u, std::uint64_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask >> i & 1) idx.push_back(i);
    return ElementSet(u, std::move(idx));
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return indices_.size(); }
  bool is_empty() const { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (std::size_t i : indices_) m |= std::uint64_t{1} << i;
    return m;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_) out.push_back(universe_.label(i));
    return out;
  }

  bool contains(std::size_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
  }

  bool is_subset_of(const ElementSet& other) const {
    require_same_universe(universe_, other.universe_);
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
  }

  ElementSet intersect(const ElementSet& other) const {
    require_same_universe(universe_, other.universe_);
    std::vector<std::size_t> out;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
  }

  ElementSet unite(const ElementSet& other) const {
    require_same_universe(universe_, other.universe_);
    std::vector<std::size_t> out;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
  }

  ElementSet minus(const ElementSet& other) const {
    require_same_universe(universe_, other.universe_);
    std::vector<std::size_t> out;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
  }

  ElementSet complement() const { return full(universe_).minus(*this); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.indices_ == b.indices_;
  }

 private:
  Universe universe_;
  std::vector<std::size_t> indices_;
};

/// Canonical family order: by cardinality, then lexicographic index sequence.
inline bool family_order_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

/// Family of subsets of one universe, deduplicated and kept in canonical
/// order so every family-valued result is byte-deterministic.
class SetFamily {
 public:
  explicit SetFamily(Universe universe) : universe_(std::move(universe)) {}

  SetFamily(Universe universe, std::vector<ElementSet> sets)
      : universe_(std::move(universe)), sets_(std::move(sets)) {
    for (const auto& s : sets_) require_same_universe(universe_, s.universe());
    canonicalize();
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return sets_.size(); }
  bool is_empty() const { return sets_.empty(); }
  const std::vector<ElementSet>& sets() const { return sets_; }

  bool contains(const ElementSet& s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, family_order_less);
    return it != sets_.end() && *it == s;
  }

  void add(const ElementSet& s) {
    require_same_universe(universe_, s.universe());
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, family_order_less);
    if (it == sets_.end() || !(*it == s)) sets_.insert(it, s);
  }

  /// Family intersection: the sets present in both families.
  SetFamily intersect(const SetFamily& other) const {
    require_same_universe(universe_, other.universe_);
    SetFamily out(universe_);
    for (const auto& s : sets_)
      if (other.contains(s)) out.add(s);
    return out;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_ == b.universe_ && a.sets_ == b.sets_;
  }

 private:
  void canonicalize() {
    std::sort(sets_.begin(), sets_.end(), family_order_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  Universe universe_;
  std::vector<ElementSet> sets_;
};

}  // namespace rsmat
