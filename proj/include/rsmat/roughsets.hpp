#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsmat/errors.hpp"
#include "rsmat/linalg.hpp"
#include "rsmat/sets.hpp"

namespace rsmat {

/// Partition of a universe into disjoint nonempty blocks. Blocks are kept
/// in canonical order: ascending smallest contained element index. This is
/// the only representation of an equivalence relation outside the
/// relation-recovery code.
class Partition {
 public:
  Partition(Universe universe, std::vector<ElementSet> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      require_same_universe(universe_, b.universe());
      if (b.is_empty()) fail(errc::parse_error, "partition block is empty");
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const ElementSet& a, const ElementSet& b) {
      return a.indices().front() < b.indices().front();
    });
    block_of_.assign(universe_.size(), blocks_.size());
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
      for (std::size_t i : blocks_[bi].indices()) {
        if (block_of_[i] != blocks_.size())
          fail(errc::parse_error, "element " + universe_.label(i) + " appears in two blocks");
        block_of_[i] = bi;
      }
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (block_of_[i] == blocks_.size())
        fail(errc::parse_error, "element " + universe_.label(i) + " is not covered by any block");
  }

  static Partition discrete(const Universe& u) {
    std::vector<ElementSet> blocks;
    for (std::size_t i = 0; i < u.size(); ++i) blocks.push_back(ElementSet(u, {i}));
    return Partition(u, std::move(blocks));
  }

  static Partition single_block(const Universe& u) {
    return Partition(u, {ElementSet::full(u)});
  }

  /// Builds the partition encoded by a restricted growth string: element i
  /// belongs to the block numbered rgs[i], with rgs[0]=0 and each value at
  /// most one above the running maximum. Block numbering by first occurrence
  /// coincides with the canonical smallest-element order.
  static Partition from_rgs(const Universe& u, const std::vector<std::size_t>& rgs) {
    if (rgs.size() != u.size()) fail(errc::length_mismatch, "growth string length mismatch");
    std::size_t nblocks = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] > nblocks) fail(errc::parse_error, "not a restricted growth string");
      if (rgs[i] == nblocks) ++nblocks;
    }
    std::vector<std::vector<std::size_t>> members(nblocks);
    for (std::size_t i = 0; i < rgs.size(); ++i) members[rgs[i]].push_back(i);
    std::vector<ElementSet> blocks;
    blocks.reserve(nblocks);
    for (auto& m : members) blocks.push_back(ElementSet(u, std::move(m)));
    return Partition(u, std::move(blocks));
  }

  const Universe& universe() const { return universe_; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Canonical block position of the block holding element i.
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  const ElementSet& block_containing(std::size_t i) const { return blocks_[block_of_[i]]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }

 private:
  Universe universe_;
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Union of the blocks contained in X.
inline ElementSet lower_approx(const Partition& P, const ElementSet& X) {
  require_same_universe(P.universe(), X.universe());
  ElementSet acc = ElementSet::empty(P.universe());
  for (const auto& block : P.blocks())
    if (block.is_subset_of(X)) acc = acc.unite(block);
  return acc;
}

/// Union of the blocks meeting X.
inline ElementSet upper_approx(const Partition& P, const ElementSet& X) {
  require_same_universe(P.universe(), X.universe());
  ElementSet acc = ElementSet::empty(P.universe());
  for (const auto& block : P.blocks())
    if (!block.intersect(X).is_empty()) acc = acc.unite(block);
  return acc;
}

/// Block-incidence matrix: one row per block in canonical order, one column
/// per element in universe order, entry 1 exactly when the element lies in
/// the block. Each column carries exactly one 1.
inline ExactMatrix encode_matrix(const Partition& P, const FieldSpec& spec = FieldSpec::binary()) {
  std::size_t s = P.block_count(), n = P.universe().size();
  std::vector<FieldElement> entries(s * n, FieldElement::zero(spec));
  for (std::size_t i = 0; i < n; ++i)
    entries[P.block_of(i) * n + i] = FieldElement::one(spec);
  return ExactMatrix(spec, s, n, std::move(entries), P.universe().labels());
}

/// Coarsest common refinement: the blocks are the nonempty pairwise block
/// intersections. This is the partition of the intersected relations.
inline Partition meet(const Partition& P1, const Partition& P2) {
  require_same_universe(P1.universe(), P2.universe());
  std::size_t n = P1.universe().size();
  // group elements by their (block-in-P1, block-in-P2) pair
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < n; ++i) {
    std::pair<std::size_t, std::size_t> key{P1.block_of(i), P2.block_of(i)};
    std::size_t g = 0;
    while (g < keys.size() && !(keys[g] == key)) ++g;
    if (g == keys.size()) {
      keys.push_back(key);
      groups.emplace_back();
    }
    groups[g].push_back(i);
  }
  std::vector<ElementSet> blocks;
  blocks.reserve(groups.size());
  for (auto& g : groups) blocks.push_back(ElementSet(P1.universe(), std::move(g)));
  return Partition(P1.universe(), std::move(blocks));
}

/// Streams every partition of the universe exactly once, in restricted
/// growth string order. Guarded at n <= 12 (4,213,597 partitions).
class PartitionEnumerator {
 public:
  static constexpr std::size_t max_universe = 12;

  explicit PartitionEnumerator(Universe u) : universe_(std::move(u)), rgs_(universe_.size(), 0) {
    if (universe_.size() > max_universe)
      fail(errc::universe_too_large,
           "partition enumeration limited to " + std::to_string(max_universe) + " elements");
  }

  std::optional<Partition> next() {
    if (done_) return std::nullopt;
    Partition out = Partition::from_rgs(universe_, rgs_);
    advance();
    return out;
  }

 private:
  void advance() {
    std::size_t n = rgs_.size();
    // find the rightmost position (never 0) that can still grow
    for (std::size_t i = n; i-- > 1;) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[j]);
      if (rgs_[i] <= prefix_max) {
        ++rgs_[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs_[j] = 0;
        return;
      }
    }
    done_ = true;
  }

  Universe universe_;
  std::vector<std::size_t> rgs_;
  bool done_ = false;
};

/// Collects the full enumeration; intended for small n.
inline std::vector<Partition> all_partitions(const Universe& u) {
  PartitionEnumerator en(u);
  std::vector<Partition> out;
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

/// All subsets whose upper approximation is the whole universe, i.e. the
/// subsets meeting every block. Guarded at n <= 20.
inline SetFamily upper_full_sets(const Partition& P) {
  std::size_t n = P.universe().size();
  if (n > 20) fail(errc::universe_too_large, "upper-approximation scan limited to 20 elements");
  std::vector<std::uint64_t> block_masks;
  block_masks.reserve(P.block_count());
  for (const auto& b : P.blocks()) block_masks.push_back(b.mask());
  std::vector<ElementSet> hits;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool meets_all = true;
    for (std::uint64_t bm : block_masks)
      if ((mask & bm) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) hits.push_back(ElementSet::from_mask(P.universe(), mask));
  }
  return SetFamily(P.universe(), std::move(hits));
}

}  // namespace rsmat
