#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "rsmat/errors.hpp"
#include "rsmat/linalg.hpp"
#include "rsmat/matroid.hpp"
#include "rsmat/roughsets.hpp"
#include "rsmat/sets.hpp"

namespace rsmat {

/// Binary relation as explicit ordered pairs over a universe. Relations
/// appear only here, where they are recovered from matrices and need not
/// be transitive yet; everywhere else equivalences live as partitions.
class PairRelation {
 public:
  PairRelation(Universe universe, std::set<std::pair<std::size_t, std::size_t>> pairs)
      : universe_(std::move(universe)), pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_)
      if (a >= universe_.size() || b >= universe_.size())
        fail(errc::unknown_label, "pair index out of range");
  }

  static PairRelation diagonal(const Universe& u) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < u.size(); ++i) pairs.insert({i, i});
    return PairRelation(u, std::move(pairs));
  }

  const Universe& universe() const { return universe_; }
  const std::set<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  bool contains(std::size_t a, std::size_t b) const { return pairs_.count({a, b}) != 0; }

  friend bool operator==(const PairRelation& a, const PairRelation& b) {
    return a.universe_ == b.universe_ && a.pairs_ == b.pairs_;
  }

 private:
  Universe universe_;
  std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Relation of a matrix: elements are related when they coincide or the sum
/// of their columns vanishes. Reflexive and symmetric by construction.
inline PairRelation relation_from_matrix(const ExactMatrix& A) {
  Universe u(A.col_labels());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < u.size(); ++i) pairs.insert({i, i});
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      bool vanishes = true;
      for (std::size_t r = 0; r < A.rows(); ++r)
        if (!(A.at(r, i) + A.at(r, j)).is_zero()) {
          vanishes = false;
          break;
        }
      if (vanishes) {
        pairs.insert({i, j});
        pairs.insert({j, i});
      }
    }
  return PairRelation(u, std::move(pairs));
}

/// Explicit reflexivity, symmetry, and transitivity checks.
inline bool is_equivalence(const PairRelation& rel) {
  std::size_t n = rel.universe().size();
  for (std::size_t i = 0; i < n; ++i)
    if (!rel.contains(i, i)) return false;
  for (const auto& [a, b] : rel.pairs())
    if (!rel.contains(b, a)) return false;
  for (const auto& [a, b] : rel.pairs())
    for (std::size_t c = 0; c < n; ++c)
      if (rel.contains(b, c) && !rel.contains(a, c)) return false;
  return true;
}

/// Partition recovered from a matrix over GF(2): the blocks are the classes
/// of equal columns (over GF(2) two columns sum to zero exactly when they
/// are equal, so this is the relation's partition).
inline Partition partition_from_matrix_gf2(const ExactMatrix& A) {
  if (!(A.spec() == FieldSpec::binary()))
    fail(errc::wrong_field, "relation partition requires gf2, got " + A.spec().tag());
  Universe u(A.col_labels());
  std::size_t n = u.size();
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < n; ++j) {
    bool placed = false;
    for (auto& g : groups) {
      std::size_t rep = g.front();
      bool equal = true;
      for (std::size_t r = 0; r < A.rows(); ++r)
        if (!(A.at(r, j) == A.at(r, rep))) {
          equal = false;
          break;
        }
      if (equal) {
        g.push_back(j);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({j});
  }
  std::vector<ElementSet> blocks;
  blocks.reserve(groups.size());
  for (auto& g : groups) blocks.push_back(ElementSet(u, std::move(g)));
  return Partition(u, std::move(blocks));
}

/// Verdict of the dependence-matrix membership test. A failing matrix
/// carries its witness: a zero column, or a minimal dependent column set
/// in which every pair is independent.
struct BdmVerdict {
  bool is_member;
  std::optional<std::variant<std::size_t, ElementSet>> witness;
};

/// Membership in the binary-dependence-matrix class, decided by the
/// equivalent criterion: no zero column and every circuit has exactly two
/// elements. The literal subset condition is kept below as a reference.
inline BdmVerdict is_binary_dependence(const ExactMatrix& A) {
  require_scannable_ground(A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (!A.at(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) return BdmVerdict{false, j};
  }
  VectorMatroid M(A);
  SetFamily C = circuits(M);
  for (const auto& c : C.sets())
    if (c.size() != 2) return BdmVerdict{false, c};
  return BdmVerdict{true, std::nullopt};
}

/// Literal membership condition: no zero column, and every dependent column
/// subset of size >= 2 contains a pair spanning less than two dimensions.
/// Exponential reference implementation used to validate the criterion.
inline bool is_binary_dependence_literal(const ExactMatrix& A) {
  require_scannable_ground(A.cols());
  std::size_t n = A.cols();
  for (std::size_t j = 0; j < n; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (!A.at(i, j).is_zero()) zero = false;
    if (zero) return false;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) idx.push_back(j);
    if (idx.size() < 2) continue;
    if (columns_independent_idx(A, idx)) continue;
    bool has_degenerate_pair = false;
    for (std::size_t a = 0; a < idx.size() && !has_degenerate_pair; ++a)
      for (std::size_t b = a + 1; b < idx.size() && !has_degenerate_pair; ++b)
        if (rank(A.select_cols({idx[a], idx[b]})) < 2) has_degenerate_pair = true;
    if (!has_degenerate_pair) return false;
  }
  return true;
}

/// The relation-to-family map: minimal nonempty kernel supports of the
/// partition's block-incidence matrix over GF(2). Coincides with the
/// within-block pair family.
inline SetFamily iso_f(const Partition& P,
                       std::uint64_t cap = SolutionEnumerator::default_cap) {
  return circuits_via_nullspace(encode_matrix(P, FieldSpec::binary()), cap);
}

/// Structure preservation at one pair: the family of the meet equals the
/// intersection of the families.
inline bool verify_homomorphism(const Partition& P1, const Partition& P2) {
  require_same_universe(P1.universe(), P2.universe());
  return iso_f(meet(P1, P2)) == iso_f(P1).intersect(iso_f(P2));
}

/// Recover-and-reencode roundtrip: a dependence matrix, its recovered
/// partition, and the partition's encoding must induce equal matroids.
inline bool roundtrip_matroid_equal(const ExactMatrix& A) {
  if (!(A.spec() == FieldSpec::binary()))
    fail(errc::wrong_field, "roundtrip requires gf2, got " + A.spec().tag());
  if (!is_binary_dependence(A).is_member)
    fail(errc::not_binary_dependence, "matrix is not a binary dependence matrix");
  Partition P = partition_from_matrix_gf2(A);
  return matroids_equal(VectorMatroid(encode_matrix(P, FieldSpec::binary())), VectorMatroid(A));
}

}  // namespace rsmat
