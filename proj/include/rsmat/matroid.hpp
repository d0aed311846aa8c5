#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rsmat/errors.hpp"
#include "rsmat/linalg.hpp"
#include "rsmat/roughsets.hpp"
#include "rsmat/sets.hpp"

namespace rsmat {

constexpr std::size_t max_ground_for_scan = 16;

inline void require_scannable_ground(std::size_t n) {
  if (n > max_ground_for_scan)
    fail(errc::ground_too_large,
         "subset scan limited to " + std::to_string(max_ground_for_scan) + " ground elements");
}

/// Matroid of a labeled matrix: the ground set is the column-label sequence
/// and a set is independent when its columns are linearly independent.
class VectorMatroid {
 public:
  explicit VectorMatroid(ExactMatrix matrix)
      : matrix_(std::move(matrix)), ground_(matrix_.col_labels()) {}

  const ExactMatrix& matrix() const { return matrix_; }
  const Universe& ground() const { return ground_; }
  std::size_t rank() const { return rsmat::rank(matrix_); }

  bool independent(const ElementSet& S) const {
    require_same_universe(ground_, S.universe());
    return columns_independent_idx(matrix_, S.indices());
  }

 private:
  ExactMatrix matrix_;
  Universe ground_;
};

/// Support of a vector: the ground elements with nonzero coordinate.
inline ElementSet support(const Vector& v, const Universe& ground) {
  if (v.size() != ground.size())
    fail(errc::length_mismatch, "vector length does not match ground size");
  return ElementSet(ground, v.nonzero_indices());
}

/// Inclusion-minimal members of the family.
inline SetFamily min_family(const SetFamily& F) {
  SetFamily out(F.universe());
  for (const auto& s : F.sets()) {
    bool minimal = true;
    for (const auto& t : F.sets()) {
      if (t.size() >= s.size()) break;  // canonical order: proper subsets come first
      if (t.is_subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.add(s);
  }
  return out;
}

/// All subsets of the family's members, the empty set included whenever the
/// family is nonempty. Guarded by the total closure size.
inline SetFamily downward_closure(const SetFamily& F, std::uint64_t cap = std::uint64_t{1} << 20) {
  std::set<std::vector<std::size_t>> acc;
  for (const auto& s : F.sets()) {
    const auto& idx = s.indices();
    if (idx.size() >= 63 || (std::uint64_t{1} << idx.size()) > cap)
      fail(errc::closure_too_large, "closure exceeds cap of " + std::to_string(cap) + " sets");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (mask >> b & 1) sub.push_back(idx[b]);
      acc.insert(std::move(sub));
      if (acc.size() > cap)
        fail(errc::closure_too_large, "closure exceeds cap of " + std::to_string(cap) + " sets");
    }
  }
  SetFamily out(F.universe());
  for (const auto& idx : acc) out.add(ElementSet(F.universe(), idx));
  return out;
}

namespace detail {

inline std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < n; ++j)
    if (mask >> j & 1) idx.push_back(j);
  return idx;
}

// Ascending-cardinality scan over all subsets. Subsets containing a known
// circuit are skipped, so every dependent survivor is minimal.
inline std::vector<std::uint64_t> circuit_masks(const VectorMatroid& M) {
  std::size_t n = M.ground().size();
  require_scannable_ground(n);
  std::vector<std::uint64_t> circuits;
  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    by_size[static_cast<std::size_t>(__builtin_popcountll(mask))].push_back(mask);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::uint64_t mask : by_size[k]) {
      bool pruned = false;
      for (std::uint64_t c : circuits)
        if ((mask & c) == c) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      if (!columns_independent_idx(M.matrix(), mask_to_indices(mask, n))) circuits.push_back(mask);
    }
  }
  return circuits;
}

}  // namespace detail

/// All minimal dependent sets, by brute-force subset scan.
inline SetFamily circuits(const VectorMatroid& M) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask : detail::circuit_masks(M))
    out.push_back(ElementSet::from_mask(M.ground(), mask));
  return SetFamily(M.ground(), std::move(out));
}

/// All maximal independent sets: the independent sets of full rank.
inline SetFamily bases(const VectorMatroid& M) {
  std::size_t n = M.ground().size();
  require_scannable_ground(n);
  std::size_t r = M.rank();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    auto idx = detail::mask_to_indices(mask, n);
    if (columns_independent_idx(M.matrix(), idx)) out.push_back(ElementSet(M.ground(), idx));
  }
  return SetFamily(M.ground(), std::move(out));
}

/// Every independent set of the matroid; exhaustive scan.
inline SetFamily independent_sets(const VectorMatroid& M) {
  std::size_t n = M.ground().size();
  require_scannable_ground(n);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto idx = detail::mask_to_indices(mask, n);
    if (columns_independent_idx(M.matrix(), idx)) out.push_back(ElementSet(M.ground(), idx));
  }
  return SetFamily(M.ground(), std::move(out));
}

/// Circuits of the partition-induced matroid: the 2-element subsets lying
/// inside some block.
inline SetFamily partition_circuits(const Partition& P) {
  SetFamily out(P.universe());
  for (const auto& block : P.blocks()) {
    const auto& idx = block.indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        out.add(ElementSet(P.universe(), {idx[a], idx[b]}));
  }
  return out;
}

/// Bases of the partition-induced matroid: the block transversals.
inline SetFamily partition_bases(const Partition& P, std::uint64_t cap = std::uint64_t{1} << 20) {
  std::uint64_t total = 1;
  for (const auto& b : P.blocks()) {
    if (total > cap / b.size())
      fail(errc::too_many_transversals,
           "transversal count exceeds cap of " + std::to_string(cap));
    total *= b.size();
  }
  std::vector<std::size_t> choice(P.block_count(), 0);
  std::vector<ElementSet> out;
  out.reserve(total);
  for (;;) {
    std::vector<std::size_t> picks;
    picks.reserve(P.block_count());
    for (std::size_t bi = 0; bi < P.block_count(); ++bi)
      picks.push_back(P.blocks()[bi].indices()[choice[bi]]);
    out.push_back(ElementSet(P.universe(), std::move(picks)));
    std::size_t bi = P.block_count();
    while (bi > 0) {
      --bi;
      if (++choice[bi] < P.blocks()[bi].size()) break;
      choice[bi] = 0;
      if (bi == 0) return SetFamily(P.universe(), std::move(out));
    }
  }
}

/// True iff S picks at most one element from each block.
inline bool partition_independent(const Partition& P, const ElementSet& S) {
  require_same_universe(P.universe(), S.universe());
  std::vector<std::size_t> hits(P.block_count(), 0);
  for (std::size_t i : S.indices())
    if (++hits[P.block_of(i)] > 1) return false;
  return true;
}

/// Circuits from the null space: enumerate the kernel, take the nonempty
/// supports, keep the minimal ones.
inline SetFamily circuits_via_nullspace(const ExactMatrix& A,
                                        std::uint64_t cap = SolutionEnumerator::default_cap) {
  Universe ground(A.col_labels());
  SolutionEnumerator en(null_space_basis(A), cap);
  SetFamily supports(ground);
  while (auto v = en.next()) {
    auto s = support(*v, ground);
    if (!s.is_empty()) supports.add(s);
  }
  return min_family(supports);
}

/// True when the matrix is a block-incidence encoding: Boolean entries with
/// exactly one 1 per column and no zero row.
inline bool is_partition_matrix(const ExactMatrix& A) {
  for (std::size_t j = 0; j < A.cols(); ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      const FieldElement& e = A.at(i, j);
      if (e.is_one())
        ++ones;
      else if (!e.is_zero())
        return false;
    }
    if (ones != 1) return false;
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A.at(i, j).is_zero()) nonzero = true;
    if (!nonzero) return false;
  }
  return true;
}

/// Bases from the all-ones system: enumerate the solutions of A·x = 1 over
/// GF(2), take their supports, keep the minimal ones. Only defined for
/// block-incidence matrices.
inline SetFamily bases_via_ones(const ExactMatrix& A,
                                std::uint64_t cap = SolutionEnumerator::default_cap) {
  if (!(A.spec() == FieldSpec::binary()))
    fail(errc::wrong_field, "all-ones basis extraction requires gf2, got " + A.spec().tag());
  if (!is_partition_matrix(A))
    fail(errc::not_a_partition_matrix, "matrix is not a block-incidence encoding");
  Universe ground(A.col_labels());
  SolutionEnumerator en(solve_ones(A), cap);
  SetFamily supports(ground);
  while (auto v = en.next()) supports.add(support(*v, ground));
  return min_family(supports);
}

/// Equality of matroids on one labeled ground set: the independence oracles
/// agree on every subset.
inline bool matroids_equal(const VectorMatroid& M1, const VectorMatroid& M2) {
  if (!(M1.ground() == M2.ground()))
    fail(errc::ground_mismatch, "matroids live on different ground sets");
  std::size_t n = M1.ground().size();
  require_scannable_ground(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto idx = detail::mask_to_indices(mask, n);
    if (columns_independent_idx(M1.matrix(), idx) != columns_independent_idx(M2.matrix(), idx))
      return false;
  }
  return true;
}

/// Circuit axioms: no empty member, an antichain under inclusion, and the
/// elimination property for every intersecting pair.
inline bool circuit_axioms_hold(const SetFamily& C) {
  for (const auto& c : C.sets())
    if (c.is_empty()) return false;
  for (const auto& a : C.sets())
    for (const auto& b : C.sets()) {
      if (a == b) continue;
      if (a.is_subset_of(b)) return false;
    }
  for (const auto& c1 : C.sets())
    for (const auto& c2 : C.sets()) {
      if (c1 == c2) continue;
      ElementSet common = c1.intersect(c2);
      for (std::size_t x : common.indices()) {
        ElementSet target = c1.unite(c2).minus(ElementSet(C.universe(), {x}));
        bool found = false;
        for (const auto& c3 : C.sets())
          if (c3.is_subset_of(target)) {
            found = true;
            break;
          }
        if (!found) return false;
      }
    }
  return true;
}

/// Independence axioms: contains the empty set, closed downward, and the
/// exchange property for every size-skew pair.
inline bool independence_axioms_hold(const SetFamily& I) {
  if (!I.contains(ElementSet::empty(I.universe()))) return false;
  for (const auto& s : I.sets()) {
    const auto& idx = s.indices();
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != drop) sub.push_back(idx[k]);
      if (!I.contains(ElementSet(I.universe(), sub))) return false;
    }
  }
  for (const auto& a : I.sets())
    for (const auto& b : I.sets()) {
      if (a.size() >= b.size()) continue;
      bool found = false;
      ElementSet candidates = b.minus(a);
      for (std::size_t x : candidates.indices())
        if (I.contains(a.unite(ElementSet(I.universe(), {x})))) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace rsmat
