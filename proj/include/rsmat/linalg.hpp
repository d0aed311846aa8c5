#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsmat/errors.hpp"
#include "rsmat/fields.hpp"

namespace rsmat {

/// Dense exact vector over one field.
class Vector {
 public:
  Vector(FieldSpec spec, std::vector<FieldElement> components)
      : spec_(spec), comps_(std::move(components)) {
    for (const auto& c : comps_)
      if (!(c.spec() == spec_)) fail(errc::mixed_fields, "vector component from a different field");
  }

  static Vector zero(const FieldSpec& spec, std::size_t n) {
    return Vector(spec, std::vector<FieldElement>(n, FieldElement::zero(spec)));
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return comps_.size(); }
  const FieldElement& operator[](std::size_t i) const { return comps_[i]; }
  FieldElement& operator[](std::size_t i) { return comps_[i]; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Indices of the nonzero components, ascending.
  std::vector<std::size_t> nonzero_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (!comps_[i].is_zero()) out.push_back(i);
    return out;
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(errc::length_mismatch, "vector sizes differ");
    std::vector<FieldElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return Vector(a.spec_, std::move(out));
  }

  friend Vector operator*(const FieldElement& s, const Vector& v) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(s * v[i]);
    return Vector(v.spec_, std::move(out));
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.spec_ == b.spec_ && a.comps_ == b.comps_;
  }

 private:
  FieldSpec spec_;
  std::vector<FieldElement> comps_;
};

/// Dense exact matrix with labeled columns. Entries are stored row-major
/// and all share the matrix's field. Column labels are distinct and fixed.
class ExactMatrix {
 public:
  ExactMatrix(FieldSpec spec, std::size_t rows, std::size_t cols,
              std::vector<FieldElement> entries, std::vector<std::string> col_labels = {})
      : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)),
        labels_(std::move(col_labels)) {
    if (rows_ == 0 || cols_ == 0) fail(errc::length_mismatch, "matrix needs at least one row and column");
    if (entries_.size() != rows_ * cols_)
      fail(errc::length_mismatch, "entry count does not match dimensions");
    for (const auto& e : entries_)
      if (!(e.spec() == spec_)) fail(errc::mixed_fields, "matrix entry from a different field");
    if (labels_.empty()) {
      labels_.reserve(cols_);
      for (std::size_t j = 0; j < cols_; ++j) labels_.push_back("x" + std::to_string(j + 1));
    }
    if (labels_.size() != cols_) fail(errc::length_mismatch, "label count does not match column count");
    for (std::size_t j = 0; j < labels_.size(); ++j)
      for (std::size_t k = j + 1; k < labels_.size(); ++k)
        if (labels_[j] == labels_[k]) fail(errc::length_mismatch, "duplicate column label " + labels_[j]);
  }

  /// Convenience constructor from integer literals.
  static ExactMatrix from_int_rows(const FieldSpec& spec,
                                   const std::vector<std::vector<std::int64_t>>& rows,
                                   std::vector<std::string> col_labels = {}) {
    if (rows.empty() || rows.front().empty())
      fail(errc::length_mismatch, "matrix needs at least one row and column");
    std::size_t n = rows.front().size();
    std::vector<FieldElement> entries;
    entries.reserve(rows.size() * n);
    for (const auto& r : rows) {
      if (r.size() != n) fail(errc::length_mismatch, "ragged rows");
      for (std::int64_t v : r) entries.push_back(FieldElement::from_integer(spec, v));
    }
    return ExactMatrix(spec, rows.size(), n, std::move(entries), std::move(col_labels));
  }

  static ExactMatrix identity(const FieldSpec& spec, std::size_t n) {
    std::vector<FieldElement> entries(n * n, FieldElement::zero(spec));
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = FieldElement::one(spec);
    return ExactMatrix(spec, n, n, std::move(entries));
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<std::string>& col_labels() const { return labels_; }
  const std::string& label(std::size_t j) const { return labels_[j]; }

  std::size_t col_index(const std::string& label) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (labels_[j] == label) return j;
    fail(errc::unknown_label, "no column labeled " + label);
  }

  Vector row(std::size_t i) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return Vector(spec_, std::move(out));
  }

  Vector col(std::size_t j) const {
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return Vector(spec_, std::move(out));
  }

  ExactMatrix transpose() const {
    std::vector<FieldElement> out;
    out.reserve(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return ExactMatrix(spec_, cols_, rows_, std::move(out));
  }

  /// Column submatrix in the given index order; keeps the selected labels.
  ExactMatrix select_cols(const std::vector<std::size_t>& idx) const {
    if (idx.empty()) fail(errc::length_mismatch, "empty column selection");
    std::vector<FieldElement> out;
    out.reserve(rows_ * idx.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j : idx) out.push_back(at(i, j));
    for (std::size_t j : idx) labels.push_back(labels_[j]);
    return ExactMatrix(spec_, rows_, idx.size(), std::move(out), std::move(labels));
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_ && a.labels_ == b.labels_;
  }

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
  std::vector<std::string> labels_;
};

inline Vector mat_vec(const ExactMatrix& A, const Vector& x) {
  if (x.size() != A.cols()) fail(errc::length_mismatch, "vector length does not match column count");
  std::vector<FieldElement> out;
  out.reserve(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    FieldElement acc = FieldElement::zero(A.spec());
    for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A.at(i, j) * x[j];
    out.push_back(acc);
  }
  return Vector(A.spec(), std::move(out));
}

/// Product A·B; the result carries B's column labels.
inline ExactMatrix mat_mul(const ExactMatrix& A, const ExactMatrix& B) {
  if (A.cols() != B.rows()) fail(errc::length_mismatch, "inner dimensions differ");
  if (!(A.spec() == B.spec())) fail(errc::mixed_fields, "matrix product across fields");
  std::vector<FieldElement> entries;
  entries.reserve(A.rows() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      FieldElement acc = FieldElement::zero(A.spec());
      for (std::size_t k = 0; k < A.cols(); ++k) acc = acc + A.at(i, k) * B.at(k, j);
      entries.push_back(acc);
    }
  return ExactMatrix(A.spec(), A.rows(), B.cols(), std::move(entries), B.col_labels());
}

struct RrefResult {
  ExactMatrix R;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// in column order, so the result is the unique RREF of the row space and
/// byte-for-byte deterministic.
inline RrefResult rref(const ExactMatrix& A) {
  ExactMatrix R = A;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < R.cols() && pivot_row < R.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < R.rows() && R.at(sel, col).is_zero()) ++sel;
    if (sel == R.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R.at(pivot_row, j), R.at(sel, j));
    FieldElement inv = R.at(pivot_row, col).inverse();
    for (std::size_t j = 0; j < R.cols(); ++j) R.at(pivot_row, j) = inv * R.at(pivot_row, j);
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == pivot_row || R.at(i, col).is_zero()) continue;
      FieldElement f = R.at(i, col);
      for (std::size_t j = 0; j < R.cols(); ++j) R.at(i, j) = R.at(i, j) - f * R.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  std::size_t rank = pivots.size();
  return RrefResult{std::move(R), std::move(pivots), rank};
}

inline std::size_t rank(const ExactMatrix& A) { return rref(A).rank; }

inline FieldElement determinant(const ExactMatrix& A) {
  if (A.rows() != A.cols()) fail(errc::not_square, "determinant of a non-square matrix");
  ExactMatrix M = A;
  std::size_t n = M.rows();
  FieldElement det = FieldElement::one(M.spec());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && M.at(sel, col).is_zero()) ++sel;
    if (sel == n) return FieldElement::zero(M.spec());
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M.at(col, j), M.at(sel, j));
      det = -det;
    }
    det = det * M.at(col, col);
    FieldElement inv = M.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (M.at(i, col).is_zero()) continue;
      FieldElement f = M.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) M.at(i, j) = M.at(i, j) - f * M.at(col, j);
    }
  }
  return det;
}

/// Solutions of a linear system as an affine coset: particular + span(basis).
/// kind=empty encodes an inconsistent system.
class SolutionSet {
 public:
  enum class Kind { empty, affine };

  static SolutionSet empty_set(const FieldSpec& spec, std::size_t ambient) {
    return SolutionSet(Kind::empty, Vector::zero(spec, ambient), {});
  }

  static SolutionSet affine(Vector particular, std::vector<Vector> basis) {
    for (const auto& b : basis)
      if (b.size() != particular.size()) fail(errc::length_mismatch, "basis vector length mismatch");
    return SolutionSet(Kind::affine, std::move(particular), std::move(basis));
  }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::empty; }
  const Vector& particular() const { return particular_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_size() const { return particular_.size(); }
  const FieldSpec& spec() const { return particular_.spec(); }

 private:
  SolutionSet(Kind kind, Vector particular, std::vector<Vector> basis)
      : kind_(kind), particular_(std::move(particular)), basis_(std::move(basis)) {}

  Kind kind_;
  Vector particular_;
  std::vector<Vector> basis_;
};

namespace detail {

// Kernel basis from an RREF: one vector per free column, ascending, with a 1
// in the free position and the negated pivot-column entries above it.
inline std::vector<Vector> kernel_basis_from_rref(const RrefResult& r, std::size_t ncols) {
  const ExactMatrix& R = r.R;
  const FieldSpec& spec = R.spec();
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = Vector::zero(spec, ncols);
    v[f] = FieldElement::one(spec);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -R.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Null space of A as an affine set with particular = 0. The basis has
/// exactly cols − rank vectors, ordered by ascending free column.
inline SolutionSet null_space_basis(const ExactMatrix& A) {
  RrefResult r = rref(A);
  return SolutionSet::affine(Vector::zero(A.spec(), A.cols()),
                             detail::kernel_basis_from_rref(r, A.cols()));
}

/// Solves A·x = (1,...,1)ᵀ. Returns the empty kind when inconsistent.
inline SolutionSet solve_ones(const ExactMatrix& A) {
  std::vector<FieldElement> aug;
  aug.reserve(A.rows() * (A.cols() + 1));
  FieldElement one = FieldElement::one(A.spec());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.push_back(A.at(i, j));
    aug.push_back(one);
  }
  ExactMatrix augmented(A.spec(), A.rows(), A.cols() + 1, std::move(aug));
  RrefResult r = rref(augmented);
  for (std::size_t c : r.pivot_cols)
    if (c == A.cols()) return SolutionSet::empty_set(A.spec(), A.cols());
  Vector particular = Vector::zero(A.spec(), A.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    particular[r.pivot_cols[i]] = r.R.at(i, A.cols());
  // the left block of the augmented RREF is the RREF of A when consistent
  RrefResult left{r.R.select_cols([&] {
                    std::vector<std::size_t> idx(A.cols());
                    for (std::size_t j = 0; j < A.cols(); ++j) idx[j] = j;
                    return idx;
                  }()),
                  r.pivot_cols, r.rank};
  return SolutionSet::affine(std::move(particular), detail::kernel_basis_from_rref(left, A.cols()));
}

/// Streams every vector of a finite affine solution set exactly once, in
/// lexicographic order of the basis-coefficient tuple (first coefficient
/// most significant). Guards: finite field, and at most `cap` vectors.
class SolutionEnumerator {
 public:
  static constexpr std::uint64_t default_cap = std::uint64_t{1} << 24;

  explicit SolutionEnumerator(SolutionSet set, std::uint64_t cap = default_cap)
      : set_(std::move(set)), coeffs_(set_.dimension(), 0), done_(set_.is_empty()) {
    if (!set_.spec().is_finite())
      fail(errc::infinite_field, "cannot enumerate solutions over " + set_.spec().tag());
    std::int64_t p = set_.spec().modulus();
    total_ = set_.is_empty() ? 0 : 1;
    for (std::size_t i = 0; i < set_.dimension(); ++i) {
      if (total_ > cap / static_cast<std::uint64_t>(p))
        fail(errc::enumeration_too_large,
             "solution count exceeds cap of " + std::to_string(cap) + " vectors");
      total_ *= static_cast<std::uint64_t>(p);
    }
    if (total_ > cap)
      fail(errc::enumeration_too_large,
           "solution count exceeds cap of " + std::to_string(cap) + " vectors");
  }

  std::uint64_t total() const { return total_; }

  std::optional<Vector> next() {
    if (done_) return std::nullopt;
    const FieldSpec& spec = set_.spec();
    Vector v = set_.particular();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      v = v + FieldElement::from_integer(spec, coeffs_[i]) * set_.basis()[i];
    }
    // odometer increment, least-significant position last
    std::int64_t p = spec.modulus();
    std::size_t i = coeffs_.size();
    while (i > 0) {
      --i;
      if (++coeffs_[i] < p) break;
      coeffs_[i] = 0;
      if (i == 0) done_ = true;
    }
    if (coeffs_.empty()) done_ = true;
    return v;
  }

 private:
  SolutionSet set_;
  std::vector<std::int64_t> coeffs_;
  bool done_;
  std::uint64_t total_;
};

/// Collects the full enumeration; subject to the same guards.
inline std::vector<Vector> enumerate_solutions(const SolutionSet& set,
                                               std::uint64_t cap = SolutionEnumerator::default_cap) {
  SolutionEnumerator en(set, cap);
  std::vector<Vector> out;
  out.reserve(en.total());
  while (auto v = en.next()) out.push_back(std::move(*v));
  return out;
}

/// True iff the selected columns are linearly independent (empty selection
/// is independent). Duplicate selections are naturally dependent.
inline bool columns_independent_idx(const ExactMatrix& A, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return true;
  for (std::size_t j : idx)
    if (j >= A.cols()) fail(errc::unknown_label, "column index out of range");
  return rank(A.select_cols(idx)) == idx.size();
}

inline bool columns_independent(const ExactMatrix& A, const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(A.col_index(l));
  return columns_independent_idx(A, idx);
}

/// Re-reads an integer matrix over another field: residues for prime
/// targets, exact integers for the rational target. Labels carry over.
inline ExactMatrix reinterpret(const ExactMatrix& A, const FieldSpec& target) {
  std::vector<FieldElement> entries;
  entries.reserve(A.rows() * A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      entries.push_back(FieldElement::from_integer(target, A.at(i, j).integer_value()));
  return ExactMatrix(target, A.rows(), A.cols(), std::move(entries), A.col_labels());
}

}  // namespace rsmat
