#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scharc/field.hpp"
#include "scharc/linalg.hpp"

namespace scharc {

/// Square matrix over F_q.
class SqMat {
 public:
  SqMat() = default;
  SqMat(FieldPtr F, int n) : F_(std::move(F)), n_(n), e_(static_cast<std::size_t>(n) * n) {}

  static SqMat identity(const FieldPtr& F, int n);
  /// a * e_{ij} (0-based indices).
  static SqMat unit(const FieldPtr& F, int n, int i, int j, FqScalar a);

  const FieldPtr& field() const { return F_; }
  int n() const { return n_; }
  FqScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  FqScalar at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  SqMat operator*(const SqMat& o) const;
  SqMat operator+(const SqMat& o) const;
  SqMat operator-(const SqMat& o) const;
  SqMat operator-() const;
  SqMat scaled(FqScalar a) const;
  SqMat transpose() const;
  /// Entrywise a -> a^{p^j}.
  SqMat frobenius(int j) const;
  /// Gauss-Jordan inverse; throws BadArgument if singular.
  SqMat inverse() const;
  /// Square block with top-left corner (r0, c0).
  SqMat block(int r0, int c0, int size) const;

  bool is_zero() const;
  bool operator==(const SqMat& o) const { return n_ == o.n_ && e_ == o.e_; }
  std::string to_string() const;

 private:
  FieldPtr F_;
  int n_ = 0;
  std::vector<FqScalar> e_;
};

/// An F_p-linear subspace of the strictly upper triangular n x n matrices
/// over F_q. Ambient coordinates list the F_p-coefficients of each entry
/// (i, j), i < j, in row-major order; the subspace basis is kept in reduced
/// echelon form, so the coordinates of a member are its entries at the pivot
/// positions.
class LieSpace {
 public:
  struct Label {
    int i;  // 0-based row
    int j;  // 0-based column
    int c;  // power-basis index within F_q
  };

  LieSpace() = default;

  /// Span over F_q of {e_ij : (i, j) in arcs} (0-based arcs, i < j).
  static LieSpace pattern(const FieldPtr& F, int n, const std::vector<std::pair<int, int>>& arcs);
  /// F_p-span of the given matrices.
  static LieSpace span(const FieldPtr& F, int n, const std::vector<SqMat>& gens);
  static LieSpace from_ambient_vectors(const FieldPtr& F, int n, const std::vector<FpVec>& vecs);

  const FieldPtr& field() const { return F_; }
  int p() const { return F_->p(); }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_dim_; }
  /// Number of points p^dim.
  std::uint64_t size() const { return ipow(static_cast<std::uint64_t>(p()), dim()); }

  FpVec ambient(const SqMat& x) const;
  SqMat from_ambient(const FpVec& v) const;

  /// Coordinates of x, or nullopt when x is not in the subspace.
  std::optional<FpVec> try_coords(const SqMat& x) const;
  /// Coordinates of x; throws SpaceNotClosed when x is outside.
  FpVec coords(const SqMat& x) const;
  bool contains(const SqMat& x) const { return try_coords(x).has_value(); }
  SqMat element(const FpVec& coords) const;
  SqMat element(std::uint64_t key) const { return element(decode_coords(key, p(), dim())); }
  std::uint64_t key(const SqMat& x) const { return encode_coords(coords(x), p()); }

  /// Basis matrix for coordinate t.
  SqMat basis_element(int t) const { return from_ambient(basis_[t]); }
  const std::vector<FpVec>& basis() const { return basis_; }
  /// Pivot entry that carries coordinate t.
  const Label& label(int t) const { return labels_[pivots_[t]]; }
  const std::vector<int>& pivots() const { return pivots_; }
  int ambient_index(int i, int j, int c) const;

  bool is_subspace_of(const LieSpace& other) const;
  bool operator==(const LieSpace& o) const { return n_ == o.n_ && basis_ == o.basis_ && *F_ == *o.F_; }

  /// Distinct (i, j) entries (0-based) that carry a coordinate.
  std::vector<std::pair<int, int>> support_arcs() const;
  /// True when the space is spanned by full matrix entries (a pattern space).
  bool is_pattern() const;
  /// True when x * y lies in the space for all basis elements x, y.
  bool closed_under_product() const;

  /// Canonical text form of the basis, usable as an identity key.
  std::string signature() const;

  static LieSpace intersect(const LieSpace& a, const LieSpace& b);
  static LieSpace sum(const LieSpace& a, const LieSpace& b);

 private:
  void init_labels();

  FieldPtr F_;
  int n_ = 0;
  int ambient_dim_ = 0;
  std::vector<Label> labels_;
  std::vector<FpVec> basis_;
  std::vector<int> pivots_;
};

}  // namespace scharc
