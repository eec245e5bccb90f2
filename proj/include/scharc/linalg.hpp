#pragma once

#include <cstdint>
#include <vector>

namespace scharc {

using FpVec = std::vector<int>;

/// Dense matrix over the prime field Z_p, entries kept in [0, p).
class FpMat {
 public:
  FpMat() = default;
  FpMat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FpMat identity(int p, int n);
  static FpMat from_rows(int p, const std::vector<FpVec>& rows, int cols);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  FpVec row(int r) const;

  FpMat operator*(const FpMat& o) const;
  FpVec apply(const FpVec& v) const;
  FpMat transpose() const;
  bool operator==(const FpMat& o) const { return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_identity() const;

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Basis of {x : A x = 0}, one vector per free column, in RREF order.
  std::vector<FpVec> nullspace() const;
  /// Inverse of a square invertible matrix; throws BadArgument if singular.
  FpMat inverse() const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

int mod_inverse(int a, int p);

/// Row-reduced basis of span(vectors); zero rows dropped.
std::vector<FpVec> row_basis(int p, const std::vector<FpVec>& vectors, int dim);

/// Encodes a coordinate vector as a big-endian base-p integer.
std::uint64_t encode_coords(const FpVec& v, int p);
FpVec decode_coords(std::uint64_t key, int p, int dim);
std::uint64_t ipow(std::uint64_t b, int e);

int dot_mod(const FpVec& a, const FpVec& b, int p);

}  // namespace scharc
