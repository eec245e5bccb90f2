#include "scharc/linalg.hpp"

#include <algorithm>
#include <tuple>

#include "scharc/error.hpp"

namespace scharc {

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error(Errc::BadArgument, "zero has no inverse mod p");
  long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    const long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<int>(t);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t encode_coords(const FpVec& v, int p) {
  std::uint64_t key = 0;
  for (int x : v) key = key * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(x);
  return key;
}

FpVec decode_coords(std::uint64_t key, int p, int dim) {
  FpVec v(dim);
  for (int i = dim - 1; i >= 0; --i) {
    v[i] = static_cast<int>(key % p);
    key /= p;
  }
  return v;
}

int dot_mod(const FpVec& a, const FpVec& b, int p) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return static_cast<int>(s % p);
}

FpMat FpMat::identity(int p, int n) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(int p, const std::vector<FpVec>& rows, int cols) {
  FpMat m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

FpVec FpMat::row(int r) const {
  return FpVec(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (cols_ != o.rows_) throw Error(Errc::BadArgument, "matrix shape mismatch");
  FpMat out(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) = (out.at(i, j) + a * o.at(k, j)) % p_;
    }
  return out;
}

FpVec FpMat::apply(const FpVec& v) const {
  FpVec out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    long s = 0;
    for (int j = 0; j < cols_; ++j) s += static_cast<long>(at(i, j)) * v[j];
    out[i] = static_cast<int>(s % p_);
  }
  return out;
}

FpMat FpMat::transpose() const {
  FpMat t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool FpMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<int> FpMat::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    const int inv = mod_inverse(at(r, c), p_);
    for (int j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv % p_;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const int f = at(i, c);
      for (int j = 0; j < cols_; ++j) at(i, j) = ((at(i, j) - f * at(r, j)) % p_ + p_) % p_;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FpMat::rank() const {
  FpMat m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<FpVec> FpMat::nullspace() const {
  FpMat m = *this;
  const std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FpVec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p_ - m.at(static_cast<int>(r), f)) % p_;
    basis.push_back(v);
  }
  return basis;
}

FpMat FpMat::inverse() const {
  if (rows_ != cols_) throw Error(Errc::BadArgument, "inverse of non-square matrix");
  const int n = rows_;
  FpMat aug(p_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  const std::vector<int> piv = aug.rref();
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw Error(Errc::BadArgument, "singular matrix");
  FpMat inv(p_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<FpVec> row_basis(int p, const std::vector<FpVec>& vectors, int dim) {
  if (vectors.empty()) return {};
  FpMat m = FpMat::from_rows(p, vectors, dim);
  const std::vector<int> piv = m.rref();
  std::vector<FpVec> out;
  for (std::size_t r = 0; r < piv.size(); ++r) out.push_back(m.row(static_cast<int>(r)));
  return out;
}

}  // namespace scharc
