#include "scharc/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "scharc/error.hpp"

namespace scharc {

SqMat SqMat::identity(const FieldPtr& F, int n) {
  SqMat m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
  return m;
}

SqMat SqMat::unit(const FieldPtr& F, int n, int i, int j, FqScalar a) {
  SqMat m(F, n);
  m.at(i, j) = a;
  return m;
}

SqMat SqMat::operator*(const SqMat& o) const {
  const Field& F = *F_;
  SqMat out(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const FqScalar a = at(i, k);
      if (a.code == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const FqScalar b = o.at(k, j);
        if (b.code == 0) continue;
        out.at(i, j) = F.add(out.at(i, j), F.mul(a, b));
      }
    }
  return out;
}

SqMat SqMat::operator+(const SqMat& o) const {
  SqMat out(F_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) out.e_[t] = F_->add(e_[t], o.e_[t]);
  return out;
}

SqMat SqMat::operator-(const SqMat& o) const {
  SqMat out(F_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) out.e_[t] = F_->sub(e_[t], o.e_[t]);
  return out;
}

SqMat SqMat::operator-() const {
  SqMat out(F_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) out.e_[t] = F_->neg(e_[t]);
  return out;
}

SqMat SqMat::scaled(FqScalar a) const {
  SqMat out(F_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) out.e_[t] = F_->mul(a, e_[t]);
  return out;
}

SqMat SqMat::transpose() const {
  SqMat out(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

SqMat SqMat::frobenius(int j) const {
  SqMat out(F_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) out.e_[t] = F_->frobenius(e_[t], j);
  return out;
}

SqMat SqMat::inverse() const {
  const Field& F = *F_;
  SqMat a = *this;
  SqMat inv = identity(F_, n_);
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (piv < n_ && a.at(piv, c).code == 0) ++piv;
    if (piv == n_) throw Error(Errc::BadArgument, "singular matrix over F_q");
    if (piv != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    const FqScalar s = F.inv(a.at(c, c));
    for (int j = 0; j < n_; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), s);
      inv.at(c, j) = F.mul(inv.at(c, j), s);
    }
    for (int i = 0; i < n_; ++i) {
      if (i == c || a.at(i, c).code == 0) continue;
      const FqScalar f = a.at(i, c);
      for (int j = 0; j < n_; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(c, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

SqMat SqMat::block(int r0, int c0, int size) const {
  SqMat out(F_, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

bool SqMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](FqScalar a) { return a.code == 0; });
}

std::string SqMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << F_->to_string(at(i, j));
    os << '\n';
  }
  return os.str();
}

void LieSpace::init_labels() {
  const int k = F_->k();
  labels_.clear();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int c = 0; c < k; ++c) labels_.push_back({i, j, c});
  ambient_dim_ = static_cast<int>(labels_.size());
}

int LieSpace::ambient_index(int i, int j, int c) const {
  // Entries (i, j), i < j, row-major: rows before i contribute sum_{r<i} (n-1-r).
  const int before = i * (n_ - 1) - i * (i - 1) / 2;
  return (before + (j - i - 1)) * F_->k() + c;
}

LieSpace LieSpace::from_ambient_vectors(const FieldPtr& F, int n, const std::vector<FpVec>& vecs) {
  LieSpace s;
  s.F_ = F;
  s.n_ = n;
  s.init_labels();
  if (!vecs.empty()) {
    FpMat m = FpMat::from_rows(F->p(), vecs, s.ambient_dim_);
    s.pivots_ = m.rref();
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) s.basis_.push_back(m.row(static_cast<int>(r)));
  }
  return s;
}

LieSpace LieSpace::pattern(const FieldPtr& F, int n, const std::vector<std::pair<int, int>>& arcs) {
  LieSpace probe;
  probe.F_ = F;
  probe.n_ = n;
  probe.init_labels();
  std::vector<FpVec> vecs;
  for (auto [i, j] : arcs) {
    if (i < 0 || j >= n || i >= j) throw Error(Errc::BadArgument, "arc outside the strictly upper triangle");
    for (int c = 0; c < F->k(); ++c) {
      FpVec v(probe.ambient_dim_, 0);
      v[probe.ambient_index(i, j, c)] = 1;
      vecs.push_back(v);
    }
  }
  return from_ambient_vectors(F, n, vecs);
}

LieSpace LieSpace::span(const FieldPtr& F, int n, const std::vector<SqMat>& gens) {
  LieSpace probe;
  probe.F_ = F;
  probe.n_ = n;
  probe.init_labels();
  std::vector<FpVec> vecs;
  for (const auto& g : gens) vecs.push_back(probe.ambient(g));
  return from_ambient_vectors(F, n, vecs);
}

FpVec LieSpace::ambient(const SqMat& x) const {
  FpVec v(ambient_dim_, 0);
  const int k = F_->k();
  std::size_t t = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < i + 1 && j < n_; ++j)
      if (x.at(i, j).code != 0) throw Error(Errc::SpaceNotClosed, "matrix is not strictly upper triangular");
    for (int j = i + 1; j < n_; ++j) {
      std::uint32_t code = x.at(i, j).code;
      for (int c = 0; c < k; ++c) {
        v[t++] = static_cast<int>(code % F_->p());
        code /= F_->p();
      }
    }
  }
  return v;
}

SqMat LieSpace::from_ambient(const FpVec& v) const {
  SqMat x(F_, n_);
  const int k = F_->k();
  std::size_t t = 0;
  std::vector<int> cs(k);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      for (int c = 0; c < k; ++c) cs[c] = v[t++];
      x.at(i, j) = F_->from_coeffs(cs);
    }
  return x;
}

std::optional<FpVec> LieSpace::try_coords(const SqMat& x) const {
  FpVec a = ambient(x);
  const int p = F_->p();
  FpVec c(basis_.size());
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    const int coef = a[pivots_[t]];
    c[t] = coef;
    if (!coef) continue;
    for (int u = 0; u < ambient_dim_; ++u) a[u] = ((a[u] - coef * basis_[t][u]) % p + p) % p;
  }
  for (int u : a)
    if (u) return std::nullopt;
  return c;
}

FpVec LieSpace::coords(const SqMat& x) const {
  auto c = try_coords(x);
  if (!c) throw Error(Errc::SpaceNotClosed, "matrix lies outside the subspace");
  return *c;
}

SqMat LieSpace::element(const FpVec& coords) const {
  FpVec a(ambient_dim_, 0);
  const int p = F_->p();
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (!coords[t]) continue;
    for (int u = 0; u < ambient_dim_; ++u) a[u] = (a[u] + coords[t] * basis_[t][u]) % p;
  }
  return from_ambient(a);
}

bool LieSpace::is_subspace_of(const LieSpace& other) const {
  for (int t = 0; t < dim(); ++t)
    if (!other.contains(basis_element(t))) return false;
  return true;
}

std::vector<std::pair<int, int>> LieSpace::support_arcs() const {
  std::set<std::pair<int, int>> s;
  for (const auto& b : basis_)
    for (int u = 0; u < ambient_dim_; ++u)
      if (b[u]) s.insert({labels_[u].i, labels_[u].j});
  return {s.begin(), s.end()};
}

std::string LieSpace::signature() const {
  std::string s;
  for (const auto& b : basis_) {
    if (!s.empty()) s += '.';
    for (std::size_t u = 0; u < b.size(); ++u)
      if (b[u]) s += std::to_string(u) + (b[u] == 1 ? "" : ":" + std::to_string(b[u])) + ",";
    s.pop_back();
  }
  return s;
}

bool LieSpace::is_pattern() const {
  const auto arcs = support_arcs();
  if (static_cast<int>(arcs.size()) * F_->k() != dim()) return false;
  for (const auto& b : basis_)
    if (std::count_if(b.begin(), b.end(), [](int v) { return v != 0; }) != 1) return false;
  return true;
}

bool LieSpace::closed_under_product() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      if (!contains(basis_element(a) * basis_element(b))) return false;
  return true;
}

LieSpace LieSpace::intersect(const LieSpace& a, const LieSpace& b) {
  const int p = a.p();
  const int D = a.ambient_dim_;
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0; the a-part of each solution spans the meet.
  FpMat m(p, D, a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int u = 0; u < D; ++u) m.at(u, i) = a.basis_[i][u];
  for (int j = 0; j < b.dim(); ++j)
    for (int u = 0; u < D; ++u) m.at(u, a.dim() + j) = (p - b.basis_[j][u]) % p;
  std::vector<FpVec> vecs;
  for (const auto& sol : m.nullspace()) {
    FpVec v(D, 0);
    for (int i = 0; i < a.dim(); ++i)
      for (int u = 0; u < D; ++u) v[u] = (v[u] + sol[i] * a.basis_[i][u]) % p;
    vecs.push_back(v);
  }
  return from_ambient_vectors(a.F_, a.n_, row_basis(p, vecs, D));
}

LieSpace LieSpace::sum(const LieSpace& a, const LieSpace& b) {
  std::vector<FpVec> vecs = a.basis_;
  vecs.insert(vecs.end(), b.basis_.begin(), b.basis_.end());
  return from_ambient_vectors(a.F_, a.n_, vecs);
}

}  // namespace scharc
