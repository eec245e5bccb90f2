#include "scharc/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "scharc/config.hpp"
#include "scharc/error.hpp"
#include "scharc/pattern.hpp"

namespace scharc {

int FiniteGroup::power(int a, std::uint64_t e) const {
  int r = 0;
  int b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int o = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

void FiniteGroup::ensure_tables(std::uint64_t limit) const {
  if (order_ > limit) return;
  std::call_once(table_once_, [this] {
    const int n = size();
    std::vector<int> inv(n);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int c = mul_impl(a, b);
        table[static_cast<std::size_t>(a) * n + b] = c;
        if (c == 0) inv[a] = b;
      }
    inverses_ = std::move(inv);
    table_ = std::move(table);
  });
}

std::vector<int> generate(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> seen(G.size(), 0);
  std::vector<int> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      const int y = G.mul(out[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::natural_generators() const {
  std::vector<int> gens;
  std::vector<char> in(size(), 0);
  in[0] = 1;
  std::size_t have = 1;
  for (int x = 1; x < size() && have < order_; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    const auto sub = generate(*this, gens);
    for (int y : sub) in[y] = 1;
    have = sub.size();
  }
  return gens;
}

const std::vector<int>& FiniteGroup::generators() const {
  std::call_once(gens_once_, [this] {
    require_within_cap(order_, "generating set search");
    ensure_tables();
    gens_ = natural_generators();
  });
  return gens_;
}

const ConjClasses& FiniteGroup::classes() const {
  std::call_once(classes_once_, [this] {
    require_within_cap(order_, "conjugacy classes");
    ensure_tables();
    const auto& gens = generators();
    ConjClasses cc;
    cc.class_of.assign(size(), -1);
    for (int x = 0; x < size(); ++x) {
      if (cc.class_of[x] >= 0) continue;
      const int id = static_cast<int>(cc.classes.size());
      std::vector<int> cls{x};
      cc.class_of[x] = id;
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (int g : gens) {
          const int y = conj(g, cls[i]);
          if (cc.class_of[y] < 0) {
            cc.class_of[y] = id;
            cls.push_back(y);
          }
        }
      std::sort(cls.begin(), cls.end());
      cc.classes.push_back(std::move(cls));
    }
    classes_ = std::move(cc);
  });
  return classes_;
}

int FiniteGroup::exponent() const {
  const auto& cc = classes();
  long e = 1;
  for (int c = 0; c < cc.count(); ++c) e = std::lcm(e, static_cast<long>(element_order(cc.rep(c))));
  return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const { return classes().count() == size(); }

// ---------------------------------------------------------------------------

std::shared_ptr<const MatrixGroup> MatrixGroup::create(LieSpace space, SpringerKind kind, std::string name) {
  if (space.size() > (std::uint64_t{1} << 31)) throw Error(Errc::CapExceeded, "group order exceeds element id range");
  if (kind == SpringerKind::Cayley && space.p() == 2)
    throw Error(Errc::EvenCharacteristic, "the Cayley map needs odd characteristic");
  return std::shared_ptr<const MatrixGroup>(new MatrixGroup(std::move(space), kind, std::move(name)));
}

MatrixGroup::MatrixGroup(LieSpace space, SpringerKind kind, std::string name)
    : FiniteGroup(space.size()), space_(std::move(space)), kind_(kind), name_(std::move(name)) {
  if (kind_ != SpringerKind::Algebra) return;
  const int d = space_.dim();
  std::vector<SqMat> basis;
  for (int t = 0; t < d; ++t) basis.push_back(space_.basis_element(t));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const SqMat prod = basis[a] * basis[b];
      if (prod.is_zero()) continue;
      const auto c = space_.try_coords(prod);
      if (!c) throw Error(Errc::SpaceNotClosed, name_ + ": space is not closed under multiplication");
      for (int t = 0; t < d; ++t)
        if ((*c)[t]) structure_.push_back({a, b, t, (*c)[t]});
    }
  closed_ = true;
}

SqMat MatrixGroup::to_group_matrix(const SqMat& x) const {
  const FieldPtr& F = field();
  const SqMat I = SqMat::identity(F, n());
  if (kind_ == SpringerKind::Algebra) return I + x;
  const FqScalar half = F->inv(F->from_int(2));
  const SqMat hx = x.scaled(half);
  return (I - hx).inverse() * (I + hx);
}

SqMat MatrixGroup::to_lie_matrix(const SqMat& g) const {
  const FieldPtr& F = field();
  const SqMat I = SqMat::identity(F, n());
  if (kind_ == SpringerKind::Algebra) return g - I;
  return ((g - I) * (g + I).inverse()).scaled(F->from_int(2));
}

std::optional<SqMat> MatrixGroup::matrix(int a) const { return to_group_matrix(lie(a)); }

std::optional<int> MatrixGroup::find_matrix(const SqMat& g) const {
  if (g.n() != n()) return std::nullopt;
  const SqMat I = SqMat::identity(field(), n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j <= i; ++j)
      if (g.at(i, j) != I.at(i, j)) return std::nullopt;
  const auto c = space_.try_coords(to_lie_matrix(g));
  if (!c) return std::nullopt;
  return id_of_coords(*c);
}

std::string MatrixGroup::code(int a) const {
  const FpVec c = lie_coords(a);
  std::string s;
  const bool sep = space_.p() >= 10;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sep && i) s += '.';
    s += std::to_string(c[i]);
  }
  return s;
}

int MatrixGroup::mul_impl(int a, int b) const {
  if (kind_ == SpringerKind::Algebra) {
    const int p = space_.p();
    FpVec x = lie_coords(a);
    const FpVec y = lie_coords(b);
    FpVec z(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) z[t] = (x[t] + y[t]) % p;
    for (const Term& term : structure_) {
      const int xa = x[term.a];
      const int yb = y[term.b];
      if (xa && yb) z[term.t] = (z[term.t] + xa * yb * term.c) % p;
    }
    return id_of_coords(z);
  }
  const SqMat g = *matrix(a) * *matrix(b);
  return id_of_lie(to_lie_matrix(g));
}

int MatrixGroup::inv_impl(int a) const {
  if (kind_ == SpringerKind::Cayley) {
    // f(g^{-1}) = -f(g) for the Cayley map.
    FpVec c = lie_coords(a);
    for (int& v : c) v = (space_.p() - v) % space_.p();
    return id_of_coords(c);
  }
  const SqMat g = *matrix(a);
  return id_of_lie(to_lie_matrix(g.inverse()));
}

std::vector<int> MatrixGroup::natural_generators() const {
  std::vector<int> gens;
  if (kind_ == SpringerKind::Algebra && space_.is_pattern()) {
    for (const SqMat& g : algebra_generators(space_)) gens.push_back(id_of_lie(to_lie_matrix(g)));
    return gens;
  }
  for (int t = 0; t < space_.dim(); ++t) {
    FpVec c(space_.dim(), 0);
    c[t] = 1;
    gens.push_back(id_of_coords(c));
  }
  if (generate(*this, gens).size() == order()) return gens;
  return FiniteGroup::natural_generators();
}

// ---------------------------------------------------------------------------

SubGroup::SubGroup(GroupPtr parent, std::vector<int> elements, std::string name)
    : FiniteGroup(elements.size()), parent_(std::move(parent)), elements_(std::move(elements)), name_(std::move(name)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
}

std::shared_ptr<const SubGroup> SubGroup::create(GroupPtr parent, std::vector<int> elements, std::string name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw Error(Errc::NotSubgroup, name + ": identity missing");
  parent->ensure_tables();
  std::vector<char> in(parent->size(), 0);
  for (int e : elements) in[e] = 1;
  // Closure under products with a generating set of the subset suffices; use the
  // subset itself for small sets and a greedy generating set otherwise.
  std::vector<int> gens;
  {
    std::vector<char> reached(parent->size(), 0);
    reached[0] = 1;
    std::size_t have = 1;
    for (int x : elements) {
      if (have == elements.size()) break;
      if (reached[x]) continue;
      gens.push_back(x);
      const auto sub = generate(*parent, gens);
      if (sub.size() > elements.size()) throw Error(Errc::NotSubgroup, name + ": not closed under multiplication");
      for (int y : sub) {
        if (!in[y]) throw Error(Errc::NotSubgroup, name + ": not closed under multiplication");
        reached[y] = 1;
      }
      have = sub.size();
    }
  }
  return std::shared_ptr<const SubGroup>(new SubGroup(std::move(parent), std::move(elements), std::move(name)));
}

std::shared_ptr<const SubGroup> SubGroup::generated(GroupPtr parent, const std::vector<int>& gens, std::string name) {
  parent->ensure_tables();
  auto elems = generate(*parent, gens);
  return std::shared_ptr<const SubGroup>(new SubGroup(std::move(parent), std::move(elems), std::move(name)));
}

std::optional<int> SubGroup::find_matrix(const SqMat& g) const {
  const auto id = parent_->find_matrix(g);
  if (!id) return std::nullopt;
  const int s = from_parent(*id);
  if (s < 0) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------

ProductGroup::ProductGroup(GroupPtr a, GroupPtr b) : FiniteGroup(a->order() * b->order()), a_(std::move(a)), b_(std::move(b)) {}

std::shared_ptr<const ProductGroup> ProductGroup::create(GroupPtr a, GroupPtr b) {
  if (a->order() * b->order() > (std::uint64_t{1} << 31)) throw Error(Errc::CapExceeded, "product order exceeds id range");
  return std::shared_ptr<const ProductGroup>(new ProductGroup(std::move(a), std::move(b)));
}

// ---------------------------------------------------------------------------

std::vector<int> embedding(const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<int> out(A.size());
  if (&A == &B) {
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (const auto* sub = dynamic_cast<const SubGroup*>(&A); sub && sub->parent().get() == &B) return sub->elements();
  if (const auto* sub = dynamic_cast<const SubGroup*>(&B)) {
    const auto up = embedding(A, *sub->parent());
    for (int a = 0; a < A.size(); ++a) {
      out[a] = sub->from_parent(up[a]);
      if (out[a] < 0) throw Error(Errc::NotSubgroup, A.describe() + " is not contained in " + B.describe());
    }
    return out;
  }
  if (const auto* sub = dynamic_cast<const SubGroup*>(&A); sub && sub->parent()->size() <= B.size()) {
    try {
      const auto up = embedding(*sub->parent(), B);
      for (int a = 0; a < A.size(); ++a) out[a] = up[sub->to_parent(a)];
      return out;
    } catch (const Error&) {
      // the parent is not inside B; fall back to matrices
    }
  }
  for (int a = 0; a < A.size(); ++a) {
    const auto m = A.matrix(a);
    if (!m) throw Error(Errc::NotSubgroup, "no common embedding for " + A.describe() + " and " + B.describe());
    const auto b = B.find_matrix(*m);
    if (!b) throw Error(Errc::NotSubgroup, A.describe() + " is not contained in " + B.describe());
    out[a] = *b;
  }
  return out;
}

}  // namespace scharc
