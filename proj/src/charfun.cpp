#include "scharc/charfun.hpp"

#include <algorithm>

#include "scharc/error.hpp"

namespace scharc {

ClassFunction::ClassFunction(GroupPtr G, std::vector<Cyclotomic> values) : G_(std::move(G)), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != G_->classes().count())
    throw Error(Errc::BadArgument, "class function length differs from the class count");
}

ClassFunction ClassFunction::constant(GroupPtr G, const Cyclotomic& c) {
  const int r = G->classes().count();
  return ClassFunction(std::move(G), std::vector<Cyclotomic>(r, c));
}

ClassFunction ClassFunction::regular(GroupPtr G) {
  std::vector<Cyclotomic> v(G->classes().count(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long>(G->order()));
  return ClassFunction(std::move(G), std::move(v));
}

namespace {

void same_group(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group() && !f.group()->same_as(*g.group()))
    throw Error(Errc::GroupMismatch, f.group()->describe() + " vs " + g.group()->describe());
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  same_group(*this, o);
  std::vector<Cyclotomic> v(v_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_[i] + o.v_[i];
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  same_group(*this, o);
  std::vector<Cyclotomic> v(v_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_[i] - o.v_[i];
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::operator*(const Cyclotomic& c) const {
  std::vector<Cyclotomic> v(v_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_[i] * c;
  return ClassFunction(G_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (v_.size() != o.v_.size()) return false;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != o.v_[i]) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.conj());
  return ClassFunction(G_, std::move(v));
}

std::optional<Cyclotomic> ClassFunction::ratio_to(const ClassFunction& o) const {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (o.v_[i].is_zero()) continue;
    const Cyclotomic c = v_[i] / o.v_[i];
    if (o * c == *this) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

ClassFunction cf_pointwise(const ClassFunction& f, const ClassFunction& g) {
  same_group(f, g);
  std::vector<Cyclotomic> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.on_class(static_cast<int>(i)) * g.on_class(static_cast<int>(i));
  return ClassFunction(f.group(), std::move(v));
}

ClassFunction cf_convolve(const ClassFunction& f, const ClassFunction& g) {
  same_group(f, g);
  const FiniteGroup& G = *f.group();
  G.ensure_tables();
  const auto& cc = G.classes();
  std::vector<Cyclotomic> v(cc.count());
  // (f * g)(x) = 1/|G| sum_{c, d} f(c) g(d) #{y in c : y^{-1} x in d}
  for (int k = 0; k < cc.count(); ++k) {
    const int x = cc.rep(k);
    std::vector<std::vector<long>> count(cc.count(), std::vector<long>(cc.count(), 0));
    for (int y = 0; y < G.size(); ++y) count[cc.class_of[y]][cc.class_of[G.mul(G.inv(y), x)]]++;
    Cyclotomic s(0);
    for (int a = 0; a < cc.count(); ++a)
      for (int b = 0; b < cc.count(); ++b)
        if (count[a][b]) s += f.on_class(a) * g.on_class(b) * mpq_class(count[a][b]);
    v[k] = s * mpq_class(1, static_cast<long>(G.order()));
  }
  return ClassFunction(f.group(), std::move(v));
}

Cyclotomic cf_inner(const ClassFunction& f, const ClassFunction& g) {
  same_group(f, g);
  const auto& cc = f.group()->classes();
  Cyclotomic s(0);
  for (int c = 0; c < cc.count(); ++c) {
    if (f.on_class(c).is_zero() || g.on_class(c).is_zero()) continue;
    s += f.on_class(c) * g.on_class(c).conj() * mpq_class(static_cast<long>(cc.size(c)));
  }
  return s * mpq_class(1, static_cast<long>(f.group()->order()));
}

ClassFunction induce(const ClassFunction& f, const GroupPtr& B) {
  const FiniteGroup& A = *f.group();
  const std::vector<int> emb = embedding(A, *B);
  const auto& ccB = B->classes();
  // Ind(b) = |B| / (|A| |cls(b)|) * sum_{y in cls(b) cap A} f(y)
  std::vector<Cyclotomic> sums(ccB.count(), Cyclotomic(0));
  const auto& ccA = A.classes();
  for (int a = 0; a < A.size(); ++a) {
    const Cyclotomic& v = f.on_class(ccA.class_of[a]);
    if (!v.is_zero()) sums[ccB.class_of[emb[a]]] += v;
  }
  for (int c = 0; c < ccB.count(); ++c)
    if (!sums[c].is_zero())
      sums[c] = sums[c] * mpq_class(static_cast<long>(B->order()), static_cast<long>(A.order() * ccB.size(c)));
  return ClassFunction(B, std::move(sums));
}

ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& A) {
  const std::vector<int> emb = embedding(*A, *f.group());
  return ClassFunction::from_elements(A, [&](int a) { return f(emb[a]); });
}

ClassFunction inflate(const ClassFunction& f, const GroupPtr& G, const std::vector<int>& pi) {
  const FiniteGroup& H = *f.group();
  if (static_cast<int>(pi.size()) != G->size()) throw Error(Errc::NotQuotient, "projection has the wrong length");
  std::vector<char> hit(H.size(), 0);
  for (int g = 0; g < G->size(); ++g) hit[pi[g]] = 1;
  if (std::count(hit.begin(), hit.end(), 0)) throw Error(Errc::NotQuotient, "projection is not surjective");
  for (int s : G->generators())
    for (int g = 0; g < G->size(); ++g)
      if (pi[G->mul(s, g)] != H.mul(pi[s], pi[g])) throw Error(Errc::NotQuotient, "projection is not a homomorphism");
  return ClassFunction::from_elements(G, [&](int g) { return f(pi[g]); });
}

ClassFunction conjugate_cf(const ClassFunction& f, const GroupPtr& ambient, int g) {
  const FiniteGroup& A = *f.group();
  const std::vector<int> emb = embedding(A, *ambient);
  std::vector<int> elems;
  for (int a = 0; a < A.size(); ++a) elems.push_back(ambient->conj(g, emb[a]));
  std::sort(elems.begin(), elems.end());
  std::vector<int> sorted_emb = emb;
  std::sort(sorted_emb.begin(), sorted_emb.end());
  GroupPtr target;
  if (elems == sorted_emb)
    target = f.group();
  else
    target = SubGroup::create(ambient, elems, ambient->describe() + "^" + std::to_string(g) + "(" + A.describe() + ")");
  const std::vector<int> temb = embedding(*target, *ambient);
  std::vector<int> back(ambient->size(), -1);
  for (int a = 0; a < A.size(); ++a) back[emb[a]] = a;
  const int gi = ambient->inv(g);
  return ClassFunction::from_elements(target, [&](int x) { return f(back[ambient->conj(gi, temb[x])]); });
}

ClassFunction transfer(const ClassFunction& f, const GroupPtr& B) {
  const std::vector<int> emb = embedding(*B, *f.group());
  return ClassFunction::from_elements(B, [&](int b) { return f(emb[b]); });
}

bool is_superclass_function(const ClassFunction& f, const std::vector<std::vector<int>>& blocks) {
  for (const auto& block : blocks)
    for (int x : block)
      if (f(x) != f(block.front())) return false;
  return true;
}

}  // namespace scharc
