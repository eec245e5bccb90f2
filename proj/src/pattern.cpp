#include "scharc/pattern.hpp"

#include <algorithm>
#include <set>

#include "scharc/error.hpp"

namespace scharc {

Poset::Poset(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [i, j] : arcs)
    if (i < 1 || j > n || i >= j) throw Error(Errc::BadArgument, "poset arc (" + std::to_string(i) + "," + std::to_string(j) + ") invalid");
  arcs_ = std::move(arcs);
  for (auto [i, j] : arcs_)
    for (auto [a, b] : arcs_)
      if (a == j && !relates(i, b))
        throw Error(Errc::BadArgument, "poset relation is not transitive at (" + std::to_string(i) + "," + std::to_string(b) + ")");
}

Poset Poset::full(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) arcs.emplace_back(i, j);
  return Poset(n, arcs);
}

bool Poset::relates(int i, int j) const { return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(i, j)); }

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : arcs_) {
    bool cover = true;
    for (int l = i + 1; l < j && cover; ++l)
      if (relates(i, l) && relates(l, j)) cover = false;
    if (cover) out.emplace_back(i, j);
  }
  return out;
}

std::string Poset::to_string() const {
  std::string s = "{";
  for (std::size_t t = 0; t < arcs_.size(); ++t)
    s += (t ? "," : "") + std::string("(") + std::to_string(arcs_[t].first) + "," + std::to_string(arcs_[t].second) + ")";
  return s + "}";
}

std::vector<std::pair<int, int>> zero_based(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : arcs) out.emplace_back(i - 1, j - 1);
  return out;
}

std::string pattern_name(int n, const std::vector<std::pair<int, int>>& arcs0, const Field& F) {
  const std::string field = "(F_" + std::to_string(F.q()) + ")";
  if (static_cast<int>(arcs0.size()) == n * (n - 1) / 2) return "UT_" + std::to_string(n) + field;
  std::string s = "U_" + std::to_string(n) + "{";
  for (std::size_t t = 0; t < arcs0.size(); ++t)
    s += (t ? "," : "") + std::to_string(arcs0[t].first + 1) + std::to_string(arcs0[t].second + 1);
  return s + "}" + field;
}

MatrixGroupPtr pattern_group(const Poset& poset, const FieldPtr& F) {
  const auto arcs0 = zero_based(poset.arcs());
  return MatrixGroup::create(LieSpace::pattern(F, poset.n(), arcs0), SpringerKind::Algebra,
                             pattern_name(poset.n(), arcs0, *F));
}

MatrixGroupPtr ut_group(int n, const FieldPtr& F) { return pattern_group(Poset::full(n), F); }

SqMat f_map(const SqMat& g) { return g - SqMat::identity(g.field(), g.n()); }
SqMat f_inv(const SqMat& x) { return x + SqMat::identity(x.field(), x.n()); }

namespace {

MatrixGroupPtr sub_pattern(const MatrixGroupPtr& G, const std::vector<std::pair<int, int>>& arcs0) {
  return MatrixGroup::create(LieSpace::pattern(G->field(), G->n(), arcs0), SpringerKind::Algebra,
                             pattern_name(G->n(), arcs0, *G->field()));
}

}  // namespace

std::pair<SqMat, SqMat> SemidirectSplit::factor(const SqMat& g) const {
  SqMat h = g;
  for (int i = 0; i < k; ++i)
    for (int j = k; j < g.n(); ++j) h.at(i, j) = g.field()->zero();
  return {g * h.inverse(), h};
}

SemidirectSplit split_semidirect(const MatrixGroupPtr& G, int k) {
  const int n = G->n();
  if (k < 0 || k > n) throw Error(Errc::BadIndex, "split index " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  if (!G->space().is_pattern()) throw Error(Errc::BadArgument, G->describe() + " is not a pattern group");
  std::vector<std::pair<int, int>> an, ak, am;
  for (auto [i, j] : G->space().support_arcs()) {
    if (j < k)
      ak.emplace_back(i, j);
    else if (i >= k)
      am.emplace_back(i, j);
    else
      an.emplace_back(i, j);
  }
  std::vector<std::pair<int, int>> ah = ak;
  ah.insert(ah.end(), am.begin(), am.end());
  std::sort(ah.begin(), ah.end());
  SemidirectSplit s{G, k, sub_pattern(G, an), sub_pattern(G, ak), sub_pattern(G, am), sub_pattern(G, ah)};
  const LieSpace& nsp = s.N->space();
  for (int a = 0; a < nsp.dim(); ++a)
    for (int b = 0; b < nsp.dim(); ++b)
      if (!(nsp.basis_element(a) * nsp.basis_element(b)).is_zero())
        throw Error(Errc::ValidationFailed, "split factor N is not abelian");
  for (const SqMat& h : algebra_generators(s.H->space())) conj_matrix(nsp, h);
  if (s.N->order() * s.H->order() != G->order()) throw Error(Errc::ValidationFailed, "|N||H| != |G|");
  return s;
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::TwoSided:
      return "two-sided";
  }
  return "?";
}

namespace {

// "e_12+2e_13" style description of a matrix.
std::string entries(const SqMat& x) {
  std::string s;
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) {
      if (x.at(i, j).code == 0) continue;
      if (!s.empty()) s += "+";
      if (x.at(i, j) != x.field()->one()) s += x.field()->to_string(x.at(i, j));
      s += "e_" + std::to_string(i + 1) + std::to_string(j + 1);
    }
  return s.empty() ? "0" : s;
}

}  // namespace

IdealSubgroup ideal_subgroup(const MatrixGroupPtr& parent, Side side, const LieSpace& space, std::string name) {
  const LieSpace& g = parent->space();
  if (!space.is_subspace_of(g)) throw Error(Errc::NotAnIdeal, "subspace is not contained in the parent algebra");
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < space.dim(); ++b) {
      const SqMat x = g.basis_element(a);
      const SqMat y = space.basis_element(b);
      auto witness = [&](const SqMat& l, const SqMat& r, const char* what) {
        throw Error(Errc::NotAnIdeal, std::string("not a ") + side_name(side) + " ideal: " + what + " product " +
                                          entries(l) + " * " + entries(r) + " escapes the span");
      };
      if (side != Side::Right && !space.contains(x * y)) witness(x, y, "g*h");
      if (side != Side::Left && !space.contains(y * x)) witness(y, x, "h*g");
    }
  if (name.empty()) {
    if (space.is_pattern())
      name = pattern_name(space.n(), space.support_arcs(), *space.field());
    else
      name = "U_" + std::to_string(space.n()) + "[" + space.signature() + "](F_" + std::to_string(space.field()->q()) + ")";
  }
  return {parent, side, MatrixGroup::create(space, SpringerKind::Algebra, name)};
}

IdealSubgroup ideal_subgroup(const MatrixGroupPtr& parent, Side side, const std::vector<std::pair<int, int>>& arcs) {
  for (auto [i, j] : arcs) {
    const LieSpace unit = LieSpace::pattern(parent->field(), parent->n(), {{i - 1, j - 1}});
    if (!unit.is_subspace_of(parent->space()))
      throw Error(Errc::NotAnIdeal, "arc (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the parent");
  }
  return ideal_subgroup(parent, side, LieSpace::pattern(parent->field(), parent->n(), zero_based(arcs)));
}

namespace {

void check_compatible(const IdealSubgroup& a, const IdealSubgroup& b) {
  if (a.side != b.side) throw Error(Errc::SideMismatch, "ideal sides differ");
  if (!a.parent->same_as(*b.parent)) throw Error(Errc::GroupMismatch, "ideals of different groups");
}

}  // namespace

IdealSubgroup ideal_meet(const IdealSubgroup& a, const IdealSubgroup& b) {
  check_compatible(a, b);
  return ideal_subgroup(a.parent, a.side, LieSpace::intersect(a.space(), b.space()));
}

IdealSubgroup ideal_join(const IdealSubgroup& a, const IdealSubgroup& b) {
  check_compatible(a, b);
  return ideal_subgroup(a.parent, a.side, LieSpace::sum(a.space(), b.space()));
}

namespace {

template <class F>
FpMat linear_map(const LieSpace& space, F&& apply) {
  const int d = space.dim();
  FpMat m(space.p(), d, d);
  for (int t = 0; t < d; ++t) {
    const auto c = space.try_coords(apply(space.basis_element(t)));
    if (!c) throw Error(Errc::SpaceNotClosed, "action leaves the space");
    for (int r = 0; r < d; ++r) m.at(r, t) = (*c)[r];
  }
  return m;
}

}  // namespace

FpMat left_mult_matrix(const LieSpace& space, const SqMat& g) {
  return linear_map(space, [&](const SqMat& x) { return g * x; });
}

FpMat right_mult_matrix(const LieSpace& space, const SqMat& g) {
  return linear_map(space, [&](const SqMat& x) { return x * g; });
}

FpMat conj_matrix(const LieSpace& space, const SqMat& g) {
  const SqMat gi = g.inverse();
  return linear_map(space, [&](const SqMat& x) { return g * x * gi; });
}

std::vector<SqMat> algebra_generators(const LieSpace& space) {
  const FieldPtr& F = space.field();
  std::vector<SqMat> out;
  const SqMat I = SqMat::identity(F, space.n());
  if (space.is_pattern()) {
    std::vector<std::pair<int, int>> arcs1;
    for (auto [i, j] : space.support_arcs()) arcs1.emplace_back(i + 1, j + 1);
    const Poset P(space.n(), arcs1);
    for (auto [i, j] : P.covers())
      for (int c = 0; c < F->k(); ++c) {
        std::vector<int> coeffs(F->k(), 0);
        coeffs[c] = 1;
        out.push_back(I + SqMat::unit(F, space.n(), i - 1, j - 1, F->from_coeffs(coeffs)));
      }
    return out;
  }
  for (int t = 0; t < space.dim(); ++t) out.push_back(I + space.basis_element(t));
  return out;
}

}  // namespace scharc
