#include "scharc/classical.hpp"

#include <algorithm>
#include <map>

#include "scharc/config.hpp"
#include "scharc/error.hpp"

namespace scharc {

namespace {

SqMat anti_identity(const FieldPtr& F, int n) {
  SqMat J(F, n);
  for (int i = 0; i < n; ++i) J.at(i, n - 1 - i) = F->one();
  return J;
}

std::vector<std::pair<int, int>> arcs_where(int size, const std::function<bool(int, int)>& keep) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (keep(i, j)) out.push_back({i, j});
  return out;
}

// Solution space of the F_p-linear conditions cond(x) = 0 on `space`, where
// cond maps basis elements to vectors of length rows.
LieSpace kernel_subspace(const LieSpace& space, int rows, const std::function<FpVec(const SqMat&)>& cond) {
  const int p = space.p();
  FpMat A(p, rows, space.dim());
  for (int t = 0; t < space.dim(); ++t) {
    const FpVec c = cond(space.basis_element(t));
    for (int r = 0; r < rows; ++r) A.at(r, t) = c[r];
  }
  std::vector<SqMat> gens;
  for (const auto& v : A.nullspace()) gens.push_back(space.element(v));
  return LieSpace::span(space.field(), space.n(), gens);
}

}  // namespace

const char* classical_name(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::Orthogonal: return "orthogonal";
    case ClassicalKind::Symplectic: return "symplectic";
    case ClassicalKind::Unitary: return "unitary";
  }
  return "?";
}

AntiInvolution::AntiInvolution(ClassicalKind kind, int size, FieldPtr F) : kind_(kind), size_(size), F_(std::move(F)) {
  if (F_->p() == 2) throw Error(Errc::EvenCharacteristic, "anti-involutions need odd characteristic");
  if (size_ < 2 || size_ % 2) throw Error(Errc::BadArgument, "ambient size must be even and positive");
  if (kind_ == ClassicalKind::Unitary && F_->k() % 2)
    throw Error(Errc::BadArgument, "the unitary involution needs a field of even degree");
  J_ = anti_identity(F_, size_);
  const int h = size_ / 2;
  const SqMat Jh = anti_identity(F_, h);
  Omega_ = SqMat(F_, size_);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      Omega_.at(i, h + j) = Jh.at(i, j);
      Omega_.at(h + i, j) = F_->neg(Jh.at(i, j));
    }
}

SqMat AntiInvolution::apply(const SqMat& x) const {
  switch (kind_) {
    case ClassicalKind::Orthogonal: return J_ * x.transpose() * J_;
    case ClassicalKind::Symplectic: return -(Omega_ * x.transpose() * Omega_);
    case ClassicalKind::Unitary: return J_ * x.frobenius(F_->k() / 2).transpose() * J_;
  }
  return x;
}

SqMat cayley(const SqMat& g) {
  const FieldPtr& F = g.field();
  if (F->p() == 2) throw Error(Errc::EvenCharacteristic, "the Cayley map needs odd characteristic");
  const SqMat I = SqMat::identity(F, g.n());
  return ((g - I) * (g + I).inverse()).scaled(F->from_int(2));
}

SqMat cayley_inv(const SqMat& x) {
  const FieldPtr& F = x.field();
  if (F->p() == 2) throw Error(Errc::EvenCharacteristic, "the Cayley map needs odd characteristic");
  const SqMat I = SqMat::identity(F, x.n());
  const SqMat hx = x.scaled(F->inv(F->from_int(2)));
  return (I - hx).inverse() * (I + hx);
}

std::string UGroup::name() const {
  const int size = 2 * n;
  const std::string f = "(F_" + std::to_string(field->q()) + ")";
  switch (kind) {
    case ClassicalKind::Orthogonal: return "UO_" + std::to_string(size) + f;
    case ClassicalKind::Symplectic: return "USp_" + std::to_string(size) + f;
    case ClassicalKind::Unitary: return "UU_" + std::to_string(size) + f;
  }
  return "U";
}

bool UGroup::contains(const SqMat& m) const {
  if (m.n() != 2 * n) return false;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != (i == j ? field->one() : field->zero())) return false;
  return dagger.apply(m) == m.inverse();
}

SqMat UGroup::act_u(const SqMat& g, const SqMat& x) const { return g * x * dagger.apply(g); }

FpVec UGroup::act_u_dual(const SqMat& g, const FpVec& lambda) const {
  const SqMat gi = g.inverse();
  const SqMat gdi = dagger.apply(g).inverse();
  FpVec out(u.dim());
  for (int t = 0; t < u.dim(); ++t) out[t] = dot_mod(lambda, u.coords(gi * u.basis_element(t) * gdi), u.p());
  return out;
}

std::vector<SqMat> UGroup::ambient_generators() const { return algebra_generators(g); }

std::vector<SqMat> UGroup::upper_generators(HUpperReading reading) const {
  const int bound = reading == HUpperReading::BlockColumns ? n : n / 2;
  return algebra_generators(LieSpace::pattern(field, 2 * n, arcs_where(2 * n, [&](int, int j) { return j >= bound; })));
}

FpMat UGroup::action_matrix(const LieSpace& space, const SqMat& gm) const {
  const SqMat gd = dagger.apply(gm);
  FpMat A(space.p(), space.dim(), space.dim());
  for (int t = 0; t < space.dim(); ++t) {
    const FpVec c = space.coords(gm * space.basis_element(t) * gd);
    for (int r = 0; r < space.dim(); ++r) A.at(r, t) = c[r];
  }
  return A;
}

UGroup build_classical(ClassicalKind kind, int n, const FieldPtr& F) {
  if (n < 1) throw Error(Errc::BadArgument, "half size must be positive");
  UGroup G;
  G.kind = kind;
  G.n = n;
  G.field = F;
  G.dagger = AntiInvolution(kind, 2 * n, F);
  const int size = 2 * n;
  G.g = LieSpace::pattern(F, size, arcs_where(size, [](int, int) { return true; }));
  for (int t = 0; t < G.g.dim(); ++t)
    if (!G.g.contains(G.dagger.apply(G.g.basis_element(t))))
      throw Error(Errc::BadArgument, "the involution does not preserve the strictly upper triangular matrices");
  G.u = kernel_subspace(G.g, G.g.dim(), [&](const SqMat& x) { return G.g.coords(x + G.dagger.apply(x)); });
  require_within_cap(G.u.size(), "classical group");
  G.U = MatrixGroup::create(G.u, SpringerKind::Cayley, G.name());
  const auto nsp = LieSpace::intersect(G.u, LieSpace::pattern(F, size, arcs_where(size, [&](int i, int j) {
                                         return i < n && j >= n;
                                       })));
  const auto hsp = LieSpace::intersect(G.u, LieSpace::pattern(F, size, arcs_where(size, [&](int i, int j) {
                                         return j < n || i >= n;
                                       })));
  G.N = MatrixGroup::create(nsp, SpringerKind::Cayley, "N[" + G.name() + "]");
  G.H = MatrixGroup::create(hsp, SpringerKind::Cayley, "H[" + G.name() + "]");
  if (G.N->order() * G.H->order() != G.U->order())
    throw Error(Errc::AssertionFailed, G.name() + ": block factors do not multiply to |U|");
  G.Hphi = ut_group(n, F);
  return G;
}

SCTheory sct_classical(const UGroup& U, HUpperReading reading) {
  std::vector<FpMat> full, partial;
  for (const auto& g : U.ambient_generators()) full.push_back(U.action_matrix(U.u, g));
  for (const auto& h : U.upper_generators(reading)) partial.push_back(U.action_matrix(U.u, h));
  return sct_from_orbits({U.U, full, partial, true,
                          std::string("classical(") + U.name() +
                              (reading == HUpperReading::BlockColumns ? ")" : ",half-columns)")});
}

bool upper_readings_differ(const UGroup& U) {
  std::vector<FpMat> full, a, b;
  for (const auto& g : U.ambient_generators()) full.push_back(U.action_matrix(U.u, g));
  for (const auto& h : U.upper_generators(HUpperReading::BlockColumns)) a.push_back(U.action_matrix(U.u, h));
  for (const auto& h : U.upper_generators(HUpperReading::HalfColumns)) b.push_back(U.action_matrix(U.u, h));
  a = transposes(a);
  b = transposes(b);
  for (const auto& o : orbit_decomposition(transposes(full), U.u.p(), U.u.dim())) {
    const FpVec rep = decode_coords(o.rep(), U.u.p(), U.u.dim());
    if (orbit_of(a, rep).size() != orbit_of(b, rep).size()) return true;
  }
  return false;
}

SCTheory twist_theta(const SCTheory& S, long t) {
  std::vector<ClassFunction> chars;
  for (const auto& c : S.chars) {
    std::vector<Cyclotomic> v;
    for (const auto& x : c.values()) v.push_back(x.galois(t));
    chars.emplace_back(S.group, std::move(v));
  }
  return sct_from_characters(S.group, std::move(chars), S.provenance + "^theta" + std::to_string(t), S.labels);
}

std::vector<int> classical_hpsi(const UGroup& U, const SemidirectSetting& s, const FpVec& mu) {
  const int p = U.u.p();
  const int half = (p + 1) / 2;
  const int size = 2 * U.n;
  const auto nbar = LieSpace::pattern(U.field, size, arcs_where(size, [&](int i, int j) { return i < U.n && j >= U.n; }));
  const LieSpace& nsp = U.N->space();
  auto lambda_bar = [&](const SqMat& y) { return half * dot_mod(mu, nsp.coords(y - U.dagger.apply(y)), p) % p; };
  std::vector<SqMat> basis;
  std::vector<int> base;
  for (int t = 0; t < nbar.dim(); ++t) {
    basis.push_back(nbar.basis_element(t));
    base.push_back(lambda_bar(basis.back()));
  }
  std::vector<int> out;
  for (int h = 0; h < s.H->size(); ++h) {
    const SqMat m = *s.H->matrix(h);
    bool fixed = true;
    for (std::size_t t = 0; t < basis.size() && fixed; ++t) fixed = lambda_bar(m * basis[t]) == base[t];
    if (fixed) out.push_back(h);
  }
  return out;
}

LieSpace classical_r_space(const UGroup& U, const LieSpace& a, const FpVec& eta) {
  const int size = 2 * U.n;
  std::vector<std::pair<SqMat, SqMat>> ms;
  for (int h = 0; h < U.Hphi->size(); ++h) {
    const SqMat b = *U.Hphi->matrix(h);
    SqMat m = SqMat::identity(U.field, size);
    for (int i = 0; i < U.n; ++i)
      for (int j = 0; j < U.n; ++j) m.at(U.n + i, U.n + j) = b.at(i, j);
    ms.push_back({m.inverse(), U.dagger.apply(m).inverse()});
  }
  return kernel_subspace(a, static_cast<int>(ms.size()), [&](const SqMat& x) {
    FpVec row;
    for (const auto& [mi, mdi] : ms) row.push_back(dot_mod(eta, U.u.coords(mi * x * mdi - x), U.u.p()));
    return row;
  });
}

ClassFunction classical_r_character(const UGroup& U, const FpVec& eta) {
  const auto r = classical_r_space(U, U.H->space(), eta);
  std::vector<int> elems;
  for (int h = 0; h < U.H->size(); ++h)
    if (r.contains(U.H->lie(h))) elems.push_back(h);
  const GroupPtr R = SubGroup::create(U.H, elems, "R");
  const auto up = embedding(*R, *U.H);
  const auto lin = ClassFunction::from_elements(
      R, [&](int x) { return Cyclotomic::root(U.u.p(), dot_mod(eta, U.u.coords(U.H->lie(up[x])), U.u.p())); });
  return induce(lin, U.H);
}

namespace {

// Right ideal theory of phi(A) in UT_n, pulled back to A.
SCTheory pulled_back_member(const UGroup& U, const SemidirectSetting& s, const std::vector<int>& elems) {
  const GroupPtr A = static_cast<int>(elems.size()) == s.H->size()
                         ? GroupPtr(s.H)
                         : GroupPtr(SubGroup::create(s.H, elems, "H_psi[" + std::to_string(elems.size()) + "]"));
  const SqMat I = SqMat::identity(U.field, U.n);
  std::vector<SqMat> imgs;
  for (int h : elems) imgs.push_back(U.phi(*s.H->matrix(h)));
  std::vector<SqMat> lie;
  for (const auto& m : imgs) lie.push_back(m - I);
  const auto K = ideal_subgroup(U.Hphi, Side::Right, LieSpace::span(U.field, U.n, lie), "phi(" + A->describe() + ")");
  if (K.group->order() != elems.size()) throw Error(Errc::AssertionFailed, "phi(H_psi) has the wrong order");
  const SCTheory SK = sct_ideal(K, Side::Right);
  std::vector<int> kid(elems.size()), back(K.group->size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    kid[i] = *K.group->find_matrix(imgs[i]);
    back[kid[i]] = static_cast<int>(i);
  }
  SCTheory S;
  S.group = A;
  S.provenance = "phi^*(" + SK.provenance + ")";
  for (const auto& b : SK.blocks) {
    std::vector<int> nb;
    for (int k : b) nb.push_back(back[k]);
    S.blocks.push_back(std::move(nb));
  }
  for (const auto& c : SK.chars) S.chars.push_back(ClassFunction::from_elements(A, [&](int x) { return c(kid[x]); }));
  S.labels = SK.labels;
  canonicalize(S);
  return S;
}

}  // namespace

ClassicalLittleGroups sct_classical_littlegroups(const UGroup& U) {
  ClassicalLittleGroups r;
  r.setting = make_setting(U.U, U.N, U.H);
  const auto& s = r.setting;
  try {
    validate_hchoice(s, [&](const FpVec& mu) { return classical_hpsi(U, s, mu); });
    r.hchoice_valid = true;
  } catch (const Error& e) {
    if (e.code() != Errc::ValidationFailed) throw;
    r.hchoice_failure = e.what();
  }
  r.hmap.strategy = "classical";
  std::map<std::vector<int>, SCTheory> members;
  for (const auto& mu : s.orbit_reps()) {
    const auto elems = classical_hpsi(U, s, mu);
    auto it = members.find(elems);
    if (it == members.end()) it = members.emplace(elems, pulled_back_member(U, s, elems)).first;
    r.hmap.entries.push_back({mu, s.inertia(mu), it->second.group, it->second});
  }
  r.sct = sch_build(s, r.hmap);
  r.relation = sct_compare(r.sct, sct_classical(U));
  return r;
}

}  // namespace scharc
