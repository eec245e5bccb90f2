#include "scharc/littlegroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scharc/config.hpp"
#include "scharc/error.hpp"

namespace scharc {

namespace {

std::string coords_text(const FpVec& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

std::vector<int> inverse_index(const std::vector<int>& emb, int size) {
  std::vector<int> back(size, -1);
  for (int i = 0; i < static_cast<int>(emb.size()); ++i) back[emb[i]] = i;
  return back;
}

FpVec add_mod(const FpVec& a, const FpVec& b, int p) {
  FpVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

GroupPtr subgroup_of_h(const SemidirectSetting& s, const std::vector<int>& elems, const std::string& name) {
  if (static_cast<int>(elems.size()) == s.H->size()) return s.H;
  return SubGroup::create(s.H, elems, name);
}

}  // namespace

Cyclotomic SemidirectSetting::psi(const FpVec& mu, int n) const {
  return Cyclotomic::root(p(), dot_mod(mu, N->lie_coords(n), p()));
}

std::vector<int> SemidirectSetting::inertia(const FpVec& mu) const {
  std::vector<int> out;
  for (int h = 0; h < H->size(); ++h)
    if (act(h, mu) == mu) out.push_back(h);
  return out;
}

std::vector<FpVec> SemidirectSetting::orbit_reps() const {
  std::vector<FpVec> out;
  for (const auto& o : orbit_decomposition(transposes(gen_conj), p(), dim())) out.push_back(decode_coords(o.rep(), p(), dim()));
  return out;
}

SemidirectSetting make_setting(const GroupPtr& G, const MatrixGroupPtr& N, const MatrixGroupPtr& H) {
  if (!N->is_abelian()) throw Error(Errc::BadArgument, N->describe() + " is not abelian");
  if (N->order() * H->order() != G->order()) throw Error(Errc::BadArgument, "orders of N and H do not multiply to |G|");
  SemidirectSetting s;
  s.G = G;
  s.N = N;
  s.H = H;
  H->classes();
  s.n_to_g = embedding(*N, *G);
  s.h_to_g = embedding(*H, *G);
  s.factor.assign(G->size(), {-1, -1});
  for (int n = 0; n < N->size(); ++n)
    for (int h = 0; h < H->size(); ++h) {
      auto& slot = s.factor[G->mul(s.n_to_g[n], s.h_to_g[h])];
      if (slot.first >= 0) throw Error(Errc::BadArgument, "N and H intersect nontrivially");
      slot = {n, h};
    }
  for (int h = 0; h < H->size(); ++h) {
    try {
      s.conj.push_back(conj_matrix(N->space(), *H->matrix(h)));
    } catch (const Error&) {
      throw Error(Errc::NotNormal, N->describe() + " is not normalized by " + H->describe());
    }
  }
  for (int h : H->generators()) {
    s.gen_conj.push_back(s.conj[h]);
    for (int n = 0; n < N->size(); ++n) {
      const int moved = N->id_of_coords(s.conj[h].apply(N->lie_coords(n)));
      if (G->conj(s.h_to_g[h], s.n_to_g[n]) != s.n_to_g[moved])
        throw Error(Errc::AssertionFailed, "linear conjugation disagrees with the group law");
    }
  }
  return s;
}

SemidirectSetting make_setting(const SemidirectSplit& split) { return make_setting(split.G, split.N, split.H); }

std::vector<ClassFunction> semidirect_chars(const SemidirectSetting& s, const FpVec& mu,
                                            const std::vector<ClassFunction>& chis) {
  if (chis.empty()) return {};
  const GroupPtr& K = chis.front().group();
  const auto embK = embedding(*K, *s.H);
  const auto inK = inverse_index(embK, s.H->size());
  for (int k : embK)
    if (s.act(k, mu) != mu) throw Error(Errc::NotInInertia, K->describe() + " does not fix psi_" + coords_text(mu));
  const int p = s.p();
  std::vector<FpVec> moved(s.H->size());
  for (int h = 0; h < s.H->size(); ++h) moved[h] = s.act(h, mu);
  const auto& ccG = s.G->classes();
  const auto& ccK = K->classes();
  std::vector<std::vector<Cyclotomic>> vals(chis.size(), std::vector<Cyclotomic>(ccG.count()));
  const mpq_class inv_k(1, static_cast<long>(K->order()));
  for (int c = 0; c < ccG.count(); ++c) {
    const auto [n, h] = s.factor[ccG.rep(c)];
    const FpVec x = s.N->lie_coords(n);
    std::vector<std::vector<long>> counts(ccK.count(), std::vector<long>(p, 0));
    for (int k = 0; k < s.H->size(); ++k) {
      const int kk = inK[s.H->conj(k, h)];
      if (kk < 0) continue;
      counts[ccK.class_of[kk]][dot_mod(moved[k], x, p)]++;
    }
    std::vector<Cyclotomic> sums;
    for (int cls = 0; cls < ccK.count(); ++cls) sums.push_back(Cyclotomic::from_counts(p, counts[cls]));
    for (std::size_t i = 0; i < chis.size(); ++i) {
      if (chis[i].group() != K) throw Error(Errc::GroupMismatch, "class functions live on different subgroups");
      Cyclotomic v(0);
      for (int cls = 0; cls < ccK.count(); ++cls)
        if (!sums[cls].is_zero()) v += sums[cls] * chis[i].on_class(cls);
      vals[i][c] = v * inv_k;
    }
  }
  std::vector<ClassFunction> out;
  for (auto& v : vals) out.emplace_back(s.G, std::move(v));
  return out;
}

ClassFunction semidirect_char(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi) {
  return semidirect_chars(s, mu, {chi}).front();
}

namespace {

// NK as a subgroup of G together with the function psi~ . Inf chi on it.
ClassFunction extended_product(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi,
                               const ClassFunction* beta = nullptr) {
  const GroupPtr& K = chi.group();
  const auto embK = embedding(*K, *s.H);
  const auto inK = inverse_index(embK, s.H->size());
  for (int k : embK)
    if (s.act(k, mu) != mu) throw Error(Errc::NotInInertia, K->describe() + " does not fix psi_" + coords_text(mu));
  std::vector<int> elems;
  for (int n = 0; n < s.N->size(); ++n)
    for (int k : embK) elems.push_back(s.G->mul(s.n_to_g[n], s.h_to_g[k]));
  std::sort(elems.begin(), elems.end());
  GroupPtr NK = static_cast<int>(elems.size()) == s.G->size()
                    ? s.G
                    : GroupPtr(SubGroup::create(s.G, elems, s.N->describe() + "." + K->describe()));
  const auto up = embedding(*NK, *s.G);
  return ClassFunction::from_elements(NK, [&](int x) {
    const auto [n, h] = s.factor[up[x]];
    Cyclotomic v = s.psi(mu, n) * chi(inK[h]);
    if (beta) v = v * (*beta)(inK[h]);
    return v;
  });
}

}  // namespace

ClassFunction extend_character(const SemidirectSetting& s, const FpVec& mu, const GroupPtr& K) {
  return extended_product(s, mu, ClassFunction::constant(K, 1));
}

ClassFunction semidirect_char_literal(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi) {
  return induce(extended_product(s, mu, chi), s.G);
}

MackeyResult mackey_product(const SemidirectSetting& s, const FpVec& mu1, const ClassFunction& chi1, const FpVec& mu2,
                            const ClassFunction& chi2) {
  const FiniteGroup& H = *s.H;
  MackeyResult r;
  r.product = cf_pointwise(semidirect_char(s, mu1, chi1), semidirect_char(s, mu2, chi2));
  const auto k1 = embedding(*chi1.group(), H);
  const auto k2 = embedding(*chi2.group(), H);
  const auto in1 = inverse_index(k1, H.size());
  const auto in2 = inverse_index(k2, H.size());
  r.expansion = ClassFunction::constant(s.G, 0);
  std::vector<char> seen(H.size(), 0);
  for (int x = 0; x < H.size(); ++x) {
    if (seen[x]) continue;
    for (int a : k1)
      for (int b : k2) seen[H.mul(H.mul(a, x), b)] = 1;
    ++r.terms;
    // K1^x = x^-1 K1 x, intersected with K2
    std::vector<int> meet;
    for (int b : k2)
      if (in1[H.conj(x, b)] >= 0) meet.push_back(b);
    const GroupPtr M = subgroup_of_h(s, meet, "(" + chi1.group()->describe() + ")^" + std::to_string(x) + "&" +
                                                  chi2.group()->describe());
    const auto up = embedding(*M, H);
    const auto f = ClassFunction::from_elements(
        M, [&](int y) { return chi1(in1[H.conj(x, up[y])]) * chi2(in2[up[y]]); });
    r.expansion = r.expansion + semidirect_char(s, add_mod(s.act(x, mu1), mu2, s.p()), f);
  }
  r.equal = r.product == r.expansion;
  return r;
}

bool induction_compat_check(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi, const GroupPtr& K2) {
  return semidirect_char(s, mu, induce(chi, K2)) == semidirect_char(s, mu, chi);
}

bool extension_independence_check(const SemidirectSetting& s, const FpVec& mu, const GroupPtr& K,
                                  const ClassFunction& beta) {
  const auto T = irr_table(K);
  std::vector<ClassFunction> plain, twisted;
  for (const auto& chi : T->chars) {
    plain.push_back(extended_product(s, mu, chi));
    twisted.push_back(extended_product(s, mu, chi, &beta));
    if (semidirect_char(s, mu, chi) != induce(plain.back(), s.G)) return false;
  }
  for (const auto& t : twisted)
    if (std::find(plain.begin(), plain.end(), t) == plain.end()) return false;
  return true;
}

void validate_hchoice(const SemidirectSetting& s, const HChoice& choice) {
  const int p = s.p();
  const int d = s.dim();
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), d);
  require_within_cap(total * total, "H_psi validation");
  const FiniteGroup& H = *s.H;
  std::vector<std::vector<int>> hp(total);
  auto fail = [&](const std::string& cond, const std::string& witness) {
    throw Error(Errc::ValidationFailed, cond + " fails: " + witness);
  };
  for (std::uint64_t key = 0; key < total; ++key) {
    const FpVec mu = decode_coords(key, p, d);
    hp[key] = choice(mu);
    const auto I = s.inertia(mu);
    const std::set<int> inI(I.begin(), I.end());
    const std::set<int> inH(hp[key].begin(), hp[key].end());
    for (int h : hp[key])
      if (!inI.count(h)) fail("(H1)", "H_psi not inside I_H(psi) for psi_" + coords_text(mu));
    for (int i : I)
      for (int h : hp[key])
        if (!inH.count(H.conj(i, h))) fail("(H1)", "H_psi not normal in I_H(psi) for psi_" + coords_text(mu));
  }
  if (static_cast<int>(hp[0].size()) != H.size()) fail("(H3)", "H_1 is not H");
  for (std::uint64_t key = 0; key < total; ++key) {
    const FpVec mu = decode_coords(key, p, d);
    for (int g : H.generators()) {
      std::vector<int> conj;
      for (int h : hp[key]) conj.push_back(H.conj(H.inv(g), h));
      std::sort(conj.begin(), conj.end());
      if (conj != hp[encode_coords(s.act(g, mu), p)])
        fail("(H2)", "psi_" + coords_text(mu) + " conjugated by element " + std::to_string(g));
    }
  }
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = a; b < total; ++b) {
      const auto& target = hp[encode_coords(add_mod(decode_coords(a, p, d), decode_coords(b, p, d), p), p)];
      std::vector<int> meet;
      std::set_intersection(hp[a].begin(), hp[a].end(), hp[b].begin(), hp[b].end(), std::back_inserter(meet));
      if (!std::includes(target.begin(), target.end(), meet.begin(), meet.end()))
        fail("(H4)", "psi_" + coords_text(decode_coords(a, p, d)) + ", psi_" + coords_text(decode_coords(b, p, d)));
    }
}

HMap hmap_minimal(const SemidirectSetting& s, const SCTheory& top) {
  HMap m;
  m.strategy = "minimal";
  const GroupPtr trivial = SubGroup::create(s.H, {0}, s.H->describe() + "{1}");
  const SCTheory trivial_sct = sct_finest(trivial);
  for (const auto& mu : s.orbit_reps()) {
    const bool zero = std::all_of(mu.begin(), mu.end(), [](int v) { return v == 0; });
    m.entries.push_back({mu, s.inertia(mu), zero ? top.group : trivial, zero ? top : trivial_sct});
  }
  return m;
}

HChoice hchoice_minimal(const SemidirectSetting& s) {
  return [&s](const FpVec& mu) {
    if (std::any_of(mu.begin(), mu.end(), [](int v) { return v != 0; })) return std::vector<int>{0};
    std::vector<int> all(s.H->size());
    for (int h = 0; h < s.H->size(); ++h) all[h] = h;
    return all;
  };
}

SCTheory sch_build(const SemidirectSetting& s, const HMap& hmap) {
  std::vector<ClassFunction> chars;
  std::vector<std::string> labels;
  for (const auto& e : hmap.entries) {
    const GroupPtr I = subgroup_of_h(s, e.inertia, "I(" + coords_text(e.mu) + ")");
    std::vector<ClassFunction> sp;
    std::vector<std::string> sp_labels;
    for (std::size_t i = 0; i < e.sct.chars.size(); ++i) {
      const ClassFunction ind = induce(e.sct.chars[i], I);
      const auto it = std::find(sp.begin(), sp.end(), ind);
      const std::string l = i < e.sct.labels.size() && !e.sct.labels[i].empty() ? e.sct.labels[i] : std::to_string(i);
      if (it == sp.end()) {
        sp.push_back(ind);
        sp_labels.push_back(l);
      } else {
        sp_labels[it - sp.begin()] += " = " + l;
      }
    }
    auto built = semidirect_chars(s, e.mu, sp);
    for (std::size_t i = 0; i < built.size(); ++i) {
      chars.push_back(std::move(built[i]));
      labels.push_back("psi_" + coords_text(e.mu) + " x| " + sp_labels[i]);
    }
  }
  return sct_from_characters(s.G, std::move(chars), "sch(" + hmap.strategy + "," + s.G->describe() + ")", std::move(labels));
}

SCTheory lattice_member_sct(const SemidirectSplit& split, const LieSpace& kk, const LieSpace& km) {
  const LieSpace space = LieSpace::sum(kk, km);
  MatrixGroupPtr K = space == split.H->space() ? split.H
                                               : MatrixGroup::create(space, SpringerKind::Algebra, "K[" + space.signature() + "]");
  const auto gk = generator_matrices(*MatrixGroup::create(kk, SpringerKind::Algebra, "Kk[" + kk.signature() + "]"));
  const auto gm = generator_matrices(*MatrixGroup::create(km, SpringerKind::Algebra, "Km[" + km.signature() + "]"));
  const auto ghk = generator_matrices(*split.Hk);
  const auto ghm = generator_matrices(*split.Hm);
  std::vector<SqMat> left = gk, right = ghk;
  left.insert(left.end(), ghm.begin(), ghm.end());
  right.insert(right.end(), gm.begin(), gm.end());
  return sct_from_orbits({K, two_sided_action(space, left, right), two_sided_action(space, ghm, ghk), true,
                          "member(" + K->describe() + ")"});
}

std::pair<LieSpace, LieSpace> inertia_in_lattice(const SemidirectSplit& split, const FpVec& mu) {
  const LieSpace& n = split.N->space();
  return {stabilizer_sided(split.Hk->space(), n, mu, Side::Left), stabilizer_sided(split.Hm->space(), n, mu, Side::Right)};
}

HMap hmap_maximal(const SemidirectSplit& split, const SemidirectSetting& s) {
  HMap m;
  m.strategy = "maximal";
  for (const auto& mu : s.orbit_reps()) {
    const auto [kk, km] = inertia_in_lattice(split, mu);
    SCTheory sct = lattice_member_sct(split, kk, km);
    GroupPtr member = sct.group;
    m.entries.push_back({mu, s.inertia(mu), member, std::move(sct)});
  }
  return m;
}

HChoice hchoice_maximal(const SemidirectSplit& split, const SemidirectSetting& s) {
  return [split, &s](const FpVec& mu) {
    const auto [kk, km] = inertia_in_lattice(split, mu);
    const LieSpace space = LieSpace::sum(kk, km);
    std::vector<int> out;
    for (int h = 0; h < s.H->size(); ++h)
      if (space.contains(f_map(*s.H->matrix(h)))) out.push_back(h);
    return out;
  };
}

namespace {

std::vector<int> normal_core(const FiniteGroup& H, const std::vector<int>& I) {
  const std::set<int> in(I.begin(), I.end());
  std::vector<int> out;
  for (int x : I) {
    bool keep = true;
    for (int h = 0; h < H.size() && keep; ++h) keep = in.count(H.conj(h, x)) > 0;
    if (keep) out.push_back(x);
  }
  return out;
}

}  // namespace

HChoice hchoice_normal_core(const SemidirectSetting& s) {
  return [&s](const FpVec& mu) { return normal_core(*s.H, s.inertia(mu)); };
}

HMap hmap_normal_core(const SemidirectSetting& s, bool conjugation_theories) {
  HMap m;
  m.strategy = conjugation_theories ? "normal-core/conjugation" : "normal-core/irr";
  for (const auto& mu : s.orbit_reps()) {
    const auto I = s.inertia(mu);
    const auto core = normal_core(*s.H, I);
    const GroupPtr member = static_cast<int>(core.size()) == s.H->size()
                                ? GroupPtr(s.H)
                                : SubGroup::create(s.H, core, s.H->describe() + "{core " + coords_text(mu) + "}");
    m.entries.push_back({mu, I, member, conjugation_theories ? sct_conjugation(s.H, member) : sct_finest(member)});
  }
  return m;
}

SCTheory top_member_sct(const SemidirectSplit& split) {
  return lattice_member_sct(split, split.Hk->space(), split.Hm->space());
}

std::vector<int> projection_to_h(const SemidirectSetting& s) {
  std::vector<int> pi(s.G->size());
  for (int g = 0; g < s.G->size(); ++g) pi[g] = s.factor[g].second;
  return pi;
}

EquivalenceReport little_groups_equivalence(const MatrixGroupPtr& G, int k) {
  const auto split = split_semidirect(G, k);
  const auto s = make_setting(split);
  EquivalenceReport r;
  r.relation = sct_compare(sch_build(s, hmap_maximal(split, s)), sct_algebra_group(G));
  const LieSpace& g = G->space();
  const auto gg = generator_matrices(*G);
  const auto gn = generator_matrices(*split.N);
  auto left = gn, right = gn;
  for (const auto& m : generator_matrices(*split.Hm)) left.push_back(m);
  for (const auto& m : generator_matrices(*split.Hk)) right.push_back(m);
  r.all_sizes_equal = true;
  for (const auto& o : orbit_decomposition(transposes(two_sided_action(g, gg, gg)), g.p(), g.dim())) {
    const FpVec eta = decode_coords(o.rep(), g.p(), g.dim());
    OrbitSizePair pr;
    pr.eta = g.is_pattern() ? functional_from_coords(g, eta).to_string(*g.field()) : coords_text(eta);
    pr.nh_orbit = orbit_two_sided(g, left, eta, right).size();
    pr.g_orbit = orbit_two_sided(g, gg, eta, {}).size();
    r.all_sizes_equal = r.all_sizes_equal && pr.nh_orbit == pr.g_orbit;
    r.orbits.push_back(std::move(pr));
  }
  return r;
}

}  // namespace scharc
