#include <algorithm>
#include <random>

#include "doctest.h"
#include "scharc/error.hpp"
#include "scharc/littlegroups.hpp"

using namespace scharc;

namespace {

bool same_set(std::vector<ClassFunction> a, std::vector<ClassFunction> b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a)
    if (std::find(b.begin(), b.end(), f) == b.end()) return false;
  return true;
}

FpVec random_mu(std::mt19937& rng, const SemidirectSetting& s) {
  FpVec mu(s.dim());
  for (auto& v : mu) v = static_cast<int>(rng() % s.p());
  return mu;
}

// Random subgroup of I_H(mu), generated by up to two random elements.
GroupPtr random_inertia_subgroup(std::mt19937& rng, const SemidirectSetting& s, const FpVec& mu) {
  const auto I = s.inertia(mu);
  std::vector<int> gens;
  const int count = static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) gens.push_back(I[rng() % I.size()]);
  return SubGroup::generated(s.H, gens, "R");
}

ClassFunction random_irr(std::mt19937& rng, const GroupPtr& K) {
  const auto T = irr_table(K);
  return T->chars[rng() % T->chars.size()];
}

}  // namespace

TEST_CASE("extension and the degree-2 character of UT_3(F_2)") {
  auto G = ut_group(3, field_new(2, 1));
  auto split = split_semidirect(G, 1);
  auto s = make_setting(split);
  CHECK(s.dim() == 2);
  const GroupPtr one = SubGroup::create(s.H, {0}, "1");
  for (const auto& mu : s.orbit_reps()) {
    const auto I = s.inertia(mu);
    const GroupPtr IH = I.size() == 2 ? GroupPtr(s.H) : SubGroup::create(s.H, I, "I");
    const auto ext = extend_character(s, mu, IH);
    CHECK(ext.degree() == Cyclotomic(1));
    CHECK(cf_inner(ext, ext) == Cyclotomic(1));
    const auto chi = semidirect_char(s, mu, ClassFunction::constant(one, 1));
    CHECK(chi == semidirect_char_literal(s, mu, ClassFunction::constant(one, 1)));
    if (I.size() == 1) {
      CHECK(chi.degree() == Cyclotomic(2));
      CHECK(cf_inner(chi, chi) == Cyclotomic(1));
    }
  }
}

TEST_CASE("psi x| chi over Irr(I_H(psi)) recovers Irr(G)") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto [G, k] : {std::pair{ut_group(3, F2), 1}, std::pair{ut_group(4, F2), 2}, std::pair{ut_group(4, F3), 1},
                      std::pair{ut_group(4, F3), 3}}) {
    auto s = make_setting(split_semidirect(G, k));
    std::vector<ClassFunction> built;
    for (const auto& mu : s.orbit_reps()) {
      const auto I = s.inertia(mu);
      const GroupPtr IH = static_cast<int>(I.size()) == s.H->size() ? GroupPtr(s.H) : SubGroup::create(s.H, I, "I");
      for (auto& c : semidirect_chars(s, mu, irr_table(IH)->chars)) built.push_back(std::move(c));
    }
    CHECK(same_set(built, irr_table(G)->chars));
  }
}

TEST_CASE("closed form, Mackey, induction and extension checks on random instances") {
  std::mt19937 rng(20261016);
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto [G, k] : {std::pair{ut_group(4, F2), 2}, std::pair{ut_group(4, F3), 1}}) {
    auto s = make_setting(split_semidirect(G, k));
    for (int trial = 0; trial < 12; ++trial) {
      const FpVec mu1 = random_mu(rng, s), mu2 = random_mu(rng, s);
      const GroupPtr K1 = random_inertia_subgroup(rng, s, mu1), K2 = random_inertia_subgroup(rng, s, mu2);
      const auto chi1 = random_irr(rng, K1), chi2 = random_irr(rng, K2);
      CHECK(semidirect_char(s, mu1, chi1) == semidirect_char_literal(s, mu1, chi1));
      const auto m = mackey_product(s, mu1, chi1, mu2, chi2);
      CHECK(m.equal);
      CHECK(m.terms >= 1);

      const auto I = s.inertia(mu1);
      const GroupPtr IH = static_cast<int>(I.size()) == s.H->size() ? GroupPtr(s.H) : SubGroup::create(s.H, I, "I");
      CHECK(induction_compat_check(s, mu1, chi1, IH));
      std::vector<ClassFunction> linear;
      for (const auto& c : irr_table(K1)->chars)
        if (c.degree() == Cyclotomic(1)) linear.push_back(c);
      CHECK(extension_independence_check(s, mu1, K1, linear[rng() % linear.size()]));
    }
  }
}

TEST_CASE("conditions on the choice of H_psi") {
  auto G = ut_group(4, field_new(2, 1));
  auto split = split_semidirect(G, 2);
  auto s = make_setting(split);
  CHECK_NOTHROW(validate_hchoice(s, hchoice_minimal(s)));
  CHECK_NOTHROW(validate_hchoice(s, hchoice_maximal(split, s)));

  auto expect_failure = [&](const HChoice& c, const std::string& cond) {
    try {
      validate_hchoice(s, c);
      return false;
    } catch (const Error& e) {
      return e.code() == Errc::ValidationFailed && std::string(e.what()).find(cond) != std::string::npos;
    }
  };
  std::vector<int> all(s.H->size());
  for (int h = 0; h < s.H->size(); ++h) all[h] = h;
  CHECK(expect_failure([&](const FpVec&) { return std::vector<int>{0}; }, "(H3)"));
  CHECK(expect_failure([&](const FpVec&) { return all; }, "(H1)"));
  CHECK_NOTHROW(validate_hchoice(s, [&](const FpVec& mu) { return s.inertia(mu); }));
  // I_H(psi) on a single orbit and {1} elsewhere satisfies (H1)-(H3); some orbit breaks (H4).
  bool h4 = false;
  for (const auto& rep : s.orbit_reps()) {
    if (std::all_of(rep.begin(), rep.end(), [](int v) { return v == 0; })) continue;
    std::vector<FpVec> orbit{rep};
    for (int h = 0; h < s.H->size(); ++h)
      if (std::find(orbit.begin(), orbit.end(), s.act(h, rep)) == orbit.end()) orbit.push_back(s.act(h, rep));
    h4 = h4 || expect_failure(
                   [&](const FpVec& mu) {
                     if (std::find(orbit.begin(), orbit.end(), mu) != orbit.end()) return s.inertia(mu);
                     return hchoice_minimal(s)(mu);
                   },
                   "(H4)");
  }
  CHECK(h4);
  // Choosing one generator's subgroup at a single character breaks equivariance.
  const FpVec target = s.orbit_reps().back();
  const auto twisted = [&](const FpVec& mu) {
    auto v = hchoice_minimal(s)(mu);
    if (mu == target) {
      const auto I = s.inertia(mu);
      if (I.size() > 1) v = generate(*s.H, {I[1]});
    }
    return v;
  };
  if (s.inertia(target).size() > 1) CHECK(expect_failure(twisted, "(H"));
}

TEST_CASE("little group constructions of pattern group theories") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto [G, k] : {std::pair{ut_group(3, F2), 1}, std::pair{ut_group(4, F2), 2}, std::pair{ut_group(4, F3), 2}}) {
    auto split = split_semidirect(G, k);
    auto s = make_setting(split);
    const auto top = top_member_sct(split);
    CHECK(top.group == split.H);
    CHECK(sct_verify(top).ok());

    auto minimal = sch_build(s, hmap_minimal(s, top));
    CHECK(sct_verify(minimal).ok());
    auto star = sct_star_product(sct_conjugation(G, split.N), top, G, projection_to_h(s));
    CHECK(sct_compare(minimal, star) == Relation::Equal);

    auto maximal = sch_build(s, hmap_maximal(split, s));
    CHECK(sct_verify(maximal).ok());
    CHECK(sct_compare(maximal, sct_algebra_group(G)) == Relation::Equal);
  }
}

TEST_CASE("orbit sizes agree for the maximal choice") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto [G, k] : {std::pair{ut_group(3, F2), 1}, std::pair{ut_group(4, F2), 2}, std::pair{ut_group(4, F3), 1},
                      std::pair{ut_group(4, F3), 2}, std::pair{ut_group(4, F3), 3}}) {
    const auto r = little_groups_equivalence(G, k);
    CHECK(r.relation == Relation::Equal);
    CHECK(r.all_sizes_equal);
    CHECK(!r.orbits.empty());
  }
}

TEST_CASE("inertia group against the lattice choice in UT_7(F_2)") {
  auto F = field_new(2, 1);
  const int n = 7, k = 3;
  std::vector<std::pair<int, int>> nk, hk, hm, h;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i < k && j >= k) nk.push_back({i, j});
      else (j < k ? hk : hm).push_back({i, j});
    }
  h = hk;
  h.insert(h.end(), hm.begin(), hm.end());
  const auto nsp = LieSpace::pattern(F, n, nk);
  DualFunctional lam;
  lam.coeffs[{1, 5}] = F->one();
  lam.coeffs[{3, 7}] = F->one();
  const auto mu = functional_coords(nsp, lam);
  const auto H = MatrixGroup::create(LieSpace::pattern(F, n, h), SpringerKind::Algebra, "H");
  const auto kk = stabilizer_sided(LieSpace::pattern(F, n, hk), nsp, mu, Side::Left);
  const auto km = stabilizer_sided(LieSpace::pattern(F, n, hm), nsp, mu, Side::Right);
  const auto lattice = LieSpace::sum(kk, km);
  int inertia = 0, chosen = 0, coupled = 0;
  for (int g = 0; g < H->size(); ++g) {
    const SqMat m = *H->matrix(g);
    const bool fixes = conj_matrix(nsp, m).transpose().apply(mu) == mu;
    const bool in_lattice = lattice.contains(f_map(m));
    CHECK((!in_lattice || fixes));
    inertia += fixes;
    chosen += in_lattice;
    // the entries (1,3) and (5,7) move together inside I_H
    if (fixes && !in_lattice) coupled += m.at(0, 2).code != 0 && m.at(4, 6).code != 0;
  }
  CHECK(chosen == 8);
  CHECK(inertia == 16);
  CHECK(coupled == 8);
}

TEST_CASE("lattice choice with the same H_psi") {
  // Normal subgroups of H with Irr against the same subgroups with the
  // H-conjugation theories. The second SCh is coarser; equality fails as soon
  // as H moves the characters of some proper H_psi outside I_H(psi).
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto [G, k, want] : {std::tuple{ut_group(4, F2), 1, Relation::StrictlyFiner}, std::tuple{ut_group(4, F2), 2, Relation::Equal},
                            std::tuple{ut_group(4, F3), 1, Relation::StrictlyFiner}}) {
    auto s = make_setting(split_semidirect(G, k));
    CHECK_NOTHROW(validate_hchoice(s, hchoice_normal_core(s)));
    const auto irr = hmap_normal_core(s, false);
    const auto conj = hmap_normal_core(s, true);
    int coarser_members = 0;
    for (std::size_t i = 0; i < irr.entries.size(); ++i) {
      const Relation r = sct_compare(conj.entries[i].sct, irr.entries[i].sct);
      CHECK((r == Relation::Equal || r == Relation::StrictlyCoarser));
      coarser_members += r == Relation::StrictlyCoarser;
    }
    const auto A = sch_build(s, irr);
    const auto B = sch_build(s, conj);
    CHECK(sct_verify(A).ok());
    CHECK(sct_verify(B).ok());
    CHECK(sct_compare(A, B) == want);
    CHECK((coarser_members > 0) == (want != Relation::Equal));
  }
}
