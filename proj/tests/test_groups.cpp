#include <random>
#include <set>

#include "doctest.h"
#include "scharc/error.hpp"
#include "scharc/pattern.hpp"

using namespace scharc;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::AssertionFailed;
}

}  // namespace

TEST_CASE("pattern group orders and products") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  auto G = ut_group(3, F2);
  CHECK(G->order() == 8);
  CHECK(G->describe() == "UT_3(F_2)");
  const auto I = SqMat::identity(F2, 3);
  const auto e12 = SqMat::unit(F2, 3, 0, 1, F2->one());
  const auto e23 = SqMat::unit(F2, 3, 1, 2, F2->one());
  const auto e13 = SqMat::unit(F2, 3, 0, 2, F2->one());
  const int a = *G->find_matrix(I + e12);
  const int b = *G->find_matrix(I + e23);
  CHECK(*G->matrix(G->mul(a, b)) == I + e12 + e23 + e13);

  auto A = pattern_group(Poset(3, {{1, 3}, {2, 3}}), F3);
  CHECK(A->order() == 9);
  CHECK(A->is_abelian());
  CHECK(code_of([] { Poset(3, {{1, 2}, {2, 3}}); }) == Errc::BadArgument);
  CHECK(Poset::full(4).covers().size() == 3);
}

TEST_CASE("group axioms and the bijection f") {
  auto F3 = field_new(3, 1);
  auto G = ut_group(4, F3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, G->size() - 1);
  for (int t = 0; t < 200; ++t) {
    const int x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(G->mul(G->mul(x, y), z) == G->mul(x, G->mul(y, z)));
    CHECK(G->mul(x, G->inv(x)) == 0);
    CHECK(*G->matrix(G->mul(x, y)) == *G->matrix(x) * *G->matrix(y));
  }
  auto H = ut_group(3, field_new(2, 1));
  std::set<std::string> images;
  for (int g = 0; g < H->size(); ++g) {
    const SqMat m = *H->matrix(g);
    CHECK(f_inv(f_map(m)) == m);
    CHECK(*H->find_matrix(f_inv(H->lie(g))) == g);
    images.insert(f_map(m).to_string());
  }
  CHECK(images.size() == 8);
  CHECK(f_map(SqMat::identity(F3, 3)).is_zero());
}

TEST_CASE("conjugacy classes") {
  auto G = ut_group(3, field_new(2, 1));
  const auto& cc = G->classes();
  CHECK(cc.count() == 5);
  std::multiset<std::uint64_t> sizes;
  for (int c = 0; c < cc.count(); ++c) sizes.insert(cc.size(c));
  CHECK(sizes == std::multiset<std::uint64_t>{1, 1, 2, 2, 2});
  CHECK(cc.classes[0] == std::vector<int>{0});
  CHECK(ut_group(5, field_new(2, 1))->classes().count() == 61);
  CHECK(ut_group(4, field_new(3, 1))->classes().count() == 57);
}

TEST_CASE("semidirect split") {
  auto F2 = field_new(2, 1);
  auto G = ut_group(3, F2);
  auto s = split_semidirect(G, 1);
  CHECK(s.N->order() == 4);
  CHECK(s.H->order() == 2);
  CHECK(s.N->space().support_arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  auto s0 = split_semidirect(G, 0);
  CHECK(s0.N->order() == 1);
  CHECK(s0.H->order() == 8);
  CHECK(code_of([&] { split_semidirect(G, 4); }) == Errc::BadIndex);

  auto G7 = ut_group(7, field_new(2, 1));
  auto s7 = split_semidirect(G7, 3);
  CHECK(s7.Hk->space().support_arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(s7.Hm->space().dim() == 6);
  CHECK(s7.N->space().dim() == 12);
  for (auto [i, j] : s7.N->space().support_arcs()) CHECK((i < 3 && j >= 3));

  auto G4 = ut_group(4, field_new(3, 1));
  auto s2 = split_semidirect(G4, 2);
  for (int g = 0; g < G4->size(); g += 7) {
    auto [n, h] = s2.factor(*G4->matrix(g));
    CHECK(s2.N->find_matrix(n).has_value());
    CHECK(s2.H->find_matrix(h).has_value());
    CHECK(n * h == *G4->matrix(g));
  }
}

TEST_CASE("ideal subgroups") {
  auto F2 = field_new(2, 1);
  auto G = ut_group(3, F2);
  auto t = ideal_subgroup(G, Side::TwoSided, {{1, 3}});
  CHECK(t.group->order() == 2);
  CHECK(ideal_subgroup(G, Side::Left, {{1, 2}, {1, 3}}).group->order() == 4);
  // g * e_12 = 0 always, but e_12 * e_23 = e_13 leaves the span.
  CHECK(ideal_subgroup(G, Side::Left, {{1, 2}}).group->order() == 2);
  CHECK(code_of([&] { ideal_subgroup(G, Side::Right, {{1, 2}}); }) == Errc::NotAnIdeal);
  auto r1 = ideal_subgroup(G, Side::Right, {{1, 3}});
  auto r2 = ideal_subgroup(G, Side::Right, {{2, 3}});
  auto j = ideal_join(r1, r2);
  CHECK(j.space().support_arcs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(ideal_meet(r1, r1).space() == r1.space());
  CHECK(code_of([&] { ideal_join(r1, t); }) == Errc::SideMismatch);

  // Absorption on all left ideals of UT_4(F_2) spanned by arcs.
  auto G4 = ut_group(4, F2);
  const auto arcs = Poset::full(4).arcs();
  std::vector<IdealSubgroup> ideals;
  for (int mask = 0; mask < (1 << arcs.size()); ++mask) {
    std::vector<std::pair<int, int>> sel;
    for (std::size_t b = 0; b < arcs.size(); ++b)
      if (mask >> b & 1) sel.push_back(arcs[b]);
    try {
      ideals.push_back(ideal_subgroup(G4, Side::Left, sel));
    } catch (const Error&) {
    }
  }
  CHECK(ideals.size() > 5);
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      CHECK(ideal_meet(a, ideal_join(a, b)).space() == a.space());
      CHECK(ideal_join(a, ideal_meet(a, b)).space() == a.space());
    }
}
