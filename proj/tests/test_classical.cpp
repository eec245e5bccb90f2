#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "scharc/classical.hpp"
#include "scharc/error.hpp"

using namespace scharc;

namespace {

SqMat random_upper(std::mt19937& rng, const LieSpace& g) {
  FpVec c(g.dim());
  for (auto& v : c) v = static_cast<int>(rng() % g.p());
  return g.element(c);
}

bool positive_multiple_in(const ClassFunction& f, const std::vector<ClassFunction>& list) {
  for (const auto& c : list) {
    const auto r = f.ratio_to(c);
    if (r && r->is_rational() && r->rational() > 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("orders and block factors of classical groups") {
  auto F3 = field_new(3, 1);
  auto F9 = field_new(3, 2);
  auto O4 = build_classical(ClassicalKind::Orthogonal, 2, F3);
  CHECK(O4.u.dim() == 2);
  CHECK(O4.U->order() == 9);
  CHECK(O4.u.support_arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto Sp4 = build_classical(ClassicalKind::Symplectic, 2, F3);
  CHECK(Sp4.U->order() == 81);
  auto U4 = build_classical(ClassicalKind::Unitary, 2, F9);
  CHECK(U4.H->order() == 9);
  CHECK(U4.N->order() * 9 == U4.U->order());
  CHECK(U4.N->is_abelian());
  CHECK(U4.Hphi->order() == 9);
  auto O6 = build_classical(ClassicalKind::Orthogonal, 3, F3);
  CHECK(O6.U->order() == 729);

  bool even = false, unitary = false;
  try {
    build_classical(ClassicalKind::Orthogonal, 2, field_new(2, 1));
  } catch (const Error& e) {
    even = e.code() == Errc::EvenCharacteristic;
  }
  try {
    build_classical(ClassicalKind::Unitary, 2, F3);
  } catch (const Error& e) {
    unitary = e.code() == Errc::BadArgument;
  }
  CHECK(even);
  CHECK(unitary);
}

TEST_CASE("anti-involution axioms") {
  std::mt19937 rng(7);
  auto F3 = field_new(3, 1);
  auto F9 = field_new(3, 2);
  for (const auto& U : {build_classical(ClassicalKind::Orthogonal, 2, F3), build_classical(ClassicalKind::Symplectic, 2, F3),
                        build_classical(ClassicalKind::Unitary, 2, F9), build_classical(ClassicalKind::Orthogonal, 3, F3)}) {
    const int size = 2 * U.n;
    for (int t = 0; t < 20; ++t) {
      const SqMat x = random_upper(rng, U.g), y = random_upper(rng, U.g);
      CHECK(U.dagger.apply(x * y) == U.dagger.apply(y) * U.dagger.apply(x));
      CHECK(U.dagger.apply(U.dagger.apply(x)) == x);
    }
    for (auto a : U.field->elements()) {
      if (a == U.field->zero()) continue;
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
          const SqMat d = U.dagger.apply(SqMat::unit(U.field, size, i, j, a));
          const int bi = size - 1 - j, bj = size - 1 - i;
          CHECK(d.at(bi, bj) != U.field->zero());
          CHECK((d - SqMat::unit(U.field, size, bi, bj, d.at(bi, bj))).is_zero());
        }
    }
  }
}

TEST_CASE("Cayley map on U") {
  auto F3 = field_new(3, 1);
  auto F9 = field_new(3, 2);
  CHECK(cayley(SqMat::identity(F3, 4)).is_zero());
  const SqMat e = SqMat::unit(F3, 2, 0, 1, F3->from_int(2));
  CHECK(cayley(SqMat::identity(F3, 2) + e) == e);
  for (const auto& U : {build_classical(ClassicalKind::Orthogonal, 2, F3), build_classical(ClassicalKind::Symplectic, 2, F3),
                        build_classical(ClassicalKind::Unitary, 2, F9)}) {
    std::set<std::string> images;
    for (int a = 0; a < U.U->size(); ++a) {
      const SqMat u = *U.U->matrix(a);
      CHECK(U.contains(u));
      const SqMat x = cayley(u);
      CHECK(U.dagger.apply(x) == -x);
      CHECK(cayley_inv(x) == u);
      images.insert(x.to_string());
    }
    CHECK(images.size() == U.u.size());
  }
  bool even = false;
  try {
    cayley(SqMat::identity(field_new(2, 1), 2));
  } catch (const Error& e) {
    even = e.code() == Errc::EvenCharacteristic;
  }
  CHECK(even);
}

TEST_CASE("action on u and its dual") {
  std::mt19937 rng(11);
  auto U = build_classical(ClassicalKind::Symplectic, 2, field_new(3, 1));
  const SqMat I = SqMat::identity(U.field, 4);
  for (int t = 0; t < 20; ++t) {
    const SqMat g1 = I + random_upper(rng, U.g), g2 = I + random_upper(rng, U.g);
    const SqMat x = U.u.element(static_cast<std::uint64_t>(rng() % U.u.size()));
    CHECK(U.act_u(g1 * g2, x) == U.act_u(g1, U.act_u(g2, x)));
    CHECK(U.u.contains(U.act_u(g1, x)));
    CHECK(U.act_u(I, x) == x);
    CHECK(U.act_u(g1, SqMat(U.field, 4)).is_zero());
    FpVec lam(U.u.dim());
    for (auto& v : lam) v = static_cast<int>(rng() % 3);
    CHECK(U.act_u_dual(g1 * g2, lam) == U.act_u_dual(g1, U.act_u_dual(g2, lam)));
    CHECK(U.act_u_dual(I, lam) == lam);
  }
}

TEST_CASE("orbit theories of classical groups") {
  auto F3 = field_new(3, 1);
  for (const auto& U : {build_classical(ClassicalKind::Orthogonal, 2, F3), build_classical(ClassicalKind::Symplectic, 2, F3)}) {
    const auto S = sct_classical(U);
    const auto rep = sct_verify(S);
    CHECK(rep.ok());
    CHECK(S.chars.size() == S.blocks.size());
    CHECK(S.blocks.front() == std::vector<int>{0});
    CHECK(std::any_of(S.chars.begin(), S.chars.end(), [](const ClassFunction& c) {
      return c == ClassFunction::constant(c.group(), 1);
    }));
    CHECK(sct_compare(twist_theta(S, 2), S) == Relation::Equal);
    const auto half = sct_classical(U, HUpperReading::HalfColumns);
    CHECK(sct_compare(half, S) == Relation::Equal);
  }
}

TEST_CASE("little groups reproduce the classical theories") {
  auto F3 = field_new(3, 1);
  auto F9 = field_new(3, 2);
  for (const auto& U : {build_classical(ClassicalKind::Orthogonal, 2, F3), build_classical(ClassicalKind::Symplectic, 2, F3),
                        build_classical(ClassicalKind::Unitary, 2, F9)}) {
    const auto r = sct_classical_littlegroups(U);
    INFO(U.name(), " ", r.hchoice_failure);
    CHECK(r.hchoice_valid);
    CHECK(r.relation == Relation::Equal);
    CHECK(sct_verify(r.sct).ok());
  }
}

TEST_CASE("member supercharacters from R_lambda") {
  auto F3 = field_new(3, 1);
  for (const auto& U : {build_classical(ClassicalKind::Orthogonal, 2, F3), build_classical(ClassicalKind::Symplectic, 2, F3),
                        build_classical(ClassicalKind::Orthogonal, 3, F3)}) {
    const auto s = make_setting(U.U, U.N, U.H);
    const auto lg = sct_classical_littlegroups(U);
    const auto& top = lg.hmap.entries.front();
    REQUIRE(top.sct.group == GroupPtr(U.H));
    std::mt19937 rng(3);
    for (int t = 0; t < 15; ++t) {
      FpVec eta(U.u.dim());
      for (auto& v : eta) v = static_cast<int>(rng() % 3);
      CHECK(positive_multiple_in(classical_r_character(U, eta), top.sct.chars));
    }
  }
}

TEST_CASE("n + r_mu is the stabilizer subalgebra u_eta in UO_4(F_3)") {
  auto U = build_classical(ClassicalKind::Orthogonal, 2, field_new(3, 1));
  const auto s = make_setting(U.U, U.N, U.H);
  const int p = 3, d = U.u.dim();
  // H_upper enumerated through its Lie algebra
  const auto hup = LieSpace::pattern(U.field, 4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::vector<std::pair<SqMat, SqMat>> hs;
  for (std::uint64_t k = 0; k < hup.size(); ++k) {
    const SqMat h = SqMat::identity(U.field, 4) + hup.element(k);
    hs.push_back({h.inverse(), U.dagger.apply(h).inverse()});
  }
  for (std::uint64_t e = 0; e < U.u.size(); ++e) {
    const FpVec eta = decode_coords(e, p, d);
    std::set<std::uint64_t> u_eta;
    for (std::uint64_t x = 0; x < U.u.size(); ++x) {
      const SqMat xm = U.u.element(x);
      const int base = dot_mod(eta, U.u.coords(xm), p);
      if (std::all_of(hs.begin(), hs.end(), [&](const auto& h) {
            return dot_mod(eta, U.u.coords(h.first * xm * h.second), p) == base;
          }))
        u_eta.insert(x);
    }
    // lambda = eta restricted to n, in the coordinates of n
    FpVec mu(U.N->space().dim());
    for (int t = 0; t < U.N->space().dim(); ++t) mu[t] = dot_mod(eta, U.u.coords(U.N->space().basis_element(t)), p);
    std::vector<SqMat> hpsi;
    for (int h : classical_hpsi(U, s, mu)) hpsi.push_back(U.H->lie(h));
    const auto a = LieSpace::span(U.field, 4, hpsi);
    const auto r = classical_r_space(U, a, eta);
    std::set<std::uint64_t> sum;
    for (std::uint64_t i = 0; i < U.N->space().size(); ++i)
      for (std::uint64_t j = 0; j < r.size(); ++j) sum.insert(U.u.key(U.N->space().element(i) + r.element(j)));
    CHECK(sum == u_eta);
  }
}

TEST_CASE("UO_6(F_3) through little groups") {
  auto U = build_classical(ClassicalKind::Orthogonal, 3, field_new(3, 1));
  const auto r = sct_classical_littlegroups(U);
  CHECK(r.hchoice_valid);
  CHECK(r.relation == Relation::Equal);
  CHECK(upper_readings_differ(U));
  CHECK(!upper_readings_differ(build_classical(ClassicalKind::Orthogonal, 2, field_new(3, 1))));
}
