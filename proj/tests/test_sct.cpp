#include <algorithm>

#include "doctest.h"
#include "scharc/error.hpp"
#include "scharc/sct.hpp"

using namespace scharc;

namespace {

std::vector<std::size_t> block_sizes(const SCTheory& S) {
  std::vector<std::size_t> s;
  for (const auto& b : S.blocks) s.push_back(b.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> projection_to_h(const SemidirectSplit& S) {
  std::vector<int> pi(S.G->size());
  for (int g = 0; g < S.G->size(); ++g) pi[g] = *S.H->find_matrix(S.factor(*S.G->matrix(g)).second);
  return pi;
}

}  // namespace

TEST_CASE("algebra group theories of small unitriangular groups") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  auto S = sct_algebra_group(ut_group(3, F2));
  CHECK(block_sizes(S) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sct_verify(S).ok());
  CHECK(sct_compare(S, sct_finest(S.group)) == Relation::Equal);
  std::vector<long> deg;
  for (const auto& c : S.chars) deg.push_back(c.degree().rational().get_num().get_si());
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<long>{1, 1, 1, 1, 2});

  for (int q : {2, 3, 4, 5}) {
    auto [p, k] = split_prime_power(q);
    auto U2 = sct_algebra_group(ut_group(2, field_new(p, k)));
    CHECK(U2.size() == q);
    CHECK(sct_compare(U2, sct_finest(U2.group)) == Relation::Equal);
  }
  auto S4 = sct_algebra_group(ut_group(4, F2));
  CHECK(S4.size() == 15);
  CHECK(sct_verify(S4).ok());
  auto S43 = sct_algebra_group(ut_group(4, F3));
  const auto rep = sct_verify(S43);
  CHECK(rep.ok());
  CHECK(rep.span_closed);
  CHECK(S43.chars.size() == S43.blocks.size());
}

TEST_CASE("normalized supercharacters sum to the regular character") {
  auto G = ut_group(4, field_new(3, 1));
  auto S = sct_normalized(sct_algebra_group(G));
  ClassFunction sum = ClassFunction::constant(G, 0);
  for (std::size_t i = 0; i < S.chars.size(); ++i) {
    REQUIRE(S.scale[i].has_value());
    sum = sum + S.chars[i];
  }
  CHECK(sum == ClassFunction::regular(G));
}

TEST_CASE("coarsest theory and broken partitions") {
  auto G = ut_group(3, field_new(3, 1));
  CHECK(sct_verify(sct_coarsest(G)).ok());
  auto S = sct_finest(G);
  // move one element of a non-central class to its own block
  SCTheory bad = S;
  for (std::size_t i = 0; i < bad.blocks.size(); ++i)
    if (bad.blocks[i].size() > 1) {
      const int moved = bad.blocks[i].back();
      bad.blocks[i].pop_back();
      bad.blocks.push_back({moved});
      break;
    }
  canonicalize(bad);
  const auto rep = sct_verify(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.blocks_class_closed);
  CHECK(std::find(rep.failures.begin(), rep.failures.end(), "blocks not class-closed") != rep.failures.end());
}

TEST_CASE("ideal and supernormal theories") {
  auto F2 = field_new(2, 1);
  auto G = ut_group(3, F2);
  auto K = ideal_subgroup(G, Side::TwoSided, {{1, 3}});
  auto L = sct_ideal(K, Side::Left);
  CHECK(L.size() == 2);
  CHECK(L.chars.size() == 2);
  CHECK(sct_verify(L).ok());
  auto SN = sct_supernormal(G, K);
  CHECK(SN.size() == 2);
  CHECK(sct_verify(SN).ok());
  auto full = ideal_subgroup(G, Side::TwoSided, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(sct_compare(sct_ideal(full, Side::Left), sct_algebra_group(full.group)) == Relation::Equal);
  CHECK(sct_compare(sct_supernormal(G, full), sct_algebra_group(full.group)) == Relation::Equal);

  // every left and right ideal spanned by arcs in UT_4(F_2)
  auto G4 = ut_group(4, F2);
  const std::vector<std::pair<int, int>> arcs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  int checked = 0;
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) chosen.push_back(arcs[i]);
    for (Side side : {Side::Left, Side::Right}) {
      try {
        auto H = ideal_subgroup(G4, side, chosen);
        auto T = sct_ideal(H, side);
        CHECK(sct_verify(T).ok());
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAnIdeal);
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("conjugation, star and direct products") {
  auto F2 = field_new(2, 1);
  auto G = ut_group(3, F2);
  auto split = split_semidirect(G, 1);
  auto C = sct_conjugation(G, split.N);
  CHECK(block_sizes(C) == std::vector<std::size_t>{1, 1, 2});
  CHECK(sct_verify(C).ok());
  auto star = sct_star_product(C, sct_finest(split.H), G, projection_to_h(split));
  CHECK(sct_verify(star).ok());
  CHECK(sct_compare(star, sct_algebra_group(G)) == Relation::StrictlyCoarser);

  auto D = sct_direct_product(sct_algebra_group(G), sct_algebra_group(ut_group(2, field_new(3, 1))));
  CHECK(D.size() == 15);
  CHECK(sct_verify(D).ok());

  bool thrown = false;
  try {
    sct_conjugation(ut_group(4, F2), split_semidirect(ut_group(4, F2), 1).Hm);
  } catch (const Error& e) {
    thrown = e.code() == Errc::NotNormal;
  }
  CHECK(thrown);
}

TEST_CASE("join of theories") {
  auto G = ut_group(4, field_new(2, 1));
  auto A = sct_algebra_group(G);
  CHECK(sct_compare(sct_join(A, A), A) == Relation::Equal);
  CHECK(sct_compare(sct_join(sct_finest(G), A), A) == Relation::Equal);
  auto s1 = split_semidirect(G, 1);
  auto s3 = split_semidirect(G, 3);
  auto st1 = sct_star_product(sct_conjugation(G, s1.N), sct_algebra_group(s1.H), G, projection_to_h(s1));
  auto st3 = sct_star_product(sct_conjugation(G, s3.N), sct_algebra_group(s3.H), G, projection_to_h(s3));
  auto J = sct_join(st1, st3);
  CHECK(sct_verify(J).ok());
  CHECK(sct_compare(J, st1) != Relation::StrictlyFiner);
}
