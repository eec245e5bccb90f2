#include "doctest.h"
#include "scharc/error.hpp"
#include "scharc/oracle.hpp"
#include "scharc/pattern.hpp"

using namespace scharc;

namespace {

// Character degrees, sorted.
std::vector<long> degrees(const IrrTable& T) {
  std::vector<long> d;
  for (const auto& c : T.chars) d.push_back(c.degree().rational().get_num().get_si());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("irreducible characters of small unitriangular groups") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  auto d4 = irr_table(ut_group(3, F2));
  CHECK(degrees(*d4) == std::vector<long>{1, 1, 1, 1, 2});
  auto heis = irr_table(ut_group(3, F3));
  CHECK(degrees(*heis) == std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  CHECK(heis->chars[0] == ClassFunction::constant(heis->group, 1));
}

TEST_CASE("orthogonality relations of computed tables") {
  auto F2 = field_new(2, 1);
  auto F3 = field_new(3, 1);
  for (auto G : {ut_group(4, F2), ut_group(4, F3), pattern_group(Poset(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}}), F3)}) {
    auto T = irr_table(G);
    CHECK(T->size() == G->classes().count());
    for (int a = 0; a < T->size(); ++a)
      for (int b = a; b < T->size(); ++b) CHECK(cf_inner(T->chars[a], T->chars[b]) == Cyclotomic(a == b ? 1 : 0));
    // column orthogonality: sum of chi(1) chi = regular
    ClassFunction reg = ClassFunction::constant(G, 0);
    for (const auto& c : T->chars) reg = reg + c * c.degree();
    CHECK(reg == ClassFunction::regular(G));
  }
}

TEST_CASE("induction, restriction and convolution") {
  auto F = field_new(2, 1);
  auto C = ut_group(4, F);
  auto B = pattern_group(Poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), F);
  auto A = split_semidirect(C, 2).N;
  auto TA = irr_table(A);
  auto TB = irr_table(B);
  auto TC = irr_table(C);
  for (const auto& psi : TA->chars) {
    CHECK(induce(psi, C) == induce(induce(psi, B), C));
    for (const auto& chi : TC->chars) CHECK(cf_inner(induce(psi, C), chi) == cf_inner(psi, restrict_to(chi, A)));
  }
  for (const auto& chi : TB->chars) {
    const auto e = chi * chi.degree();
    CHECK(cf_convolve(e, e) == e);
    for (const auto& other : TB->chars)
      if (other != chi) CHECK(cf_convolve(e, other * other.degree()).is_zero());
  }
  auto parts = constituent_partition({ClassFunction::regular(C)}, *TC);
  CHECK(parts.partition);
}

TEST_CASE("inflation checks the projection") {
  auto F = field_new(2, 1);
  auto G = ut_group(3, F);
  auto S = split_semidirect(G, 1);
  // g = n h -> h lands in H
  std::vector<int> pi(G->size());
  for (int g = 0; g < G->size(); ++g) pi[g] = *S.H->find_matrix(S.factor(*G->matrix(g)).second);
  auto TH = irr_table(S.H);
  for (const auto& c : TH->chars) {
    auto inf = inflate(c, G, pi);
    CHECK(cf_inner(inf, inf) == Cyclotomic(1));
  }
  std::vector<int> bad(G->size(), 0);
  bad[1] = 1;
  bool thrown = false;
  try {
    inflate(TH->chars[1], G, bad);
  } catch (const Error& e) {
    thrown = e.code() == Errc::NotQuotient;
  }
  CHECK(thrown);
}
