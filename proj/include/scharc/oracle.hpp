#pragma once

#include <memory>
#include <vector>

#include "scharc/charfun.hpp"

namespace scharc {

/// Exact irreducible characters of an enumerated group.
struct IrrTable {
  GroupPtr group;
  std::vector<ClassFunction> chars;  // trivial first, then by degree and values
  int exponent = 1;
  long prime = 0;  // modulus used for the eigenvector computation

  int size() const { return static_cast<int>(chars.size()); }
};

/// Conjugacy classes (orbit closure under conjugation by generators).
const ConjClasses& conjugacy_classes(const FiniteGroup& G);

/// Dixon-Schneider: common eigenvectors of the class multiplication
/// matrices modulo a prime l = 1 (mod exponent), lifted to Q(zeta_exponent)
/// via eigenvalue multiplicities along power maps. Results are memoized per
/// group object.
std::shared_ptr<const IrrTable> irr_table(const GroupPtr& G);

struct ConstituentReport {
  std::vector<std::vector<int>> sets;  // irreducible indices per character
  bool partition = false;              // disjoint and covering Irr
};

ConstituentReport constituent_partition(const std::vector<ClassFunction>& X, const IrrTable& T);

/// Smallest prime l = 1 (mod m) with l > lower.
long prime_one_mod(long m, long lower);

}  // namespace scharc
