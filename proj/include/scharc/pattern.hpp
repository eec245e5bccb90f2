#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scharc/group.hpp"

namespace scharc {

/// A sub-order of the linear order on [n]. Arcs are 1-based pairs (i, j),
/// i < j, kept sorted row-major.
class Poset {
 public:
  Poset() = default;
  /// Validates i < j, range and transitivity (BadArgument otherwise).
  Poset(int n, std::vector<std::pair<int, int>> arcs);
  static Poset full(int n);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  bool relates(int i, int j) const;
  /// Arcs (i, j) with no l such that (i, l) and (l, j) are arcs.
  std::vector<std::pair<int, int>> covers() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

/// 0-based arcs for LieSpace construction.
std::vector<std::pair<int, int>> zero_based(const std::vector<std::pair<int, int>>& arcs);

/// The pattern group U_P over F as an algebra group; element ids follow the
/// row-major arc order of the poset.
MatrixGroupPtr pattern_group(const Poset& poset, const FieldPtr& F);
/// UT_n(F).
MatrixGroupPtr ut_group(int n, const FieldPtr& F);

/// Standard name of a pattern group, e.g. "UT_3(F_2)".
std::string pattern_name(int n, const std::vector<std::pair<int, int>>& arcs0, const Field& F);

/// f(1 + x) = x and its inverse for algebra groups.
SqMat f_map(const SqMat& g);
SqMat f_inv(const SqMat& x);

/// G = N x| (H_k x H_m) for a pattern group G and 0 <= k <= n.
struct SemidirectSplit {
  MatrixGroupPtr G;
  int k = 0;
  MatrixGroupPtr N;   // entries (i, j) with i <= k < j
  MatrixGroupPtr Hk;  // entries with j <= k
  MatrixGroupPtr Hm;  // entries with i > k
  MatrixGroupPtr H;   // Hk x Hm, block diagonal

  /// g = n * h with n in N, h in H.
  std::pair<SqMat, SqMat> factor(const SqMat& g) const;
};

/// Throws BadIndex for k outside [0, n] and BadArgument when G is not a
/// pattern group. The structural claims (N abelian and normal, N cap H
/// trivial, |N||H| = |G|) are checked on the Lie algebras.
SemidirectSplit split_semidirect(const MatrixGroupPtr& G, int k);

enum class Side { Left, Right, TwoSided };

const char* side_name(Side s);

/// 1 + h for a subspace h of the algebra g of `parent` that is a left, right
/// or two-sided ideal.
struct IdealSubgroup {
  MatrixGroupPtr parent;
  Side side = Side::Left;
  MatrixGroupPtr group;

  const LieSpace& space() const { return group->space(); }
  bool contains(const SqMat& g) const { return space().contains(f_map(g)); }
};

/// Checks the ideal condition and throws NotAnIdeal naming an escaping
/// product of basis elements.
IdealSubgroup ideal_subgroup(const MatrixGroupPtr& parent, Side side, const LieSpace& space, std::string name = "");
/// Same, for the span of the given 1-based arcs.
IdealSubgroup ideal_subgroup(const MatrixGroupPtr& parent, Side side, const std::vector<std::pair<int, int>>& arcs);

/// Intersection and sum (the join of ideal subgroups is 1 + (a + b)).
IdealSubgroup ideal_meet(const IdealSubgroup& a, const IdealSubgroup& b);
IdealSubgroup ideal_join(const IdealSubgroup& a, const IdealSubgroup& b);

/// Linear map x -> g x, x -> x g or x -> g x g^{-1} on the coordinates of a
/// space; throws SpaceNotClosed when the image leaves the space.
FpMat left_mult_matrix(const LieSpace& space, const SqMat& g);
FpMat right_mult_matrix(const LieSpace& space, const SqMat& g);
FpMat conj_matrix(const LieSpace& space, const SqMat& g);

/// Generators of an algebra group with a pattern space: 1 + t^c e_ij over the
/// covers (i, j) and power-basis elements t^c; otherwise 1 + b for the basis b.
std::vector<SqMat> algebra_generators(const LieSpace& space);

}  // namespace scharc
