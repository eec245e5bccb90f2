#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scharc/pattern.hpp"

namespace scharc {

/// A functional on an F_q-space of matrices, x -> sum c_ij x_ij, with
/// 1-based arcs. Through theta it pairs with the F_p coordinates of a
/// LieSpace by mu_t = Tr(lambda(b_t)).
struct DualFunctional {
  std::map<std::pair<int, int>, FqScalar> coeffs;

  bool operator==(const DualFunctional&) const = default;
  std::string to_string(const Field& F) const;
};

/// F_p coordinate form mu of lambda on the space: mu_t = Tr(lambda(b_t)).
FpVec functional_coords(const LieSpace& space, const DualFunctional& lambda);
/// An F_q functional supported on the entries of a pattern space whose
/// coordinate form is mu (unique on pattern spaces).
DualFunctional functional_from_coords(const LieSpace& space, const FpVec& mu);

/// Points of an orbit of a linear group action on F_p^d, as sorted
/// coordinate keys; the representative is the least key.
struct Orbit {
  std::vector<std::uint64_t> points;

  std::uint64_t rep() const { return points.front(); }
  std::size_t size() const { return points.size(); }
};

/// Closure of `start` under the matrices (which must generate the acting group).
Orbit orbit_of(const std::vector<FpMat>& gens, const FpVec& start);
/// Decomposition of all of F_p^d into orbits, ordered by representative.
/// Checks the size against the enumeration cap.
std::vector<Orbit> orbit_decomposition(const std::vector<FpMat>& gens, int p, int dim);
std::vector<FpMat> transposes(const std::vector<FpMat>& gens);

/// Generators of a matrix group as matrices: covers for pattern spaces,
/// otherwise a verified generating set of the enumerated group.
std::vector<SqMat> generator_matrices(const MatrixGroup& G);

/// Left multiplication by the generators of L and right multiplication by
/// the generators of R, on the coordinates of `space`.
std::vector<FpMat> two_sided_action(const LieSpace& space, const std::vector<SqMat>& L, const std::vector<SqMat>& R);

/// (g lambda h)(x) = lambda(g^{-1} x h^{-1}), in coordinate form.
FpVec act_dual(const LieSpace& space, const SqMat& g, const FpVec& mu, const SqMat& h);
DualFunctional act_dual(const LieSpace& space, const SqMat& g, const DualFunctional& lambda, const SqMat& h);

/// G_left lambda G_right.
Orbit orbit_two_sided(const LieSpace& space, const std::vector<SqMat>& left, const FpVec& mu,
                      const std::vector<SqMat>& right);
/// Orbit of f(g) = x under x -> a x b, returned as coordinate keys of space.
Orbit orbit_element(const LieSpace& space, const std::vector<SqMat>& left, const FpVec& x,
                    const std::vector<SqMat>& right);

/// {1 + y : y in h, lambda(y a) = 0} (Side::Left: h acts on the left of a)
/// or {1 + y : lambda(a y) = 0} (Side::Right): the stabilizer of lambda in
/// the algebra group 1 + h, as a subspace of h.
LieSpace stabilizer_sided(const LieSpace& h, const LieSpace& a, const FpVec& mu, Side side);

/// Stabilizer of mu in an enumerated group acting through `action(g)`
/// (a coordinate matrix per element); returns sorted element ids.
template <class ActionFn>
std::vector<int> stabilizer_enumerated(const FiniteGroup& G, const FpVec& mu, ActionFn&& action) {
  std::vector<int> out;
  for (int g = 0; g < G.size(); ++g)
    if (action(g).transpose().apply(mu) == mu) out.push_back(g);
  return out;
}

}  // namespace scharc
