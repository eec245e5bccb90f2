#pragma once

#include <string>
#include <vector>

#include "scharc/littlegroups.hpp"

namespace scharc {

enum class ClassicalKind { Orthogonal, Symplectic, Unitary };

const char* classical_name(ClassicalKind k);

/// x -> x^dagger on 2n x 2n matrices: J x^t J (orthogonal), -Omega x^t Omega
/// (symplectic, Omega = [[0, J], [-J, 0]]) or J xbar^t J (unitary, xbar the
/// entrywise q-power over F_{q^2}).
class AntiInvolution {
 public:
  AntiInvolution() = default;
  /// Throws EvenCharacteristic for p = 2 and BadArgument when the unitary
  /// field is not of even degree.
  AntiInvolution(ClassicalKind kind, int size, FieldPtr F);

  ClassicalKind kind() const { return kind_; }
  int size() const { return size_; }
  const FieldPtr& field() const { return F_; }
  SqMat apply(const SqMat& x) const;

 private:
  ClassicalKind kind_ = ClassicalKind::Orthogonal;
  int size_ = 0;
  FieldPtr F_;
  SqMat J_;
  SqMat Omega_;
};

/// Which entries span the upper subalgebra h that gives the coefficient
/// |H lambda| / |G lambda|: columns beyond the first block (default) or the
/// literal "x_ij = 0 if j <= n/2" with n the half size.
enum class HUpperReading { BlockColumns, HalfColumns };

/// U = {u in G : u^dagger = u^{-1}} inside G = UT_2n(F), enumerated through
/// the Cayley map on u = {x : x^dagger = -x}. N and H are the block factors
/// U = N x| H; phi(h) is the upper-left block of h in H.
struct UGroup {
  ClassicalKind kind = ClassicalKind::Orthogonal;
  int n = 0;  // half size
  FieldPtr field;
  AntiInvolution dagger;
  LieSpace g;  // ut_2n
  LieSpace u;
  MatrixGroupPtr U;
  MatrixGroupPtr N;
  MatrixGroupPtr H;
  MatrixGroupPtr Hphi;  // UT_n(F), the image of phi

  std::string name() const;
  bool contains(const SqMat& m) const;
  SqMat phi(const SqMat& h) const { return h.block(0, 0, n); }
  /// g . x = g x g^dagger.
  SqMat act_u(const SqMat& g, const SqMat& x) const;
  /// (g . lambda)(x) = lambda(g^{-1} x g^{-dagger}) in coordinates of u.
  FpVec act_u_dual(const SqMat& g, const FpVec& lambda) const;
  /// Generators of G = UT_2n(F) and of the upper subgroup, as matrices.
  std::vector<SqMat> ambient_generators() const;
  std::vector<SqMat> upper_generators(HUpperReading reading) const;
  /// The matrix of x -> g x g^dagger on the coordinates of a subspace of u.
  FpMat action_matrix(const LieSpace& space, const SqMat& g) const;
};

/// Throws EvenCharacteristic, BadArgument (unitary needs F_{q^2}, n >= 1) and
/// CapExceeded.
UGroup build_classical(ClassicalKind kind, int n, const FieldPtr& F);

/// f(g) = 2 (g - 1)(g + 1)^{-1} and its inverse (1 - x/2)^{-1}(1 + x/2).
SqMat cayley(const SqMat& g);
SqMat cayley_inv(const SqMat& x);

/// Superclasses {v : f(v) in G . f(u)} and characters
/// |H lambda| / |G lambda| sum_{mu in G lambda} theta(mu(f)).
SCTheory sct_classical(const UGroup& U, HUpperReading reading = HUpperReading::BlockColumns);
/// True when some coefficient |H lambda| / |G lambda| differs between the two readings.
bool upper_readings_differ(const UGroup& U);

/// Characters with theta replaced by x -> theta(t x); superclasses are the
/// joint level sets of the new characters.
SCTheory twist_theta(const SCTheory& S, long t);

/// lambda-bar(y) = lambda(y - y^dagger) / 2 on the full upper-right block, and
/// H_psi = {h in H : lambda-bar(h y) = lambda-bar(y) for all y}.
std::vector<int> classical_hpsi(const UGroup& U, const SemidirectSetting& s, const FpVec& mu);

/// r = {x in a : eta(m^{-1} x m^{-dagger}) = eta(x) for all m in M}, with
/// M = {diag(1, h)} in G and eta in coordinates of u.
LieSpace classical_r_space(const UGroup& U, const LieSpace& a, const FpVec& eta);
/// Ind_{R}^{H}(theta(eta(f))) with R = f^{-1}(r) for a = f(H).
ClassFunction classical_r_character(const UGroup& U, const FpVec& eta);

struct ClassicalLittleGroups {
  SemidirectSetting setting;
  HMap hmap;
  SCTheory sct;
  Relation relation = Relation::Incomparable;
  bool hchoice_valid = false;
  std::string hchoice_failure;
};

/// SCh over the subgroups of H mapping to right ideal subgroups of UT_n,
/// with the right ideal theories pulled back through phi and the H_psi above;
/// validates (H1)-(H4) and compares with sct_classical.
ClassicalLittleGroups sct_classical_littlegroups(const UGroup& U);

}  // namespace scharc
