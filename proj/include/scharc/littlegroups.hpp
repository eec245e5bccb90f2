#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scharc/sct.hpp"

namespace scharc {

/// G = N x| H with N abelian. Elements of N are coordinate keys of
/// N->space(), and psi_mu(n) = zeta_p^{mu . coords(n)} runs over Irr(N).
struct SemidirectSetting {
  GroupPtr G;
  MatrixGroupPtr N;
  MatrixGroupPtr H;
  std::vector<int> n_to_g;
  std::vector<int> h_to_g;
  std::vector<std::pair<int, int>> factor;  // g = n h
  std::vector<FpMat> conj;                  // coords(h n h^{-1}) = conj[h] coords(n)
  std::vector<FpMat> gen_conj;              // conj for the generators of H

  int p() const { return N->space().p(); }
  int dim() const { return N->space().dim(); }
  /// mu^h with psi_{mu^h}(n) = psi_mu(h n h^{-1}).
  FpVec act(int h, const FpVec& mu) const { return conj[h].transpose().apply(mu); }
  Cyclotomic psi(const FpVec& mu, int n) const;
  /// I_H(psi_mu) as sorted element ids of H.
  std::vector<int> inertia(const FpVec& mu) const;
  /// Lexicographically least mu in each H-orbit of Irr(N).
  std::vector<FpVec> orbit_reps() const;
};

/// Checks that N is abelian and normal, H a complement; builds the tables.
SemidirectSetting make_setting(const GroupPtr& G, const MatrixGroupPtr& N, const MatrixGroupPtr& H);
SemidirectSetting make_setting(const SemidirectSplit& split);

/// psi~(n k) = psi(n) on NK (a subgroup of G); K must lie in I_H(psi).
ClassFunction extend_character(const SemidirectSetting& s, const FpVec& mu, const GroupPtr& K);

/// psi x| chi via (1/|K|) sum_{k in H, k h k^-1 in K} psi(k n k^-1) chi(k h k^-1).
/// chi lives on a subgroup K of I_H(psi). Several chi on the same K share
/// the orbit counts.
ClassFunction semidirect_char(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi);
std::vector<ClassFunction> semidirect_chars(const SemidirectSetting& s, const FpVec& mu,
                                            const std::vector<ClassFunction>& chis);
/// Ind_{NK}^G(psi~ . Inf_K^{NK} chi), computed literally.
ClassFunction semidirect_char_literal(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi);

struct MackeyResult {
  ClassFunction product;
  ClassFunction expansion;
  int terms = 0;
  bool equal = false;
};

/// (psi1 x| chi1)(psi2 x| chi2) against sum over (K1, K2) double cosets x of
/// (psi1^x psi2) x| (Res chi1^x . Res chi2).
MackeyResult mackey_product(const SemidirectSetting& s, const FpVec& mu1, const ClassFunction& chi1, const FpVec& mu2,
                            const ClassFunction& chi2);

/// psi x| Ind_{K1}^{K2}(chi) == psi x| chi, for chi on K1 inside K2.
bool induction_compat_check(const SemidirectSetting& s, const FpVec& mu, const ClassFunction& chi, const GroupPtr& K2);

/// For a linear character beta of K: the sets {psi~ . Inf chi} and
/// {psi~ beta . Inf chi} over chi in Irr(K) coincide, and the closed form of
/// psi x| chi matches the literal induction for every chi.
bool extension_independence_check(const SemidirectSetting& s, const FpVec& mu, const GroupPtr& K,
                                  const ClassFunction& beta);

/// Choice of H_psi for every psi, as sorted element ids of H.
using HChoice = std::function<std::vector<int>(const FpVec& mu)>;

/// Runs (H1)-(H4) over all of Irr(N); throws ValidationFailed naming the
/// condition and a witness.
void validate_hchoice(const SemidirectSetting& s, const HChoice& choice);

struct HMapEntry {
  FpVec mu;
  std::vector<int> inertia;
  GroupPtr member;  // H_psi
  SCTheory sct;     // its supercharacter theory
};

struct HMap {
  std::string strategy;
  std::vector<HMapEntry> entries;  // one per orbit representative
};

/// Minimal choice: H for the trivial character, {1} otherwise.
HMap hmap_minimal(const SemidirectSetting& s, const SCTheory& top);
HChoice hchoice_minimal(const SemidirectSetting& s);

/// SCh(L): psi x| Ind_{H_psi}^{I_H(psi)}(chi) over the orbit representatives and
/// the supercharacters chi of H_psi (duplicates merged); superclasses are the
/// joint level sets.
SCTheory sch_build(const SemidirectSetting& s, const HMap& hmap);

/// H_psi = the normal core of I_H(psi) in H, from the lattice of normal
/// subgroups of H. Members carry Irr or, with conjugation_theories, the
/// theory of H-conjugation orbits (which gives a coarser SCh).
HChoice hchoice_normal_core(const SemidirectSetting& s);
HMap hmap_normal_core(const SemidirectSetting& s, bool conjugation_theories);

// Pattern groups: the lattice of K_k x K_m with K_k a right ideal subgroup of
// H_k and K_m a left ideal subgroup of H_m.

/// SCT of K_k x K_m: right ideal theory on K_k times left ideal theory on K_m.
SCTheory lattice_member_sct(const SemidirectSplit& split, const LieSpace& kk, const LieSpace& km);
/// (k_k, k_m) = ({y in h_k : lambda(y n) = 0}, {y in h_m : lambda(n y) = 0}).
std::pair<LieSpace, LieSpace> inertia_in_lattice(const SemidirectSplit& split, const FpVec& mu);
/// Maximal choice H_psi = I_L(psi).
HMap hmap_maximal(const SemidirectSplit& split, const SemidirectSetting& s);
HChoice hchoice_maximal(const SemidirectSplit& split, const SemidirectSetting& s);
/// SCT of the top member H = H_k x H_m.
SCTheory top_member_sct(const SemidirectSplit& split);
/// The projection G -> H, g = n h -> h.
std::vector<int> projection_to_h(const SemidirectSetting& s);

struct OrbitSizePair {
  std::string eta;
  std::uint64_t nh_orbit = 0;  // |N H_m eta N H_k|
  std::uint64_t g_orbit = 0;   // |G eta|
};

struct EquivalenceReport {
  Relation relation = Relation::Incomparable;
  std::vector<OrbitSizePair> orbits;
  bool all_sizes_equal = false;
};

/// Builds SCh(L) with the maximal choice and the algebra group theory, compares
/// them and lists |N H_m eta N H_k| against |G eta| for every dual orbit.
EquivalenceReport little_groups_equivalence(const MatrixGroupPtr& G, int k);

}  // namespace scharc
