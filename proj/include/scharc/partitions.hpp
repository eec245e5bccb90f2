#pragma once

#include <string>
#include <vector>

#include "scharc/littlegroups.hpp"

namespace scharc {

struct Arc {
  int i = 0;  // 1-based, i < j
  int j = 0;
  FqScalar a;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arcs with distinct left endpoints, distinct right endpoints and nonzero labels.
struct FqSetPartition {
  int n = 0;
  std::vector<Arc> arcs;  // sorted

  bool operator==(const FqSetPartition&) const = default;
  bool operator<(const FqSetPartition& o) const { return arcs < o.arcs; }
  std::string to_string(const Field& F) const;
};

/// Validates and sorts; throws BadArgument.
FqSetPartition make_partition(int n, std::vector<Arc> arcs);

/// All F_q-set partitions of [n], in lexicographic order of their arc lists.
std::vector<FqSetPartition> enumerate_fq_set_partitions(int n, const Field& F);
std::uint64_t count_fq_set_partitions(int n, int q);

bool is_k_nonnesting(const FqSetPartition& eta, int k);
bool is_nonnesting(const FqSetPartition& eta);

/// Drops the arcs i-j (i <= k < j) that cover an arc on one side of k.
FqSetPartition eta_bar(const FqSetPartition& eta, int k);
/// Drops the arcs lying on one side of k under an arc that crosses k.
FqSetPartition eta_tilde(const FqSetPartition& eta, int k);

/// lambda_eta = sum a e_ij^* and g_eta = 1 + sum a e_ij.
DualFunctional eta_to_functional(const FqSetPartition& eta);
SqMat eta_to_element(const FqSetPartition& eta, const FieldPtr& F);

/// Which surgery merges characters: eta-bar (AsStated) or eta-tilde
/// (Swapped). Superclasses merge along the other one.
enum class NkCoupling { AsStated, Swapped };
const char* coupling_name(NkCoupling c);

/// Algebra group data of UT_n(F) indexed by set partitions: chi_eta as the
/// full two-sided orbit sum and K_eta as element ids.
struct IndexedAlgebraTheory {
  MatrixGroupPtr group;
  std::vector<FqSetPartition> parts;
  std::vector<ClassFunction> chars;
  std::vector<std::vector<int>> classes;
  std::vector<int> reps;  // element id of g_eta
  /// True when eta -> orbit of lambda_eta and eta -> orbit of g_eta are bijections.
  bool indexing_bijective = false;
};

IndexedAlgebraTheory indexed_algebra_theory(int n, const FieldPtr& F);

/// SCT(n, k) by merging the indexed algebra theory along the surgeries.
SCTheory sct_nk_merged(const IndexedAlgebraTheory& A, int k, NkCoupling coupling);

/// H_psi for the product of two-sided ideal subgroups: h_ij = 0 if some arc
/// i'-j' of lambda has i' <= i (entries left of k) or j <= j' (right of k).
std::pair<LieSpace, LieSpace> nk_member_spaces(const FieldPtr& F, int n, int k, const DualFunctional& lambda);

/// SCT(n, k) through little groups with supernormal member theories.
SCTheory sct_nk_littlegroups(const MatrixGroupPtr& G, int k);

struct NkReport {
  SCTheory sct;  // the little groups construction
  bool as_stated_matches = false;
  bool swapped_matches = false;
  bool hchoice_valid = false;
  std::string hchoice_failure;
};

/// Builds SCT(n, k) both ways and records which coupling agrees.
NkReport sct_nk(int n, int k, const FieldPtr& F);

/// Closed form value of chi_[eta]_k at g_nu: chi_[eta]_k(1) / chi_eta(1) * chi_eta(g_nu),
/// or 0 when an arc of eta crossing k covers an arc of nu on one side of k.
Cyclotomic chi_nk_value(const IndexedAlgebraTheory& A, const FqSetPartition& eta, const FqSetPartition& nu, int k,
                        NkCoupling coupling);
/// chi_[eta]_k: the sum of chi_nu over the character class of eta.
ClassFunction chi_nk(const IndexedAlgebraTheory& A, const FqSetPartition& eta, int k, NkCoupling coupling);

/// Iterated join of SCT(n, k) over k in S (1-based subset of [n]).
SCTheory sct_nS(int n, const std::vector<int>& S, const FieldPtr& F);

}  // namespace scharc
