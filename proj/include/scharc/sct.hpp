#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scharc/charfun.hpp"
#include "scharc/oracle.hpp"
#include "scharc/orbits.hpp"

namespace scharc {

/// A supercharacter theory: a partition of G (superclasses, element ids,
/// each block sorted and blocks ordered by least element) and a list of
/// characters (supercharacters).
struct SCTheory {
  GroupPtr group;
  std::vector<std::vector<int>> blocks;
  std::vector<ClassFunction> chars;
  std::string provenance;
  /// Optional human-readable label per character (e.g. an orbit representative).
  std::vector<std::string> labels;
  /// c with chars[i] = c * sum psi(1) psi over its constituents, once known.
  std::vector<std::optional<Cyclotomic>> scale;

  int size() const { return static_cast<int>(blocks.size()); }
  /// block_of()[g] = index of the block containing g.
  std::vector<int> block_of() const;
};

/// Sorts each block and orders blocks by least element; sizes the label and
/// scale vectors.
void canonicalize(SCTheory& S);

/// Input for the orbit construction shared by the algebra, ideal,
/// supernormal and classical recipes. Elements of `group` are identified with
/// coordinate keys of group->space() (f(g) for algebra groups, the Cayley
/// image for Cayley groups). Superclasses are orbits of `full` on the space;
/// supercharacters are sums of theta(mu(f(g))) over the dual orbits, scaled
/// by |partial orbit| / |full orbit| when `ratio` is set.
struct OrbitSctInput {
  MatrixGroupPtr group;
  std::vector<FpMat> full;
  std::vector<FpMat> partial;
  bool ratio = true;
  std::string provenance;
};

SCTheory sct_from_orbits(const OrbitSctInput& in);

/// Algebra group SCT of a group 1 + g (two-sided orbits, |G lambda| / |G lambda G| scaling).
SCTheory sct_algebra_group(const MatrixGroupPtr& G);
/// SCT of a one-sided ideal subgroup H of G: orbits of G x H (left ideal) or H x G (right ideal).
SCTheory sct_ideal(const IdealSubgroup& H, Side side);
/// SCT of a two-sided ideal subgroup K using G x G orbits, unscaled.
SCTheory sct_supernormal(const MatrixGroupPtr& G, const IdealSubgroup& K);
/// Superclasses: G-conjugation orbits on N; supercharacters: sums over
/// G-orbits on Irr(N). Throws NotNormal.
SCTheory sct_conjugation(const GroupPtr& G, const GroupPtr& N);
/// Blocks A x B and characters chi x psi on the direct product.
SCTheory sct_direct_product(const SCTheory& S1, const SCTheory& S2);
/// *-product for N normal in G with G/N identified with SQ.group through
/// the surjection pi (elementwise). Throws NotInvariant when the blocks of SN
/// are not G-stable.
SCTheory sct_star_product(const SCTheory& SN, const SCTheory& SQ, const GroupPtr& G, const std::vector<int>& pi);
/// Finest common coarsening; characters rebuilt from the oracle.
SCTheory sct_join(const SCTheory& S1, const SCTheory& S2);
/// Coarsest theory {1}, G - {1}.
SCTheory sct_coarsest(const GroupPtr& G);
/// Conjugacy classes and Irr(G).
SCTheory sct_finest(const GroupPtr& G);
/// Theory whose characters are sums psi(1) psi over the given blocks of
/// Irr(G) indices, and whose superclasses are the joint level sets of those
/// characters on G.
SCTheory sct_from_irr_blocks(const GroupPtr& G, const std::vector<std::vector<int>>& irr_blocks, std::string provenance);
/// Theory with the given characters; superclasses are the joint level sets
/// of the characters (unions of conjugacy classes).
SCTheory sct_from_characters(const GroupPtr& G, std::vector<ClassFunction> chars, std::string provenance,
                             std::vector<std::string> labels = {});

struct SctReport {
  bool counts_equal = false;
  bool blocks_partition = false;
  bool constant_on_blocks = false;
  bool blocks_class_closed = false;
  bool identity_block_alone = false;
  bool trivial_present = false;
  bool constituents_partition = false;
  bool span_closed = false;
  bool orthogonal = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks the supercharacter theory axioms against the oracle table.
SctReport sct_verify(const SCTheory& S);

enum class Relation { Equal, StrictlyFiner, StrictlyCoarser, Incomparable };
const char* relation_name(Relation r);

/// Refinement order on superclass partitions; Equal also requires every
/// character of one theory to be a positive rational multiple of one of the other.
Relation sct_compare(const SCTheory& S1, const SCTheory& S2);

/// Rescales every character to sum psi(1) psi over its constituents,
/// recording the factor in `scale`.
SCTheory sct_normalized(const SCTheory& S);

/// Rank of a list of class functions over Q(zeta): certified modulo a large
/// prime, with exact elimination when the modular rank is deficient.
int cf_rank(const std::vector<ClassFunction>& fs);

}  // namespace scharc
