#include "scharc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "scharc/config.hpp"
#include "scharc/error.hpp"

namespace scharc {

std::string FqSetPartition::to_string(const Field& F) const {
  if (arcs.empty()) return "{}";
  std::string s;
  for (const auto& a : arcs) {
    if (!s.empty()) s += ",";
    s += std::to_string(a.i) + "-" + std::to_string(a.j);
    if (F.q() > 2) s += "(" + F.to_string(a.a) + ")";
  }
  return s;
}

FqSetPartition make_partition(int n, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  std::set<int> lefts, rights;
  for (const auto& a : arcs) {
    if (a.i < 1 || a.j > n || a.i >= a.j) throw Error(Errc::BadArgument, "arc out of range");
    if (a.a.code == 0) throw Error(Errc::BadArgument, "arc labels must be nonzero");
    if (!lefts.insert(a.i).second || !rights.insert(a.j).second)
      throw Error(Errc::BadArgument, "an index is used twice as a left or as a right endpoint");
  }
  return {n, std::move(arcs)};
}

std::uint64_t count_fq_set_partitions(int n, int q) {
  // dp over positions; the state is the number of arcs still waiting for a right end
  std::vector<std::uint64_t> open(n + 1, 0);
  open[0] = 1;
  for (int pos = 1; pos <= n; ++pos) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (int o = 0; o <= n; ++o) {
      if (!open[o]) continue;
      for (int close = 0; close <= (o > 0 ? 1 : 0); ++close)
        for (int opens = 0; opens <= 1; ++opens) {
          std::uint64_t w = open[o] * (close ? o * static_cast<std::uint64_t>(q - 1) : 1);
          next[o - close + opens] += w;
        }
    }
    open = next;
  }
  return open[0];
}

std::vector<FqSetPartition> enumerate_fq_set_partitions(int n, const Field& F) {
  require_within_cap(count_fq_set_partitions(n, F.q()), "set partition enumeration");
  std::vector<FqSetPartition> out;
  std::vector<Arc> cur;
  std::vector<char> right_used(n + 2, 0);
  std::vector<FqScalar> labels;
  for (const auto& a : F.elements())
    if (a.code != 0) labels.push_back(a);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back({n, cur});
      return;
    }
    rec(i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (right_used[j]) continue;
      right_used[j] = 1;
      for (const auto& a : labels) {
        cur.push_back({i, j, a});
        rec(i + 1);
        cur.pop_back();
      }
      right_used[j] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Arc (i', j') lies on one side of k strictly under (i, j), which crosses k.
bool covers_across(const Arc& outer, const Arc& inner, int k) {
  const int i = outer.i, j = outer.j, a = inner.i, b = inner.j;
  return (i < a && a < b && b <= k && k < j) || (i <= k && k < a && a < b && b < j);
}

}  // namespace

bool is_k_nonnesting(const FqSetPartition& eta, int k) {
  for (const auto& x : eta.arcs)
    for (const auto& y : eta.arcs)
      if (covers_across(x, y, k)) return false;
  return true;
}

bool is_nonnesting(const FqSetPartition& eta) {
  for (const auto& x : eta.arcs)
    for (const auto& y : eta.arcs)
      if (x.i < y.i && y.j < x.j) return false;
  return true;
}

FqSetPartition eta_bar(const FqSetPartition& eta, int k) {
  FqSetPartition out{eta.n, {}};
  for (const auto& x : eta.arcs)
    if (std::none_of(eta.arcs.begin(), eta.arcs.end(), [&](const Arc& y) { return covers_across(x, y, k); }))
      out.arcs.push_back(x);
  return out;
}

FqSetPartition eta_tilde(const FqSetPartition& eta, int k) {
  FqSetPartition out{eta.n, {}};
  for (const auto& x : eta.arcs)
    if (std::none_of(eta.arcs.begin(), eta.arcs.end(), [&](const Arc& y) { return covers_across(y, x, k); }))
      out.arcs.push_back(x);
  return out;
}

DualFunctional eta_to_functional(const FqSetPartition& eta) {
  DualFunctional d;
  for (const auto& a : eta.arcs) d.coeffs[{a.i, a.j}] = a.a;
  return d;
}

SqMat eta_to_element(const FqSetPartition& eta, const FieldPtr& F) {
  SqMat g = SqMat::identity(F, eta.n);
  for (const auto& a : eta.arcs) g.at(a.i - 1, a.j - 1) = a.a;
  return g;
}

const char* coupling_name(NkCoupling c) { return c == NkCoupling::AsStated ? "as-stated" : "swapped"; }

IndexedAlgebraTheory indexed_algebra_theory(int n, const FieldPtr& F) {
  IndexedAlgebraTheory A;
  A.group = ut_group(n, F);
  const MatrixGroup& G = *A.group;
  const LieSpace& g = G.space();
  const int p = g.p();
  const auto gens = generator_matrices(G);
  A.parts = enumerate_fq_set_partitions(n, *F);
  const auto& cc = G.classes();
  std::vector<FpVec> reps;
  for (int c = 0; c < cc.count(); ++c) reps.push_back(G.lie_coords(cc.rep(c)));
  std::set<std::uint64_t> dual_reps, elem_reps;
  std::uint64_t dual_total = 0, elem_total = 0;
  for (const auto& eta : A.parts) {
    const auto o = orbit_two_sided(g, gens, functional_coords(g, eta_to_functional(eta)), gens);
    dual_reps.insert(o.rep());
    dual_total += o.size();
    std::vector<Cyclotomic> vals;
    for (int c = 0; c < cc.count(); ++c) {
      std::vector<long> counts(p, 0);
      for (std::uint64_t key : o.points) counts[dot_mod(decode_coords(key, p, g.dim()), reps[c], p)]++;
      vals.push_back(Cyclotomic::from_counts(p, counts));
    }
    A.chars.emplace_back(A.group, std::move(vals));

    const SqMat x = eta_to_element(eta, F) - SqMat::identity(F, n);
    const auto e = orbit_element(g, gens, g.coords(x), gens);
    elem_reps.insert(e.rep());
    elem_total += e.size();
    A.classes.emplace_back(e.points.begin(), e.points.end());
    A.reps.push_back(G.id_of_lie(x));
  }
  A.indexing_bijective = dual_reps.size() == A.parts.size() && elem_reps.size() == A.parts.size() &&
                         dual_total == G.order() && elem_total == G.order();
  return A;
}

namespace {

using Surgery = FqSetPartition (*)(const FqSetPartition&, int);

Surgery char_surgery(NkCoupling c) { return c == NkCoupling::AsStated ? &eta_bar : &eta_tilde; }
Surgery class_surgery(NkCoupling c) { return c == NkCoupling::AsStated ? &eta_tilde : &eta_bar; }

std::size_t index_of(const IndexedAlgebraTheory& A, const FqSetPartition& eta) {
  const auto it = std::lower_bound(A.parts.begin(), A.parts.end(), eta);
  if (it == A.parts.end() || !(*it == eta)) throw Error(Errc::BadArgument, "set partition does not index this group");
  return static_cast<std::size_t>(it - A.parts.begin());
}

}  // namespace

SCTheory sct_nk_merged(const IndexedAlgebraTheory& A, int k, NkCoupling coupling) {
  const int n = A.group->n();
  if (k < 0 || k > n) throw Error(Errc::BadIndex, "k out of range");
  std::map<FqSetPartition, ClassFunction> chars;
  std::map<FqSetPartition, std::vector<int>> blocks;
  for (std::size_t e = 0; e < A.parts.size(); ++e) {
    const auto ck = char_surgery(coupling)(A.parts[e], k);
    auto it = chars.find(ck);
    if (it == chars.end()) chars.emplace(ck, A.chars[e]);
    else it->second = it->second + A.chars[e];
    auto& b = blocks[class_surgery(coupling)(A.parts[e], k)];
    b.insert(b.end(), A.classes[e].begin(), A.classes[e].end());
  }
  SCTheory S;
  S.group = A.group;
  S.provenance = "SCT(" + std::to_string(n) + "," + std::to_string(k) + ")[merged," + coupling_name(coupling) + "]";
  for (auto& [key, f] : chars) {
    S.chars.push_back(f);
    S.labels.push_back(key.to_string(*A.group->field()));
  }
  for (auto& [key, b] : blocks) S.blocks.push_back(std::move(b));
  canonicalize(S);
  return S;
}

std::pair<LieSpace, LieSpace> nk_member_spaces(const FieldPtr& F, int n, int k, const DualFunctional& lambda) {
  int min_i = n + 1, max_j = 0;
  for (const auto& [arc, c] : lambda.coeffs) {
    if (c.code == 0) continue;
    min_i = std::min(min_i, arc.first);
    max_j = std::max(max_j, arc.second);
  }
  std::vector<std::pair<int, int>> kk, km;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j <= k && i < min_i) kk.push_back({i - 1, j - 1});
      if (i > k && j > max_j) km.push_back({i - 1, j - 1});
    }
  return {LieSpace::pattern(F, n, kk), LieSpace::pattern(F, n, km)};
}

namespace {

struct NkLittle {
  SemidirectSetting s;
  HMap hmap;
  HChoice choice;
};

NkLittle nk_little(const MatrixGroupPtr& G, int k) {
  const auto split = split_semidirect(G, k);
  NkLittle r{make_setting(split), {}, {}};
  const auto hgens = generator_matrices(*split.H);
  const FieldPtr F = G->field();
  const int n = G->n();
  auto member_space = [split, F, n, k](const FpVec& mu) {
    const auto [kk, km] = nk_member_spaces(F, n, k, functional_from_coords(split.N->space(), mu));
    return LieSpace::sum(kk, km);
  };
  r.hmap.strategy = "SCT(" + std::to_string(n) + "," + std::to_string(k) + ")";
  std::map<std::string, SCTheory> members;
  for (const auto& mu : r.s.orbit_reps()) {
    const LieSpace space = member_space(mu);
    auto it = members.find(space.signature());
    if (it == members.end()) {
      const MatrixGroupPtr K = space == split.H->space()
                                   ? split.H
                                   : MatrixGroup::create(space, SpringerKind::Algebra, "K[" + space.signature() + "]");
      const auto full = two_sided_action(space, hgens, hgens);
      it = members.emplace(space.signature(), sct_from_orbits({K, full, full, false, "supernormal(" + K->describe() + ")"}))
               .first;
    }
    r.hmap.entries.push_back({mu, r.s.inertia(mu), it->second.group, it->second});
  }
  const MatrixGroupPtr H = split.H;
  r.choice = [member_space, H](const FpVec& mu) {
    const LieSpace space = member_space(mu);
    std::vector<int> out;
    for (int h = 0; h < H->size(); ++h)
      if (space.contains(H->lie(h))) out.push_back(h);
    return out;
  };
  return r;
}

}  // namespace

SCTheory sct_nk_littlegroups(const MatrixGroupPtr& G, int k) {
  const auto r = nk_little(G, k);
  return sch_build(r.s, r.hmap);
}

NkReport sct_nk(int n, int k, const FieldPtr& F) {
  const auto A = indexed_algebra_theory(n, F);
  const auto r = nk_little(A.group, k);
  NkReport rep;
  rep.sct = sch_build(r.s, r.hmap);
  try {
    validate_hchoice(r.s, r.choice);
    rep.hchoice_valid = true;
  } catch (const Error& e) {
    if (e.code() != Errc::ValidationFailed) throw;
    rep.hchoice_failure = e.what();
  }
  rep.as_stated_matches = sct_compare(rep.sct, sct_nk_merged(A, k, NkCoupling::AsStated)) == Relation::Equal;
  rep.swapped_matches = sct_compare(rep.sct, sct_nk_merged(A, k, NkCoupling::Swapped)) == Relation::Equal;
  return rep;
}

ClassFunction chi_nk(const IndexedAlgebraTheory& A, const FqSetPartition& eta, int k, NkCoupling coupling) {
  const auto key = char_surgery(coupling)(eta, k);
  ClassFunction sum = ClassFunction::constant(A.group, 0);
  for (std::size_t e = 0; e < A.parts.size(); ++e)
    if (char_surgery(coupling)(A.parts[e], k) == key) sum = sum + A.chars[e];
  return sum;
}

Cyclotomic chi_nk_value(const IndexedAlgebraTheory& A, const FqSetPartition& eta, const FqSetPartition& nu, int k,
                        NkCoupling coupling) {
  for (const auto& x : eta.arcs)
    for (const auto& y : nu.arcs)
      if (covers_across(x, y, k)) return Cyclotomic(0);
  const std::size_t e = index_of(A, eta);
  const auto& chi = A.chars[e];
  const mpq_class ratio = chi_nk(A, eta, k, coupling).degree().rational() / chi.degree().rational();
  return ratio * chi(A.reps[index_of(A, nu)]);
}

SCTheory sct_nS(int n, const std::vector<int>& S, const FieldPtr& F) {
  if (S.empty()) throw Error(Errc::BadArgument, "empty index set");
  const auto G = ut_group(n, F);
  SCTheory J = sct_nk_littlegroups(G, S.front());
  for (std::size_t i = 1; i < S.size(); ++i) J = sct_join(J, sct_nk_littlegroups(G, S[i]));
  std::string name = "SCT(" + std::to_string(n) + ",{";
  for (std::size_t i = 0; i < S.size(); ++i) name += (i ? "," : "") + std::to_string(S[i]);
  J.provenance = name + "})";
  return J;
}

}  // namespace scharc
