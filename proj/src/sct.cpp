#include "scharc/sct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scharc/error.hpp"

namespace scharc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> groups() {
    std::map<int, std::vector<int>> m;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) m[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, v] : m) out.push_back(std::move(v));
    return out;
  }
};

void require_same(const GroupPtr& a, const GroupPtr& b) {
  if (a != b && !a->same_as(*b)) throw Error(Errc::GroupMismatch, a->describe() + " vs " + b->describe());
}

bool is_constant(const ClassFunction& f) {
  return std::all_of(f.values().begin(), f.values().end(), [&](const Cyclotomic& v) { return v == f.on_class(0); });
}

std::string coords_label(const FpVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

ClassFunction irr_block_sum(const IrrTable& T, const std::vector<int>& block) {
  ClassFunction s = ClassFunction::constant(T.group, 0);
  for (int i : block) s = s + T.chars[i] * T.chars[i].degree();
  return s;
}

}  // namespace

std::vector<int> SCTheory::block_of() const {
  std::vector<int> out(group->size(), -1);
  for (int b = 0; b < size(); ++b)
    for (int g : blocks[b]) out[g] = b;
  return out;
}

void canonicalize(SCTheory& S) {
  for (auto& b : S.blocks) std::sort(b.begin(), b.end());
  std::sort(S.blocks.begin(), S.blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  S.labels.resize(S.chars.size());
  S.scale.resize(S.chars.size());
}

SCTheory sct_from_orbits(const OrbitSctInput& in) {
  const MatrixGroup& G = *in.group;
  const LieSpace& space = G.space();
  const int p = space.p();
  const int d = space.dim();
  SCTheory S;
  S.group = in.group;
  S.provenance = in.provenance;
  for (auto& o : orbit_decomposition(in.full, p, d)) S.blocks.emplace_back(o.points.begin(), o.points.end());

  const auto& cc = G.classes();
  std::vector<FpVec> reps;
  for (int c = 0; c < cc.count(); ++c) reps.push_back(G.lie_coords(cc.rep(c)));
  const auto partial = transposes(in.partial);
  for (const auto& o : orbit_decomposition(transposes(in.full), p, d)) {
    std::vector<std::vector<long>> counts(cc.count(), std::vector<long>(p, 0));
    for (std::uint64_t key : o.points) {
      const FpVec mu = decode_coords(key, p, d);
      for (int c = 0; c < cc.count(); ++c) counts[c][dot_mod(mu, reps[c], p)]++;
    }
    const FpVec rep = decode_coords(o.rep(), p, d);
    mpq_class scale = 1;
    if (in.ratio) {
      scale = mpq_class(static_cast<long>(orbit_of(partial, rep).size()), static_cast<long>(o.size()));
      scale.canonicalize();
    }
    std::vector<Cyclotomic> vals;
    for (int c = 0; c < cc.count(); ++c) vals.push_back(Cyclotomic::from_counts(p, counts[c]) * scale);
    S.chars.emplace_back(in.group, std::move(vals));
    S.labels.push_back(space.is_pattern() ? functional_from_coords(space, rep).to_string(*space.field()) : coords_label(rep));
  }
  canonicalize(S);
  return S;
}

SCTheory sct_algebra_group(const MatrixGroupPtr& G) {
  const auto gens = generator_matrices(*G);
  return sct_from_orbits({G, two_sided_action(G->space(), gens, gens), two_sided_action(G->space(), gens, {}), true,
                          "algebra(" + G->describe() + ")"});
}

SCTheory sct_ideal(const IdealSubgroup& H, Side side) {
  if (H.side != Side::TwoSided && side != H.side)
    throw Error(Errc::SideMismatch, std::string("ideal is ") + side_name(H.side) + ", requested " + side_name(side));
  const auto gg = generator_matrices(*H.parent);
  const auto hg = generator_matrices(*H.group);
  const LieSpace& h = H.space();
  OrbitSctInput in{H.group, {}, {}, true, std::string("ideal(") + side_name(side) + "," + H.group->describe() + ")"};
  if (side == Side::Left) {
    in.full = two_sided_action(h, gg, hg);
    in.partial = two_sided_action(h, gg, {});
  } else if (side == Side::Right) {
    in.full = two_sided_action(h, hg, gg);
    in.partial = two_sided_action(h, {}, gg);
  } else {
    in.full = two_sided_action(h, gg, gg);
    in.partial = two_sided_action(h, gg, {});
  }
  return sct_from_orbits(in);
}

SCTheory sct_supernormal(const MatrixGroupPtr& G, const IdealSubgroup& K) {
  if (K.side != Side::TwoSided) throw Error(Errc::NotAnIdeal, "supernormal theory needs a two-sided ideal");
  require_same(G, K.parent);
  const auto gg = generator_matrices(*G);
  const auto full = two_sided_action(K.space(), gg, gg);
  return sct_from_orbits({K.group, full, full, false, "supernormal(" + G->describe() + "," + K.group->describe() + ")"});
}

SCTheory sct_conjugation(const GroupPtr& G, const GroupPtr& N) {
  const std::vector<int> emb = embedding(*N, *G);
  std::vector<int> back(G->size(), -1);
  for (int n = 0; n < N->size(); ++n) back[emb[n]] = n;
  const auto& gens = G->generators();
  for (int s : gens)
    for (int n = 0; n < N->size(); ++n)
      if (back[G->conj(s, emb[n])] < 0) throw Error(Errc::NotNormal, N->describe() + " in " + G->describe());

  SCTheory S;
  S.group = N;
  S.provenance = "conjugation(" + G->describe() + "," + N->describe() + ")";
  UnionFind elems(N->size());
  for (int s : gens)
    for (int n = 0; n < N->size(); ++n) elems.unite(n, back[G->conj(s, emb[n])]);
  S.blocks = elems.groups();

  const auto T = irr_table(N);
  UnionFind irr(T->size());
  for (int s : gens) {
    const int si = G->inv(s);
    for (int i = 0; i < T->size(); ++i) {
      const auto moved = ClassFunction::from_elements(N, [&](int n) { return T->chars[i](back[G->conj(si, emb[n])]); });
      for (int j = 0; j < T->size(); ++j)
        if (T->chars[j] == moved) irr.unite(i, j);
    }
  }
  for (const auto& orbit : irr.groups()) {
    ClassFunction s = ClassFunction::constant(N, 0);
    for (int i : orbit) s = s + T->chars[i];
    S.chars.push_back(s);
  }
  canonicalize(S);
  return S;
}

SCTheory sct_direct_product(const SCTheory& S1, const SCTheory& S2) {
  auto P = ProductGroup::create(S1.group, S2.group);
  SCTheory S;
  S.group = P;
  S.provenance = "direct(" + S1.provenance + "," + S2.provenance + ")";
  for (const auto& a : S1.blocks)
    for (const auto& b : S2.blocks) {
      std::vector<int> block;
      for (int x : a)
        for (int y : b) block.push_back(P->pair(x, y));
      S.blocks.push_back(std::move(block));
    }
  for (std::size_t i = 0; i < S1.chars.size(); ++i)
    for (std::size_t j = 0; j < S2.chars.size(); ++j) {
      const auto& f = S1.chars[i];
      const auto& g = S2.chars[j];
      S.chars.push_back(ClassFunction::from_elements(P, [&](int x) { return f(P->left_of(x)) * g(P->right_of(x)); }));
      std::string l1 = i < S1.labels.size() ? S1.labels[i] : "";
      std::string l2 = j < S2.labels.size() ? S2.labels[j] : "";
      S.labels.push_back(l1 + " x " + l2);
    }
  canonicalize(S);
  return S;
}

SCTheory sct_star_product(const SCTheory& SN, const SCTheory& SQ, const GroupPtr& G, const std::vector<int>& pi) {
  const std::vector<int> emb = embedding(*SN.group, *G);
  std::vector<int> block_in_n(G->size(), -1);
  const auto bN = SN.block_of();
  for (int n = 0; n < SN.group->size(); ++n) block_in_n[emb[n]] = bN[n];
  for (int s : G->generators())
    for (int n = 0; n < SN.group->size(); ++n) {
      const int m = G->conj(s, emb[n]);
      if (block_in_n[m] < 0) throw Error(Errc::NotNormal, SN.group->describe() + " in " + G->describe());
      if (block_in_n[m] != bN[n]) throw Error(Errc::NotInvariant, "superclasses of the normal subgroup are not G-stable");
    }
  for (int g = 0; g < G->size(); ++g)
    if ((pi[g] == 0) != (block_in_n[g] >= 0)) throw Error(Errc::NotQuotient, "kernel of the projection is not the normal subgroup");
  const auto bQ = SQ.block_of();
  if (SQ.blocks[bQ[0]].size() != 1) throw Error(Errc::BadArgument, "quotient theory does not have {1} as a superclass");

  SCTheory S;
  S.group = G;
  S.provenance = "star(" + SN.provenance + "," + SQ.provenance + ")";
  for (const auto& b : SN.blocks) {
    std::vector<int> block;
    for (int n : b) block.push_back(emb[n]);
    S.blocks.push_back(std::move(block));
  }
  std::vector<std::vector<int>> lifted(SQ.size());
  for (int g = 0; g < G->size(); ++g)
    if (block_in_n[g] < 0) lifted[bQ[pi[g]]].push_back(g);
  for (auto& b : lifted)
    if (!b.empty()) S.blocks.push_back(std::move(b));
  for (std::size_t i = 0; i < SQ.chars.size(); ++i) {
    S.chars.push_back(inflate(SQ.chars[i], G, pi));
    S.labels.push_back("Inf " + (i < SQ.labels.size() ? SQ.labels[i] : std::to_string(i)));
  }
  for (std::size_t i = 0; i < SN.chars.size(); ++i) {
    if (is_constant(SN.chars[i])) continue;
    S.chars.push_back(induce(SN.chars[i], G));
    S.labels.push_back("Ind " + (i < SN.labels.size() ? SN.labels[i] : std::to_string(i)));
  }
  canonicalize(S);
  return S;
}

SCTheory sct_join(const SCTheory& S1, const SCTheory& S2) {
  require_same(S1.group, S2.group);
  const GroupPtr& G = S1.group;
  UnionFind elems(G->size());
  for (const auto* S : {&S1, &S2})
    for (const auto& b : S->blocks)
      for (int x : b) elems.unite(b.front(), x);
  const auto T = irr_table(G);
  UnionFind irr(T->size());
  for (const auto* S : {&S1, &S2})
    for (const auto& chi : S->chars) {
      const ClassFunction c = transfer(chi, G);
      int first = -1;
      for (int i = 0; i < T->size(); ++i)
        if (!cf_inner(c, T->chars[i]).is_zero()) {
          if (first < 0) first = i;
          irr.unite(first, i);
        }
    }
  SCTheory S;
  S.group = G;
  S.provenance = "join(" + S1.provenance + "," + S2.provenance + ")";
  S.blocks = elems.groups();
  for (const auto& z : irr.groups()) {
    S.chars.push_back(irr_block_sum(*T, z));
    S.scale.push_back(Cyclotomic(1));
  }
  canonicalize(S);
  return S;
}

SCTheory sct_coarsest(const GroupPtr& G) {
  SCTheory S;
  S.group = G;
  S.provenance = "coarsest(" + G->describe() + ")";
  S.blocks.push_back({0});
  std::vector<int> rest;
  for (int g = 1; g < G->size(); ++g) rest.push_back(g);
  if (!rest.empty()) S.blocks.push_back(rest);
  S.chars.push_back(ClassFunction::constant(G, 1));
  if (!rest.empty()) S.chars.push_back(ClassFunction::regular(G) - ClassFunction::constant(G, 1));
  canonicalize(S);
  return S;
}

SCTheory sct_finest(const GroupPtr& G) {
  SCTheory S;
  S.group = G;
  S.provenance = "classes(" + G->describe() + ")";
  S.blocks = G->classes().classes;
  S.chars = irr_table(G)->chars;
  canonicalize(S);
  return S;
}

SCTheory sct_from_characters(const GroupPtr& G, std::vector<ClassFunction> chars, std::string provenance,
                             std::vector<std::string> labels) {
  SCTheory S;
  S.group = G;
  S.provenance = std::move(provenance);
  S.chars = std::move(chars);
  S.labels = std::move(labels);
  const auto& cc = G->classes();
  std::map<std::vector<std::string>, int> index;
  for (int c = 0; c < cc.count(); ++c) {
    std::vector<std::string> key;
    for (const auto& chi : S.chars) key.push_back(chi.on_class(c).to_string());
    auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(S.blocks.size()));
    if (fresh) S.blocks.emplace_back();
    auto& b = S.blocks[it->second];
    b.insert(b.end(), cc.classes[c].begin(), cc.classes[c].end());
  }
  canonicalize(S);
  return S;
}

SCTheory sct_from_irr_blocks(const GroupPtr& G, const std::vector<std::vector<int>>& irr_blocks, std::string provenance) {
  const auto T = irr_table(G);
  std::vector<ClassFunction> chars;
  for (const auto& z : irr_blocks) chars.push_back(irr_block_sum(*T, z));
  SCTheory S = sct_from_characters(G, std::move(chars), std::move(provenance));
  for (auto& s : S.scale) s = Cyclotomic(1);
  return S;
}

namespace {

using i64 = long long;

i64 pw(i64 b, i64 e, i64 l) {
  i64 r = 1;
  b %= l;
  while (e) {
    if (e & 1) r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}

i64 mpz_mod(const mpz_class& z, i64 l) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(l));
  return r.get_si();
}

int exact_rank(std::vector<std::vector<Cyclotomic>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int s = r;
    while (s < rows && a[s][c].is_zero()) ++s;
    if (s == rows) continue;
    std::swap(a[s], a[r]);
    const Cyclotomic iv = a[r][c].inverse();
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Cyclotomic f = a[i][c] * iv;
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int cf_rank(const std::vector<ClassFunction>& fs) {
  if (fs.empty()) return 0;
  const int rows = static_cast<int>(fs.size());
  const int cols = static_cast<int>(fs[0].values().size());
  long L = 1;
  for (const auto& f : fs)
    for (const auto& v : f.values()) L = lcm_int(L, v.conductor());
  const i64 l = prime_one_mod(L, 1L << 30);
  // element of order L
  i64 z = 0;
  for (i64 g = 2; g < l && !z; ++g) {
    const i64 c = pw(g, (l - 1) / L, l);
    bool ok = true;
    for (long q = 2; q <= L && ok; ++q)
      if (L % q == 0 && pw(c, L / q, l) == 1) ok = false;
    if (ok) z = c;
  }
  bool usable = true;
  std::vector<std::vector<i64>> a(rows, std::vector<i64>(cols, 0));
  for (int i = 0; i < rows && usable; ++i)
    for (int j = 0; j < cols && usable; ++j) {
      const Cyclotomic& v = fs[i].on_class(j);
      const i64 step = pw(z, L / v.conductor(), l);
      i64 acc = 0, zp = 1;
      for (const auto& c : v.coeffs()) {
        const i64 den = mpz_mod(c.get_den(), l);
        if (den == 0) usable = false;
        acc = (acc + mpz_mod(c.get_num(), l) * pw(den, l - 2, l) % l * zp) % l;
        zp = zp * step % l;
      }
      a[i][j] = acc;
    }
  if (usable) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int s = r;
      while (s < rows && a[s][c] == 0) ++s;
      if (s == rows) continue;
      std::swap(a[s], a[r]);
      const i64 iv = pw(a[r][c], l - 2, l);
      for (int i = r + 1; i < rows; ++i) {
        if (!a[i][c]) continue;
        const i64 f = a[i][c] * iv % l;
        for (int j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % l + l) % l;
      }
      ++r;
    }
    if (r == std::min(rows, cols)) return r;
  }
  std::vector<std::vector<Cyclotomic>> e(rows);
  for (int i = 0; i < rows; ++i) e[i] = fs[i].values();
  return exact_rank(std::move(e));
}

SctReport sct_verify(const SCTheory& S) {
  SctReport r;
  const FiniteGroup& G = *S.group;
  const auto& cc = G.classes();
  auto fail = [&](bool ok, const char* what) {
    if (!ok) r.failures.push_back(what);
    return ok;
  };

  r.counts_equal = fail(S.blocks.size() == S.chars.size(), "counts differ");

  std::vector<int> owner(G.size(), -1);
  bool partition = true;
  for (int b = 0; b < S.size(); ++b)
    for (int g : S.blocks[b]) {
      if (g < 0 || g >= G.size() || owner[g] >= 0) partition = false;
      else owner[g] = b;
    }
  partition = partition && std::none_of(owner.begin(), owner.end(), [](int b) { return b < 0; });
  r.blocks_partition = fail(partition, "blocks not a partition of the group");
  if (!partition) return r;

  bool closed = true;
  for (const auto& cls : cc.classes)
    for (int g : cls)
      if (owner[g] != owner[cls.front()]) closed = false;
  r.blocks_class_closed = fail(closed, "blocks not class-closed");

  bool constant = true;
  for (const auto& chi : S.chars) {
    require_same(chi.group(), S.group);
    for (const auto& b : S.blocks)
      for (int g : b)
        if (chi(g) != chi(b.front())) constant = false;
  }
  r.constant_on_blocks = fail(constant, "characters not constant on blocks");

  r.identity_block_alone = fail(S.blocks[owner[0]].size() == 1, "identity is not a block by itself");
  r.trivial_present = fail(std::any_of(S.chars.begin(), S.chars.end(),
                                       [](const ClassFunction& c) { return is_constant(c) && !c.is_zero(); }),
                           "no character is a multiple of the trivial character");

  const auto T = irr_table(S.group);
  r.constituents_partition = fail(constituent_partition(S.chars, *T).partition, "constituent sets do not partition Irr");

  bool span = false;
  const int rank = cf_rank(S.chars);
  if (constant && closed && rank == S.size()) {
    span = true;
  } else {
    // span is closed iff no product raises the rank
    span = true;
    for (std::size_t i = 0; i < S.chars.size() && span; ++i)
      for (std::size_t j = i; j < S.chars.size() && span; ++j) {
        auto ext = S.chars;
        ext.push_back(cf_pointwise(S.chars[i], S.chars[j]));
        if (cf_rank(ext) != rank) span = false;
      }
  }
  r.span_closed = fail(span, "span not closed under pointwise product");

  bool orth = true;
  for (std::size_t i = 0; i < S.chars.size() && orth; ++i)
    for (std::size_t j = i + 1; j < S.chars.size() && orth; ++j)
      if (!cf_inner(S.chars[i], S.chars[j]).is_zero()) orth = false;
  r.orthogonal = fail(orth, "characters not orthogonal");
  return r;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::StrictlyFiner: return "strictly_finer";
    case Relation::StrictlyCoarser: return "strictly_coarser";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

bool refines(const SCTheory& a, const SCTheory& b) {
  const auto ob = b.block_of();
  for (const auto& block : a.blocks)
    for (int g : block)
      if (ob[g] != ob[block.front()]) return false;
  return true;
}

bool positive_multiple(const ClassFunction& a, const ClassFunction& b) {
  const auto c = a.ratio_to(b);
  return c && c->is_rational() && c->rational() > 0;
}

}  // namespace

Relation sct_compare(const SCTheory& S1, const SCTheory& S2) {
  require_same(S1.group, S2.group);
  const bool f = refines(S1, S2);
  const bool c = refines(S2, S1);
  if (f && c) {
    if (S1.chars.size() != S2.chars.size()) return Relation::Incomparable;
    for (const auto& x : S1.chars) {
      const ClassFunction xt = transfer(x, S2.group);
      if (std::none_of(S2.chars.begin(), S2.chars.end(), [&](const ClassFunction& y) { return positive_multiple(xt, y); }))
        return Relation::Incomparable;
    }
    return Relation::Equal;
  }
  if (f) return Relation::StrictlyFiner;
  if (c) return Relation::StrictlyCoarser;
  return Relation::Incomparable;
}

SCTheory sct_normalized(const SCTheory& S) {
  SCTheory out = S;
  const auto T = irr_table(S.group);
  for (std::size_t i = 0; i < S.chars.size(); ++i) {
    std::vector<int> parts;
    for (int j = 0; j < T->size(); ++j)
      if (!cf_inner(S.chars[i], T->chars[j]).is_zero()) parts.push_back(j);
    if (parts.empty()) {
      out.scale[i].reset();
      continue;
    }
    const Cyclotomic c = cf_inner(S.chars[i], T->chars[parts[0]]) / T->chars[parts[0]].degree();
    const ClassFunction sigma = irr_block_sum(*T, parts);
    if (sigma * c == S.chars[i]) {
      out.chars[i] = sigma;
      out.scale[i] = c;
    } else {
      out.scale[i].reset();
    }
  }
  return out;
}

}  // namespace scharc
