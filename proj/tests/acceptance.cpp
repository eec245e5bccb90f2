// One line per acceptance criterion. Exit status is 0 when every criterion
// passes, or fails only through the recorded counterexamples to the SCT(n,k)
// family claims (recomputed here); --strict turns any FAIL into exit 1.

#include <algorithm>
#include <chrono>
#include <deque>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "scharc/classical.hpp"
#include "scharc/littlegroups.hpp"
#include "scharc/partitions.hpp"
#include "scharc/workbench.hpp"

using namespace scharc;

namespace {

struct Line {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> deviations;  // failing sub-claims that match a recorded counterexample

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

std::deque<SCTheory> g_built;

const SCTheory& keep(SCTheory S) {
  g_built.push_back(std::move(S));
  return g_built.back();
}

std::string group_tag(int n, int q) { return "UT_" + std::to_string(n) + "(F_" + std::to_string(q) + ")"; }

Line criterion1() {
  Line L;
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    const auto& S = keep(sct_algebra_group(ut_group(n, field_new(q, 1))));
    const auto rep = sct_verify(S);
    std::string why;
    for (const auto& f : rep.failures) why += " " + f;
    L.check(rep.ok() && rep.blocks_class_closed && rep.span_closed, group_tag(n, q) + why);
  }
  return L;
}

Line criterion2() {
  Line L;
  const std::map<int, std::uint64_t> bell{{3, 5}, {4, 15}, {5, 52}};
  for (int n = 1; n <= 5; ++n) {
    const auto orbits = sct_algebra_group(ut_group(n, field_new(2, 1))).size();
    const auto parts = count_fq_set_partitions(n, 2);
    L.check(static_cast<std::uint64_t>(orbits) == parts, "n=" + std::to_string(n) + " orbits vs partitions");
    L.check(enumerate_fq_set_partitions(n, *field_new(2, 1)).size() == parts, "enumeration n=" + std::to_string(n));
    if (bell.count(n)) L.check(parts == bell.at(n), "Bell(" + std::to_string(n) + ")");
  }
  const int q = 3;
  const auto orbits = sct_algebra_group(ut_group(3, field_new(q, 1))).size();
  L.check(orbits == 1 + 3 * (q - 1) + (q - 1) * (q - 1), "UT_3(F_3) orbits vs 1 + 3(q-1) + (q-1)^2");
  L.check(count_fq_set_partitions(3, q) == 11, "F_3-set partitions of [3]");
  L.notes.push_back("Bell 5,15,52 and 11 reproduced");
  return L;
}

const std::vector<std::tuple<int, int, int>> kSplits{{3, 1, 2}, {3, 2, 2}, {4, 1, 2}, {4, 2, 2}, {4, 3, 2}, {4, 2, 3}};

Line criterion3() {
  Line L;
  for (auto [n, k, q] : kSplits) {
    const auto G = ut_group(n, field_new(q, 1));
    const auto split = split_semidirect(G, k);
    const auto s = make_setting(split);
    const auto& S = keep(sch_build(s, hmap_maximal(split, s)));
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q) + ")";
    L.check(sct_verify(S).ok(), "verify " + tag);
    const auto rep = little_groups_equivalence(G, k);
    L.check(rep.relation == Relation::Equal, "maximal sch vs algebra " + tag);
    L.check(rep.all_sizes_equal && !rep.orbits.empty(), "orbit sizes " + tag);
  }
  return L;
}

Line criterion4() {
  Line L;
  for (auto [n, k, q] : kSplits) {
    const auto G = ut_group(n, field_new(q, 1));
    const auto split = split_semidirect(G, k);
    const auto s = make_setting(split);
    const auto top = top_member_sct(split);
    const auto& minimal = keep(sch_build(s, hmap_minimal(s, top)));
    const auto& star = keep(sct_star_product(sct_conjugation(G, split.N), top, G, projection_to_h(s)));
    L.check(sct_compare(minimal, star) == Relation::Equal,
            "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q) + ")");
  }
  return L;
}

Line criterion5() {
  Line L;
  std::mt19937 rng(20261016);
  const auto F2 = field_new(2, 1);
  const auto F3 = field_new(3, 1);
  std::vector<SemidirectSetting> settings;
  for (auto [G, k] : {std::pair{ut_group(3, F2), 1}, std::pair{ut_group(3, F3), 2}, std::pair{ut_group(4, F2), 1},
                      std::pair{ut_group(4, F2), 2}, std::pair{ut_group(4, F2), 3}, std::pair{ut_group(4, F3), 1},
                      std::pair{ut_group(4, F3), 2}})
    settings.push_back(make_setting(split_semidirect(G, k)));

  auto random_mu = [&](const SemidirectSetting& s) {
    FpVec mu(s.dim());
    for (auto& v : mu) v = static_cast<int>(rng() % s.p());
    return mu;
  };
  auto random_sub = [&](const SemidirectSetting& s, const FpVec& mu) -> GroupPtr {
    const auto I = s.inertia(mu);
    std::vector<int> gens;
    const int count = static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) gens.push_back(I[rng() % I.size()]);
    return SubGroup::generated(s.H, gens, "R");
  };
  auto random_irr = [&](const GroupPtr& K) {
    const auto T = irr_table(K);
    return T->chars[rng() % T->chars.size()];
  };

  const int trials = 120;
  int induction = 0, extension = 0, mackey = 0;
  for (int t = 0; t < trials; ++t) {
    const auto& s = settings[t % settings.size()];
    const FpVec mu1 = random_mu(s), mu2 = random_mu(s);
    const GroupPtr K1 = random_sub(s, mu1), K2 = random_sub(s, mu2);
    const auto chi1 = random_irr(K1), chi2 = random_irr(K2);

    const auto I = s.inertia(mu1);
    const GroupPtr IH = static_cast<int>(I.size()) == s.H->size() ? GroupPtr(s.H) : SubGroup::create(s.H, I, "I");
    induction += induction_compat_check(s, mu1, chi1, IH);

    std::vector<ClassFunction> linear;
    for (const auto& c : irr_table(K1)->chars)
      if (c.degree() == Cyclotomic(1)) linear.push_back(c);
    extension += extension_independence_check(s, mu1, K1, linear[rng() % linear.size()]);

    mackey += mackey_product(s, mu1, chi1, mu2, chi2).equal;
  }
  L.check(induction == trials, "induction compatibility " + std::to_string(induction) + "/" + std::to_string(trials));
  L.check(extension == trials, "extension independence " + std::to_string(extension) + "/" + std::to_string(trials));
  L.check(mackey == trials, "Mackey " + std::to_string(mackey) + "/" + std::to_string(trials));
  L.notes.push_back(std::to_string(trials) + " instances each, seed 20261016");
  return L;
}

Line criterion6() {
  Line L;
  const auto F3 = field_new(3, 1);
  const auto F9 = field_new(3, 2);
  for (auto [kind, n, F] : {std::tuple{ClassicalKind::Orthogonal, 2, F3}, std::tuple{ClassicalKind::Orthogonal, 3, F3},
                            std::tuple{ClassicalKind::Symplectic, 2, F3}, std::tuple{ClassicalKind::Unitary, 2, F9}}) {
    const auto U = build_classical(kind, n, F);
    const auto& S = keep(sct_classical(U));
    L.check(sct_verify(S).ok(), "verify " + U.name());
    const auto lg = sct_classical_littlegroups(U);
    keep(lg.sct);
    L.check(lg.hchoice_valid, "H_psi conditions " + U.name() + " " + lg.hchoice_failure);
    L.check(lg.relation == Relation::Equal, "orbit theory vs little groups " + U.name());
    bool anti = true;
    for (int a = 0; a < U.U->size(); ++a) {
      const SqMat x = cayley(*U.U->matrix(a));
      anti = anti && U.dagger.apply(x) == -x;
    }
    L.check(anti, "f(u)^dagger = -f(u) on " + U.name());
    L.check(twist_theta(S, 2).blocks == S.blocks, "second theta " + U.name());
  }
  return L;
}

Line criterion7() {
  Line L;
  const auto F2 = field_new(2, 1);
  const auto F3 = field_new(3, 1);
  for (auto [n, F] : {std::pair{4, F2}, std::pair{5, F2}, std::pair{4, F3}}) {
    const std::string g = group_tag(n, F->q());
    const auto A = indexed_algebra_theory(n, F);
    const auto alg = sct_algebra_group(A.group);
    std::vector<SCTheory> nk;
    for (int k = 0; k <= n; ++k) {
      const auto r = sct_nk(n, k, F);
      const auto& S = keep(r.sct);
      const std::string tag = g + " k=" + std::to_string(k);
      L.check(sct_verify(S).ok(), "verify " + tag);
      L.check(r.hchoice_valid, "H_psi conditions " + tag);
      L.check(r.swapped_matches, "merged and little groups builds agree " + tag);
      std::size_t knn = 0;
      for (const auto& p : A.parts) knn += is_k_nonnesting(p, k);
      L.check(S.size() == static_cast<int>(knn), "count = #k-nonnesting " + tag);

      const Relation rel = sct_compare(S, alg);
      if (k == 0 || k == n) {
        L.check(rel == Relation::Equal, "SCT(n,0) = SCT(n,n) = algebra " + tag);
      } else if (rel != Relation::StrictlyCoarser) {
        // Recorded counterexample: every partition k-nonnesting forces equality.
        const bool forced = knn == A.parts.size() && rel == Relation::Equal;
        L.check(forced, "strictly coarser " + tag);
        if (forced) L.deviations.push_back("SCT(" + std::to_string(n) + "," + std::to_string(k) + ") = algebra over F_" + std::to_string(F->q()));
      }

      int mismatches = 0;
      for (const auto& eta : A.parts) {
        const auto chi = chi_nk(A, eta, k, NkCoupling::Swapped);
        for (std::size_t v = 0; v < A.parts.size(); ++v)
          mismatches += chi_nk_value(A, eta, A.parts[v], k, NkCoupling::Swapped) != chi(A.reps[v]);
      }
      L.check(mismatches == 0, "closed form values " + tag);
      nk.push_back(S);
    }

    const Relation r12 = sct_compare(nk[1], nk[2]);
    if (r12 != Relation::Incomparable) {
      L.check(n == 4 && r12 == Relation::StrictlyCoarser, "SCT(n,1) vs SCT(n,2) incomparable " + g);
      if (n == 4 && r12 == Relation::StrictlyCoarser) L.deviations.push_back("SCT(4,1) < SCT(4,2) over F_" + std::to_string(F->q()));
    }

    if (n == 4 && F->q() == 3) continue;  // joins over F_2 only
    const auto S1 = sct_nS(n, {1}, F);
    const auto S12 = sct_nS(n, {1, 2}, F);
    const auto S123 = sct_nS(n, {1, 2, 3}, F);
    for (const auto& [a, b, name] : {std::tuple{&S1, &S12, "{1} vs {1,2}"}, std::tuple{&S12, &S123, "{1,2} vs {1,2,3}"}}) {
      const Relation r = sct_compare(*a, *b);
      if (r == Relation::StrictlyFiner) continue;
      // Recorded counterexamples: the larger set adds a theory already coarser than the join.
      const bool known = r == Relation::Equal && (n == 4 || std::string(name) == "{1,2} vs {1,2,3}");
      L.check(known, std::string("S-chain ") + name + " " + g + " is " + relation_name(r));
      if (known) L.deviations.push_back(std::string("SCT(") + std::to_string(n) + "," + name + ") equal");
    }
    const auto& all = keep(sct_nS(n, [&] {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      return v;
    }(), F));
    std::size_t nn = 0;
    for (const auto& p : A.parts) nn += is_nonnesting(p);
    L.check(all.size() == static_cast<int>(nn), "SCT(n,[n]) = #nonnesting " + g);
  }
  L.notes.push_back("characters merge along eta-tilde, superclasses along eta-bar");
  return L;
}

Line criterion8(const std::filesystem::path& jobs_dir) {
  Line L;
  int orth_fail = 0, regular_fail = 0;
  for (const auto& S : g_built) {
    for (std::size_t i = 0; i < S.chars.size(); ++i)
      for (std::size_t j = i + 1; j < S.chars.size(); ++j) orth_fail += !cf_inner(S.chars[i], S.chars[j]).is_zero();
    const auto N = sct_normalized(S);
    ClassFunction sum = ClassFunction::constant(S.group, 0);
    for (const auto& c : N.chars) sum = sum + c;
    regular_fail += sum != ClassFunction::regular(S.group);
  }
  L.check(orth_fail == 0, "orthogonality (" + std::to_string(orth_fail) + " pairs)");
  L.check(regular_fail == 0, "normalized sum = regular (" + std::to_string(regular_fail) + " theories)");
  L.notes.push_back(std::to_string(g_built.size()) + " theories");

  std::vector<std::filesystem::path> jobs;
  for (const auto& e : std::filesystem::directory_iterator(jobs_dir))
    if (e.path().extension() == ".json") jobs.push_back(e.path());
  std::sort(jobs.begin(), jobs.end());
  const auto cache_dir = std::filesystem::temp_directory_path() / ("scharc-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(cache_dir);
  const Cache cache(cache_dir);
  int differ = 0, failed = 0, hits = 0;
  for (const auto& path : jobs) {
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto job = JobSpec::from_json(parse_json_text(text));
    const auto a = run_job(job, nullptr);
    const auto b = run_job(job, &cache);
    const auto c = run_job(job, &cache);
    hits += c.cache_hit;
    failed += a.exit_code != 0;
    differ += !(a.artifacts == b.artifacts && b.artifacts == c.artifacts);
    if (a.exit_code != 0) L.notes.push_back("job failed: " + path.filename().string());
  }
  std::filesystem::remove_all(cache_dir);
  L.check(!jobs.empty(), "jobs found in " + jobs_dir.string());
  L.check(failed == 0, std::to_string(failed) + " jobs with failing assertions");
  L.check(differ == 0, std::to_string(differ) + " jobs with differing artifacts");
  L.check(hits == static_cast<int>(jobs.size()), "cache hits " + std::to_string(hits));
  L.notes.push_back(std::to_string(jobs.size()) + " jobs byte-identical across fresh, cached and repeated runs");
  return L;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::filesystem::path jobs_dir = SCHARC_JOBS_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") strict = true;
    else jobs_dir = a;
  }

  const std::vector<std::pair<const char*, std::function<Line()>>> criteria{
      {"SCT axioms of the algebra group theory of UT_n(F_q)", criterion1},
      {"superclass counts vs F_q-set partitions", criterion2},
      {"maximal little groups theory = algebra group theory, orbit sizes", criterion3},
      {"minimal little groups theory = star product", criterion4},
      {"semidirect character calculus on random instances", criterion5},
      {"classical groups: orbit theory = little groups theory", criterion6},
      {"SCT(n,k) family", criterion7},
      {"orthogonality, regular character, determinism", [&] { return criterion8(jobs_dir); }},
  };
  int hard_failures = 0, deviations = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Line L;
    try {
      L = criteria[i].second();
    } catch (const std::exception& e) {
      L.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = L.pass && L.deviations.empty();
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    for (const auto& n : L.notes) os << "; " << n;
    if (!L.deviations.empty()) {
      os << "; claim false at:";
      for (const auto& d : L.deviations) os << " [" << d << "]";
      if (L.pass) os << " (all other sub-checks pass)";
    }
    os << " (" << static_cast<int>(secs * 10) / 10.0 << "s)";
    std::cout << os.str() << std::endl;
    hard_failures += !L.pass;
    deviations += !L.deviations.empty();
  }
  if (hard_failures) return 1;
  return strict && deviations ? 1 : 0;
}
