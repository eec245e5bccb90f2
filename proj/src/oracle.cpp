#include "scharc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "scharc/config.hpp"
#include "scharc/error.hpp"

namespace scharc {

namespace {

using i64 = long long;
using ModMat = std::vector<std::vector<i64>>;

i64 md(i64 a, i64 l) {
  a %= l;
  return a < 0 ? a + l : a;
}

i64 pw(i64 b, i64 e, i64 l) {
  i64 r = 1;
  b = md(b, l);
  while (e) {
    if (e & 1) r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}

i64 inv(i64 a, i64 l) { return pw(a, l - 2, l); }

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(ModMat& a, i64 l) {
  std::vector<int> piv;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int s = r;
    while (s < rows && a[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(a[s], a[r]);
    const i64 iv = inv(a[r][c], l);
    for (auto& v : a[r]) v = v * iv % l;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[r][j], l);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<std::vector<i64>> nullspace(ModMat a, int cols, i64 l) {
  const auto piv = rref(a, l);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<std::vector<i64>> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = md(-a[r][f], l);
    out.push_back(v);
  }
  return out;
}

// Characteristic polynomial det(xI - A), low to high, via Hessenberg form.
std::vector<i64> charpoly(ModMat a, i64 l) {
  const int n = static_cast<int>(a.size());
  for (int m = 1; m < n - 1; ++m) {
    int i = m + 1;
    while (i < n && a[i][m - 1] == 0) ++i;
    if (a[m][m - 1] == 0) {
      if (i == n) continue;
      std::swap(a[i], a[m]);
      for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][m]);
    }
    const i64 iv = inv(a[m][m - 1], l);
    for (int r = m + 1; r < n; ++r) {
      const i64 u = a[r][m - 1] * iv % l;
      if (!u) continue;
      for (int c = 0; c < n; ++c) a[r][c] = md(a[r][c] - u * a[m][c], l);
      for (int c = 0; c < n; ++c) a[c][m] = (a[c][m] + u * a[c][r]) % l;
    }
  }
  std::vector<std::vector<i64>> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<i64> next(m + 1, 0);
    // x * p[m-1] - a[m-1][m-1] * p[m-1]
    for (int i = 0; i < m; ++i) {
      next[i + 1] = (next[i + 1] + p[m - 1][i]) % l;
      next[i] = md(next[i] - a[m - 1][m - 1] * p[m - 1][i], l);
    }
    i64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = t * a[m - i][m - i - 1] % l;
      const i64 coef = t * a[m - i - 1][m - 1] % l;
      for (std::size_t j = 0; j < p[m - i - 1].size(); ++j) next[j] = md(next[j] - coef * p[m - i - 1][j], l);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<i64> roots(const std::vector<i64>& poly, i64 l) {
  std::vector<i64> out;
  for (i64 x = 0; x < l; ++x) {
    i64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % l;
    if (v == 0) out.push_back(x);
  }
  return out;
}

i64 primitive_root_of_order(i64 m, i64 l) {
  // element of exact order m in F_l^x
  std::vector<i64> primes;
  i64 r = m;
  for (i64 d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) primes.push_back(r);
  for (i64 g = 2; g < l; ++g) {
    const i64 z = pw(g, (l - 1) / m, l);
    bool ok = true;
    for (i64 q : primes)
      if (pw(z, m / q, l) == 1) ok = false;
    if (ok) return z;
  }
  throw Error(Errc::AssertionFailed, "no root of unity of the requested order");
}

struct Workspace {
  const FiniteGroup* G;
  int r;
  std::vector<ModMat> M;  // M[j][k][l] = c_{jkl}
  i64 l;
};

void split_space(const Workspace& w, std::vector<std::vector<i64>> basis, std::mt19937_64& rng,
                 std::vector<std::vector<i64>>& out, int depth = 0) {
  const int d = static_cast<int>(basis.size());
  const i64 l = w.l;
  if (d == 1) {
    out.push_back(basis[0]);
    return;
  }
  if (depth > 64) throw Error(Errc::AssertionFailed, "eigenspace splitting did not converge");
  auto piv = rref(basis, l);
  std::uniform_int_distribution<i64> coef(0, l - 1);
  std::vector<i64> mix(w.r);
  for (auto& c : mix) c = coef(rng);
  // M = sum_j mix_j M_j, acting on column vectors.
  auto apply = [&](const std::vector<i64>& v) {
    std::vector<i64> out_v(w.r, 0);
    for (int j = 0; j < w.r; ++j) {
      if (!mix[j]) continue;
      for (int k = 0; k < w.r; ++k) {
        i64 s = 0;
        for (int c = 0; c < w.r; ++c)
          if (w.M[j][k][c]) s = (s + w.M[j][k][c] * v[c]) % l;
        out_v[k] = (out_v[k] + mix[j] * s) % l;
      }
    }
    return out_v;
  };
  ModMat A(d, std::vector<i64>(d));
  for (int i = 0; i < d; ++i) {
    const auto mv = apply(basis[i]);
    for (int t = 0; t < d; ++t) A[t][i] = mv[piv[t]];
  }
  const auto poly = charpoly(A, l);
  const auto rs = roots(poly, l);
  if (rs.size() == 1) {
    split_space(w, std::move(basis), rng, out, depth + 1);
    return;
  }
  for (i64 lam : rs) {
    ModMat B = A;
    for (int i = 0; i < d; ++i) B[i][i] = md(B[i][i] - lam, l);
    std::vector<std::vector<i64>> sub;
    for (const auto& c : nullspace(B, d, l)) {
      std::vector<i64> v(w.r, 0);
      for (int i = 0; i < d; ++i)
        if (c[i])
          for (int t = 0; t < w.r; ++t) v[t] = (v[t] + c[i] * basis[i][t]) % l;
      sub.push_back(v);
    }
    split_space(w, std::move(sub), rng, out, depth + 1);
  }
}

std::mutex g_table_mutex;
std::map<const FiniteGroup*, std::pair<GroupPtr, std::shared_ptr<const IrrTable>>>& table_cache() {
  static std::map<const FiniteGroup*, std::pair<GroupPtr, std::shared_ptr<const IrrTable>>> cache;
  return cache;
}

// Lexicographic order on exact values embedded into a common conductor.
bool value_less(const ClassFunction& a, const ClassFunction& b, int m) {
  for (std::size_t c = 0; c < a.values().size(); ++c) {
    const auto x = a.on_class(static_cast<int>(c)).embedded(m).coeffs();
    const auto y = b.on_class(static_cast<int>(c)).embedded(m).coeffs();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

}  // namespace

long prime_one_mod(long m, long lower) {
  long l = (lower / m + 1) * m + 1;
  while (!is_prime(l)) l += m;
  return l;
}

const ConjClasses& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

std::shared_ptr<const IrrTable> irr_table(const GroupPtr& Gp) {
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = table_cache().find(Gp.get());
    if (it != table_cache().end()) return it->second.second;
  }
  const FiniteGroup& G = *Gp;
  require_within_cap(G.order(), "character table");
  G.ensure_tables();
  const auto& cc = G.classes();
  const int r = cc.count();
  const int e = G.exponent();
  const double bound = 2.0 * std::sqrt(static_cast<double>(G.order())) * static_cast<double>(G.order());
  const i64 l = prime_one_mod(e, std::max<long>(static_cast<long>(bound), 100));

  Workspace w{&G, r, std::vector<ModMat>(r, ModMat(r, std::vector<i64>(r, 0))), l};
  for (int c = 0; c < r; ++c) {
    const int z = cc.rep(c);
    for (int x = 0; x < G.size(); ++x) w.M[cc.class_of[x]][cc.class_of[G.mul(G.inv(x), z)]][c] += 1;
  }
  std::vector<std::vector<i64>> full(r, std::vector<i64>(r, 0));
  for (int i = 0; i < r; ++i) full[i][i] = 1;
  std::mt19937_64 rng(0x5c4a5c);
  std::vector<std::vector<i64>> vecs;
  split_space(w, full, rng, vecs);
  if (static_cast<int>(vecs.size()) != r) throw Error(Errc::AssertionFailed, "character count differs from class count");

  std::vector<int> inverse_class(r);
  for (int c = 0; c < r; ++c) inverse_class[c] = cc.class_of[G.inv(cc.rep(c))];
  const i64 z = primitive_root_of_order(e, l);

  auto table = std::make_shared<IrrTable>();
  table->group = Gp;
  table->exponent = e;
  table->prime = l;
  for (auto v : vecs) {
    const i64 s0 = inv(v[0], l);
    for (auto& x : v) x = x * s0 % l;
    i64 sum = 0;
    for (int c = 0; c < r; ++c)
      sum = (sum + v[c] * v[inverse_class[c]] % l * inv(static_cast<i64>(cc.size(c)) % l, l)) % l;
    const i64 d2 = static_cast<i64>(G.order()) % l * inv(sum, l) % l;
    const i64 d = std::llround(std::sqrt(static_cast<double>(d2)));
    if (d * d != d2) throw Error(Errc::AssertionFailed, "character degree is not an integer");
    std::vector<i64> val(r);
    for (int c = 0; c < r; ++c) val[c] = v[c] * d % l * inv(static_cast<i64>(cc.size(c)) % l, l) % l;
    std::vector<Cyclotomic> exact(r);
    for (int c = 0; c < r; ++c) {
      const int g = cc.rep(c);
      const int o = G.element_order(g);
      const i64 xi = pw(z, e / o, l);
      std::vector<long> counts(o, 0);
      std::vector<i64> powers(o);
      int gt = 0;
      for (int t = 0; t < o; ++t) {
        powers[t] = val[cc.class_of[gt]];
        gt = G.mul(gt, g);
      }
      const i64 io = inv(o, l);
      for (int k = 0; k < o; ++k) {
        i64 a = 0;
        for (int t = 0; t < o; ++t) a = (a + powers[t] * pw(xi, static_cast<i64>(o - (static_cast<i64>(k) * t) % o) % o, l)) % l;
        a = a * io % l;
        if (a > d) throw Error(Errc::AssertionFailed, "eigenvalue multiplicity out of range");
        counts[k] = static_cast<long>(a);
      }
      exact[c] = Cyclotomic::from_counts(o, counts);
    }
    table->chars.emplace_back(Gp, std::move(exact));
  }
  std::sort(table->chars.begin(), table->chars.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    const bool ta = std::all_of(a.values().begin(), a.values().end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
    const bool tb = std::all_of(b.values().begin(), b.values().end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
    if (ta != tb) return ta;
    const mpq_class da = a.degree().rational(), db = b.degree().rational();
    if (da != db) return da < db;
    return value_less(a, b, e);
  });
  std::lock_guard<std::mutex> lock(g_table_mutex);
  table_cache()[Gp.get()] = {Gp, table};
  return table;
}

ConstituentReport constituent_partition(const std::vector<ClassFunction>& X, const IrrTable& T) {
  ConstituentReport rep;
  std::vector<int> owner(T.size(), 0);
  for (const auto& chi : X) {
    std::vector<int> s;
    for (int i = 0; i < T.size(); ++i)
      if (!cf_inner(chi, T.chars[i]).is_zero()) {
        s.push_back(i);
        owner[i]++;
      }
    rep.sets.push_back(std::move(s));
  }
  rep.partition = std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; });
  return rep;
}

}  // namespace scharc
