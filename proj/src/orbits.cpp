#include "scharc/orbits.hpp"

#include <algorithm>
#include <unordered_set>

#include "scharc/config.hpp"
#include "scharc/error.hpp"

namespace scharc {

std::string DualFunctional::to_string(const Field& F) const {
  std::string s;
  for (const auto& [arc, c] : coeffs) {
    if (c.code == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != F.one()) s += F.to_string(c) + "*";
    s += "x" + std::to_string(arc.first) + std::to_string(arc.second);
  }
  return s.empty() ? "0" : s;
}

FpVec functional_coords(const LieSpace& space, const DualFunctional& lambda) {
  const Field& F = *space.field();
  FpVec mu(space.dim(), 0);
  for (int t = 0; t < space.dim(); ++t) {
    const SqMat b = space.basis_element(t);
    FqScalar v = F.zero();
    for (const auto& [arc, c] : lambda.coeffs) v = F.add(v, F.mul(c, b.at(arc.first - 1, arc.second - 1)));
    mu[t] = F.trace(v);
  }
  return mu;
}

DualFunctional functional_from_coords(const LieSpace& space, const FpVec& mu) {
  if (!space.is_pattern()) throw Error(Errc::BadArgument, "F_q functionals are only recovered on pattern spaces");
  const Field& F = *space.field();
  DualFunctional out;
  for (auto [i, j] : space.support_arcs()) {
    // coordinates t with label (i, j, c) give Tr(a t^c) for the wanted coefficient a.
    for (FqScalar a : F.elements()) {
      bool ok = true;
      for (int t = 0; t < space.dim() && ok; ++t) {
        const auto& l = space.label(t);
        if (l.i != i || l.j != j) continue;
        std::vector<int> basis(F.k(), 0);
        basis[l.c] = 1;
        ok = F.trace(F.mul(a, F.from_coeffs(basis))) == mu[t];
      }
      if (ok) {
        if (a.code) out.coeffs[{i + 1, j + 1}] = a;
        break;
      }
    }
  }
  return out;
}

std::vector<FpMat> transposes(const std::vector<FpMat>& gens) {
  std::vector<FpMat> out;
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

Orbit orbit_of(const std::vector<FpMat>& gens, const FpVec& start) {
  const int p = gens.empty() ? 2 : gens.front().p();
  std::unordered_set<std::uint64_t> seen{encode_coords(start, p)};
  std::vector<FpVec> frontier{start};
  while (!frontier.empty()) {
    std::vector<FpVec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        FpVec w = g.apply(v);
        if (seen.insert(encode_coords(w, p)).second) next.push_back(std::move(w));
      }
    if (seen.size() > enumeration_cap()) require_within_cap(seen.size(), "orbit");
    frontier = std::move(next);
  }
  Orbit o{{seen.begin(), seen.end()}};
  std::sort(o.points.begin(), o.points.end());
  return o;
}

std::vector<Orbit> orbit_decomposition(const std::vector<FpMat>& gens, int p, int dim) {
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), dim);
  require_within_cap(total, "orbit decomposition");
  std::vector<char> seen(total, 0);
  std::vector<Orbit> out;
  for (std::uint64_t key = 0; key < total; ++key) {
    if (seen[key]) continue;
    Orbit o;
    o.points.push_back(key);
    seen[key] = 1;
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      const FpVec v = decode_coords(o.points[i], p, dim);
      for (const auto& g : gens) {
        const std::uint64_t w = encode_coords(g.apply(v), p);
        if (!seen[w]) {
          seen[w] = 1;
          o.points.push_back(w);
        }
      }
    }
    std::sort(o.points.begin(), o.points.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<SqMat> generator_matrices(const MatrixGroup& G) {
  if (G.kind() == SpringerKind::Algebra && G.space().is_pattern()) return algebra_generators(G.space());
  std::vector<SqMat> out;
  for (int g : G.generators()) out.push_back(*G.matrix(g));
  return out;
}

std::vector<FpMat> two_sided_action(const LieSpace& space, const std::vector<SqMat>& L, const std::vector<SqMat>& R) {
  std::vector<FpMat> out;
  for (const auto& g : L) out.push_back(left_mult_matrix(space, g));
  for (const auto& h : R) out.push_back(right_mult_matrix(space, h));
  return out;
}

FpVec act_dual(const LieSpace& space, const SqMat& g, const FpVec& mu, const SqMat& h) {
  const SqMat gi = g.inverse();
  const SqMat hi = h.inverse();
  FpVec out(space.dim());
  for (int t = 0; t < space.dim(); ++t) {
    const auto c = space.try_coords(gi * space.basis_element(t) * hi);
    if (!c) throw Error(Errc::SpaceNotClosed, "dual action leaves the space");
    out[t] = dot_mod(mu, *c, space.p());
  }
  return out;
}

DualFunctional act_dual(const LieSpace& space, const SqMat& g, const DualFunctional& lambda, const SqMat& h) {
  return functional_from_coords(space, act_dual(space, g, functional_coords(space, lambda), h));
}

Orbit orbit_two_sided(const LieSpace& space, const std::vector<SqMat>& left, const FpVec& mu,
                      const std::vector<SqMat>& right) {
  return orbit_of(transposes(two_sided_action(space, left, right)), mu);
}

Orbit orbit_element(const LieSpace& space, const std::vector<SqMat>& left, const FpVec& x,
                    const std::vector<SqMat>& right) {
  return orbit_of(two_sided_action(space, left, right), x);
}

LieSpace stabilizer_sided(const LieSpace& h, const LieSpace& a, const FpVec& mu, Side side) {
  const int p = h.p();
  FpMat m(p, a.dim(), h.dim());
  for (int s = 0; s < h.dim(); ++s) {
    const SqMat y = h.basis_element(s);
    for (int t = 0; t < a.dim(); ++t) {
      const SqMat x = a.basis_element(t);
      const auto c = a.try_coords(side == Side::Left ? y * x : x * y);
      if (!c) throw Error(Errc::SpaceNotClosed, "acting algebra does not preserve the space");
      m.at(t, s) = dot_mod(mu, *c, p);
    }
  }
  std::vector<FpVec> vecs;
  for (const auto& sol : m.nullspace()) {
    FpVec amb(h.ambient_dim(), 0);
    for (int s = 0; s < h.dim(); ++s)
      for (int u = 0; u < h.ambient_dim(); ++u) amb[u] = (amb[u] + sol[s] * h.basis()[s][u]) % p;
    vecs.push_back(amb);
  }
  return LieSpace::from_ambient_vectors(h.field(), h.n(), vecs);
}

}  // namespace scharc
