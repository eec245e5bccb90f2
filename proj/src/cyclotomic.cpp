#include "scharc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "scharc/error.hpp"

namespace scharc {

namespace {

struct CycloData {
  std::vector<long> phi_poly;               // monic, degree phi(m)
  std::vector<std::vector<long>> powers;    // powers[e] = reduced zeta^e, e in [0, m)
};

std::mutex g_cyclo_mutex;
std::map<int, CycloData>& cyclo_cache() {
  static std::map<int, CycloData> cache;
  return cache;
}

std::vector<long> poly_exact_div(std::vector<long> a, const std::vector<long>& b) {
  // b monic; exact division over Z.
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

const CycloData& data_for(int m) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto& cache = cyclo_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed without recursion
  // into the locked cache.
  std::map<int, std::vector<long>> phis;
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    std::vector<long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (auto& [e, pe] : phis)
      if (d % e == 0) num = poly_exact_div(num, pe);
    phis[d] = num;
  }
  CycloData data;
  data.phi_poly = phis[m];
  const int phi = static_cast<int>(data.phi_poly.size()) - 1;
  data.powers.assign(m, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  if (phi > 0) cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    data.powers[e] = cur;
    // multiply by x and reduce
    std::vector<long> next(phi, 0);
    const long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < phi; ++i) next[i] -= top * data.phi_poly[i];
    cur = next;
  }
  return cache.emplace(m, std::move(data)).first->second;
}

// Solves A x = b over Q (A: rows x cols). Returns false if inconsistent.
bool solve_rational(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    const mpq_class inv = 1 / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const mpq_class f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

long gcd_int(long a, long b) { return std::gcd(a, b); }
long lcm_int(long a, long b) { return std::lcm(a, b); }

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int m) { return data_for(m).phi_poly; }

Cyclotomic::Cyclotomic() : m_(1), c_{0} {}
Cyclotomic::Cyclotomic(long v) : m_(1), c_{mpq_class(v)} {}
Cyclotomic::Cyclotomic(const mpq_class& v) : m_(1), c_{v} { c_[0].canonicalize(); }

void Cyclotomic::reduce_raw(std::vector<mpq_class>& raw) const {
  const CycloData& d = data_for(m_);
  const std::size_t phi = d.phi_poly.size() - 1;
  std::vector<mpq_class> out(phi);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const auto& pw = d.powers[e % m_];
    for (std::size_t i = 0; i < phi; ++i)
      if (pw[i]) out[i] += raw[e] * pw[i];
  }
  raw = std::move(out);
}

Cyclotomic Cyclotomic::root(int m, long e) {
  if (m < 1) throw Error(Errc::BadArgument, "conductor must be positive");
  const CycloData& d = data_for(m);
  long r = e % m;
  if (r < 0) r += m;
  std::vector<mpq_class> c(d.powers[r].begin(), d.powers[r].end());
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::from_counts(int m, const std::vector<long>& counts) {
  const CycloData& d = data_for(m);
  const std::size_t phi = d.phi_poly.size() - 1;
  std::vector<long> acc(phi, 0);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (!counts[e]) continue;
    const auto& pw = d.powers[e % m];
    for (std::size_t i = 0; i < phi; ++i) acc[i] += counts[e] * pw[i];
  }
  std::vector<mpq_class> c(acc.begin(), acc.end());
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<mpq_class> coeffs) {
  Cyclotomic x(m, {});
  x.reduce_raw(coeffs);
  x.c_ = std::move(coeffs);
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational() const { return c_.empty() ? mpq_class(0) : c_[0]; }

bool Cyclotomic::has_integral_coeffs() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::embedded(int L) const {
  if (L == m_) return *this;
  if (L % m_) throw Error(Errc::BadArgument, "embedding target must be a multiple of the conductor");
  const int step = L / m_;
  std::vector<mpq_class> raw(static_cast<std::size_t>(L));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return from_coeffs(L, std::move(raw));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const int L = static_cast<int>(lcm_int(m_, o.m_));
  Cyclotomic a = embedded(L);
  Cyclotomic b = o.embedded(L);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.m_ == 1) return *this * o.c_[0];
  if (m_ == 1) return o * c_[0];
  const int L = static_cast<int>(lcm_int(m_, o.m_));
  const Cyclotomic a = embedded(L);
  const Cyclotomic b = o.embedded(L);
  std::vector<mpq_class> raw(a.c_.size() + b.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic r(L, {});
  r.reduce_raw(raw);
  r.c_ = std::move(raw);
  return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
  Cyclotomic r = *this;
  mpq_class t = s;
  t.canonicalize();
  for (auto& v : r.c_) v *= t;
  return r;
}

Cyclotomic operator*(const mpq_class& r, const Cyclotomic& x) { return x * r; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Errc::BadArgument, "inverse of zero cyclotomic");
  if (m_ == 1) return Cyclotomic(mpq_class(1 / c_[0]));
  const std::size_t phi = c_.size();
  // Column j of the multiplication matrix is (this * z^j).
  std::vector<std::vector<mpq_class>> A(phi, std::vector<mpq_class>(phi));
  for (std::size_t j = 0; j < phi; ++j) {
    Cyclotomic col = *this * root(m_, static_cast<long>(j));
    for (std::size_t i = 0; i < phi; ++i) A[i][j] = col.c_[i];
  }
  std::vector<mpq_class> b(phi);
  b[0] = 1;
  std::vector<mpq_class> x;
  if (!solve_rational(A, b, x)) throw Error(Errc::BadArgument, "singular cyclotomic");
  return Cyclotomic(m_, std::move(x));
}

Cyclotomic Cyclotomic::galois(long t) const {
  if (gcd_int(t, m_) != 1) throw Error(Errc::BadArgument, "Galois exponent must be a unit");
  std::vector<mpq_class> raw(static_cast<std::size_t>(m_));
  long tt = t % m_;
  if (tt < 0) tt += m_;
  for (std::size_t i = 0; i < c_.size(); ++i) raw[(i * tt) % m_] += c_[i];
  return from_coeffs(m_, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  const int L = static_cast<int>(lcm_int(m_, o.m_));
  return embedded(L).c_ == o.embedded(L).c_;
}

Cyclotomic Cyclotomic::minimized() const {
  if (m_ == 1) return *this;
  for (int d = 1; d < m_; ++d) {
    if (m_ % d) continue;
    const int phid = euler_phi(d);
    const int step = m_ / d;
    std::vector<std::vector<mpq_class>> A(c_.size(), std::vector<mpq_class>(phid));
    for (int j = 0; j < phid; ++j) {
      Cyclotomic col = root(m_, static_cast<long>(j) * step);
      for (std::size_t i = 0; i < c_.size(); ++i) A[i][j] = col.c_[i];
    }
    std::vector<mpq_class> x;
    if (solve_rational(A, c_, x)) return Cyclotomic(d, std::move(x));
  }
  return *this;
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic v = minimized();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.c_.size(); ++i) {
    mpq_class c = v.c_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic theta(const Field& F, FqScalar a) { return Cyclotomic::root(F.p(), F.trace(a)); }

}  // namespace scharc
