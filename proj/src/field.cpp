#include "scharc/field.hpp"

#include <algorithm>
#include <sstream>

#include "scharc/error.hpp"

namespace scharc {

namespace {

using Poly = std::vector<int>;  // low-to-high over Z_p

int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - static_cast<long>(lead) * b[i], p);
    trim(a);
  }
  return a;
}

// Monic polynomials of degree d, enumerated by their low coefficients.
bool has_factor_of_degree(const Poly& f, int d, int p) {
  long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long c = 0; c < count; ++c) {
    Poly g(d + 1, 0);
    long v = c;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<int>(v % p);
      v /= p;
    }
    g[d] = 1;
    if (poly_rem(f, g, p).empty()) return true;
  }
  return false;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> split_prime_power(int q) {
  if (q < 2) throw Error(Errc::NonPrime, "q = " + std::to_string(q) + " is not a prime power");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error(Errc::NonPrime, "q = " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

FieldPtr Field::create(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::BadArgument, "extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 1024) throw Error(Errc::BadArgument, "field order above 1024 is not supported");

  Poly m;
  if (modulus) {
    m = *modulus;
    for (int& c : m) c = mod(c, p);
    if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
      throw Error(Errc::BadArgument, "modulus must be monic of degree k");
  } else if (k == 1) {
    m = {0, 1};
  } else if (k == 2) {
    if (p == 2) {
      m = {1, 1, 1};
    } else {
      int s = 1;
      auto is_sq = [p](int v) {
        for (int x = 0; x < p; ++x)
          if ((x * x) % p == v) return true;
        return false;
      };
      while (is_sq(s)) ++s;
      m = {mod(-s, p), 0, 1};
    }
  } else {
    throw Error(Errc::NoDefaultModulus, "k = " + std::to_string(k) + " needs an explicit modulus");
  }
  for (int d = 1; 2 * d <= k; ++d)
    if (has_factor_of_degree(m, d, p)) throw Error(Errc::ReducibleModulus, "modulus has a factor of degree " + std::to_string(d));

  return std::shared_ptr<const Field>(new Field(p, k, std::move(m)));
}

FieldPtr field_new(int p, int k, std::optional<std::vector<int>> modulus) {
  return Field::create(p, k, std::move(modulus));
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) q_ *= p_;
  const auto n = static_cast<std::size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  trace_.resize(n);

  std::vector<Poly> polys(n);
  for (std::size_t a = 0; a < n; ++a) {
    Poly c(k_, 0);
    std::size_t v = a;
    for (int i = 0; i < k_; ++i) {
      c[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    polys[a] = c;
  }
  auto encode = [this](const Poly& c) {
    std::uint32_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return code;
  };
  for (std::size_t a = 0; a < n; ++a) {
    Poly ng(k_);
    for (int i = 0; i < k_; ++i) ng[i] = mod(-polys[a][i], p_);
    neg_[a] = encode(ng);
    for (std::size_t b = 0; b < n; ++b) {
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * n + b] = encode(s);
      Poly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
      mul_[a * n + b] = encode(poly_rem(prod, modulus_, p_));
    }
  }
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) {
        inv_[a] = static_cast<std::uint32_t>(b);
        break;
      }
  for (std::size_t a = 0; a < n; ++a) {
    FqScalar x{static_cast<std::uint32_t>(a)};
    FqScalar s = x;
    FqScalar acc = x;
    for (int i = 1; i < k_; ++i) {
      s = pow(s, static_cast<std::uint64_t>(p_));
      acc = add(acc, s);
    }
    // The trace lies in the prime subfield, i.e. only its constant coefficient is set.
    trace_[a] = static_cast<int>(acc.code % p_);
  }
}

FqScalar Field::generator() const {
  if (k_ == 1) return from_int(-modulus_[0]);
  return {static_cast<std::uint32_t>(p_)};
}

FqScalar Field::from_int(long v) const { return {static_cast<std::uint32_t>(mod(v, p_))}; }

FqScalar Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw Error(Errc::BadArgument, "too many coefficients for field element");
  std::uint32_t code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) code = code * p_ + mod(coeffs[i], p_);
  return {code};
}

std::vector<int> Field::coeffs(FqScalar a) const {
  std::vector<int> c(k_);
  std::uint32_t v = a.code;
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(v % p_);
    v /= p_;
  }
  return c;
}

FqScalar Field::inv(FqScalar a) const {
  if (a.code == 0) throw Error(Errc::BadArgument, "division by zero in F_q");
  return {inv_[a.code]};
}

FqScalar Field::pow(FqScalar a, std::uint64_t e) const {
  FqScalar r = one();
  FqScalar b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqScalar Field::frobenius(FqScalar a, int j) const {
  for (int i = 0; i < j; ++i) a = pow(a, static_cast<std::uint64_t>(p_));
  return a;
}

int Field::trace(FqScalar a) const { return trace_[a.code]; }

bool Field::is_square(FqScalar a) const {
  for (int x = 0; x < q_; ++x) {
    FqScalar s{static_cast<std::uint32_t>(x)};
    if (mul(s, s) == a) return true;
  }
  return false;
}

std::string Field::to_string(FqScalar a) const {
  if (k_ == 1) return std::to_string(a.code);
  std::ostringstream os;
  auto c = coeffs(a);
  os << '[';
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::vector<FqScalar> Field::elements() const {
  std::vector<FqScalar> out(q_);
  for (int i = 0; i < q_; ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

}  // namespace scharc
