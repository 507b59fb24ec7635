#include "eap/field.hpp"

#include <algorithm>
#include <numeric>

namespace eap {

namespace {

constexpr int64_t kMaxQ = 1 << 20;

// Polynomial arithmetic over F_ell on coefficient vectors, little-endian.
using Poly = std::vector<int64_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int64_t ell) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % ell;
  }
  // reduce by the monic modulus
  int deg_m = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(prod.size()) - 1; i >= deg_m; --i) {
    int64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < deg_m; ++j) {
      prod[i - deg_m + j] = ((prod[i - deg_m + j] - c * mod[j]) % ell + ell) % ell;
    }
  }
  prod.resize(deg_m);
  return prod;
}

Poly poly_powmod(Poly base, int64_t k, const Poly& mod, int64_t ell) {
  Poly r{1};
  r.resize(mod.size() - 1, 0);
  base.resize(mod.size() - 1, 0);
  while (k > 0) {
    if (k & 1) r = poly_mulmod(r, base, mod, ell);
    base = poly_mulmod(base, base, mod, ell);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int64_t ell) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    int64_t lead = b.back();
    int64_t lead_inv = 1;
    {  // inverse of lead mod ell
      int64_t t = lead % ell, r = 1, e = ell - 2;
      while (e > 0) {
        if (e & 1) r = r * t % ell;
        t = t * t % ell;
        e >>= 1;
      }
      lead_inv = r;
    }
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      int64_t c = r.back() * lead_inv % ell;
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        r[shift + i] = ((r[shift + i] - c * b[i]) % ell + ell) % ell;
      poly_trim(r);
      if (r.size() < b.size()) break;
    }
    a = b;
    b = r;
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree e over F_ell.
bool poly_irreducible(const Poly& f, int64_t ell) {
  int e = static_cast<int>(f.size()) - 1;
  if (e == 1) return true;
  Poly x{0, 1};
  // x^(ell^e) == x mod f
  Poly xe = x;
  for (int i = 0; i < e; ++i) xe = poly_powmod(xe, ell, f, ell);
  Poly diff = xe;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % ell + ell) % ell;
  poly_trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(ell^(e/p)) - x, f) == 1 for every prime p | e
  for (auto [pr, mult] : factorize(e)) {
    (void)mult;
    int d = e / static_cast<int>(pr);
    Poly xd = x;
    for (int i = 0; i < d; ++i) xd = poly_powmod(xd, ell, f, ell);
    Poly g = xd;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = ((g[1] - 1) % ell + ell) % ell;
    poly_trim(g);
    Poly gc = poly_gcd(f, g, ell);
    if (gc.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int m = 0;
      while (n % d == 0) {
        n /= d;
        ++m;
      }
      out.emplace_back(d, m);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void split_prime_power(int64_t q, int64_t& ell, int& e) {
  if (q < 2) throw InvalidConfig("q must be a prime power >= 2");
  auto f = factorize(q);
  if (f.size() != 1) throw InvalidConfig("q is not a prime power");
  ell = f[0].first;
  e = f[0].second;
}

std::shared_ptr<const Field> Field::make(int64_t ell, int degree) {
  if (!is_prime(ell))
    throw NonPrimeCharacteristic("field characteristic must be prime");
  if (degree < 1) throw InvalidConfig("field degree must be >= 1");
  int64_t q = 1;
  for (int i = 0; i < degree; ++i) {
    q *= ell;
    if (q > kMaxQ) throw CapacityExceeded("field size exceeds 2^20");
  }

  auto F = std::shared_ptr<Field>(new Field());
  F->ell_ = ell;
  F->e_ = degree;
  F->q_ = q;

  // Least monic irreducible modulus: scan coefficient vectors with the
  // leading coefficients most significant, constant term least.
  {
    Poly best;
    int64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= ell;
    for (int64_t code = 0; code < count && best.empty(); ++code) {
      Poly f(degree + 1, 0);
      f[degree] = 1;
      int64_t c = code;
      // code digits from the high coefficient down, so increasing code is
      // lexicographic order on (c_{e-1}, ..., c_0)
      for (int i = degree - 1; i >= 0; --i) {
        int64_t base = 1;
        for (int j = 0; j < i; ++j) base *= ell;
        f[i] = c / base;
        c %= base;
      }
      if (degree == 1 || poly_irreducible(f, ell)) best = f;
    }
    F->modulus_.resize(degree + 1);
    for (int i = 0; i <= degree; ++i) F->modulus_[i] = static_cast<int>(best[i]);
  }

  // Least primitive element, probing with table-free arithmetic.
  {
    auto fac = factorize(q - 1);
    felem g = 0;
    for (felem cand = (q == 2 ? 1 : 2); cand < static_cast<felem>(q); ++cand) {
      bool prim = true;
      for (auto [pr, mult] : fac) {
        (void)mult;
        felem t = 1, b = cand;
        int64_t k = (q - 1) / pr;
        while (k > 0) {
          if (k & 1) t = F->mul_poly(t, b);
          b = F->mul_poly(b, b);
          k >>= 1;
        }
        if (t == 1) {
          prim = false;
          break;
        }
      }
      if (prim) {
        g = cand;
        break;
      }
    }
    F->gen_ = g;
    F->exp_.resize(q - 1);
    F->log_.assign(q, -1);
    felem cur = 1;
    for (int64_t i = 0; i < q - 1; ++i) {
      F->exp_[i] = cur;
      F->log_[cur] = i;
      cur = F->mul_poly(cur, g);
    }
  }

  if (q <= 1024) {
    F->add_table_.resize(q * q);
    for (felem a = 0; a < q; ++a)
      for (felem b = 0; b < q; ++b) F->add_table_[a * q + b] = F->add_slow(a, b);
  }
  return F;
}

felem Field::add_slow(felem a, felem b) const {
  if (ell_ == 2) return a ^ b;
  felem out = 0;
  int64_t base = 1;
  for (int i = 0; i < e_; ++i) {
    int64_t da = (a / base) % ell_;
    int64_t db = (b / base) % ell_;
    out += static_cast<felem>(((da + db) % ell_) * base);
    base *= ell_;
  }
  return out;
}

felem Field::add(felem a, felem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
  return add_slow(a, b);
}

felem Field::neg(felem a) const {
  if (ell_ == 2) return a;
  felem out = 0;
  int64_t base = 1;
  for (int i = 0; i < e_; ++i) {
    int64_t da = (a / base) % ell_;
    out += static_cast<felem>(((ell_ - da) % ell_) * base);
    base *= ell_;
  }
  return out;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_poly(felem a, felem b) const {
  if (a == 0 || b == 0) return 0;
  Poly pa(e_), pb(e_), pm(e_ + 1);
  int64_t base = 1;
  for (int i = 0; i < e_; ++i) {
    pa[i] = (a / base) % ell_;
    pb[i] = (b / base) % ell_;
    base *= ell_;
  }
  for (int i = 0; i <= e_; ++i) pm[i] = modulus_[i];
  Poly pr = poly_mulmod(pa, pb, pm, ell_);
  felem out = 0;
  base = 1;
  for (int i = 0; i < e_; ++i) {
    out += static_cast<felem>(pr[i] * base);
    base *= ell_;
  }
  return out;
}

felem Field::mul(felem a, felem b) const {
  if (a == 0 || b == 0) return 0;
  int64_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

felem Field::inv(felem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  int64_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

felem Field::pow(felem a, int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw DivisionByZero("negative power of zero");
    return 0;
  }
  int64_t m = q_ - 1;
  int64_t l = (log_[a] % m) * static_cast<__int128>(k % m) % m;
  l = ((l % m) + m) % m;
  return exp_[l];
}

felem Field::frobenius(felem a, int64_t k) const {
  if (a == 0) return 0;
  // exponent ell^k mod (q-1)
  int64_t m = q_ - 1;
  int64_t ex = 1, b = ell_ % m, kk = k;
  while (kk > 0) {
    if (kk & 1) ex = static_cast<int64_t>(static_cast<__int128>(ex) * b % m);
    b = static_cast<int64_t>(static_cast<__int128>(b) * b % m);
    kk >>= 1;
  }
  return pow(a, ex);
}

std::vector<int> Field::coeffs(felem a) const {
  std::vector<int> c(e_);
  int64_t base = 1;
  for (int i = 0; i < e_; ++i) {
    c[i] = static_cast<int>((a / base) % ell_);
    base *= ell_;
  }
  return c;
}

felem Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != e_)
    throw InvalidConfig("coefficient vector length must equal field degree");
  felem out = 0;
  int64_t base = 1;
  for (int i = 0; i < e_; ++i) {
    int64_t d = ((c[i] % ell_) + ell_) % ell_;
    out += static_cast<felem>(d * base);
    base *= ell_;
  }
  return out;
}

felem Field::from_int(int64_t v) const {
  int64_t d = ((v % ell_) + ell_) % ell_;
  return static_cast<felem>(d);
}

felem Field::root_of_unity(int64_t p) const {
  if ((q_ - 1) % p != 0)
    throw NoSuchRoot("p does not divide q-1, no primitive p-th root");
  return exp_[(q_ - 1) / p];
}

int64_t Field::elem_mul_order(felem a) const {
  if (a == 0) throw DivisionByZero("order of zero");
  int64_t m = q_ - 1;
  int64_t l = log_[a];
  if (l == 0) return 1;
  int64_t g = std::gcd(l, m);
  return m / g;
}

int64_t Field::dlog(felem a) const {
  if (a == 0) throw DivisionByZero("log of zero");
  return log_[a];
}

std::vector<felem> Field::kth_roots(felem t, int64_t k) const {
  std::vector<felem> out;
  if (t == 0) {
    out.push_back(0);
    return out;
  }
  // solve k*x = L mod (q-1)
  int64_t m = q_ - 1;
  int64_t L = log_[t];
  int64_t g = std::gcd(k % m == 0 ? m : k % m, m);
  if (g == 0) g = m;
  if (L % g != 0) return out;
  // one solution of (k/g) x = (L/g) mod (m/g)
  int64_t m2 = m / g, k2 = (k % m) / g, L2 = L / g;
  // inverse of k2 mod m2 by extended Euclid
  int64_t a0 = k2 % m2, b0 = m2, x0 = 1, x1 = 0;
  if (m2 == 1) {
    a0 = 0;
    x0 = 0;
  }
  while (b0 != 0 && m2 != 1) {
    int64_t qt = a0 / b0;
    a0 -= qt * b0;
    std::swap(a0, b0);
    x0 -= qt * x1;
    std::swap(x0, x1);
  }
  int64_t kinv = ((x0 % m2) + m2) % m2;
  int64_t base = m2 == 1 ? 0 : (static_cast<__int128>(L2 % m2) * kinv) % m2;
  for (int64_t j = 0; j < g; ++j) out.push_back(exp_[(base + j * m2) % m]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eap
