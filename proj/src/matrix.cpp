#include "eap/matrix.hpp"

#include <algorithm>

namespace eap {

Mat Mat::identity(const Field* F, int n) {
  Mat m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
  return m;
}

Mat Mat::diagonal(const Field* F, const std::vector<felem>& d) {
  Mat m(F, static_cast<int>(d.size()));
  for (int i = 0; i < m.n; ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::permutation(const Field* F, const std::vector<int>& sigma) {
  Mat m(F, static_cast<int>(sigma.size()));
  for (int i = 0; i < m.n; ++i) m.at(i, sigma[i]) = F->one();
  return m;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  const Field* F = A.F;
  Mat C(F, A.n);
  for (int i = 0; i < A.n; ++i) {
    for (int k = 0; k < A.n; ++k) {
      felem aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < A.n; ++j) {
        felem b = B.at(k, j);
        if (b == 0) continue;
        C.at(i, j) = F->add(C.at(i, j), F->mul(aik, b));
      }
    }
  }
  return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
  Mat C(A.F, A.n);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->add(A.a[i], B.a[i]);
  return C;
}

Mat mat_scale(const Mat& A, felem c) {
  Mat C(A.F, A.n);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->mul(A.a[i], c);
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat C(A.F, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

namespace {

// Gaussian elimination; returns (det, inverse?) in one pass.
std::pair<felem, std::optional<Mat>> gauss(const Mat& A, bool want_inv) {
  const Field* F = A.F;
  int n = A.n;
  Mat W = A;
  Mat Inv = Mat::identity(F, n);
  felem det = F->one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (W.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {F->zero(), std::nullopt};
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(W.a[static_cast<size_t>(piv) * n + j], W.a[static_cast<size_t>(col) * n + j]);
        std::swap(Inv.a[static_cast<size_t>(piv) * n + j], Inv.a[static_cast<size_t>(col) * n + j]);
      }
      det = F->neg(det);
    }
    felem d = W.at(col, col);
    det = F->mul(det, d);
    felem dinv = F->inv(d);
    for (int j = 0; j < n; ++j) {
      W.at(col, j) = F->mul(W.at(col, j), dinv);
      Inv.at(col, j) = F->mul(Inv.at(col, j), dinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      felem f = W.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        W.at(r, j) = F->sub(W.at(r, j), F->mul(f, W.at(col, j)));
        Inv.at(r, j) = F->sub(Inv.at(r, j), F->mul(f, Inv.at(col, j)));
      }
    }
  }
  if (want_inv) return {det, Inv};
  return {det, std::nullopt};
}

}  // namespace

felem mat_det(const Mat& A) { return gauss(A, false).first; }

Mat mat_inv(const Mat& A) {
  auto [det, inv] = gauss(A, true);
  if (det == 0) throw SingularMatrix("matrix is not invertible");
  return *inv;
}

Mat mat_pow(const Mat& A, int64_t k) {
  Mat base = k < 0 ? mat_inv(A) : A;
  int64_t e = k < 0 ? -k : k;
  Mat r = Mat::identity(A.F, A.n);
  while (e > 0) {
    if (e & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return r;
}

Mat mat_entrywise_pow(const Mat& A, int64_t qpow) {
  Mat C(A.F, A.n);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->pow(A.a[i], qpow);
  return C;
}

Mat block_diag(const Mat& M, int k) {
  Mat C(M.F, M.n * k);
  for (int b = 0; b < k; ++b)
    for (int i = 0; i < M.n; ++i)
      for (int j = 0; j < M.n; ++j)
        C.at(b * M.n + i, b * M.n + j) = M.at(i, j);
  return C;
}

Mat kron(const Mat& A, const Mat& B) {
  const Field* F = A.F;
  Mat C(F, A.n * B.n);
  for (int i1 = 0; i1 < A.n; ++i1)
    for (int j1 = 0; j1 < A.n; ++j1) {
      felem a = A.at(i1, j1);
      if (a == 0) continue;
      for (int i2 = 0; i2 < B.n; ++i2)
        for (int j2 = 0; j2 < B.n; ++j2) {
          felem b = B.at(i2, j2);
          if (b == 0) continue;
          C.at(i1 * B.n + i2, j1 * B.n + j2) = F->mul(a, b);
        }
    }
  return C;
}

bool ProjMat::is_identity() const {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != (i == j ? m.F->one() : m.F->zero())) return false;
  return true;
}

uint64_t ProjMat::hash() const {
  uint64_t h = 1469598103934665603ull;
  h = (h ^ static_cast<uint64_t>(m.n)) * 1099511628211ull;
  for (felem v : m.a) h = (h ^ v) * 1099511628211ull;
  return h;
}

ProjMat proj_normalize(const Mat& M) {
  felem lead = 0;
  for (felem v : M.a) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  if (lead == 0) throw SingularMatrix("zero matrix has no projective class");
  Mat C = lead == M.F->one() ? M : mat_scale(M, M.F->inv(lead));
  if (mat_det(C) == 0) throw SingularMatrix("matrix is not invertible");
  return ProjMat(std::move(C));
}

bool proj_eq(const ProjMat& a, const ProjMat& b) { return a == b; }

ProjMat proj_mul(const ProjMat& a, const ProjMat& b) {
  Mat c = mat_mul(a.m, b.m);
  felem lead = 0;
  for (felem v : c.a) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  if (lead != c.F->one()) c = mat_scale(c, c.F->inv(lead));
  return ProjMat(std::move(c));
}

ProjMat proj_inv(const ProjMat& a) { return proj_normalize(mat_inv(a.m)); }

ProjMat proj_conj(const ProjMat& g, const ProjMat& x) {
  return proj_mul(proj_mul(x, g), proj_inv(x));
}

int64_t elem_order(const ProjMat& g, int64_t cap) {
  if (cap < 1) throw InvalidConfig("order cap must be >= 1");
  ProjMat p = g;
  for (int64_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = proj_mul(p, g);
  }
  throw OrderExceedsCap("projective order exceeds cap");
}

GroupSpec GroupSpec::make(GroupForm form, int n, int64_t q) {
  if (n < 1) throw InvalidConfig("n must be >= 1");
  int64_t ell;
  int e;
  split_prime_power(q, ell, e);
  GroupSpec s;
  s.form = form;
  s.n = n;
  s.q = q;
  s.base_field = Field::make(ell, e);
  s.mat_field = form == GroupForm::linear ? s.base_field : Field::make(ell, 2 * e);
  return s;
}

uint64_t GroupSpec::order() const {
  return form == GroupForm::linear ? pgl_order(n, q) : pgu_order(n, q);
}

std::string GroupSpec::name() const {
  return (form == GroupForm::linear ? std::string("PGL_") : std::string("PGU_")) +
         std::to_string(n) + "(" + std::to_string(q) + ")";
}

Mat conj_transpose(const Mat& g, const GroupSpec& spec) {
  return mat_transpose(mat_entrywise_pow(g, spec.q));
}

bool unitary_check(const Mat& g, const GroupSpec& spec) {
  if (spec.form != GroupForm::unitary)
    throw InvalidConfig("unitary_check requires a unitary group spec");
  Mat m = mat_mul(conj_transpose(g, spec), g);
  return m == Mat::identity(g.F, g.n);
}

bool proj_unitary_check(const ProjMat& g, const GroupSpec& spec) {
  if (spec.form != GroupForm::unitary)
    throw InvalidConfig("unitary_check requires a unitary group spec");
  Mat m = mat_mul(conj_transpose(g.m, spec), g.m);
  felem c = m.at(0, 0);
  if (c == 0) return false;
  Mat target = mat_scale(Mat::identity(m.F, m.n), c);
  return m == target;
}

ProjMat steinberg(const ProjMat& g, const GroupSpec& spec) {
  if (spec.form == GroupForm::linear)
    return proj_normalize(mat_entrywise_pow(g.m, spec.q));
  return proj_normalize(mat_inv(conj_transpose(g.m, spec)));
}

ProjKey proj_key(const ProjMat& m) {
  int bits = 1;
  while ((1ll << bits) < m.m.F->q()) ++bits;
  if (bits * m.m.n * m.m.n > 128)
    throw CapExceeded("projective element does not pack into 128 bits");
  ProjKey k;
  int pos = 0;
  for (felem v : m.m.a) {
    if (pos + bits <= 64) {
      k.lo |= static_cast<uint64_t>(v) << pos;
    } else if (pos >= 64) {
      k.hi |= static_cast<uint64_t>(v) << (pos - 64);
    } else {
      k.lo |= static_cast<uint64_t>(v) << pos;
      k.hi |= static_cast<uint64_t>(v) >> (64 - pos);
    }
    pos += bits;
  }
  return k;
}

std::vector<ProjMat> proj_group_closure(const std::vector<ProjMat>& gens,
                                        uint64_t cap) {
  if (gens.empty()) return {};
  std::vector<ProjMat> elems;
  std::unordered_set<ProjKey, ProjKeyHash> seen;
  ProjMat id = proj_normalize(Mat::identity(gens[0].m.F, gens[0].m.n));
  elems.push_back(id);
  seen.insert(proj_key(id));
  size_t head = 0;
  while (head < elems.size()) {
    ProjMat a = elems[head++];
    for (const auto& g : gens) {
      ProjMat c = proj_mul(a, g);
      if (seen.insert(proj_key(c)).second) {
        if (elems.size() >= cap) throw CapExceeded("projective closure exceeds cap");
        elems.push_back(std::move(c));
      }
    }
  }
  return elems;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw CapacityExceeded("group order overflows 64 bits");
  return a * b;
}

namespace {
uint64_t upow(int64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, static_cast<uint64_t>(base));
  return r;
}
}  // namespace

uint64_t gl_order(int n, int64_t q) {
  // q^(n(n-1)/2) * prod (q^i - 1)
  uint64_t r = upow(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    r = checked_mul(r, upow(q, i) - 1);
  return r;
}

uint64_t gu_order(int n, int64_t q) {
  // q^(n(n-1)/2) * prod (q^i - (-1)^i)
  uint64_t r = upow(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    uint64_t t = upow(q, i);
    r = checked_mul(r, i % 2 == 0 ? t - 1 : t + 1);
  }
  return r;
}

uint64_t pgl_order(int n, int64_t q) { return gl_order(n, q) / (q - 1); }

uint64_t pgu_order(int n, int64_t q) { return gu_order(n, q) / (q + 1); }

uint64_t sp_order(int r2, int64_t p) {
  if (r2 == 0) return 1;
  if (r2 % 2 != 0) throw InvalidConfig("symplectic rank must be even");
  int r = r2 / 2;
  uint64_t out = upow(p, r * r);
  for (int i = 1; i <= r; ++i) out = checked_mul(out, upow(p, 2 * i) - 1);
  return out;
}

uint64_t so_order(int r2, int sign) {
  if (r2 % 2 != 0 || r2 <= 0) throw InvalidConfig("orthogonal rank must be even");
  int r = r2 / 2;
  // |O^±_{2r}(2)| = 2 * 2^(r(r-1)) * (2^r -+ sign) * prod_{i<r} (2^{2i} - 1)
  uint64_t out = 2;
  out = checked_mul(out, upow(2, r * (r - 1)));
  uint64_t t = upow(2, r);
  out = checked_mul(out, sign > 0 ? t - 1 : t + 1);
  for (int i = 1; i < r; ++i) out = checked_mul(out, upow(2, 2 * i) - 1);
  return out;
}

uint64_t gl_fp_order(int d, int64_t p) {
  if (d == 0) return 1;
  uint64_t out = 1;
  uint64_t pd = upow(p, d);
  uint64_t pi = 1;
  for (int i = 0; i < d; ++i) {
    out = checked_mul(out, pd - pi);
    pi = checked_mul(pi, static_cast<uint64_t>(p));
  }
  return out;
}

}  // namespace eap
