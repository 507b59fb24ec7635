#include "eap/fpmat.hpp"

#include <algorithm>

namespace eap {

FpMat FpMat::identity(int p, int n) {
  FpMat m(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::scalar(int p, int n, int c) {
  FpMat m(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = static_cast<uint8_t>(((c % p) + p) % p);
  return m;
}

FpMat fp_mul(const FpMat& A, const FpMat& B) {
  FpMat C(A.p, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      int aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < A.n; ++j)
        C.at(i, j) = static_cast<uint8_t>((C.at(i, j) + aik * B.at(k, j)) % A.p);
    }
  return C;
}

FpVec fp_apply(const FpMat& A, const FpVec& v) {
  FpVec out(A.n, 0);
  for (int i = 0; i < A.n; ++i) {
    int s = 0;
    for (int j = 0; j < A.n; ++j) s += A.at(i, j) * v[j];
    out[i] = static_cast<uint8_t>(s % A.p);
  }
  return out;
}

namespace {
int modinv(int a, int p) {
  int r = 1, b = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
}  // namespace

int fp_det(const FpMat& A) {
  FpMat W = A;
  int p = A.p, n = A.n;
  int det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (W.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(W.at(piv, j), W.at(c, j));
      det = (p - det % p) % p;
    }
    int d = W.at(c, c);
    det = det * d % p;
    int dinv = modinv(d, p);
    for (int r = c + 1; r < n; ++r) {
      int f = W.at(r, c) * dinv % p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j)
        W.at(r, j) = static_cast<uint8_t>(((W.at(r, j) - f * W.at(c, j)) % p + p) % p);
    }
  }
  return det;
}

FpMat fp_inv(const FpMat& A) {
  int p = A.p, n = A.n;
  FpMat W = A;
  FpMat Inv = FpMat::identity(p, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (W.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMatrix("matrix over F_p is singular");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(W.at(piv, j), W.at(c, j));
        std::swap(Inv.at(piv, j), Inv.at(c, j));
      }
    int dinv = modinv(W.at(c, c), p);
    for (int j = 0; j < n; ++j) {
      W.at(c, j) = static_cast<uint8_t>(W.at(c, j) * dinv % p);
      Inv.at(c, j) = static_cast<uint8_t>(Inv.at(c, j) * dinv % p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      int f = W.at(r, c);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        W.at(r, j) = static_cast<uint8_t>(((W.at(r, j) - f * W.at(c, j)) % p + p) % p);
        Inv.at(r, j) = static_cast<uint8_t>(((Inv.at(r, j) - f * Inv.at(c, j)) % p + p) % p);
      }
    }
  }
  return Inv;
}

FpVec fp_add(const FpVec& a, const FpVec& b, int p) {
  FpVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint8_t>((a[i] + b[i]) % p);
  return out;
}

FpVec fp_sub(const FpVec& a, const FpVec& b, int p) {
  FpVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<uint8_t>(((a[i] - b[i]) % p + p) % p);
  return out;
}

std::vector<FpMat> enumerate_gl(int d, int p, uint64_t cap) {
  if (d == 0) return {FpMat(p, 0)};
  // |GL_d(p)| bound first, then the p^(d^2) scan bound
  uint64_t order = 1, pd = 1;
  for (int i = 0; i < d; ++i) pd *= static_cast<uint64_t>(p);
  uint64_t pi = 1;
  for (int i = 0; i < d; ++i) {
    order *= pd - pi;
    pi *= static_cast<uint64_t>(p);
    if (order > cap) throw CapacityExceeded("GL_d(p) too large to enumerate");
  }
  uint64_t total = 1;
  for (int i = 0; i < d * d; ++i) {
    total *= static_cast<uint64_t>(p);
    if (total > 64u * cap) throw CapacityExceeded("GL_d(p) scan too large");
  }
  std::vector<FpMat> out;
  out.reserve(order);
  FpMat m(p, d);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int i = 0; i < d * d; ++i) {
      m.a[i] = static_cast<uint8_t>(c % p);
      c /= p;
    }
    if (fp_det(m) != 0) out.push_back(m);
  }
  return out;
}

int fp_rank(const std::vector<FpVec>& vecs, int p) {
  if (vecs.empty()) return 0;
  std::vector<FpVec> rows = vecs;
  size_t d = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < d; ++c) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    int dinv = modinv(rows[rank][c], p);
    for (size_t j = 0; j < d; ++j)
      rows[rank][j] = static_cast<uint8_t>(rows[rank][j] * dinv % p);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      int f = rows[r][c];
      if (f == 0) continue;
      for (size_t j = 0; j < d; ++j)
        rows[r][j] = static_cast<uint8_t>(((rows[r][j] - f * rows[rank][j]) % p + p) % p);
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

uint32_t fp_pack(const FpVec& v, int p) {
  uint32_t code = 0;
  for (size_t i = v.size(); i-- > 0;) code = code * static_cast<uint32_t>(p) + v[i];
  return code;
}

FpVec fp_unpack(uint32_t code, int d, int p) {
  FpVec v(d);
  for (int i = 0; i < d; ++i) {
    v[i] = static_cast<uint8_t>(code % p);
    code /= static_cast<uint32_t>(p);
  }
  return v;
}

}  // namespace eap
