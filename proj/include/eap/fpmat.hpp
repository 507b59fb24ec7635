#ifndef EAP_FPMAT_HPP
#define EAP_FPMAT_HPP

#include <cstdint>
#include <vector>

#include "eap/errors.hpp"

namespace eap {

// Vector over F_p, entries 0..p-1.
using FpVec = std::vector<uint8_t>;

/// Square matrix over the prime field F_p. Used for weight-space symmetry
/// groups and the component-group action, where p stays tiny.
struct FpMat {
  int p = 2;
  int n = 0;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(int prime, int dim) : p(prime), n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static FpMat identity(int p, int n);
  static FpMat scalar(int p, int n, int c);

  bool operator==(const FpMat& o) const { return p == o.p && n == o.n && a == o.a; }
  bool operator<(const FpMat& o) const { return a < o.a; }
};

FpMat fp_mul(const FpMat& A, const FpMat& B);
FpVec fp_apply(const FpMat& A, const FpVec& v);
int fp_det(const FpMat& A);
FpMat fp_inv(const FpMat& A);  // throws SingularMatrix
FpVec fp_add(const FpVec& a, const FpVec& b, int p);
FpVec fp_sub(const FpVec& a, const FpVec& b, int p);

// All invertible d x d matrices over F_p in lexicographic entry order.
// Throws CapacityExceeded when |GL_d(p)| > cap.
std::vector<FpMat> enumerate_gl(int d, int p, uint64_t cap = 2'000'000);

// Rank of the span of the given vectors over F_p.
int fp_rank(const std::vector<FpVec>& vecs, int p);

// Pack/unpack a vector in F_p^d as an integer in 0..p^d-1, digit i = v[i].
uint32_t fp_pack(const FpVec& v, int p);
FpVec fp_unpack(uint32_t code, int d, int p);

}  // namespace eap

#endif
