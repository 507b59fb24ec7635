#ifndef EAP_MATRIX_HPP
#define EAP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eap/field.hpp"

namespace eap {

/// Dense square matrix over a fixed finite field, row-major.
struct Mat {
  const Field* F = nullptr;
  int n = 0;
  std::vector<felem> a;

  Mat() = default;
  Mat(const Field* field, int dim)
      : F(field), n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  felem& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  felem at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(const Field* F, int n);
  static Mat diagonal(const Field* F, const std::vector<felem>& d);
  // Permutation matrix P with P[i][sigma(i)] = 1 (0-based sigma).
  static Mat permutation(const Field* F, const std::vector<int>& sigma);

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_scale(const Mat& A, felem c);
Mat mat_transpose(const Mat& A);
felem mat_det(const Mat& A);
Mat mat_inv(const Mat& A);  // throws SingularMatrix
Mat mat_pow(const Mat& A, int64_t k);
// Entrywise x -> x^(ell^k); with k = e/2 on GF(q^2) this is the conjugation
// used by the unitary form.
Mat mat_entrywise_pow(const Mat& A, int64_t qpow);

// Block diagonal with k copies of M.
Mat block_diag(const Mat& M, int k);
// Kronecker product, (A kron B)[(i1,i2),(j1,j2)] = A[i1][j1]*B[i2][j2].
Mat kron(const Mat& A, const Mat& B);

/// Invertible matrix normalized modulo scalars: the first nonzero entry in
/// row-major order equals 1. Coset representatives are unique, so equality
/// and hashing of projective elements are plain value operations.
struct ProjMat {
  Mat m;

  ProjMat() = default;
  explicit ProjMat(Mat mat) : m(std::move(mat)) {}

  bool operator==(const ProjMat& o) const { return m == o.m; }
  bool operator!=(const ProjMat& o) const { return !(*this == o); }
  bool is_identity() const;
  uint64_t hash() const;
};

ProjMat proj_normalize(const Mat& M);  // throws SingularMatrix
bool proj_eq(const ProjMat& a, const ProjMat& b);
ProjMat proj_mul(const ProjMat& a, const ProjMat& b);
ProjMat proj_inv(const ProjMat& a);
ProjMat proj_conj(const ProjMat& g, const ProjMat& x);  // x g x^-1
// Least k <= cap with g^k projectively trivial; throws OrderExceedsCap.
int64_t elem_order(const ProjMat& g, int64_t cap);

enum class GroupForm { linear, unitary };

/// Realization data for PGL_n(q) (matrices over GF(q)) or PGU_n(q)
/// (matrices over GF(q^2) preserving the identity Hermitian form).
struct GroupSpec {
  GroupForm form = GroupForm::linear;
  int n = 0;
  int64_t q = 0;        // defining parameter
  FieldPtr base_field;  // GF(q)
  FieldPtr mat_field;   // GF(q) linear, GF(q^2) unitary

  static GroupSpec make(GroupForm form, int n, int64_t q);

  // |PGL_n(q)| or |PGU_n(q)|; throws CapacityExceeded on overflow.
  uint64_t order() const;
  std::string name() const;
};

// Conjugate-transpose relative to x -> x^q on GF(q^2).
Mat conj_transpose(const Mat& g, const GroupSpec& spec);
// Exact membership of g in GU_n(q) with the identity form: gbar^T g = I.
bool unitary_check(const Mat& g, const GroupSpec& spec);
// Projective membership: gbar^T g scalar (the scalar then lies in GF(q)).
bool proj_unitary_check(const ProjMat& g, const GroupSpec& spec);
// Steinberg map of the spec applied to a projective element: identity
// entrywise q-power for the linear form, inverse conjugate-transpose for
// the unitary form.
ProjMat steinberg(const ProjMat& g, const GroupSpec& spec);

/// 128-bit packed canonical form of a projective matrix, usable as a hash
/// key; requires n^2 * ceil(log2 q) <= 128 (throws CapExceeded beyond).
struct ProjKey {
  uint64_t lo = 0, hi = 0;
  bool operator==(const ProjKey& o) const { return lo == o.lo && hi == o.hi; }
};
struct ProjKeyHash {
  size_t operator()(const ProjKey& k) const {
    uint64_t h = k.lo * 0x9e3779b97f4a7c15ull;
    h ^= k.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};
ProjKey proj_key(const ProjMat& m);

// Breadth-first closure of ⟨gens⟩ in the projective group; throws
// CapExceeded past cap elements.
std::vector<ProjMat> proj_group_closure(const std::vector<ProjMat>& gens,
                                        uint64_t cap);

// Classical group orders (checked for overflow).
uint64_t gl_order(int n, int64_t q);
uint64_t gu_order(int n, int64_t q);
uint64_t pgl_order(int n, int64_t q);
uint64_t pgu_order(int n, int64_t q);
uint64_t sp_order(int r2, int64_t p);        // |Sp_{2r}(p)|, r2 = 2r
uint64_t so_order(int r2, int sign);         // |SO^±_{2r}(2)|
uint64_t gl_fp_order(int d, int64_t p);      // |GL_d(p)|
uint64_t checked_mul(uint64_t a, uint64_t b);

}  // namespace eap

#endif
