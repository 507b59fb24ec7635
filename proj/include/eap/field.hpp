#ifndef EAP_FIELD_HPP
#define EAP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "eap/errors.hpp"

namespace eap {

// Element of GF(ell^e) in polynomial representation, encoded as the integer
// c0 + c1*ell + ... + c_{e-1}*ell^{e-1} with 0 <= ci < ell.
using felem = uint32_t;

/// Exact arithmetic in GF(ell^e). Immutable after construction; all
/// operations are pure and safe for concurrent use.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree e over F_ell (coefficients compared from the leading term
/// down), so fields are identical across runs. Multiplication goes through
/// discrete log/exp tables built from the least primitive element.
class Field {
 public:
  // Throws NonPrimeCharacteristic unless ell is prime. Supported sizes are
  // capped at q <= 2^20.
  static std::shared_ptr<const Field> make(int64_t ell, int degree);

  int64_t characteristic() const { return ell_; }
  int degree() const { return e_; }
  int64_t q() const { return q_; }

  // Modulus coefficients c0..ce (monic, length e+1).
  const std::vector<int>& modulus() const { return modulus_; }

  felem zero() const { return 0; }
  felem one() const { return 1; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;  // throws DivisionByZero on 0
  felem pow(felem a, int64_t k) const;

  // a^(ell^k), the k-fold arithmetic Frobenius.
  felem frobenius(felem a, int64_t k) const;

  // Element <-> coefficient vector (length e, entries in 0..ell-1).
  std::vector<int> coeffs(felem a) const;
  felem from_coeffs(const std::vector<int>& c) const;
  // Image of an integer under Z -> F_ell <= GF(q).
  felem from_int(int64_t v) const;

  // Least primitive element in encoding order.
  felem generator() const { return gen_; }

  // Deterministic primitive p-th root of unity: generator()^((q-1)/p).
  // Throws NoSuchRoot when p does not divide q-1.
  felem root_of_unity(int64_t p) const;

  // Multiplicative order of a nonzero element.
  int64_t elem_mul_order(felem a) const;

  // Discrete log base generator(); requires a != 0.
  int64_t dlog(felem a) const;

  // All c with c^k = t (possibly empty), in encoding order.
  std::vector<felem> kth_roots(felem t, int64_t k) const;

 private:
  Field() = default;

  int64_t ell_ = 0;
  int e_ = 0;
  int64_t q_ = 0;
  std::vector<int> modulus_;
  felem gen_ = 0;

  // exp_[i] = g^i for 0 <= i < q-1; log_[a] defined for a != 0.
  std::vector<felem> exp_;
  std::vector<int64_t> log_;
  // Addition table for small fields, else digitwise addition.
  std::vector<felem> add_table_;

  felem add_slow(felem a, felem b) const;
  felem mul_poly(felem a, felem b) const;  // table-free, used during setup
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int64_t n);

// Factor n into (prime, multiplicity) pairs by trial division.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Splits a prime power q = ell^e; throws InvalidConfig otherwise.
void split_prime_power(int64_t q, int64_t& ell, int& e);

}  // namespace eap

#endif
