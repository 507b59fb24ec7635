#ifndef EAP_COMPGRP_HPP
#define EAP_COMPGRP_HPP

#include <cstdint>
#include <vector>

#include "eap/fpmat.hpp"

namespace eap {

// Alternating form on F_p^{2r} in interleaved hyperbolic pairs: coordinates
// (2i, 2i+1) pair up, B(u,v) = sum u_{2i} v_{2i+1} - u_{2i+1} v_{2i}.
int symp_form(const FpVec& u, const FpVec& v, int p);

// Quadratic forms over F_2 polarizing to symp_form: hyperbolic (+1) is
// sum x_i y_i, elliptic (-1) adds x_r^2 + y_r^2 on the last pair.
int quad_form(const FpVec& v, int sign);

// Symplectic transvections x -> x + lambda B(x,v) v over all nonzero v and
// lambda; their closure is Sp_{2r}(p).
std::vector<FpMat> sp_generators(int r, int p);

// Generators of the type-sign form stabilizer inside Sp_{2r}(2):
// orthogonal transvections along nonsingular vectors plus hyperbolic pair
// swaps. Independent of (and checked against) filtering the Sp closure.
std::vector<FpMat> so_generators(int r, int sign);

// Breadth-first closure of a matrix group over F_p; throws CapExceeded
// past cap elements or when elements do not pack into 64 bits.
std::vector<FpMat> fp_group_closure(const std::vector<FpMat>& gens, uint64_t cap);
uint64_t fp_group_closure_order(const std::vector<FpMat>& gens, uint64_t cap);

// Elements of Sp_{2r}(2) preserving the type-sign quadratic form, by
// exhaustive filtering of the full symplectic closure (r <= 3).
std::vector<FpMat> filter_sp_by_form(int r, int sign);

// Orbits of the form stabilizer on F_2^{2r}: zero, singular nonzero and
// nonsingular vectors (the middle orbit may be empty). Points packed
// little-endian base 2, orbits sorted by least point.
std::vector<std::vector<uint32_t>> quadratic_form_orbits(int r, int sign);

/// Affine map x -> A x + t on F_p^dim.
struct AffineGen {
  FpMat A;
  FpVec t;
};

/// The component-group model F_p^{2r} (+) F_p^{r1} with its acting maps:
/// symplectic generators on the first summand, GL_{r1}(p) on the second,
/// shears feeding the second summand into the first, and optionally the
/// twist that turns the symplectic part into an affine orthogonal action.
struct ActionSpace {
  int p = 2;
  int r = 0;
  int r1 = 0;
  std::vector<AffineGen> gens;

  int dim() const { return 2 * r + r1; }
};

// Shears (x, b) -> (x + sign * b_j * e_0, b), one per coordinate of the
// second summand; sign is +1 for p = 2 and -1 for odd p.
std::vector<AffineGen> fusion_shears(int p, int r, int r1);

// Assembles the acting generators; so_twist replaces the symplectic part
// by the hyperbolic-form stabilizer plus one affine map with nonzero
// translation along a singular vector.
ActionSpace build_action_space(int p, int r, int r1, bool so_twist);

struct OrbitClass {
  FpVec rep;      // least point of the class
  uint64_t size;
};

// Partition of all p^dim points under the closure of the affine generators;
// with linear generators only these are plain orbits. Caps at 10^6 points.
std::vector<OrbitClass> f_twisted_classes(const ActionSpace& space);

}  // namespace eap

#endif
