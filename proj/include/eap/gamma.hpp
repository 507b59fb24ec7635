#ifndef EAP_GAMMA_HPP
#define EAP_GAMMA_HPP

#include <vector>

#include "eap/matrix.hpp"

namespace eap {

// The permutation sigma_s on {1..p^r} (1-based, matching the defining
// two-case congruence formula): within each block of p^(s+1) consecutive
// points, the p sub-blocks of size p^s are cycled.
std::vector<int> sigma_perm(int p, int r, int s);

// Diagonal generator of size p^r: entry (i,i) = beta^floor((i-1)/p^s).
// Throws BadRoot unless beta is a primitive p-th root of unity.
Mat a_matrix(const Field* F, int p, int r, int s, felem beta);
// Permutation generator of size p^r: entry (i, sigma_s(i)) = 1.
Mat b_matrix(const Field* F, int p, int r, int s);

/// The 2r projective generators of the basic nontoral p^{2r}, block
/// diagonally embedded with k copies when n = p^r * k.
struct GammaGens {
  int p = 2;
  int r = 1;
  int k = 1;
  FieldPtr field;
  felem beta = 0;
  std::vector<ProjMat> a_list;  // images of the diagonal generators
  std::vector<ProjMat> b_list;  // images of the permutation generators
};

// Requires p | q-1 so a p-th root of unity exists in F.
GammaGens gamma_generators(int p, int r, int k, const FieldPtr& F);

// Exact matrix-level commutator relations on the lifted generators:
// [A_t,A_s] = [B_t,B_s] = [B_t,A_s] = I for t != s and [B_t,A_t] = beta*I.
bool check_relations(const GammaGens& g);

// Diagonal generators of a rank-d subgroup of the slot torus: g_i has beta
// in slot i and 1 elsewhere (d <= n_slots - 1).
std::vector<ProjMat> toral_generators(const Field* F, int p, int d, int n_slots,
                                      felem beta);

/// Normalizer elements x_ij, y_ij (1 <= i <= m, 1 <= j <= r) acting on the
/// product of the basic nontoral group with a rank-m slot-torus subgroup in
/// PGL_n, n = p^r*(m+1). Both act only on slot i: x_ij multiplies the
/// level-(j-1) diagonal and (for p = 2) permutation generators by the slot
/// character, y_ij multiplies only the permutation generator by its inverse.
struct XYGens {
  int p = 2, r = 1, m = 1;
  std::vector<std::vector<ProjMat>> x;  // x[i-1][j-1]
  std::vector<std::vector<ProjMat>> y;  // y[i-1][j-1]
};

XYGens xy_generators(int p, int r, int m, const FieldPtr& F);

}  // namespace eap

#endif
