#ifndef EAP_TORAL_HPP
#define EAP_TORAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eap/fpmat.hpp"
#include "eap/matrix.hpp"

namespace eap {

/// A diagonalizable elementary abelian p-subgroup of PGL_n encoded by the
/// character exponents of its n eigenspace slots: slot i carries the vector
/// w_i in F_p^d, one coordinate per generator. Conjugacy is modelled by the
/// action of GL_d(p) (change of generators), global translations (scalar
/// ambiguity) and slot permutations.
struct WeightMultiset {
  int p = 2;
  int d = 0;  // rank
  int n = 0;  // slot count
  std::vector<FpVec> weights;

  static WeightMultiset trivial(int p, int n);

  bool operator==(const WeightMultiset& o) const {
    return p == o.p && d == o.d && n == o.n && weights == o.weights;
  }
  bool operator<(const WeightMultiset& o) const { return weights < o.weights; }
  std::string str() const;
};

// Lexicographically least representative over basis change, translation and
// slot sort. Throws RankDeficient if the differences w_i - w_1 do not span,
// CapacityExceeded outside the GL_d(p) scan envelope.
WeightMultiset canonical_form(const WeightMultiset& W);

// All conjugacy classes of rank 1..d_max, one canonical representative
// each. Ranks whose orbit spaces exceed the scan envelope throw
// CapacityExceeded.
std::vector<WeightMultiset> enumerate_toral_classes(int n, int p, int d_max);

// {v : the multiset is invariant under translation by v}; a subspace. The
// centralizer of the realized subgroup is connected iff this is trivial,
// and its component group is naturally this translation group.
std::vector<FpVec> translation_stabilizer(const WeightMultiset& W);

struct ToralDecomposition {
  int r1 = 0;          // rank of the translation stabilizer
  WeightMultiset rest;  // residual class with connected centralizer
};

// Splits a disconnected-centralizer class as (full translation block) x
// (connected residue); validated by re-canonicalizing the product.
// Throws NotDisconnected when the stabilizer is trivial.
ToralDecomposition decompose_disconnected(const WeightMultiset& W);

struct AffinePair {
  FpMat A;
  FpVec v;
};

/// All pairs (A, v) with {A*w_i + v} = {w_i} as multisets. Models the
/// normalizer-modulo-connected-centralizer data of the realized subgroup:
/// pure translations inside it are the centralizer components.
struct AffineSymmetryGroup {
  int p = 2;
  int d = 0;
  std::vector<AffinePair> elements;

  uint64_t order() const { return elements.size(); }
};

AffineSymmetryGroup affine_symmetries(const WeightMultiset& W);

// Diagonal projective matrices over the spec's matrix field realizing W.
// Throws NoSuchRoot when no order-p eigenvalue compatible with the form
// exists (p | q-1 linear, p | q+1 unitary).
std::vector<ProjMat> realize_in_group(const WeightMultiset& W, const GroupSpec& spec);

// Eigenvalue of order p used by realize_in_group for this spec.
felem form_compatible_root(const GroupSpec& spec, int p);

}  // namespace eap

#endif
