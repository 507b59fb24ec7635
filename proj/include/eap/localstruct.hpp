#ifndef EAP_LOCALSTRUCT_HPP
#define EAP_LOCALSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "eap/fpmat.hpp"
#include "eap/matrix.hpp"

namespace eap {

/// Basis of {X : X g_i = chi_i g_i X for all i} for fixed lifts g_i and
/// scalars chi_i; every invertible member conjugates the projective group
/// with the prescribed character twist.
struct IntertwinerSpace {
  std::vector<Mat> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

IntertwinerSpace intertwiner_basis(const std::vector<ProjMat>& gens,
                                   const std::vector<felem>& chi);

struct LocalStructResult {
  uint64_t order = 0;
  std::string status;  // "exact" | "matched-prediction" | "lower-bound"
  std::vector<ProjMat> generators;
};

// Projective centralizer of the elementary abelian group generated by an
// independent list E, inside the spec's group. All admissible character
// twists are solved; spaces with at most subspace_budget points are scanned
// exhaustively (giving an exact order by scalar counting), otherwise the
// order is established by closing random invertible witnesses against
// `predicted`.
LocalStructResult projective_centralizer(const std::vector<ProjMat>& E,
                                         const GroupSpec& spec,
                                         uint64_t subspace_budget,
                                         uint64_t predicted = 0);

// Normalizer order via the automorphism route: for each phi in GL_rank(p)
// decide whether some twisted intertwiner realizes it; the normalizer order
// is |C| times the number of realized automorphisms.
LocalStructResult normalizer_via_aut(const std::vector<ProjMat>& E,
                                     const GroupSpec& spec, int p,
                                     uint64_t subspace_budget,
                                     uint64_t predicted = 0);

// Element conjugating the span of `from` onto the span of `to` (as
// projective subgroups), if one exists; complete search over generator
// correspondences and character twists.
std::optional<ProjMat> find_conjugator(const std::vector<ProjMat>& from,
                                       const std::vector<ProjMat>& to, int p,
                                       const GroupSpec& spec);

}  // namespace eap

#endif
