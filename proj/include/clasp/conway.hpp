#pragma once

#include "clasp/cyclotomic.hpp"
#include "clasp/laurent.hpp"
#include "clasp/model.hpp"
#include "clasp/torus.hpp"

namespace clasp {

/**
 * Conway potential function of the model, computed from the C-complex
 * data: (-1)^((c-l)/2) * prod_j (t_j - t_j^-1)^(chi(S\S_j) - 1) * det(-B)
 * with B(z) the signed sum of z^eps A^eps over sign vectors. Requires
 * chi_complement metadata and a connected complex.
 */
LaurentFraction potential(const ColoredLinkModel& m);

/// the value nabla(omega^(1/2)) as an exact cyclotomic number; the
/// denominator never vanishes on the half-angle branch
Cyc potential_at(const ColoredLinkModel& m, const TorusPoint& omega);

enum class MoveDirection {
    L_from_Lprime,  // derive sigma_L from sigma of the moved link
    Lprime_from_L,  // derive sigma of the moved link from sigma_L
};

/**
 * Crossing-change relation (same-color strands): the new signature is
 * the known one plus sgn(i * nabla_num / nabla_den) where num/den follow
 * the direction. A vanishing numerator contributes sgn(0) = 0; the
 * denominator value must be nonzero. Both values live at omega^(1/2).
 */
long long local_move_a(long long sigma_known, const Cyc& nabla_L_at, const Cyc& nabla_Lp_at,
                       MoveDirection direction);

/// clasp-change relation (distinct colors): like move a with the factor
/// delta = +/-1 instead of i
long long local_move_b(long long sigma_known, const Cyc& nabla_L_at, const Cyc& nabla_Lpp_at,
                       int delta, MoveDirection direction);

/**
 * Replays the two-step crossing-change computation of the right-hand
 * trefoil signature from bundled Alexander-Conway values; the result
 * equals sgn(2 cos(theta) - 1) - 1.
 */
long long levine_tristram_recursion_demo(const TorusPoint& omega);

/// checks sigma = nu + lk_total - sgn(i^nu * nabla(omega^(1/2))) (mod 4)
/// at a point with eta = 0; throws when eta != 0
bool mod4_check(const ColoredLinkModel& m, const TorusPoint& omega);

/// checks the biconditional: eta(omega) = 0 iff nabla(omega^(1/2)) != 0
bool nullity_potential_equivalence(const ColoredLinkModel& m, const TorusPoint& omega);

}  // namespace clasp
