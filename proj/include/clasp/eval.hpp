#pragma once

#include <complex>
#include <memory>

#include "clasp/cyclotomic.hpp"
#include "clasp/laurent.hpp"
#include "clasp/torus.hpp"

namespace clasp {

/**
 * Conductor of the field in which a polynomial with possibly
 * half-integer exponents evaluates exactly at omega: the lcm of the
 * doubled coordinate orders 2*q_j.
 */
long long eval_conductor(const TorusPoint& omega);

/// exact evaluation t_j -> omega_j in the given field (a ring homomorphism);
/// the field conductor must be a multiple of eval_conductor(omega)
Cyc eval_exact(const LaurentPoly& p, const TorusPoint& omega,
               const std::shared_ptr<const CycField>& field);
Cyc eval_exact(const LaurentPoly& p, const TorusPoint& omega);

/// floating evaluation, usable for approximate coordinates
std::complex<double> eval_approx(const LaurentPoly& p, const TorusPoint& omega);

}  // namespace clasp
