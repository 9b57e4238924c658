#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "clasp/hermitian.hpp"
#include "clasp/laurent.hpp"
#include "clasp/model.hpp"
#include "clasp/torus.hpp"

namespace clasp {

/// default relative tolerance of the approximate signature path
inline constexpr double kDefaultApproxTol = 1e-9;

struct SignatureResult {
    long long sigma = 0;
    long long eta = 0;
    long long raw_nullity = 0;  // nullity of H(omega) before the beta_0 correction
    TorusPoint point;
    bool exact = true;
};

/**
 * The Alexander matrix A(t1,...,tmu) of the Seifert family: the signed
 * sum over all sign vectors of t^((1-eps)/2) A^eps. For mu = 1 this is
 * V^T - t V.
 */
LaurentMatrix alexander_matrix(const ColoredLinkModel& m);

/// H(omega) = prod_j (1 - conj(omega_j)) * A(omega); exact over a
/// cyclotomic field when omega is exact, floating otherwise
HermitianMatrix hermitian_at(const ColoredLinkModel& m, const TorusPoint& omega,
                             double approx_tol = kDefaultApproxTol);

/// sigma_L(omega) and eta_L(omega) = nullity(H) + beta_0(S) - 1
SignatureResult signature(const ColoredLinkModel& m, const TorusPoint& omega,
                          double approx_tol = kDefaultApproxTol);

/**
 * Levine-Tristram invariants of the underlying 1-colored link, read off
 * the diagonal: sigma_LT = sigma_L(w,...,w) - sum of cross-color
 * linking numbers, eta_LT = eta_L(w,...,w).
 */
std::pair<long long, long long> diagonal_specialize(const ColoredLinkModel& m, const Coord& w,
                                                    double approx_tol = kDefaultApproxTol);

/**
 * Signature of the link recolored by merging the last two colors,
 * evaluated at omega with equal last coordinates: sigma drops by
 * lk(L_(mu-1), L_mu), eta is unchanged.
 */
SignatureResult merge_colors(const ColoredLinkModel& m, const TorusPoint& omega,
                             double approx_tol = kDefaultApproxTol);

/// normalize_unit(det A(t)); agrees with the Alexander polynomial up to
/// units and factors (1 - t_i)
LaurentPoly delta0(const ColoredLinkModel& m);

/// presentation matrix of the Alexander module: tV - V^T for one color,
/// the two-color presentation through basis_split, A(t) (localized) for
/// three or more colors
LaurentMatrix presentation_matrix(const ColoredLinkModel& m);

/// the stratum index r with omega in Sigma_r \ Sigma_(r+1), i.e. eta_L(omega)
long long stratum_index(const ColoredLinkModel& m, const TorusPoint& omega);

struct GridScan {
    std::string model_id;
    long long q = 0;
    // raw grid indices (k_1,...,k_mu), 0 < k_j < q, lexicographic
    std::vector<std::pair<std::vector<long long>, SignatureResult>> rows;
};

/// exact evaluation over the full (q-1)^mu grid of q-th roots
GridScan grid_scan(const ColoredLinkModel& m, long long q, const std::string& model_id = "");

/// CSV: header k1,...,kmu,q,sigma,eta,raw_nullity,exact then one row per point
void write_grid_csv(const GridScan& scan, std::ostream& out);

}  // namespace clasp
