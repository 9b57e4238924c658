#pragma once

#include <string>
#include <vector>

#include "clasp/invariants.hpp"
#include "clasp/model.hpp"
#include "clasp/rational.hpp"
#include "clasp/torus.hpp"

namespace clasp {

/// resources of a spanning surface in the 4-ball: total first Betti
/// number, number of double points, and genus for closed-surface bounds
struct SurfaceBudget {
    long long beta1 = 0;
    long long c = 0;
    long long genus = 0;
};

/// the Murasugi-Tristram inequality |sigma| + |eta - mu + 1| <= beta1 + c
bool murasugi_tristram_ok(long long sigma, long long eta, int mu, const SurfaceBudget& budget);

/**
 * Lower bound for the slice genus: max over the given prime-power-order
 * points of |sigma| - min(0, eta + 1 - mu). Points outside T^mu_P are
 * skipped (reported through `skipped` when given); nonzero cross-color
 * linking makes the slice genus undefined and raises an error.
 */
long long slice_genus_lower_bound(const ColoredLinkModel& m, const std::vector<TorusPoint>& points,
                                  std::vector<std::string>* skipped = nullptr);

struct ObstructionWitness {
    TorusPoint point;
    long long sigma = 0;
    long long eta = 0;
    std::string violated;  // "sigma-nonzero" or "eta-too-small"
};

/**
 * Scan all points of T^mu_P with prime-power conductor <= max_q for
 * violations of the slice conditions sigma = 0 and eta >= mu - 1. Each
 * witness certifies that the colored link is not slice; an empty report
 * is not a sliceness proof.
 */
std::vector<ObstructionWitness> slice_obstruction(const ColoredLinkModel& m, long long max_q);

/// same scan for the underlying 1-colored link via diagonal specialization
std::vector<ObstructionWitness> slice_obstruction_diagonal(const ColoredLinkModel& m,
                                                           long long max_q);

std::string witnesses_to_json_text(const std::vector<ObstructionWitness>& ws);

/**
 * Surgery presentation data for the Casson-Gordon invariant: framed
 * linking matrix Lambda, character order q and exponents n_i coprime
 * to q (the character maps the i-th meridian to e^(2 pi i n_i / q)).
 */
struct SurgeryData {
    int nu = 1;
    IntMatrix framed_linking;  // symmetric, framings on the diagonal
    long long q = 2;
    std::vector<long long> n;
};

void validate_surgery(const SurgeryData& s);

/**
 * Casson-Gordon invariant of the surgered 3-manifold:
 * (sigma_L(omega) - sum_(i<j) Lambda_ij) - sign(Lambda)
 *   + (2/q^2) sum_(i,j) (q - n_i) n_j Lambda_ij.
 */
Rational casson_gordon(const SurgeryData& s, long long sigma_L_at);

/// true iff omega lies in T^mu_P, the domain where sigma and eta are
/// concordance invariants
bool concordance_domain(const TorusPoint& omega);

}  // namespace clasp
