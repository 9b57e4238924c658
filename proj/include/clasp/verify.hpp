#pragma once

#include <string>
#include <vector>

#include "clasp/model.hpp"

namespace clasp {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample point or failure reason
};

/**
 * Cross-module property suites over the given models: validation,
 * conjugation symmetry, the mod-2 congruence, mirror antisymmetry,
 * enlargement invariance, vanishing of the determinant polynomial
 * against the nullity, the potential biconditional, sum additivity,
 * and closed-form comparisons for recognized bundled models. The grid
 * resolution q bounds the exact sample.
 */
std::vector<PropertyResult> run_verification(
    const std::vector<std::pair<std::string, ColoredLinkModel>>& models, long long q);

}  // namespace clasp
