#pragma once

#include <functional>
#include <optional>
#include <map>
#include <string>
#include <vector>

namespace clasp {

using IntMatrix = std::vector<std::vector<long long>>;

/**
 * SeifertFamily: the 2^mu generalized Seifert matrices A^eps of a
 * C-complex, keyed by sign vectors written as strings over '+'/'-'
 * (character i is the sign for color i+1). The defining symmetry is
 * A^(-eps) = transpose(A^eps).
 */
struct SeifertFamily {
    int mu = 1;
    int n = 0;
    std::map<std::string, IntMatrix> matrices;

    const IntMatrix& at(const std::string& eps) const;
};

/// all sign strings of the given length, lexicographically ordered
std::vector<std::string> sign_strings(int mu);
std::string flip_sign(const std::string& eps, int coord);
std::string negate_sign(const std::string& eps);

/**
 * ColoredLinkModel: a mu-colored link presented by C-complex data. The
 * Seifert family is the computational core; the combinatorial metadata
 * (colors, linking numbers, clasp count, Euler characteristics of the
 * complement pieces) feeds the nullity correction, the Conway potential
 * and the parity checks.
 */
struct ColoredLinkModel {
    int mu = 1;
    int nu = 1;
    std::vector<int> colors;  // length nu, values 1..mu, surjective
    IntMatrix linking;        // nu x nu, symmetric, zero diagonal
    int beta0_S = 1;
    long long clasp_count = 0;
    std::optional<std::vector<long long>> chi_complement;  // chi(S \ S_j), length mu
    std::optional<std::vector<int>> basis_split;           // beta_1(S_i), length mu
    SeifertFamily seifert;

    int size() const { return seifert.n; }

    /// lk(L_ci, L_cj): total linking between the two color sublinks
    long long color_pair_linking(int ci, int cj) const;
    /// sum of lk(L_i, L_j) over color pairs i < j
    long long total_cross_color_linking() const;
};

/// empty list iff all invariants hold; each entry names a violation
std::vector<std::string> validate(const ColoredLinkModel& m);
void validate_or_throw(const ColoredLinkModel& m);

ColoredLinkModel mirror(const ColoredLinkModel& m);
ColoredLinkModel reverse_color(const ColoredLinkModel& m, int color);
ColoredLinkModel connected_sum(const ColoredLinkModel& a, const ColoredLinkModel& b,
                               int shared_color_of_a, int shared_color_of_b);
ColoredLinkModel disjoint_sum(const ColoredLinkModel& a, const ColoredLinkModel& b);

/**
 * Family-level enlargement generators, the matrix shadows of a handle
 * attachment on one surface (T1) and of a ribbon-and-push move between
 * two surfaces (T2). Both append two generators with the block shape
 *   [[A^eps, u^eps, 0], [(u^(-eps))^T, w, pi(-eps)], [0, pi(eps), 0]],
 * where pi(eps) is 1 exactly when the touched coordinates of eps are
 * positive. Signature, nullity and the Conway potential of the model
 * are unchanged. u maps sign strings to length-n columns (missing keys
 * are zero columns).
 */
ColoredLinkModel family_enlargement_t1(const ColoredLinkModel& m, int color,
                                       const std::map<std::string, std::vector<long long>>& u,
                                       long long w);
ColoredLinkModel family_enlargement_t2(const ColoredLinkModel& m, int color_j, int color_k,
                                       const std::map<std::string, std::vector<long long>>& u,
                                       long long w);

// JSON serialization (schema documented in the README)
ColoredLinkModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const ColoredLinkModel& m);
ColoredLinkModel load_model(const std::string& path);
void save_model(const ColoredLinkModel& m, const std::string& path);

// bundled example library
std::vector<std::string> bundled_model_names();
ColoredLinkModel bundled_model(const std::string& name);

}  // namespace clasp
