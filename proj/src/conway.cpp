#include "clasp/conway.hpp"

#include <numeric>
#include <stdexcept>

#include "clasp/eval.hpp"
#include "clasp/invariants.hpp"

namespace clasp {

namespace {

// B(z) = sum over sign vectors of eps_1...eps_mu z^eps A^eps
LaurentMatrix potential_core_matrix(const ColoredLinkModel& m) {
    const int n = m.seifert.n;
    LaurentMatrix B(n, n, m.mu);
    for (const std::string& eps : sign_strings(m.mu)) {
        int minus = 0;
        ExpVec exps(static_cast<size_t>(m.mu), 0);
        for (int j = 0; j < m.mu; ++j) {
            if (eps[static_cast<size_t>(j)] == '-') {
                ++minus;
                exps[static_cast<size_t>(j)] = -2;
            } else {
                exps[static_cast<size_t>(j)] = 2;
            }
        }
        BigInt coeff(minus % 2 ? -1 : 1);
        const IntMatrix& mat = m.seifert.at(eps);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long v = mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v) B.at(i, j).add_term(exps, coeff * BigInt(v));
            }
    }
    return B;
}

// shared field lift so i = zeta^(Q/4) exists alongside both values
struct LiftedPair {
    std::shared_ptr<const CycField> field;
    Cyc a, b, i;
};

LiftedPair lift_with_i(const Cyc& a, const Cyc& b) {
    long long qa = a.conductor(), qb = b.conductor();
    if (qa != qb) throw std::invalid_argument("local move: potential values from different fields");
    long long Q = std::lcm(qa, 4ll);
    auto field = CycField::get(Q);
    return {field, a.embed(field), b.embed(field), Cyc::zeta_power(field, Q / 4)};
}

long long signed_ratio_step(long long sigma_known, const Cyc& numerator, const Cyc& denominator,
                            bool with_i, int delta) {
    if (denominator.is_zero())
        throw std::domain_error("local move: denominator potential value vanishes");
    if (numerator.is_zero()) return sigma_known;  // sgn(0) = 0, degenerate case
    LiftedPair lift = lift_with_i(numerator, denominator);
    Cyc ratio = lift.a / lift.b;
    if (with_i) ratio = ratio * lift.i;
    if (!ratio.is_real())
        throw std::invalid_argument("local move: ratio is not real; inconsistent inputs");
    return sigma_known + delta * certified_sign(ratio);
}

}  // namespace

LaurentFraction potential(const ColoredLinkModel& m) {
    validate_or_throw(m);
    if (!m.chi_complement)
        throw std::invalid_argument("potential: chi_complement metadata is required");
    if (m.beta0_S != 1)
        throw std::domain_error("potential: needs a connected C-complex (beta0_S = 1)");
    const long long c = m.clasp_count;
    const long long l = m.total_cross_color_linking();
    if (((c - l) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("potential: clasp count and total linking have different parity");

    LaurentMatrix B = potential_core_matrix(m);
    const int n = B.rows();
    LaurentPoly det_negB = B.det();
    if (n % 2) det_negB = -det_negB;  // det(-B) = (-1)^n det(B)

    long long sign_exp = (c - l) / 2;
    if (((sign_exp % 2) + 2) % 2 == 1) det_negB = -det_negB;

    std::vector<int> den_pows(static_cast<size_t>(m.mu), 0);
    for (int j = 0; j < m.mu; ++j) {
        long long e = (*m.chi_complement)[static_cast<size_t>(j)] - 1;
        if (e >= 0) {
            for (long long k = 0; k < e; ++k) det_negB *= sqrt_diff_factor(m.mu, j);
        } else {
            den_pows[static_cast<size_t>(j)] = static_cast<int>(-e);
        }
    }
    return LaurentFraction(std::move(det_negB), std::move(den_pows)).reduced();
}

Cyc potential_at(const ColoredLinkModel& m, const TorusPoint& omega) {
    if (omega.mu() != m.mu)
        throw std::invalid_argument("potential_at: point dimension must equal mu");
    LaurentFraction nabla = potential(m);
    TorusPoint half = omega.half();
    auto field = CycField::get(eval_conductor(half));
    Cyc num = eval_exact(nabla.numerator(), half, field);
    Cyc den = eval_exact(nabla.denominator_poly(), half, field);
    // z - z^-1 never vanishes for z = e^(i theta/2), 0 < theta < 2 pi
    return num / den;
}

long long local_move_a(long long sigma_known, const Cyc& nabla_L_at, const Cyc& nabla_Lp_at,
                       MoveDirection direction) {
    if (direction == MoveDirection::L_from_Lprime)
        return signed_ratio_step(sigma_known, nabla_L_at, nabla_Lp_at, /*with_i=*/true, 1);
    return signed_ratio_step(sigma_known, nabla_Lp_at, nabla_L_at, /*with_i=*/true, 1);
}

long long local_move_b(long long sigma_known, const Cyc& nabla_L_at, const Cyc& nabla_Lpp_at,
                       int delta, MoveDirection direction) {
    if (delta != 1 && delta != -1)
        throw std::invalid_argument("local move: delta must be +1 or -1");
    if (direction == MoveDirection::L_from_Lprime)
        return signed_ratio_step(sigma_known, nabla_L_at, nabla_Lpp_at, /*with_i=*/false, delta);
    return signed_ratio_step(sigma_known, nabla_Lpp_at, nabla_L_at, /*with_i=*/false, -delta);
}

long long levine_tristram_recursion_demo(const TorusPoint& omega) {
    if (omega.mu() != 1)
        throw std::invalid_argument("recursion demo: expects a single coordinate");
    if (!omega.all_exact())
        throw std::invalid_argument("recursion demo: expects an exact root of unity");

    // Alexander-Conway data of the chain trefoil -> Hopf link -> unknot
    LaurentPoly delta_K = LaurentPoly::parse("t1 - 1 + t1^-1", 1);
    LaurentPoly delta_Lp = LaurentPoly::parse("t1^(1/2) - t1^(-1/2)", 1);

    auto field = CycField::get(std::lcm(eval_conductor(omega), 4ll));
    Cyc dK = eval_exact(delta_K, omega, field);
    Cyc dLp = eval_exact(delta_Lp, omega, field);
    Cyc dKpp = Cyc::from_rational(field, Rational(1));
    if (dK.is_zero())
        throw std::domain_error("recursion demo: the trefoil Alexander value vanishes here");

    // two crossing changes: sigma_K = sigma_K'' + sgn(i dLp/dKpp) - sgn(i dLp/dK)
    long long up = local_move_a(0, dLp, dKpp, MoveDirection::L_from_Lprime);
    long long down = local_move_a(0, dLp, dK, MoveDirection::L_from_Lprime);
    return up - down;
}

bool mod4_check(const ColoredLinkModel& m, const TorusPoint& omega) {
    SignatureResult s = signature(m, omega);
    if (s.eta != 0) throw std::domain_error("mod4_check: inapplicable, eta is nonzero");
    Cyc nabla = potential_at(m, omega);
    long long Q = std::lcm(nabla.conductor(), 4ll);
    auto field = CycField::get(Q);
    long long nu = m.nu;
    Cyc i_pow = Cyc::zeta_power(field, (nu % 4) * (Q / 4));
    Cyc value = i_pow * nabla.embed(field);
    if (!value.is_real())
        throw std::logic_error("mod4_check: i^nu * nabla is not real");
    long long rhs = nu + m.total_cross_color_linking() - certified_sign(value);
    return ((s.sigma - rhs) % 4 + 4) % 4 == 0;
}

bool nullity_potential_equivalence(const ColoredLinkModel& m, const TorusPoint& omega) {
    SignatureResult s = signature(m, omega);
    Cyc nabla = potential_at(m, omega);
    return (s.eta == 0) == !nabla.is_zero();
}

}  // namespace clasp
