#include "clasp/eval.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace clasp {

long long eval_conductor(const TorusPoint& omega) {
    long long l = 1;
    for (int j = 0; j < omega.mu(); ++j) {
        long long d = 2 * omega.order(j);
        long long g = std::gcd(l, d);
        if (l / g > 2000000 / d)
            throw std::domain_error("eval: conductor too large for exact evaluation");
        l = l / g * d;
    }
    return l;
}

Cyc eval_exact(const LaurentPoly& p, const TorusPoint& omega,
               const std::shared_ptr<const CycField>& field) {
    if (p.num_vars() != omega.mu())
        throw std::invalid_argument("eval: variable count does not match point dimension");
    if (!omega.all_exact())
        throw std::domain_error("eval: exact evaluation requires an exact torus point");
    const long long Q = field->conductor();
    for (int j = 0; j < omega.mu(); ++j)
        if (Q % (2 * omega.order(j)) != 0)
            throw std::invalid_argument("eval: field conductor incompatible with the point");

    Cyc acc(field);
    for (const auto& [exps, coeff] : p.terms()) {
        long long zexp = 0;
        for (int j = 0; j < omega.mu(); ++j) {
            const auto& c = std::get<ExactCoord>(omega.coord(j));
            // doubled exponent d means omega_j^(d/2) = zeta_Q^(k*d*Q/(2q))
            long long base = c.k * (Q / (2 * c.q)) % Q;  // k*step < Q
            long long d = exps[static_cast<size_t>(j)] % Q;
            if (d < 0) d += Q;
            zexp = (zexp + d * base) % Q;
        }
        acc += Cyc::zeta_power(field, zexp).scaled(Rational(coeff));
    }
    return acc;
}

Cyc eval_exact(const LaurentPoly& p, const TorusPoint& omega) {
    return eval_exact(p, omega, CycField::get(eval_conductor(omega)));
}

std::complex<double> eval_approx(const LaurentPoly& p, const TorusPoint& omega) {
    if (p.num_vars() != omega.mu())
        throw std::invalid_argument("eval: variable count does not match point dimension");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [exps, coeff] : p.terms()) {
        double theta = 0.0;
        for (int j = 0; j < omega.mu(); ++j)
            theta += omega.angle(j) * static_cast<double>(exps[static_cast<size_t>(j)]) / 2.0;
        acc += coeff.to_double() * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc;
}

}  // namespace clasp
