#include "clasp/invariants.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "clasp/eval.hpp"
#include "clasp/parallel.hpp"

namespace clasp {

LaurentMatrix alexander_matrix(const ColoredLinkModel& m) {
    const int n = m.seifert.n;
    LaurentMatrix A(n, n, m.mu);
    for (const std::string& eps : sign_strings(m.mu)) {
        int minus = 0;
        ExpVec exps(static_cast<size_t>(m.mu), 0);
        for (int j = 0; j < m.mu; ++j) {
            if (eps[static_cast<size_t>(j)] == '-') {
                ++minus;
                exps[static_cast<size_t>(j)] = 2;  // t_j^((1-eps_j)/2) = t_j
            }
        }
        BigInt coeff(minus % 2 ? -1 : 1);
        const IntMatrix& mat = m.seifert.at(eps);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long v = mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v) A.at(i, j).add_term(exps, coeff * BigInt(v));
            }
    }
    return A;
}

namespace {

HermitianExact hermitian_exact_at(const TorusPoint& omega,
                                  const std::shared_ptr<const CycField>& field,
                                  const LaurentMatrix& A) {
    const long long Q = field->conductor();
    // prod_j (1 - conj(omega_j)) with omega_j = zeta_Q^(k Q / q)
    Cyc factor = Cyc::from_rational(field, Rational(1));
    for (int j = 0; j < omega.mu(); ++j) {
        const auto& c = std::get<ExactCoord>(omega.coord(j));
        Cyc conj_w = Cyc::zeta_power(field, Q - c.k * (Q / c.q) % Q);
        factor *= Cyc::from_rational(field, Rational(1)) - conj_w;
    }
    const int n = A.rows();
    HermitianExact h(field, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h.at(i, j) = factor * eval_exact(A.at(i, j), omega, field);
    return h;
}

HermitianApprox hermitian_approx_at(const TorusPoint& omega, const LaurentMatrix& A) {
    std::complex<double> factor(1.0, 0.0);
    for (int j = 0; j < omega.mu(); ++j)
        factor *= std::complex<double>(1.0, 0.0) - std::conj(omega.value(j));
    const int n = A.rows();
    HermitianApprox h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = factor * eval_approx(A.at(i, j), omega);
    // clean off rounding skew so the matrix is Hermitian to the last bit
    for (int i = 0; i < n; ++i) {
        h.at(i, i) = {h.at(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> z = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

SignatureResult signature_prechecked(const ColoredLinkModel& m, const TorusPoint& omega,
                                     double approx_tol, const LaurentMatrix& A,
                                     const std::shared_ptr<const CycField>& field) {
    SignatureResult r{0, 0, 0, omega, omega.all_exact()};
    SigNull sn;
    if (r.exact) {
        sn = hermitian_exact_at(omega, field, A).signature_nullity();
    } else {
        sn = hermitian_approx_at(omega, A).signature_nullity(approx_tol);
    }
    r.sigma = sn.sigma;
    r.raw_nullity = sn.nullity;
    r.eta = sn.nullity + m.beta0_S - 1;
    return r;
}

}  // namespace

HermitianMatrix hermitian_at(const ColoredLinkModel& m, const TorusPoint& omega,
                             double approx_tol) {
    if (omega.mu() != m.mu)
        throw std::invalid_argument("hermitian_at: point dimension must equal mu");
    LaurentMatrix A = alexander_matrix(m);
    if (omega.all_exact()) {
        auto field = CycField::get(eval_conductor(omega));
        return HermitianMatrix(hermitian_exact_at(omega, field, A));
    }
    return HermitianMatrix(hermitian_approx_at(omega, A), approx_tol);
}

SignatureResult signature(const ColoredLinkModel& m, const TorusPoint& omega,
                          double approx_tol) {
    validate_or_throw(m);
    if (omega.mu() != m.mu)
        throw std::invalid_argument("signature: point dimension must equal mu");
    LaurentMatrix A = alexander_matrix(m);
    std::shared_ptr<const CycField> field;
    if (omega.all_exact()) field = CycField::get(eval_conductor(omega));
    return signature_prechecked(m, omega, approx_tol, A, field);
}

std::pair<long long, long long> diagonal_specialize(const ColoredLinkModel& m, const Coord& w,
                                                    double approx_tol) {
    SignatureResult s = signature(m, TorusPoint::diagonal(w, m.mu), approx_tol);
    return {s.sigma - m.total_cross_color_linking(), s.eta};
}

namespace {

bool coords_equal(const Coord& a, const Coord& b) {
    if (const auto* ea = std::get_if<ExactCoord>(&a)) {
        const auto* eb = std::get_if<ExactCoord>(&b);
        return eb && ea->k == eb->k && ea->q == eb->q;
    }
    const auto* ab = std::get_if<ApproxCoord>(&b);
    return ab && std::get<ApproxCoord>(a).theta == ab->theta;
}

}  // namespace

SignatureResult merge_colors(const ColoredLinkModel& m, const TorusPoint& omega,
                             double approx_tol) {
    if (m.mu < 2) throw std::invalid_argument("merge_colors: need at least two colors");
    if (omega.mu() != m.mu)
        throw std::invalid_argument("merge_colors: point dimension must equal mu");
    if (!coords_equal(omega.coord(m.mu - 2), omega.coord(m.mu - 1)))
        throw std::invalid_argument("merge_colors: the last two coordinates must coincide");
    SignatureResult s = signature(m, omega, approx_tol);
    SignatureResult r = s;
    r.sigma = s.sigma - m.color_pair_linking(m.mu - 1, m.mu);
    r.point = omega.drop_last();
    return r;
}

LaurentPoly delta0(const ColoredLinkModel& m) {
    validate_or_throw(m);
    if (m.beta0_S != 1)
        throw std::domain_error("delta0: needs a connected C-complex (beta0_S = 1)");
    return alexander_matrix(m).det().normalize_unit();
}

LaurentMatrix presentation_matrix(const ColoredLinkModel& m) {
    validate_or_throw(m);
    const int n = m.seifert.n;
    if (m.mu == 1) {
        // tV - V^T
        const IntMatrix& V = m.seifert.at("-");
        LaurentMatrix P(n, n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long vij = V[static_cast<size_t>(i)][static_cast<size_t>(j)];
                long long vji = V[static_cast<size_t>(j)][static_cast<size_t>(i)];
                if (vij) P.at(i, j).add_term(ExpVec{2}, BigInt(vij));
                if (vji) P.at(i, j).add_term(ExpVec{0}, BigInt(-vji));
            }
        return P;
    }
    LaurentMatrix A = alexander_matrix(m);
    if (m.mu > 2) return A;  // presentation over the localized ring

    if (!m.basis_split)
        throw std::invalid_argument("presentation_matrix: two colors need basis_split metadata");
    const int b1 = (*m.basis_split)[0];
    const int b2 = (*m.basis_split)[1];
    // Cooper's diagonal: columns from H_1(S_1) carry (t_2 - 1)^-1, columns
    // from H_1(S_2) carry (t_1 - 1)^-1, graph columns carry 1
    LaurentPoly t1m1 = LaurentPoly::monomial(2, 0, 1) - LaurentPoly::constant(2, BigInt(1));
    LaurentPoly t2m1 = LaurentPoly::monomial(2, 1, 1) - LaurentPoly::constant(2, BigInt(1));
    for (int j = 0; j < n; ++j) {
        const LaurentPoly* divisor = nullptr;
        if (j < b1)
            divisor = &t2m1;
        else if (j < b1 + b2)
            divisor = &t1m1;
        if (!divisor) continue;
        for (int i = 0; i < n; ++i) {
            auto q = A.at(i, j).divide_exact(*divisor);
            if (!q)
                throw std::domain_error(
                    "presentation_matrix: basis_split is inconsistent with the Seifert family");
            A.at(i, j) = std::move(*q);
        }
    }
    return A;
}

long long stratum_index(const ColoredLinkModel& m, const TorusPoint& omega) {
    return signature(m, omega).eta;
}

GridScan grid_scan(const ColoredLinkModel& m, long long q, const std::string& model_id) {
    validate_or_throw(m);
    if (q < 2) throw std::invalid_argument("grid_scan: q must be at least 2");
    double total_d = std::pow(static_cast<double>(q - 1), m.mu);
    if (total_d > 1e7) throw std::domain_error("grid_scan: grid larger than 10^7 points");
    size_t total = 1;
    for (int j = 0; j < m.mu; ++j) total *= static_cast<size_t>(q - 1);

    GridScan scan;
    scan.model_id = model_id;
    scan.q = q;
    LaurentMatrix A = alexander_matrix(m);
    auto field = CycField::get(2 * q);  // hosts every reduced grid coordinate

    TorusPoint dummy = TorusPoint::exact({{1, 2}});
    scan.rows.assign(total, {std::vector<long long>(), SignatureResult{0, 0, 0, dummy, true}});
    parallel_for(total, [&](size_t idx) {
        std::vector<long long> ks(static_cast<size_t>(m.mu));
        size_t rest = idx;
        for (int j = m.mu - 1; j >= 0; --j) {
            ks[static_cast<size_t>(j)] = static_cast<long long>(rest % static_cast<size_t>(q - 1)) + 1;
            rest /= static_cast<size_t>(q - 1);
        }
        std::vector<std::pair<long long, long long>> fr;
        fr.reserve(ks.size());
        for (long long k : ks) fr.emplace_back(k, q);
        TorusPoint w = TorusPoint::exact(fr);
        scan.rows[idx] = {ks, signature_prechecked(m, w, kDefaultApproxTol, A, field)};
    });
    return scan;
}

void write_grid_csv(const GridScan& scan, std::ostream& out) {
    if (scan.rows.empty()) {
        out << "q,sigma,eta,raw_nullity,exact\n";
        return;
    }
    size_t mu = scan.rows.front().first.size();
    for (size_t j = 1; j <= mu; ++j) out << 'k' << j << ',';
    out << "q,sigma,eta,raw_nullity,exact\n";
    for (const auto& [ks, s] : scan.rows) {
        for (long long k : ks) out << k << ',';
        out << scan.q << ',' << s.sigma << ',' << s.eta << ',' << s.raw_nullity << ','
            << (s.exact ? 1 : 0) << '\n';
    }
}

}  // namespace clasp
