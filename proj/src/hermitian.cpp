#include "clasp/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace clasp {

HermitianExact::HermitianExact(std::shared_ptr<const CycField> field, int n)
    : field_(std::move(field)), n_(n),
      a_(static_cast<size_t>(n) * n, Cyc(field_)) {
    if (n < 0) throw std::invalid_argument("HermitianExact: negative size");
}

bool HermitianExact::is_hermitian() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (at(j, i) != at(i, j).conj()) return false;
    return true;
}

namespace {

// exact division in Z[zeta]: q = a / b, which must land back in integer
// coordinates (guaranteed by the Bareiss identity)
Cyc divide_integral(const Cyc& a, const Cyc& b_inverse) {
    Cyc q = a * b_inverse;
    for (const Rational& c : q.coeffs())
        if (!c.is_integer())
            throw std::logic_error(
                "signature engine: exact division failed in fraction-free elimination");
    return q;
}

}  // namespace

/*
 * Fraction-free evaluation of the symmetric elimination: the working
 * matrix R equals c * (current Schur complement of H) for a real scalar
 * c tracked only through its sign, with integral entries throughout.
 * Diagonal pivot runs follow the Bareiss recurrence (division by the
 * previous pivot is exact), so a recorded pivot sign is
 * sign(R_kk) * sign(c). Hyperbolic pairs rescale by |a|^2 > 0 and
 * restart the Bareiss chain.
 */
SigNull HermitianExact::signature_nullity() const {
    std::vector<std::vector<Cyc>> h(static_cast<size_t>(n_),
                                    std::vector<Cyc>(static_cast<size_t>(n_), Cyc(field_)));
    // clear all denominators; the global factor is positive so no sign
    // bookkeeping is needed for it
    BigInt denom(1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (const Rational& c : at(i, j).coeffs())
                denom = denom / BigInt::gcd(denom, c.den()) * c.den();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                at(i, j).scaled(Rational(denom));

    std::vector<int> act(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) act[static_cast<size_t>(i)] = i;

    long long pos = 0, neg = 0, nul = 0;
    int scale_sign = 1;
    Cyc prev = Cyc::from_rational(field_, Rational(1));
    int prev_sign = 1;
    bool prev_is_one = true;

    while (!act.empty()) {
        // (a) smallest-index nonzero diagonal pivot
        int pivot = -1;
        for (int idx : act) {
            if (!h[idx][idx].is_zero()) {
                pivot = idx;
                break;
            }
        }
        if (pivot >= 0) {
            const Cyc p = h[pivot][pivot];
            int s_scaled = certified_sign(p);
            if (s_scaled * scale_sign > 0)
                ++pos;
            else
                ++neg;
            act.erase(std::find(act.begin(), act.end(), pivot));
            Cyc prev_inv = prev_is_one ? prev : prev.inverse();
            for (int i : act) {
                for (int j : act) {
                    Cyc num = h[i][j] * p - h[i][pivot] * h[pivot][j];
                    h[i][j] = prev_is_one ? std::move(num) : divide_integral(num, prev_inv);
                }
            }
            // scale picks up p / prev, so its sign flips accordingly
            scale_sign *= s_scaled * prev_sign;
            prev = p;
            prev_sign = s_scaled;
            prev_is_one = false;
            continue;
        }
        // (b) diagonal is zero: take the lexicographically smallest
        // nonzero off-diagonal pair, a hyperbolic summand
        int bi = -1, bj = -1;
        for (size_t x = 0; x < act.size() && bi < 0; ++x)
            for (size_t y = x + 1; y < act.size(); ++y)
                if (!h[act[x]][act[y]].is_zero()) {
                    bi = act[x];
                    bj = act[y];
                    break;
                }
        if (bi < 0) {
            // (c) remaining block is identically zero
            nul += static_cast<long long>(act.size());
            break;
        }
        const Cyc a = h[bi][bj];
        const Cyc abar = a.conj();
        const Cyc norm = a * abar;  // positive real
        ++pos;
        ++neg;
        act.erase(std::find(act.begin(), act.end(), bi));
        act.erase(std::find(act.begin(), act.end(), bj));
        for (int i : act)
            for (int j : act)
                h[i][j] = h[i][j] * norm - h[i][bj] * h[bi][j] * abar - h[i][bi] * h[bj][j] * a;
        // the scale gains |a|^2 > 0: sign unchanged; restart the chain
        prev = Cyc::from_rational(field_, Rational(1));
        prev_sign = 1;
        prev_is_one = true;
    }
    return {pos - neg, nul};
}

// ---------------------------------------------------------------------------

HermitianApprox::HermitianApprox(int n)
    : n_(n), a_(static_cast<size_t>(n) * n, std::complex<double>(0.0, 0.0)) {
    if (n < 0) throw std::invalid_argument("HermitianApprox: negative size");
}

bool HermitianApprox::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs(at(j, i) - std::conj(at(i, j))) > tol) return false;
    return true;
}

namespace {

// plain cyclic Jacobi on a real symmetric matrix; returns the diagonal
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    if (n == 0) return {};
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-300) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

}  // namespace

SigNull HermitianApprox::signature_nullity(double tol) const {
    // realify: [[Re, -Im], [Im, Re]] is symmetric with doubled spectrum
    const size_t n = static_cast<size_t>(n_);
    std::vector<std::vector<double>> s(2 * n, std::vector<double>(2 * n, 0.0));
    double scale = 1.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const std::complex<double>& z = at(static_cast<int>(i), static_cast<int>(j));
            s[i][j] = z.real();
            s[i][n + j] = -z.imag();
            s[n + i][j] = z.imag();
            s[n + i][n + j] = z.real();
            scale = std::max(scale, std::abs(z));
        }
    }
    const double tau = tol * scale;
    std::vector<double> eig = jacobi_eigenvalues(std::move(s));
    long long pos = 0, neg = 0, zero = 0;
    for (double lambda : eig) {
        double m = std::abs(lambda);
        if (m <= tau / 8.0) {
            ++zero;
        } else if (m >= 8.0 * tau) {
            lambda > 0 ? ++pos : ++neg;
        } else {
            throw indeterminate_error(
                "approximate signature: eigenvalue magnitude inside the tolerance gray band");
        }
    }
    if (pos % 2 || neg % 2 || zero % 2)
        throw indeterminate_error("approximate signature: realified spectrum did not pair up");
    return {(pos - neg) / 2, zero / 2};
}

// ---------------------------------------------------------------------------

int HermitianMatrix::size() const {
    return exact() ? exact_matrix().size() : approx_matrix().size();
}

bool HermitianMatrix::is_hermitian() const {
    return exact() ? exact_matrix().is_hermitian() : approx_matrix().is_hermitian(tol_);
}

SigNull HermitianMatrix::signature_nullity() const {
    return exact() ? exact_matrix().signature_nullity()
                   : approx_matrix().signature_nullity(tol_);
}

// ---------------------------------------------------------------------------

HermitianExact apply_hermitian_move(const HermitianExact& h, const HermitianMoveSpec& spec) {
    const int n = h.size();
    if (spec.kind == HermitianMoveSpec::Kind::enlargement) {
        if (spec.alpha.is_zero())
            throw std::invalid_argument("hermitian move: alpha must be nonzero");
        if (static_cast<int>(spec.xi.size()) != n)
            throw std::invalid_argument("hermitian move: xi length must match matrix size");
        HermitianExact r(h.field(), n + 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = h.at(i, j);
        for (int i = 0; i < n; ++i) {
            r.at(i, n) = spec.xi[static_cast<size_t>(i)];
            r.at(n, i) = spec.xi[static_cast<size_t>(i)].conj();
        }
        r.at(n, n) = Cyc::from_rational(h.field(), spec.lambda);
        r.at(n, n + 1) = spec.alpha;
        r.at(n + 1, n) = spec.alpha.conj();
        return r;
    }
    // reduction: verify the enlargement block shape before peeling it
    if (n < 2) throw std::invalid_argument("hermitian move: matrix too small to reduce");
    for (int j = 0; j + 2 < n; ++j)
        if (!h.at(n - 1, j).is_zero())
            throw std::invalid_argument("hermitian move: malformed reduction target");
    if (!h.at(n - 1, n - 1).is_zero() || h.at(n - 1, n - 2).is_zero())
        throw std::invalid_argument("hermitian move: malformed reduction target");
    HermitianExact r(h.field(), n - 2);
    for (int i = 0; i + 2 < n; ++i)
        for (int j = 0; j + 2 < n; ++j) r.at(i, j) = h.at(i, j);
    return r;
}

SigNull integer_symmetric_signature(const std::vector<std::vector<long long>>& m) {
    const int n = static_cast<int>(m.size());
    auto field = CycField::get(1);
    HermitianExact h(field, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("integer signature: matrix is not square");
        for (int j = 0; j < n; ++j)
            h.at(i, j) = Cyc::from_rational(field, Rational(m[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
    if (!h.is_hermitian())
        throw std::invalid_argument("integer signature: matrix is not symmetric");
    return h.signature_nullity();
}

}  // namespace clasp
