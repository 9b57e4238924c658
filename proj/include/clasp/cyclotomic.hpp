#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "clasp/rational.hpp"

namespace clasp {

/**
 * CycField: the cyclotomic field Q(zeta_q), shared immutable context.
 *
 * Elements are represented in the power basis 1, zeta, ..., zeta^(phi(q)-1)
 * modulo the q-th cyclotomic polynomial. The table zeta_pow caches the
 * reduced representation of zeta^j for all j, which drives multiplication
 * reduction, conjugation and embeddings.
 */
class CycField {
public:
    static std::shared_ptr<const CycField> get(long long q);

    long long conductor() const { return q_; }
    int degree() const { return phi_; }
    const std::vector<BigInt>& min_poly() const { return min_poly_; }
    const std::vector<BigInt>& zeta_power(long long j) const;

private:
    long long q_;
    int phi_;
    std::vector<BigInt> min_poly_;               // Phi_q, monic, length phi+1
    std::vector<std::vector<BigInt>> zeta_pow_;  // zeta^j reduced, j in [0, q)

    explicit CycField(long long q);
};

/**
 * Cyc: an element of Q(zeta_q) with exact rational coordinates.
 * Equality, zero tests and conjugation are exact; the numeric sign of a
 * real element is certified by adaptive-precision interval evaluation.
 */
class Cyc {
public:
    Cyc();  // zero in the rational field (q = 1)
    explicit Cyc(std::shared_ptr<const CycField> field);  // zero
    Cyc(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs);

    static Cyc from_rational(std::shared_ptr<const CycField> field, const Rational& r);
    static Cyc zeta_power(std::shared_ptr<const CycField> field, long long k);

    const std::shared_ptr<const CycField>& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    long long conductor() const { return field_->conductor(); }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc scaled(const Rational& r) const;

    /// multiplicative inverse; throws std::domain_error on zero
    Cyc inverse() const;
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    /// complex conjugation zeta -> zeta^(q-1)
    Cyc conj() const;
    bool is_real() const { return conj() == *this; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// embed into Q(zeta_Q) for a conductor multiple Q
    Cyc embed(const std::shared_ptr<const CycField>& bigger) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    std::shared_ptr<const CycField> field_;
    std::vector<Rational> coeffs_;
};

/**
 * Certified sign of a real cyclotomic element: exact symbolic zero test
 * first, then interval evaluation starting at 64 bits and doubling the
 * precision until the enclosure excludes zero. Throws std::logic_error
 * if the element is not real.
 */
int certified_sign(const Cyc& x);

}  // namespace clasp
