#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "clasp/bigint.hpp"
#include "clasp/rational.hpp"

namespace clasp {

/**
 * Fixed-point interval scalar: the represented real number lies in
 * [(v - e) / 2^prec, (v + e) / 2^prec]. The precision is carried by the
 * FixedPrec context, not by the value.
 */
struct FBound {
    BigInt v;
    BigInt e;

    /// |v| + e, an upper bound on 2^prec * |x| for any represented x
    BigInt magnitude_bound() const { return v.abs() + e; }
};

/// Interval arithmetic at a fixed binary precision. Every operation
/// accounts for its own rounding, so enclosure is rigorous.
class FixedPrec {
public:
    explicit FixedPrec(unsigned prec) : prec_(prec) {}

    unsigned prec() const { return prec_; }

    FBound from_int(long long x) const { return {BigInt(x) << prec_, BigInt(0)}; }
    FBound from_rational(const Rational& r) const;

    FBound add(const FBound& a, const FBound& b) const { return {a.v + b.v, a.e + b.e}; }
    FBound sub(const FBound& a, const FBound& b) const { return {a.v - b.v, a.e + b.e}; }
    FBound neg(const FBound& a) const { return {-a.v, a.e}; }
    FBound mul(const FBound& a, const FBound& b) const;
    FBound mul_int(const FBound& a, const BigInt& m) const { return {a.v * m, a.e * m.abs()}; }
    FBound div_uint(const FBound& a, unsigned long long d) const;
    FBound mul_rational(const FBound& a, const Rational& r) const;

    /// true when the interval determines the sign; sign_out in {-1,0,+1}
    bool definite_sign(const FBound& a, int& sign_out) const;

    /// pi at this precision (cached globally per precision)
    FBound pi() const;

    /// cos and sin of the angle 2*pi*k/q
    std::pair<FBound, FBound> cos_sin_turn(long long k, long long q) const;

private:
    unsigned prec_;

    FBound arctan_recip(unsigned long long n) const;
    std::pair<FBound, FBound> cos_sin(const FBound& angle) const;
};

/// Shared table of (cos, sin)(2*pi*j/q) for j = 0..q-1, cached per (q, prec).
using CosSinTable = std::vector<std::pair<FBound, FBound>>;
std::shared_ptr<const CosSinTable> cos_sin_table(long long q, unsigned prec);

}  // namespace clasp
