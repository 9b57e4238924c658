#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clasp {

/**
 * BigInt: arbitrary-precision signed integer.
 *
 * Sign-magnitude representation with base-2^32 limbs (little-endian).
 * Canonical form: no leading zero limbs, zero is the empty limb vector
 * with a positive sign flag. Division truncates toward zero, so the
 * remainder carries the sign of the dividend. Shifts act on the
 * magnitude (right shift of a negative value rounds toward zero).
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);
    static BigInt power_of_two(unsigned bits);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
    bool is_negative() const { return neg_; }
    bool odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);
    BigInt& operator<<=(unsigned bits);
    BigInt& operator>>=(unsigned bits);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    friend BigInt operator<<(BigInt a, unsigned bits) { return a <<= bits; }
    friend BigInt operator>>(BigInt a, unsigned bits) { return a >>= bits; }

    // quotient truncated toward zero, remainder with sign of the dividend
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);

    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    // number of bits in the magnitude; 0 for zero
    size_t bit_length() const;

    bool fits_longlong() const;
    long long to_longlong() const;  // throws if out of range
    double to_double() const;
    std::string to_string() const;

private:
    std::vector<uint32_t> limbs_;
    bool neg_ = false;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace clasp
