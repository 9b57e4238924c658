#include "clasp/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clasp {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    unsigned long long m = neg_ ? (~static_cast<unsigned long long>(v) + 1ull)
                                : static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

namespace {

size_t mag_bit_length(const std::vector<uint32_t>& v) {
    if (v.empty()) return 0;
    uint32_t top = v.back();
    size_t bits = (v.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool mag_bit(const std::vector<uint32_t>& v, size_t i) {
    size_t limb = i / 32;
    if (limb >= v.size()) return false;
    return (v[limb] >> (i % 32)) & 1u;
}

void mag_shl1_or(std::vector<uint32_t>& v, bool bit) {
    uint32_t carry = bit ? 1u : 0u;
    for (size_t i = 0; i < v.size(); ++i) {
        uint32_t nc = v[i] >> 31;
        v[i] = (v[i] << 1) | carry;
        carry = nc;
    }
    if (carry) v.push_back(carry);
}

}  // namespace

void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    size_t n = mag_bit_length(a);
    q.assign(a.size(), 0);
    for (size_t i = n; i-- > 0;) {
        mag_shl1_or(r, mag_bit(a, i));
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            neg_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    bool n = neg_ != o.neg_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    neg_ = limbs_.empty() ? false : n;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.limbs_.empty() && a.neg_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt& BigInt::operator<<=(unsigned bits) {
    if (limbs_.empty() || bits == 0) return *this;
    unsigned limb_shift = bits / 32, bit_shift = bits % 32;
    std::vector<uint32_t> r(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        r[i + limb_shift] |= static_cast<uint32_t>(v);
        r[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    limbs_ = std::move(r);
    trim();
    return *this;
}

BigInt& BigInt::operator>>=(unsigned bits) {
    if (limbs_.empty() || bits == 0) return *this;
    unsigned limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        neg_ = false;
        return *this;
    }
    std::vector<uint32_t> r(limbs_.size() - limb_shift, 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
        uint64_t hi = 0;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            hi = static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        r[i] = static_cast<uint32_t>(lo | hi);
    }
    limbs_ = std::move(r);
    trim();
    return *this;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.limbs_.size() <= 2 && b.limbs_.size() <= 2) {
        uint64_t x = a.limbs_[0] | (a.limbs_.size() > 1 ? static_cast<uint64_t>(a.limbs_[1]) << 32 : 0);
        uint64_t y = b.limbs_[0] | (b.limbs_.size() > 1 ? static_cast<uint64_t>(b.limbs_[1]) << 32 : 0);
        while (y) {
            uint64_t t = x % y;
            x = y;
            y = t;
        }
        BigInt r;
        r.limbs_.push_back(static_cast<uint32_t>(x));
        if (x >> 32) r.limbs_.push_back(static_cast<uint32_t>(x >> 32));
        return r;
    }
    // binary gcd, avoids long division
    unsigned shift = 0;
    while (!a.odd() && !b.odd()) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while (!a.odd()) a >>= 1;
    while (!b.is_zero()) {
        while (!b.odd()) b >>= 1;
        if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
        b -= a;
        b.neg_ = false;
    }
    return a << shift;
}

int BigInt::compare(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

size_t BigInt::bit_length() const { return mag_bit_length(limbs_); }

bool BigInt::fits_longlong() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? m <= 0x8000000000000000ull : m <= 0x7fffffffffffffffull;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: value does not fit in long long");
    uint64_t m = 0;
    if (limbs_.size() > 0) m |= limbs_[0];
    if (limbs_.size() > 1) m |= static_cast<uint64_t>(limbs_[1]) << 32;
    return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return neg_ ? -r : r;
}

BigInt BigInt::power_of_two(unsigned bits) {
    BigInt r(1);
    r <<= bits;
    return r;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits in '" + s + "'");
    BigInt r;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: invalid digit in '" + s + "'");
        r *= ten;
        r += BigInt(s[i] - '0');
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

}  // namespace clasp
