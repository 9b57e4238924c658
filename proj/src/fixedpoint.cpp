#include "clasp/fixedpoint.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace clasp {

namespace {

// ceil(x / 2^p) for x >= 0
BigInt ceil_shift(const BigInt& x, unsigned p) {
    BigInt b = BigInt::power_of_two(p);
    return (x + b - BigInt(1)) >> p;
}

// ceil(x / d) for x >= 0
BigInt ceil_div(const BigInt& x, const BigInt& d) { return (x + d - BigInt(1)) / d; }

}  // namespace

FBound FixedPrec::from_rational(const Rational& r) const {
    BigInt v = (r.num() << prec_) / r.den();
    return {std::move(v), BigInt(1)};
}

FBound FixedPrec::mul(const FBound& a, const FBound& b) const {
    BigInt v = (a.v * b.v) >> prec_;
    BigInt raw = a.v.abs() * b.e + b.v.abs() * a.e + a.e * b.e;
    return {std::move(v), ceil_shift(raw, prec_) + BigInt(2)};
}

FBound FixedPrec::div_uint(const FBound& a, unsigned long long d) const {
    if (d == 0) throw std::domain_error("FixedPrec: division by zero");
    BigInt bd(static_cast<long long>(d));
    return {a.v / bd, ceil_div(a.e, bd) + BigInt(1)};
}

FBound FixedPrec::mul_rational(const FBound& a, const Rational& r) const {
    BigInt v = (a.v * r.num()) / r.den();
    BigInt e = ceil_div(a.e * r.num().abs(), r.den()) + BigInt(1);
    return {std::move(v), std::move(e)};
}

bool FixedPrec::definite_sign(const FBound& a, int& sign_out) const {
    if (a.v > a.e) {
        sign_out = 1;
        return true;
    }
    if (a.v < -a.e) {
        sign_out = -1;
        return true;
    }
    if (a.e.is_zero() && a.v.is_zero()) {
        sign_out = 0;
        return true;
    }
    return false;
}

FBound FixedPrec::arctan_recip(unsigned long long n) const {
    // arctan(1/n) = sum_k (-1)^k / ((2k+1) n^(2k+1)); alternating with
    // decreasing terms, so truncation error is bounded by the next term.
    unsigned long long n2 = n * n;
    FBound power = from_rational(Rational(1, static_cast<long long>(n)));
    FBound sum = power;
    bool subtract = true;
    for (unsigned long long k = 1;; ++k) {
        power = div_uint(power, n2);
        FBound term = div_uint(power, 2 * k + 1);
        sum = subtract ? this->sub(sum, term) : add(sum, term);
        subtract = !subtract;
        // term values shrink to zero; the error component plateaus near
        // one ulp, so the exit test must look at the value alone
        if (term.v.abs() <= BigInt(2)) {
            sum.e += term.magnitude_bound() + BigInt(2);
            break;
        }
    }
    return sum;
}

FBound FixedPrec::pi() const {
    static std::mutex mtx;
    static std::map<unsigned, FBound> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(prec_);
        if (it != cache.end()) return it->second;
    }
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    FBound value = sub(mul_int(arctan_recip(5), BigInt(16)),
                       mul_int(arctan_recip(239), BigInt(4)));
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(prec_, value);
    return value;
}

std::pair<FBound, FBound> FixedPrec::cos_sin(const FBound& angle) const {
    // Taylor series; |angle| < 2*pi keeps the term peak small enough
    // that the working precision absorbs it.
    FBound a2 = mul(angle, angle);
    FBound cos_sum = from_int(1);
    FBound cos_term = from_int(1);
    FBound sin_sum = angle;
    FBound sin_term = angle;
    bool subtract = true;
    for (unsigned long long j = 1;; ++j) {
        cos_term = div_uint(mul(cos_term, a2), (2 * j - 1) * (2 * j));
        sin_term = div_uint(mul(sin_term, a2), (2 * j) * (2 * j + 1));
        cos_sum = subtract ? sub(cos_sum, cos_term) : add(cos_sum, cos_term);
        sin_sum = subtract ? sub(sin_sum, sin_term) : add(sin_sum, sin_term);
        subtract = !subtract;
        if (j >= 7 && cos_term.v.abs() <= BigInt(2) && sin_term.v.abs() <= BigInt(2)) {
            // past j = 7 consecutive term ratios are below 1/2 (the angle
            // is under 2*pi), so the tail is bounded by twice the last term
            cos_sum.e += (cos_term.magnitude_bound() << 1) + BigInt(2);
            sin_sum.e += (sin_term.magnitude_bound() << 1) + BigInt(2);
            break;
        }
    }
    return {cos_sum, sin_sum};
}

std::pair<FBound, FBound> FixedPrec::cos_sin_turn(long long k, long long q) const {
    if (q <= 0) throw std::domain_error("FixedPrec: nonpositive order");
    k %= q;
    if (k < 0) k += q;
    FBound angle = div_uint(mul_int(pi(), BigInt(2 * k)), static_cast<unsigned long long>(q));
    return cos_sin(angle);
}

std::shared_ptr<const CosSinTable> cos_sin_table(long long q, unsigned prec) {
    static std::mutex mtx;
    static std::map<std::pair<long long, unsigned>, std::shared_ptr<const CosSinTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({q, prec});
        if (it != cache.end()) return it->second;
    }
    FixedPrec ctx(prec);
    auto table = std::make_shared<CosSinTable>();
    table->reserve(static_cast<size_t>(q));
    for (long long j = 0; j < q; ++j) table->push_back(ctx.cos_sin_turn(j, q));
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(q, prec), table);
    return cache[{q, prec}];
}

}  // namespace clasp
