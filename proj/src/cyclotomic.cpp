#include "clasp/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "clasp/fixedpoint.hpp"

namespace clasp {

namespace {

// exact division of integer polynomials (little-endian coefficients),
// divisor monic or with invertible leading behaviour guaranteed by caller
std::vector<BigInt> int_poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    while (!num.empty() && num.back().is_zero()) num.pop_back();
    std::vector<BigInt> d = den;
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    if (d.empty()) throw std::domain_error("cyclotomic: division by zero polynomial");
    if (num.size() < d.size()) throw std::logic_error("cyclotomic: inexact polynomial division");
    std::vector<BigInt> q(num.size() - d.size() + 1, BigInt(0));
    for (size_t k = q.size(); k-- > 0;) {
        BigInt qc, rc;
        BigInt::divmod(num[k + d.size() - 1], d.back(), qc, rc);
        if (!rc.is_zero()) throw std::logic_error("cyclotomic: inexact polynomial division");
        q[k] = qc;
        for (size_t j = 0; j < d.size(); ++j) num[k + j] -= qc * d[j];
    }
    for (const BigInt& c : num)
        if (!c.is_zero()) throw std::logic_error("cyclotomic: inexact polynomial division");
    return q;
}

std::vector<BigInt> cyclotomic_poly(long long n);

// Phi_n via (x^n - 1) / prod of Phi_d over proper divisors d | n
std::vector<BigInt> cyclotomic_poly_uncached(long long n) {
    std::vector<BigInt> num(static_cast<size_t>(n) + 1, BigInt(0));
    num[0] = BigInt(-1);
    num[static_cast<size_t>(n)] = BigInt(1);
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = int_poly_divide_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

std::vector<BigInt> cyclotomic_poly(long long n) {
    static std::mutex mtx;
    static std::map<long long, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // computed outside the lock: the recursion over divisors retakes it
    std::vector<BigInt> phi = cyclotomic_poly_uncached(n);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, phi);
    return phi;
}

}  // namespace

CycField::CycField(long long q) : q_(q) {
    if (q < 1) throw std::invalid_argument("CycField: conductor must be positive");
    min_poly_ = cyclotomic_poly(q);
    phi_ = static_cast<int>(min_poly_.size()) - 1;

    // zeta^j reduced mod Phi_q, computed by repeated multiplication by x
    zeta_pow_.reserve(static_cast<size_t>(q));
    std::vector<BigInt> cur(static_cast<size_t>(phi_), BigInt(0));
    cur[0] = BigInt(1);
    for (long long j = 0; j < q; ++j) {
        zeta_pow_.push_back(cur);
        // multiply by x
        BigInt top = cur.back();
        for (size_t i = cur.size(); i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = BigInt(0);
        if (!top.is_zero()) {
            // x^phi = -(Phi - x^phi)
            for (int i = 0; i < phi_; ++i) cur[static_cast<size_t>(i)] -= top * min_poly_[static_cast<size_t>(i)];
        }
    }
}

std::shared_ptr<const CycField> CycField::get(long long q) {
    static std::mutex mtx;
    static std::map<long long, std::shared_ptr<const CycField>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto field = std::shared_ptr<const CycField>(new CycField(q));
    cache.emplace(q, field);
    return field;
}

const std::vector<BigInt>& CycField::zeta_power(long long j) const {
    j %= q_;
    if (j < 0) j += q_;
    return zeta_pow_[static_cast<size_t>(j)];
}

// ---------------------------------------------------------------------------

Cyc::Cyc() : Cyc(CycField::get(1)) {}

Cyc::Cyc(std::shared_ptr<const CycField> field)
    : field_(std::move(field)), coeffs_(static_cast<size_t>(field_->degree()), Rational(0)) {}

Cyc::Cyc(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_->degree())
        throw std::invalid_argument("Cyc: coefficient vector length mismatch");
}

Cyc Cyc::from_rational(std::shared_ptr<const CycField> field, const Rational& r) {
    Cyc x(std::move(field));
    x.coeffs_[0] = r;
    return x;
}

Cyc Cyc::zeta_power(std::shared_ptr<const CycField> field, long long k) {
    const std::vector<BigInt>& rep = field->zeta_power(k);
    Cyc x(field);
    for (size_t i = 0; i < rep.size(); ++i) x.coeffs_[i] = Rational(rep[i]);
    return x;
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyc::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyc: element is not rational");
    // for q <= 2 the basis is {1}; otherwise coeff 0 is the rational part
    return coeffs_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (field_->conductor() != o.field_->conductor())
        throw std::invalid_argument("Cyc: conductor mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (field_->conductor() != o.field_->conductor())
        throw std::invalid_argument("Cyc: conductor mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.field_->conductor() != b.field_->conductor())
        throw std::invalid_argument("Cyc: conductor mismatch");
    const int phi = a.field_->degree();
    std::vector<Rational> conv(static_cast<size_t>(2 * phi - 1), Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            conv[static_cast<size_t>(i + j)] +=
                a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
        }
    }
    Cyc r(a.field_);
    for (int k = 0; k < phi; ++k) r.coeffs_[static_cast<size_t>(k)] = conv[static_cast<size_t>(k)];
    for (int k = phi; k < 2 * phi - 1; ++k) {
        const Rational& c = conv[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        const std::vector<BigInt>& rep = a.field_->zeta_power(k);
        for (int i = 0; i < phi; ++i) {
            if (rep[static_cast<size_t>(i)].is_zero()) continue;
            r.coeffs_[static_cast<size_t>(i)] += c * Rational(rep[static_cast<size_t>(i)]);
        }
    }
    return r;
}

Cyc Cyc::scaled(const Rational& r) const {
    Cyc x = *this;
    for (Rational& c : x.coeffs_) c *= r;
    return x;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
    const int phi = field_->degree();
    if (phi == 1) {
        Cyc r(field_);
        r.coeffs_[0] = Rational(1) / coeffs_[0];
        return r;
    }
    // Solve M y = e_0 where M is multiplication by (D * this) with the
    // denominators D cleared; fraction-free Bareiss keeps everything in
    // integers, which avoids the coefficient blowup of a rational Euclid.
    const long long q = field_->conductor();
    BigInt D(1);
    for (const Rational& c : coeffs_) D = D / BigInt::gcd(D, c.den()) * c.den();
    std::vector<BigInt> a(static_cast<size_t>(phi));
    for (int i = 0; i < phi; ++i)
        a[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)].num() *
                                    (D / coeffs_[static_cast<size_t>(i)].den());

    std::vector<std::vector<BigInt>> M(static_cast<size_t>(phi),
                                       std::vector<BigInt>(static_cast<size_t>(phi), BigInt(0)));
    for (int j = 0; j < phi; ++j) {
        for (int i = 0; i < phi; ++i) {
            if (a[static_cast<size_t>(i)].is_zero()) continue;
            const std::vector<BigInt>& rep = field_->zeta_power((i + j) % q);
            for (int r = 0; r < phi; ++r) {
                if (rep[static_cast<size_t>(r)].is_zero()) continue;
                M[static_cast<size_t>(r)][static_cast<size_t>(j)] +=
                    a[static_cast<size_t>(i)] * rep[static_cast<size_t>(r)];
            }
        }
    }
    std::vector<BigInt> rhs(static_cast<size_t>(phi), BigInt(0));
    rhs[0] = BigInt(1);

    BigInt prev(1);
    for (int k = 0; k + 1 < phi; ++k) {
        int pivot = -1;
        for (int r = k; r < phi; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("Cyc: singular multiplication matrix");
        if (pivot != k) {
            std::swap(M[static_cast<size_t>(pivot)], M[static_cast<size_t>(k)]);
            std::swap(rhs[static_cast<size_t>(pivot)], rhs[static_cast<size_t>(k)]);
        }
        const BigInt& pk = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < phi; ++i) {
            for (int j = k + 1; j < phi; ++j) {
                BigInt num = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * pk -
                             M[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                 M[static_cast<size_t>(k)][static_cast<size_t>(j)];
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
            }
            BigInt numb = rhs[static_cast<size_t>(i)] * pk -
                          M[static_cast<size_t>(i)][static_cast<size_t>(k)] * rhs[static_cast<size_t>(k)];
            rhs[static_cast<size_t>(i)] = numb / prev;
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] = BigInt(0);
        }
        prev = pk;
    }
    if (M[static_cast<size_t>(phi - 1)][static_cast<size_t>(phi - 1)].is_zero())
        throw std::logic_error("Cyc: singular multiplication matrix");

    std::vector<Rational> y(static_cast<size_t>(phi));
    for (int k = phi - 1; k >= 0; --k) {
        Rational acc(rhs[static_cast<size_t>(k)]);
        for (int j = k + 1; j < phi; ++j)
            acc -= Rational(M[static_cast<size_t>(k)][static_cast<size_t>(j)]) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(k)] = acc / Rational(M[static_cast<size_t>(k)][static_cast<size_t>(k)]);
    }
    Cyc out(field_, std::move(y));
    return out.scaled(Rational(D));
}

Cyc Cyc::conj() const {
    const long long q = field_->conductor();
    Cyc r(field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        long long j = (q - (static_cast<long long>(i) % q)) % q;
        const std::vector<BigInt>& rep = field_->zeta_power(j);
        for (size_t k = 0; k < rep.size(); ++k) {
            if (rep[k].is_zero()) continue;
            r.coeffs_[k] += coeffs_[i] * Rational(rep[k]);
        }
    }
    return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
    return a.field_->conductor() == b.field_->conductor() && a.coeffs_ == b.coeffs_;
}

Cyc Cyc::embed(const std::shared_ptr<const CycField>& bigger) const {
    const long long q = field_->conductor();
    const long long Q = bigger->conductor();
    if (Q % q != 0) throw std::invalid_argument("Cyc: embedding needs a conductor multiple");
    const long long step = Q / q;
    Cyc r(bigger);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const std::vector<BigInt>& rep = bigger->zeta_power(static_cast<long long>(i) * step);
        for (size_t k = 0; k < rep.size(); ++k) {
            if (rep[k].is_zero()) continue;
            r.coeffs_[k] += coeffs_[i] * Rational(rep[k]);
        }
    }
    return r;
}

std::complex<double> Cyc::to_complex() const {
    const double q = static_cast<double>(field_->conductor());
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        double angle = 2.0 * M_PI * static_cast<double>(i) / q;
        acc += coeffs_[i].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].to_string();
    }
    os << ") mod Phi_" << field_->conductor();
    return os.str();
}

int certified_sign(const Cyc& x) {
    if (x.is_zero()) return 0;
    if (!x.is_real()) throw std::logic_error("certified_sign: element is not real");
    if (x.is_rational()) return x.rational_value().sign();
    const long long q = x.conductor();
    for (unsigned prec = 64; prec <= (1u << 16); prec *= 2) {
        FixedPrec ctx(prec);
        auto table = cos_sin_table(q, prec);
        FBound acc = ctx.from_int(0);
        // x is real, so its value equals the sum of coeff * cos parts
        for (size_t i = 0; i < x.coeffs().size(); ++i) {
            const Rational& c = x.coeffs()[i];
            if (c.is_zero()) continue;
            acc = ctx.add(acc, ctx.mul_rational((*table)[i].first, c));
        }
        int s;
        if (ctx.definite_sign(acc, s)) return s;
    }
    throw std::logic_error("certified_sign: precision bound exceeded");
}

}  // namespace clasp
