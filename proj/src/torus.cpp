#include "clasp/torus.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clasp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long long lcm_checked(long long a, long long b) {
    long long g = std::gcd(a, b);
    long long r = a / g;
    if (r > 1000000 / b)
        throw std::domain_error("TorusPoint: conductor too large for exact evaluation");
    return r * b;
}

}  // namespace

Coord make_exact_coord(long long k, long long q) {
    if (q <= 0) throw std::invalid_argument("TorusPoint: order must be positive");
    k %= q;
    if (k < 0) k += q;
    if (k == 0) throw std::domain_error("TorusPoint: coordinate 1 is excluded from T^mu_*");
    long long g = std::gcd(k, q);
    return ExactCoord{k / g, q / g};
}

Coord make_approx_coord(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("TorusPoint: non-finite angle");
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    if (theta == 0.0)
        throw std::domain_error("TorusPoint: coordinate 1 is excluded from T^mu_*");
    return ApproxCoord{theta};
}

TorusPoint::TorusPoint(std::vector<Coord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("TorusPoint: empty coordinate list");
}

TorusPoint TorusPoint::exact(const std::vector<std::pair<long long, long long>>& fractions) {
    std::vector<Coord> cs;
    cs.reserve(fractions.size());
    for (const auto& [k, q] : fractions) cs.push_back(make_exact_coord(k, q));
    return TorusPoint(std::move(cs));
}

TorusPoint TorusPoint::diagonal(const Coord& c, int mu) {
    if (mu < 1) throw std::invalid_argument("TorusPoint: mu must be positive");
    return TorusPoint(std::vector<Coord>(static_cast<size_t>(mu), c));
}

bool TorusPoint::all_exact() const {
    for (const Coord& c : coords_)
        if (!std::holds_alternative<ExactCoord>(c)) return false;
    return true;
}

long long TorusPoint::order(int j) const {
    const Coord& c = coord(j);
    if (const auto* e = std::get_if<ExactCoord>(&c)) return e->q;
    throw std::domain_error("TorusPoint: order of an approximate coordinate");
}

long long TorusPoint::conductor() const {
    long long l = 1;
    for (int j = 0; j < mu(); ++j) l = lcm_checked(l, order(j));
    return l;
}

TorusPoint TorusPoint::half() const {
    std::vector<Coord> cs;
    cs.reserve(coords_.size());
    for (const Coord& c : coords_) {
        if (const auto* e = std::get_if<ExactCoord>(&c)) {
            cs.push_back(make_exact_coord(e->k, 2 * e->q));
        } else {
            cs.push_back(ApproxCoord{std::get<ApproxCoord>(c).theta / 2.0});
        }
    }
    return TorusPoint(std::move(cs));
}

TorusPoint TorusPoint::conjugate() const {
    std::vector<Coord> cs;
    cs.reserve(coords_.size());
    for (const Coord& c : coords_) {
        if (const auto* e = std::get_if<ExactCoord>(&c)) {
            cs.push_back(make_exact_coord(e->q - e->k, e->q));
        } else {
            cs.push_back(ApproxCoord{kTwoPi - std::get<ApproxCoord>(c).theta});
        }
    }
    return TorusPoint(std::move(cs));
}

TorusPoint TorusPoint::drop_last() const {
    if (coords_.size() < 2)
        throw std::domain_error("TorusPoint: cannot drop the only coordinate");
    return TorusPoint(std::vector<Coord>(coords_.begin(), coords_.end() - 1));
}

double TorusPoint::angle(int j) const {
    const Coord& c = coord(j);
    if (const auto* e = std::get_if<ExactCoord>(&c))
        return kTwoPi * static_cast<double>(e->k) / static_cast<double>(e->q);
    return std::get<ApproxCoord>(c).theta;
}

std::complex<double> TorusPoint::value(int j) const {
    double t = angle(j);
    return {std::cos(t), std::sin(t)};
}

std::string TorusPoint::to_string() const {
    std::ostringstream os;
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (j) os << ',';
        if (const auto* e = std::get_if<ExactCoord>(&coords_[j])) {
            os << e->k << '/' << e->q;
        } else {
            os << '~' << std::get<ApproxCoord>(coords_[j]).theta;
        }
    }
    return os.str();
}

TorusPoint TorusPoint::parse(const std::string& text) {
    std::vector<Coord> cs;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        // trim
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("TorusPoint: empty coordinate in '" + text + "'");
        token = token.substr(a, b - a + 1);
        if (token[0] == '~') {
            cs.push_back(make_approx_coord(std::stod(token.substr(1))));
        } else {
            size_t slash = token.find('/');
            if (slash == std::string::npos)
                throw std::invalid_argument(
                    "TorusPoint: expected k/q or ~radians, got '" + token + "'");
            long long k = std::stoll(token.substr(0, slash));
            long long q = std::stoll(token.substr(slash + 1));
            cs.push_back(make_exact_coord(k, q));
        }
    }
    if (cs.empty()) throw std::invalid_argument("TorusPoint: no coordinates in '" + text + "'");
    return TorusPoint(std::move(cs));
}

namespace {

// the unique p with n = p^a, or 0 if n is not a prime power
long long prime_power_base(long long n) {
    if (n < 2) return 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1 ? p : 0;
        }
    }
    return n;  // n itself prime
}

}  // namespace

Classification classify(const TorusPoint& omega) {
    Classification c;
    c.in_T_star = true;  // enforced at construction
    c.in_T_Q = omega.all_exact();
    if (!c.in_T_Q) return c;
    c.conductor = omega.conductor();
    long long base = 0;
    bool prime_powers = true;
    for (int j = 0; j < omega.mu(); ++j) {
        long long p = prime_power_base(omega.order(j));
        if (p == 0) {
            prime_powers = false;
            break;
        }
        if (base == 0) base = p;
        if (p != base) {
            prime_powers = false;
            break;
        }
    }
    c.in_T_P = prime_powers;
    return c;
}

}  // namespace clasp
