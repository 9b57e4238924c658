#pragma once

// Shared helpers for the test suites: a deterministic RNG and small
// generators for random polynomials, matrices and torus points.

#include <cstdint>
#include <vector>

#include "clasp/laurent.hpp"
#include "clasp/torus.hpp"

namespace clasp_test {

// splitmix64: deterministic across platforms
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

inline clasp::LaurentPoly random_poly(Rng& rng, int num_vars, int max_terms, int max_deg,
                                      bool half_exponents = false) {
    clasp::LaurentPoly p(num_vars);
    long long terms = rng.range(0, max_terms);
    for (long long t = 0; t < terms; ++t) {
        clasp::ExpVec e(static_cast<size_t>(num_vars));
        for (int v = 0; v < num_vars; ++v) {
            long long d = rng.range(-max_deg, max_deg);
            e[static_cast<size_t>(v)] = static_cast<int>(half_exponents ? d : 2 * d);
        }
        long long c = rng.range(-5, 5);
        p.add_term(e, clasp::BigInt(c));
    }
    return p;
}

inline clasp::LaurentMatrix random_matrix(Rng& rng, int n, int num_vars, int max_deg) {
    clasp::LaurentMatrix m(n, n, num_vars);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, num_vars, 3, max_deg);
    return m;
}

// cofactor-expansion determinant: the independent oracle for Bareiss
inline clasp::LaurentPoly det_cofactor(const clasp::LaurentMatrix& m) {
    const int n = m.rows();
    if (n == 0) return clasp::LaurentPoly::constant(m.num_vars(), clasp::BigInt(1));
    if (n == 1) return m.at(0, 0);
    clasp::LaurentPoly acc(m.num_vars());
    for (int k = 0; k < n; ++k) {
        if (m.at(0, k).is_zero()) continue;
        clasp::LaurentMatrix sub(n - 1, n - 1, m.num_vars());
        for (int i = 1; i < n; ++i) {
            int cj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                sub.at(i - 1, cj++) = m.at(i, j);
            }
        }
        clasp::LaurentPoly term = m.at(0, k) * det_cofactor(sub);
        if (k % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// random point with prime-power coordinate orders, all powers of one prime
inline clasp::TorusPoint random_prime_power_point(Rng& rng, int mu) {
    static const long long primes[] = {2, 3, 5};
    long long p = primes[rng.range(0, 2)];
    std::vector<std::pair<long long, long long>> fr;
    for (int j = 0; j < mu; ++j) {
        long long a = rng.range(1, p == 2 ? 3 : 2);
        long long q = 1;
        for (long long i = 0; i < a; ++i) q *= p;
        long long k = rng.range(1, q - 1);
        fr.emplace_back(k, q);
    }
    return clasp::TorusPoint::exact(fr);
}

// coordinates share one order so the evaluation conductor stays small
inline clasp::TorusPoint random_exact_point(Rng& rng, int mu, long long max_q = 40) {
    long long q = rng.range(2, max_q);
    std::vector<std::pair<long long, long long>> fr;
    for (int j = 0; j < mu; ++j) fr.emplace_back(rng.range(1, q - 1), q);
    return clasp::TorusPoint::exact(fr);
}

}  // namespace clasp_test
