#include "clasp/obstructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "clasp/parallel.hpp"

namespace clasp {

bool murasugi_tristram_ok(long long sigma, long long eta, int mu, const SurfaceBudget& budget) {
    return std::llabs(sigma) + std::llabs(eta - mu + 1) <= budget.beta1 + budget.c;
}

namespace {

void require_zero_cross_linking(const ColoredLinkModel& m, const char* who) {
    for (int ci = 1; ci <= m.mu; ++ci)
        for (int cj = ci + 1; cj <= m.mu; ++cj)
            if (m.color_pair_linking(ci, cj) != 0)
                throw std::domain_error(std::string(who) +
                                        ": cross-color linking numbers must vanish for the "
                                        "slice genus to be defined");
}

}  // namespace

long long slice_genus_lower_bound(const ColoredLinkModel& m, const std::vector<TorusPoint>& points,
                                  std::vector<std::string>* skipped) {
    validate_or_throw(m);
    require_zero_cross_linking(m, "slice_genus_lower_bound");
    long long best = 0;
    for (const TorusPoint& w : points) {
        if (!classify(w).in_T_P) {
            if (skipped)
                skipped->push_back("skipped " + w.to_string() +
                                   ": coordinate orders are not powers of one prime");
            continue;
        }
        SignatureResult s = signature(m, w);
        long long bound = std::llabs(s.sigma) - std::min(0ll, s.eta + 1 - m.mu);
        best = std::max(best, bound);
    }
    return best;
}

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_power_conductors(long long max_q) {
    std::vector<long long> out;
    for (long long p = 2; p <= max_q; ++p) {
        if (!is_prime(p)) continue;
        for (long long q = p; q <= max_q; q *= p) {
            out.push_back(q);
            if (q > max_q / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// all grid points (k_1..k_mu) in [1, q-1]^mu whose reduced orders have
// lcm exactly q, in lexicographic order; q is a prime power so this
// dedupes against smaller conductors
template <typename Fn>
void for_each_conductor_point(int mu, long long q, Fn&& fn) {
    std::vector<long long> ks(static_cast<size_t>(mu), 1);
    for (;;) {
        long long lcm_orders = 1;
        for (long long k : ks) {
            long long g = std::gcd(k, q);
            lcm_orders = std::lcm(lcm_orders, q / g);
        }
        if (lcm_orders == q) fn(ks);
        int j = mu - 1;
        while (j >= 0 && ks[static_cast<size_t>(j)] == q - 1) {
            ks[static_cast<size_t>(j)] = 1;
            --j;
        }
        if (j < 0) break;
        ++ks[static_cast<size_t>(j)];
    }
}

}  // namespace

std::vector<ObstructionWitness> slice_obstruction(const ColoredLinkModel& m, long long max_q) {
    validate_or_throw(m);
    if (max_q < 2) throw std::invalid_argument("slice_obstruction: max_q must be at least 2");
    std::vector<ObstructionWitness> out;
    for (long long q : prime_power_conductors(max_q)) {
        std::vector<TorusPoint> pts;
        for_each_conductor_point(m.mu, q, [&](const std::vector<long long>& ks) {
            std::vector<std::pair<long long, long long>> fr;
            for (long long k : ks) fr.emplace_back(k, q);
            pts.push_back(TorusPoint::exact(fr));
        });
        if (pts.size() > 10000000)
            throw std::domain_error("slice_obstruction: scan larger than 10^7 points");
        std::vector<SignatureResult> results(
            pts.size(), SignatureResult{0, 0, 0, TorusPoint::exact({{1, 2}}), true});
        parallel_for(pts.size(), [&](size_t i) { results[i] = signature(m, pts[i]); });
        for (size_t i = 0; i < pts.size(); ++i) {
            const SignatureResult& s = results[i];
            if (s.sigma != 0) {
                out.push_back({pts[i], s.sigma, s.eta, "sigma-nonzero"});
            } else if (s.eta < m.mu - 1) {
                out.push_back({pts[i], s.sigma, s.eta, "eta-too-small"});
            }
        }
    }
    return out;
}

std::vector<ObstructionWitness> slice_obstruction_diagonal(const ColoredLinkModel& m,
                                                           long long max_q) {
    validate_or_throw(m);
    if (max_q < 2) throw std::invalid_argument("slice_obstruction: max_q must be at least 2");
    std::vector<ObstructionWitness> out;
    for (long long q : prime_power_conductors(max_q)) {
        for_each_conductor_point(1, q, [&](const std::vector<long long>& ks) {
            Coord w = make_exact_coord(ks[0], q);
            auto [sigma_lt, eta_lt] = diagonal_specialize(m, w);
            // mu = 1 after full merging: only sigma can obstruct
            if (sigma_lt != 0)
                out.push_back({TorusPoint({w}), sigma_lt, eta_lt, "sigma-nonzero"});
        });
    }
    return out;
}

std::string witnesses_to_json_text(const std::vector<ObstructionWitness>& ws) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ObstructionWitness& w : ws) {
        nlohmann::ordered_json item;
        item["point"] = w.point.to_string();
        item["sigma"] = w.sigma;
        item["eta"] = w.eta;
        item["violated"] = w.violated;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

void validate_surgery(const SurgeryData& s) {
    if (s.nu < 1) throw std::invalid_argument("surgery data: nu must be positive");
    if (static_cast<int>(s.framed_linking.size()) != s.nu)
        throw std::invalid_argument("surgery data: framed linking matrix must be nu x nu");
    for (const auto& row : s.framed_linking)
        if (static_cast<int>(row.size()) != s.nu)
            throw std::invalid_argument("surgery data: framed linking matrix must be nu x nu");
    for (int i = 0; i < s.nu; ++i)
        for (int j = i + 1; j < s.nu; ++j)
            if (s.framed_linking[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                s.framed_linking[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::invalid_argument("surgery data: framed linking matrix must be symmetric");
    if (s.q < 1) throw std::invalid_argument("surgery data: q must be positive");
    if (static_cast<int>(s.n.size()) != s.nu)
        throw std::invalid_argument("surgery data: need one exponent per component");
    for (long long ni : s.n)
        if (std::gcd(ni, s.q) != 1)
            throw std::invalid_argument("surgery data: exponents must be coprime to q");
}

Rational casson_gordon(const SurgeryData& s, long long sigma_L_at) {
    validate_surgery(s);
    long long lk_sum = 0;
    for (int i = 0; i < s.nu; ++i)
        for (int j = i + 1; j < s.nu; ++j)
            lk_sum += s.framed_linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
    SigNull lambda_sig = integer_symmetric_signature(s.framed_linking);

    Rational correction(0);
    for (int i = 0; i < s.nu; ++i)
        for (int j = 0; j < s.nu; ++j) {
            long long lam = s.framed_linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!lam) continue;
            correction += Rational((s.q - s.n[static_cast<size_t>(i)]) * s.n[static_cast<size_t>(j)] * lam);
        }
    correction *= Rational(2, s.q * s.q);
    return Rational(sigma_L_at - lk_sum) - Rational(lambda_sig.sigma) + correction;
}

bool concordance_domain(const TorusPoint& omega) { return classify(omega).in_T_P; }

}  // namespace clasp
