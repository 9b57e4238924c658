#include "clasp/verify.hpp"

#include <sstream>

#include "clasp/conway.hpp"
#include "clasp/eval.hpp"
#include "clasp/invariants.hpp"
#include "clasp/obstructions.hpp"

namespace clasp {

namespace {

// deterministic generator for the randomized suites
struct MiniRng {
    uint64_t state;
    explicit MiniRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

std::string point_string(const std::vector<long long>& ks, long long q) {
    std::ostringstream os;
    for (size_t j = 0; j < ks.size(); ++j) {
        if (j) os << ',';
        os << ks[j] << '/' << q;
    }
    return os.str();
}

size_t grid_index(const std::vector<long long>& ks, long long q) {
    size_t idx = 0;
    for (long long k : ks) idx = idx * static_cast<size_t>(q - 1) + static_cast<size_t>(k - 1);
    return idx;
}

bool same_family(const ColoredLinkModel& a, const ColoredLinkModel& b) {
    return a.mu == b.mu && a.seifert.matrices == b.seifert.matrices && a.linking == b.linking;
}

// certified sign of the real part of a cyclotomic number
int real_part_sign(const Cyc& z) {
    Cyc twice_re = z + z.conj();
    return certified_sign(twice_re);
}

}  // namespace

std::vector<PropertyResult> run_verification(
    const std::vector<std::pair<std::string, ColoredLinkModel>>& models, long long q) {
    std::vector<PropertyResult> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };

    for (const auto& [name, m] : models) {
        std::vector<std::string> bad = validate(m);
        if (!bad.empty()) {
            push(name + ": validation", false, bad.front());
            continue;  // no evaluation on invalid data
        }
        push(name + ": validation", true);

        GridScan scan = grid_scan(m, q, name);
        GridScan mirror_scan = grid_scan(mirror(m), q, name);

        // sigma and eta are invariant under coordinate-wise conjugation
        {
            bool pass = true;
            std::string detail;
            for (const auto& [ks, s] : scan.rows) {
                std::vector<long long> conj_ks(ks.size());
                for (size_t j = 0; j < ks.size(); ++j) conj_ks[j] = q - ks[j];
                const SignatureResult& t = scan.rows[grid_index(conj_ks, q)].second;
                if (t.sigma != s.sigma || t.eta != s.eta) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": conjugation-symmetry", pass, detail);
        }

        // sigma + eta = nu + total linking + 1 (mod 2)
        {
            bool pass = true;
            std::string detail;
            long long rhs = m.nu + m.total_cross_color_linking() + 1;
            for (const auto& [ks, s] : scan.rows) {
                if (((s.sigma + s.eta - rhs) % 2 + 2) % 2 != 0) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": mod2-congruence", pass, detail);
        }

        // mirror image: sigma negates, eta is unchanged
        {
            bool pass = true;
            std::string detail;
            for (size_t i = 0; i < scan.rows.size(); ++i) {
                if (mirror_scan.rows[i].second.sigma != -scan.rows[i].second.sigma ||
                    mirror_scan.rows[i].second.eta != scan.rows[i].second.eta) {
                    pass = false;
                    detail = "counterexample at " + point_string(scan.rows[i].first, q);
                    break;
                }
            }
            push(name + ": mirror-antisymmetry", pass, detail);
        }

        // elementary enlargements leave (sigma, nullity) of H(omega) alone
        {
            bool pass = true;
            std::string detail;
            MiniRng rng(0x5eed0000 + static_cast<uint64_t>(m.mu));
            for (int rep = 0; rep < 5 && pass; ++rep) {
                std::vector<std::pair<long long, long long>> fr;
                long long p2 = rng.range(0, 1) ? 2 : 3;
                long long ord = p2 == 2 ? (rng.range(0, 1) ? 4 : 8) : (rng.range(0, 1) ? 3 : 9);
                for (int j = 0; j < m.mu; ++j) fr.emplace_back(rng.range(1, ord - 1), ord);
                TorusPoint w = TorusPoint::exact(fr);
                HermitianMatrix hm = hermitian_at(m, w);
                const HermitianExact& h = hm.exact_matrix();
                SigNull before = h.signature_nullity();
                HermitianMoveSpec spec;
                spec.kind = HermitianMoveSpec::Kind::enlargement;
                auto f = h.field();
                for (int i = 0; i < h.size(); ++i) {
                    std::vector<Rational> coeffs(static_cast<size_t>(f->degree()));
                    for (auto& c : coeffs) c = Rational(rng.range(-2, 2));
                    spec.xi.emplace_back(f, std::move(coeffs));
                }
                spec.lambda = Rational(rng.range(-3, 3));
                spec.alpha = Cyc::zeta_power(f, rng.range(0, f->conductor() - 1));
                if (apply_hermitian_move(h, spec).signature_nullity() != before) {
                    pass = false;
                    detail = "counterexample at " + w.to_string();
                }
            }
            push(name + ": enlargement-invariance", pass, detail);
        }

        // det A(t) vanishes at omega exactly where H(omega) is singular
        if (m.beta0_S == 1) {
            bool pass = true;
            std::string detail;
            LaurentPoly d = delta0(m);
            for (const auto& [ks, s] : scan.rows) {
                std::vector<std::pair<long long, long long>> fr;
                for (long long k : ks) fr.emplace_back(k, q);
                bool vanishes = eval_exact(d, TorusPoint::exact(fr)).is_zero();
                if (vanishes != (s.raw_nullity >= 1)) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": determinant-nullity-match", pass, detail);
        }

        // eta = 0 iff the potential is nonzero at the half point
        if (m.beta0_S == 1 && m.chi_complement) {
            bool pass = true;
            std::string detail;
            for (const auto& [ks, s] : scan.rows) {
                std::vector<std::pair<long long, long long>> fr;
                for (long long k : ks) fr.emplace_back(k, q);
                TorusPoint w = TorusPoint::exact(fr);
                if ((s.eta == 0) == potential_at(m, w).is_zero()) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": potential-nullity-equivalence", pass, detail);
        }

        // additivity under connected and disjoint self-sums
        {
            bool pass = true;
            std::string detail;
            ColoredLinkModel conn = connected_sum(m, m, 1, 1);
            ColoredLinkModel disj = disjoint_sum(m, m);
            MiniRng rng(0xadd5eed);
            for (int rep = 0; rep < 4 && pass; ++rep) {
                long long k = rng.range(1, q - 1);
                Coord w = make_exact_coord(k, q);
                SignatureResult base = signature(m, TorusPoint::diagonal(w, m.mu));
                SignatureResult c = signature(conn, TorusPoint::diagonal(w, conn.mu));
                if (c.sigma != 2 * base.sigma || c.eta != 2 * base.eta) {
                    pass = false;
                    detail = "connected sum at diagonal " + TorusPoint({w}).to_string();
                    break;
                }
                SignatureResult dj = signature(disj, TorusPoint::diagonal(w, disj.mu));
                if (dj.sigma != 2 * base.sigma || dj.eta != 2 * base.eta + 1) {
                    pass = false;
                    detail = "disjoint sum at diagonal " + TorusPoint({w}).to_string();
                    break;
                }
            }
            push(name + ": sum-additivity", pass, detail);
        }

        // closed forms for recognized bundled models
        if (same_family(m, bundled_model("trefoil"))) {
            bool pass = true;
            std::string detail;
            for (const auto& [ks, s] : scan.rows) {
                long long k = ks[0];
                bool locus = 6 * k == q || 6 * k == 5 * q;
                long long expect_sigma = locus ? -1 : ((6 * k < q || 6 * k > 5 * q) ? 0 : -2);
                long long expect_eta = locus ? 1 : 0;
                if (s.sigma != expect_sigma || s.eta != expect_eta) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": trefoil-closed-form", pass, detail);
        } else if (same_family(m, bundled_model("clasp2"))) {
            bool pass = true;
            std::string detail;
            auto field = CycField::get(2 * q);
            LaurentPoly expr = LaurentPoly::parse("1 - t1 - t2 + t1*t2", 2);
            for (const auto& [ks, s] : scan.rows) {
                TorusPoint w = TorusPoint::exact({{ks[0], q}, {ks[1], q}});
                int sgn = -real_part_sign(eval_exact(expr, w, field));
                long long expect_eta = (2 * (ks[0] + ks[1])) % (2 * q) == q ? 1 : 0;
                if (s.sigma != sgn || s.eta != expect_eta) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": clasp2-closed-form", pass, detail);
        } else if (same_family(m, bundled_model("fox"))) {
            bool pass = true;
            std::string detail;
            auto field = CycField::get(2 * q);
            // (w1 - 1)(conj w2 - 1)(w3 - 1)
            LaurentPoly expr = LaurentPoly::parse("t1*t2^-1*t3 - t1*t2^-1 - t1*t3 - t2^-1*t3"
                                                  " + t1 + t2^-1 + t3 - 1",
                                                  3);
            for (const auto& [ks, s] : scan.rows) {
                TorusPoint w = TorusPoint::exact({{ks[0], q}, {ks[1], q}, {ks[2], q}});
                int sgn = real_part_sign(eval_exact(expr, w, field));
                if (s.sigma != sgn) {
                    pass = false;
                    detail = "counterexample at " + point_string(ks, q);
                    break;
                }
            }
            push(name + ": fox-closed-form", pass, detail);
        }
    }
    return out;
}

}  // namespace clasp
