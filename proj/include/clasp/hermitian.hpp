#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "clasp/cyclotomic.hpp"

namespace clasp {

/// raised by the approximate engine when an eigenvalue falls in the
/// gray band around the zero tolerance
class indeterminate_error : public std::runtime_error {
public:
    explicit indeterminate_error(const std::string& what) : std::runtime_error(what) {}
};

struct SigNull {
    long long sigma = 0;
    long long nullity = 0;
    friend bool operator==(const SigNull& a, const SigNull& b) {
        return a.sigma == b.sigma && a.nullity == b.nullity;
    }
};

/**
 * Hermitian matrix over a cyclotomic field with exact entries.
 *
 * signature_nullity runs symmetric elimination: pivot on nonzero
 * diagonal entries (each contributes its certified sign), eliminate
 * hyperbolic pairs when the whole diagonal vanishes (signature 0,
 * rank 2), and count what remains as nullity. Every zero test is
 * symbolic, so the counts are provably correct.
 */
class HermitianExact {
public:
    HermitianExact(std::shared_ptr<const CycField> field, int n);

    int size() const { return n_; }
    const std::shared_ptr<const CycField>& field() const { return field_; }

    Cyc& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Cyc& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_hermitian() const;
    SigNull signature_nullity() const;

private:
    std::shared_ptr<const CycField> field_;
    int n_;
    std::vector<Cyc> a_;
};

/// Hermitian matrix with floating entries and a declared tolerance.
class HermitianApprox {
public:
    explicit HermitianApprox(int n);

    int size() const { return n_; }
    std::complex<double>& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    bool is_hermitian(double tol) const;
    /// eigenvalue counts: |lambda| <= tau/8 is zero, |lambda| >= 8*tau is
    /// signed, anything between raises indeterminate_error; tau is tol
    /// scaled by the matrix magnitude
    SigNull signature_nullity(double tol) const;

private:
    int n_;
    std::vector<std::complex<double>> a_;
};

/// the data model's Hermitian value: exact or approximate, with mode flag
class HermitianMatrix {
public:
    HermitianMatrix(HermitianExact m) : m_(std::move(m)), tol_(0.0) {}
    HermitianMatrix(HermitianApprox m, double tol) : m_(std::move(m)), tol_(tol) {}

    bool exact() const { return std::holds_alternative<HermitianExact>(m_); }
    int size() const;
    double tolerance() const { return tol_; }

    const HermitianExact& exact_matrix() const { return std::get<HermitianExact>(m_); }
    const HermitianApprox& approx_matrix() const { return std::get<HermitianApprox>(m_); }

    bool is_hermitian() const;
    SigNull signature_nullity() const;

private:
    std::variant<HermitianExact, HermitianApprox> m_;
    double tol_;
};

/**
 * Elementary enlargement data: appends the bordered block
 *   [[H, xi, 0], [xi*, lambda, alpha], [0, conj(alpha), 0]].
 * A reduction peels such a block off again. Both preserve signature
 * and nullity.
 */
struct HermitianMoveSpec {
    enum class Kind { enlargement, reduction };
    Kind kind = Kind::enlargement;
    std::vector<Cyc> xi;  // length = current size (enlargement only)
    Rational lambda;
    Cyc alpha;  // must be nonzero
};

HermitianExact apply_hermitian_move(const HermitianExact& h, const HermitianMoveSpec& spec);

/// exact signature of an integer symmetric matrix (conductor-1 field)
SigNull integer_symmetric_signature(const std::vector<std::vector<long long>>& m);

}  // namespace clasp
