#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clasp/bigint.hpp"

namespace clasp {

/// Exponent vector of a monomial. Entries are DOUBLED so that
/// half-integer powers stay in exact integer arithmetic: the stored
/// value d stands for the power t^(d/2).
using ExpVec = std::vector<int>;

/**
 * LaurentPoly: multivariable Laurent polynomial over the integers in
 * variables t1..tmu, with half-integer exponents supported through the
 * doubled-exponent convention.
 *
 * Terms are kept in a map ordered lexicographically by exponent vector
 * and never carry a zero coefficient, so equal polynomials compare
 * equal structurally. All values are immutable in spirit: operations
 * return new polynomials.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(int num_vars = 1);

    static LaurentPoly constant(int num_vars, BigInt c);
    /// monomial c * t_var^power with an integer power (var is 0-based)
    static LaurentPoly monomial(int num_vars, int var, int power, BigInt c = BigInt(1));
    /// monomial with explicit doubled exponents
    static LaurentPoly term_doubled(int num_vars, ExpVec doubled, BigInt c);
    /// monomial with integer exponents
    static LaurentPoly term(int num_vars, const std::vector<int>& powers, BigInt c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, BigInt>& terms() const { return terms_; }
    /// true if every exponent is integral (all doubled entries even)
    bool has_integer_exponents() const;

    void add_term(const ExpVec& doubled, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// substitution t_i -> t_i^-1 for every variable
    LaurentPoly bar() const;
    /// substitution t_i -> t_i^(1/2); requires integer exponents throughout
    LaurentPoly half_substitution() const;
    /// multiply by the monomial with the given doubled exponents
    LaurentPoly shifted(const ExpVec& doubled) const;

    /**
     * Canonical representative of the equivalence class "equal up to a
     * unit +/- t1^m1...tmu^mmu": minimal exponent 0 in every variable
     * and positive coefficient on the lexicographically largest term.
     */
    LaurentPoly normalize_unit() const;

    /// exact division; nullopt if o does not divide *this
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

    /// per-variable minimum of doubled exponents (poly must be nonzero)
    ExpVec min_exponents() const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& s, int num_vars);

private:
    int num_vars_;
    std::map<ExpVec, BigInt> terms_;
};

/// Dense matrix of Laurent polynomials (row-major).
class LaurentMatrix {
public:
    LaurentMatrix(int rows, int cols, int num_vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    LaurentPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    LaurentMatrix transpose() const;
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    /**
     * Exact determinant by fraction-free Bareiss elimination after
     * clearing per-row monomial denominators. The 0x0 determinant is 1.
     * Throws std::invalid_argument on non-square input.
     */
    LaurentPoly det() const;

private:
    int rows_, cols_, num_vars_;
    std::vector<LaurentPoly> entries_;
};

/**
 * LaurentFraction: a Laurent polynomial divided by a product of factors
 * (t_j - t_j^-1)^e_j. This is the exact shape Conway potentials take;
 * no other denominators are representable. Equality is tested by
 * cross-multiplication.
 */
class LaurentFraction {
public:
    explicit LaurentFraction(int num_vars = 1);
    LaurentFraction(LaurentPoly numerator, std::vector<int> denominator_powers);
    static LaurentFraction from_poly(LaurentPoly p);

    int num_vars() const { return num_.num_vars(); }
    const LaurentPoly& numerator() const { return num_; }
    const std::vector<int>& denominator_powers() const { return den_pows_; }
    LaurentPoly denominator_poly() const;

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);
    friend bool operator!=(const LaurentFraction& a, const LaurentFraction& b) { return !(a == b); }

    /// cancel denominator factors that divide the numerator exactly
    LaurentFraction reduced() const;
    /// substitution t_i -> t_i^(1/2) applied to numerator and denominator
    LaurentFraction half_substitution() const;

    std::string to_string() const;

private:
    LaurentPoly num_;
    std::vector<int> den_pows_;  // one exponent >= 0 per variable
};

/// the factor (t_var - t_var^-1) as a polynomial
LaurentPoly sqrt_diff_factor(int num_vars, int var);

}  // namespace clasp
