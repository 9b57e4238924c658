#include "clasp/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace clasp {

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("LaurentPoly: need at least one variable");
}

LaurentPoly LaurentPoly::constant(int num_vars, BigInt c) {
    LaurentPoly p(num_vars);
    p.add_term(ExpVec(num_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, int var, int power, BigInt c) {
    ExpVec e(num_vars, 0);
    e.at(var) = 2 * power;
    return term_doubled(num_vars, std::move(e), std::move(c));
}

LaurentPoly LaurentPoly::term_doubled(int num_vars, ExpVec doubled, BigInt c) {
    if (static_cast<int>(doubled.size()) != num_vars)
        throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    LaurentPoly p(num_vars);
    p.add_term(doubled, c);
    return p;
}

LaurentPoly LaurentPoly::term(int num_vars, const std::vector<int>& powers, BigInt c) {
    ExpVec e(powers.size());
    for (size_t i = 0; i < powers.size(); ++i) e[i] = 2 * powers[i];
    return term_doubled(num_vars, std::move(e), std::move(c));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
}

bool LaurentPoly::has_integer_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int d : e)
            if (d % 2 != 0) return false;
    return true;
}

void LaurentPoly::add_term(const ExpVec& doubled, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(doubled);
    if (it == terms_.end()) {
        terms_.emplace(doubled, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("LaurentPoly: variable count mismatch");
    LaurentPoly r(a.num_vars_);
    ExpVec e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.num_vars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(num_vars_);
    ExpVec e(num_vars_);
    for (const auto& [ea, c] : terms_) {
        for (int v = 0; v < num_vars_; ++v) e[v] = -ea[v];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::half_substitution() const {
    LaurentPoly r(num_vars_);
    ExpVec e(num_vars_);
    for (const auto& [ea, c] : terms_) {
        for (int v = 0; v < num_vars_; ++v) {
            if (ea[v] % 2 != 0)
                throw std::domain_error(
                    "LaurentPoly: half substitution needs integer exponents");
            e[v] = ea[v] / 2;
        }
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& doubled) const {
    if (static_cast<int>(doubled.size()) != num_vars_)
        throw std::invalid_argument("LaurentPoly: shift vector length mismatch");
    LaurentPoly r(num_vars_);
    ExpVec e(num_vars_);
    for (const auto& [ea, c] : terms_) {
        for (int v = 0; v < num_vars_; ++v) e[v] = ea[v] + doubled[v];
        r.terms_.emplace(e, c);
    }
    return r;
}

ExpVec LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: min_exponents of zero");
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int v = 0; v < num_vars_; ++v) m[v] = std::min(m[v], e[v]);
    return m;
}

LaurentPoly LaurentPoly::normalize_unit() const {
    if (is_zero()) return *this;
    ExpVec m = min_exponents();
    for (int& d : m) d = -d;
    LaurentPoly r = shifted(m);
    if (r.terms_.rbegin()->second.is_negative()) r = -r;
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
    if (o.is_zero()) throw std::domain_error("LaurentPoly: division by zero polynomial");
    if (is_zero()) return LaurentPoly(num_vars_);
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("LaurentPoly: variable count mismatch");

    // Clear monomial denominators; divisibility is unaffected because
    // monomials are units of the Laurent ring.
    ExpVec ma = min_exponents(), mb = o.min_exponents();
    ExpVec neg_ma = ma, neg_mb = mb;
    for (int& d : neg_ma) d = -d;
    for (int& d : neg_mb) d = -d;
    LaurentPoly rem = shifted(neg_ma);
    LaurentPoly den = o.shifted(neg_mb);

    const ExpVec& lead_den = den.terms_.rbegin()->first;
    const BigInt& lead_den_c = den.terms_.rbegin()->second;
    LaurentPoly quot(num_vars_);
    ExpVec diff(num_vars_);
    while (!rem.is_zero()) {
        const ExpVec& lead = rem.terms_.rbegin()->first;
        const BigInt& lead_c = rem.terms_.rbegin()->second;
        for (int v = 0; v < num_vars_; ++v) {
            diff[v] = lead[v] - lead_den[v];
            if (diff[v] < 0) return std::nullopt;
        }
        BigInt q, r;
        BigInt::divmod(lead_c, lead_den_c, q, r);
        if (!r.is_zero()) return std::nullopt;
        quot.add_term(diff, q);
        rem -= den * term_doubled(num_vars_, diff, q);
    }
    ExpVec back(num_vars_);
    for (int v = 0; v < num_vars_; ++v) back[v] = ma[v] - mb[v];
    return quot.shifted(back);
}

// ---------------------------------------------------------------------------
// printing / parsing

namespace {

void append_exponent(std::ostringstream& os, int doubled) {
    if (doubled == 2) return;  // power 1
    os << '^';
    if (doubled % 2 == 0) {
        os << doubled / 2;
    } else {
        os << '(' << doubled << "/2)";
    }
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lexicographic order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExpVec& e = it->first;
        BigInt c = it->second;
        bool negative = c.is_negative();
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        BigInt mag = negative ? -c : c;

        bool any_var = std::any_of(e.begin(), e.end(), [](int d) { return d != 0; });
        if (!any_var) {
            os << mag.to_string();
            continue;
        }
        bool printed = false;
        if (!mag.is_one()) {
            os << mag.to_string();
            printed = true;
        }
        for (int v = 0; v < num_vars_; ++v) {
            if (e[v] == 0) continue;
            if (printed) os << '*';
            os << 't' << (v + 1);
            append_exponent(os, e[v]);
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("LaurentPoly parse error at position " + std::to_string(i) +
                                    ": " + what);
    }
};

long long read_integer(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '-' || c.peek() == '+') {
        neg = c.s[c.i] == '-';
        ++c.i;
    }
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        c.fail("expected digits");
    long long v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + (c.s[c.i] - '0');
        if (v > (1ll << 40)) c.fail("integer too large");
        ++c.i;
    }
    return neg ? -v : v;
}

// exponent after '^': integer, or (p/q) with q in {1,2}; returns doubled value
int read_exponent(Cursor& c) {
    if (c.peek() == '(') {
        ++c.i;
        long long p = read_integer(c);
        long long q = 1;
        if (c.peek() == '/') {
            ++c.i;
            q = read_integer(c);
        }
        if (c.peek() != ')') c.fail("expected ')' in exponent");
        ++c.i;
        if (q != 1 && q != 2) c.fail("exponent denominator must be 1 or 2");
        return static_cast<int>(q == 1 ? 2 * p : p);
    }
    return static_cast<int>(2 * read_integer(c));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s, int num_vars) {
    LaurentPoly result(num_vars);
    Cursor c{s};
    if (c.done()) c.fail("empty input");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = p == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();

        BigInt coeff(1);
        bool saw_factor = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = BigInt(read_integer(c));
            saw_factor = true;
            if (c.peek() == '*') ++c.i;
        }
        ExpVec e(num_vars, 0);
        while (c.peek() == 't') {
            ++c.i;
            long long var = read_integer(c);
            if (var < 1 || var > num_vars) c.fail("variable index out of range");
            int doubled = 2;
            if (c.peek() == '^') {
                ++c.i;
                doubled = read_exponent(c);
            }
            e[static_cast<size_t>(var - 1)] += doubled;
            saw_factor = true;
            if (c.peek() == '*') {
                ++c.i;
                if (c.peek() != 't') c.fail("expected variable after '*'");
            }
        }
        if (!saw_factor) c.fail("expected a term");
        if (sign < 0) coeff = -coeff;
        result.add_term(e, coeff);
    }
    return result;
}

// ---------------------------------------------------------------------------
// matrices

LaurentMatrix::LaurentMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars),
      entries_(static_cast<size_t>(rows) * cols, LaurentPoly(num_vars)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("LaurentMatrix: negative dimension");
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(cols_, rows_, num_vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_ || a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("LaurentMatrix: dimension mismatch in product");
    LaurentMatrix r(a.rows_, b.cols_, a.num_vars_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.num_vars_ == b.num_vars_ &&
           a.entries_ == b.entries_;
}

LaurentPoly LaurentMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("LaurentMatrix: determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return LaurentPoly::constant(num_vars_, BigInt(1));

    // Clear per-row monomial denominators; each clears contributes a unit
    // factor to the determinant that is restored at the end.
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(num_vars_)));
    ExpVec restore(num_vars_, 0);
    for (int i = 0; i < n; ++i) {
        bool all_zero = true;
        ExpVec row_min;
        for (int j = 0; j < n; ++j) {
            if (!at(i, j).is_zero()) {
                ExpVec mj = at(i, j).min_exponents();
                if (all_zero) {
                    row_min = mj;
                } else {
                    for (int v = 0; v < num_vars_; ++v) row_min[v] = std::min(row_min[v], mj[v]);
                }
                all_zero = false;
            }
        }
        if (all_zero) return LaurentPoly(num_vars_);
        ExpVec neg = row_min;
        for (int& d : neg) d = -d;
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j).shifted(neg);
        for (int v = 0; v < num_vars_; ++v) restore[v] += row_min[v];
    }

    // fraction-free Bareiss elimination
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(num_vars_, BigInt(1));
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r][k].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return LaurentPoly(num_vars_);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly numer = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = numer.divide_exact(prev);
                if (!q)
                    throw std::logic_error(
                        "LaurentMatrix: exact division failed in fraction-free elimination");
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly(num_vars_);
        }
        prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1].shifted(restore);
    return sign < 0 ? -d : d;
}

// ---------------------------------------------------------------------------
// fractions

LaurentPoly sqrt_diff_factor(int num_vars, int var) {
    LaurentPoly p = LaurentPoly::monomial(num_vars, var, 1);
    p -= LaurentPoly::monomial(num_vars, var, -1);
    return p;
}

LaurentFraction::LaurentFraction(int num_vars)
    : num_(num_vars), den_pows_(static_cast<size_t>(num_vars), 0) {}

LaurentFraction::LaurentFraction(LaurentPoly numerator, std::vector<int> denominator_powers)
    : num_(std::move(numerator)), den_pows_(std::move(denominator_powers)) {
    if (static_cast<int>(den_pows_.size()) != num_.num_vars())
        throw std::invalid_argument("LaurentFraction: denominator power count mismatch");
    for (int e : den_pows_)
        if (e < 0) throw std::invalid_argument("LaurentFraction: negative denominator power");
}

LaurentFraction LaurentFraction::from_poly(LaurentPoly p) {
    int nv = p.num_vars();
    return LaurentFraction(std::move(p), std::vector<int>(static_cast<size_t>(nv), 0));
}

LaurentPoly LaurentFraction::denominator_poly() const {
    LaurentPoly d = LaurentPoly::constant(num_.num_vars(), BigInt(1));
    for (int v = 0; v < num_.num_vars(); ++v)
        for (int k = 0; k < den_pows_[v]; ++k) d *= sqrt_diff_factor(num_.num_vars(), v);
    return d;
}

bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    if (a.num_vars() != b.num_vars()) return false;
    return a.num_ * b.denominator_poly() == b.num_ * a.denominator_poly();
}

LaurentFraction LaurentFraction::reduced() const {
    LaurentFraction r = *this;
    if (r.num_.is_zero()) {
        std::fill(r.den_pows_.begin(), r.den_pows_.end(), 0);
        return r;
    }
    for (int v = 0; v < num_.num_vars(); ++v) {
        LaurentPoly f = sqrt_diff_factor(num_.num_vars(), v);
        while (r.den_pows_[v] > 0) {
            auto q = r.num_.divide_exact(f);
            if (!q) break;
            r.num_ = std::move(*q);
            --r.den_pows_[v];
        }
    }
    return r;
}

std::string LaurentFraction::to_string() const {
    bool trivial_den =
        std::all_of(den_pows_.begin(), den_pows_.end(), [](int e) { return e == 0; });
    if (trivial_den) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + denominator_poly().to_string() + ")";
}

}  // namespace clasp
