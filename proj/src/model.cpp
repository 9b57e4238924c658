#include "clasp/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace clasp {

const IntMatrix& SeifertFamily::at(const std::string& eps) const {
    auto it = matrices.find(eps);
    if (it == matrices.end())
        throw std::invalid_argument("SeifertFamily: no matrix for sign vector \"" + eps + "\"");
    return it->second;
}

std::vector<std::string> sign_strings(int mu) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(1) << mu);
    for (unsigned mask = 0; mask < (1u << mu); ++mask) {
        std::string s(static_cast<size_t>(mu), '+');
        for (int i = 0; i < mu; ++i)
            if (mask & (1u << i)) s[static_cast<size_t>(i)] = '-';
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string flip_sign(const std::string& eps, int coord) {
    std::string s = eps;
    s.at(static_cast<size_t>(coord)) = s[static_cast<size_t>(coord)] == '+' ? '-' : '+';
    return s;
}

std::string negate_sign(const std::string& eps) {
    std::string s = eps;
    for (char& c : s) c = c == '+' ? '-' : '+';
    return s;
}

long long ColoredLinkModel::color_pair_linking(int ci, int cj) const {
    long long total = 0;
    for (int a = 0; a < nu; ++a)
        for (int b = 0; b < nu; ++b)
            if (colors[static_cast<size_t>(a)] == ci && colors[static_cast<size_t>(b)] == cj)
                total += linking[static_cast<size_t>(a)][static_cast<size_t>(b)];
    return total;
}

long long ColoredLinkModel::total_cross_color_linking() const {
    long long total = 0;
    for (int ci = 1; ci <= mu; ++ci)
        for (int cj = ci + 1; cj <= mu; ++cj) total += color_pair_linking(ci, cj);
    return total;
}

namespace {

IntMatrix transpose_int(const IntMatrix& m) {
    if (m.empty()) return m;
    IntMatrix t(m[0].size(), std::vector<long long>(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

bool is_square(const IntMatrix& m, int n) {
    if (static_cast<int>(m.size()) != n) return false;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) return false;
    return true;
}

}  // namespace

std::vector<std::string> validate(const ColoredLinkModel& m) {
    std::vector<std::string> bad;
    if (m.mu < 1) bad.push_back("mu must be positive");
    if (m.nu < 1) bad.push_back("nu must be positive");
    if (m.beta0_S < 1) bad.push_back("beta0_S must be positive");
    if (m.clasp_count < 0) bad.push_back("clasp_count must be non-negative");
    if (!bad.empty()) return bad;

    if (static_cast<int>(m.colors.size()) != m.nu) {
        bad.push_back("colors must list one color per component");
    } else {
        std::vector<bool> seen(static_cast<size_t>(m.mu), false);
        for (int c : m.colors) {
            if (c < 1 || c > m.mu) {
                bad.push_back("color values must lie in 1..mu");
                break;
            }
            seen[static_cast<size_t>(c - 1)] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            bad.push_back("colors must be surjective onto 1..mu");
    }

    if (!is_square(m.linking, m.nu)) {
        bad.push_back("linking_matrix must be nu x nu");
    } else {
        for (int i = 0; i < m.nu; ++i) {
            if (m.linking[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
                bad.push_back("linking_matrix diagonal must vanish");
            for (int j = i + 1; j < m.nu; ++j)
                if (m.linking[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                    m.linking[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    bad.push_back("linking_matrix must be symmetric");
        }
    }

    if (m.seifert.mu != m.mu) bad.push_back("seifert family color count must equal mu");
    std::vector<std::string> expected = sign_strings(m.mu);
    if (m.seifert.matrices.size() != expected.size())
        bad.push_back("seifert family must have exactly 2^mu matrices");
    bool keys_ok = true;
    for (const std::string& eps : expected) {
        if (!m.seifert.matrices.count(eps)) {
            bad.push_back("seifert family missing sign vector \"" + eps + "\"");
            keys_ok = false;
        }
    }
    if (keys_ok) {
        for (const auto& [eps, mat] : m.seifert.matrices) {
            if (!is_square(mat, m.seifert.n)) {
                bad.push_back("seifert matrix \"" + eps + "\" must be n x n");
                keys_ok = false;
            }
        }
    }
    if (keys_ok) {
        for (const std::string& eps : expected) {
            if (m.seifert.at(negate_sign(eps)) != transpose_int(m.seifert.at(eps))) {
                bad.push_back("transpose symmetry violated: A^" + negate_sign(eps) +
                              " != transpose(A^" + eps + ")");
                break;
            }
        }
    }

    // clasp parity constraint for connected C-complexes
    if (m.beta0_S == 1 && bad.empty() &&
        ((m.clasp_count - m.total_cross_color_linking()) % 2 + 2) % 2 != 0)
        bad.push_back("clasp_count parity disagrees with the total cross-color linking");

    if (m.chi_complement && static_cast<int>(m.chi_complement->size()) != m.mu)
        bad.push_back("chi_complement must have one entry per color");
    if (m.basis_split) {
        if (static_cast<int>(m.basis_split->size()) != m.mu) {
            bad.push_back("basis_split must have one entry per color");
        } else {
            long long sum = 0;
            for (int v : *m.basis_split) {
                if (v < 0) bad.push_back("basis_split entries must be non-negative");
                sum += v;
            }
            if (sum > m.seifert.n)
                bad.push_back("basis_split entries exceed the matrix size");
        }
    }
    return bad;
}

void validate_or_throw(const ColoredLinkModel& m) {
    std::vector<std::string> bad = validate(m);
    if (!bad.empty()) throw std::invalid_argument("invalid model: " + bad.front());
}

ColoredLinkModel mirror(const ColoredLinkModel& m) {
    ColoredLinkModel r = m;
    for (auto& [eps, mat] : r.seifert.matrices)
        for (auto& row : mat)
            for (long long& x : row) x = -x;
    for (auto& row : r.linking)
        for (long long& x : row) x = -x;
    return r;
}

ColoredLinkModel reverse_color(const ColoredLinkModel& m, int color) {
    if (color < 1 || color > m.mu)
        throw std::invalid_argument("reverse_color: color index out of range");
    ColoredLinkModel r = m;
    // re-key the family: the reversed complex satisfies A'^eps = A^(eps with
    // coordinate flipped)
    for (auto& [eps, mat] : r.seifert.matrices)
        mat = m.seifert.at(flip_sign(eps, color - 1));
    // linking with components of other colors is negated
    for (int a = 0; a < m.nu; ++a)
        for (int b = 0; b < m.nu; ++b) {
            bool a_in = m.colors[static_cast<size_t>(a)] == color;
            bool b_in = m.colors[static_cast<size_t>(b)] == color;
            if (a_in != b_in)
                r.linking[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    -m.linking[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
    return r;
}

namespace {

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    size_t na = a.size(), nb = b.size();
    IntMatrix r(na + nb, std::vector<long long>(na + nb, 0));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) r[i][j] = a[i][j];
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j) r[na + i][na + j] = b[i][j];
    return r;
}

}  // namespace

ColoredLinkModel connected_sum(const ColoredLinkModel& a, const ColoredLinkModel& b,
                               int shared_color_of_a, int shared_color_of_b) {
    if (shared_color_of_a < 1 || shared_color_of_a > a.mu)
        throw std::invalid_argument("connected_sum: color index of the first model out of range");
    if (shared_color_of_b < 1 || shared_color_of_b > b.mu)
        throw std::invalid_argument("connected_sum: color index of the second model out of range");

    ColoredLinkModel r;
    r.mu = a.mu + b.mu - 1;

    // colors of b are renamed: the shared color folds onto a's, the rest
    // are appended after a's colors preserving their order
    std::vector<int> bmap(static_cast<size_t>(b.mu) + 1, 0);
    int next = a.mu + 1;
    for (int c = 1; c <= b.mu; ++c)
        bmap[static_cast<size_t>(c)] = c == shared_color_of_b ? shared_color_of_a : next++;

    // the first component of the shared color on each side is glued
    int glue_a = -1, glue_b = -1;
    for (int i = 0; i < a.nu; ++i)
        if (a.colors[static_cast<size_t>(i)] == shared_color_of_a) {
            glue_a = i;
            break;
        }
    for (int i = 0; i < b.nu; ++i)
        if (b.colors[static_cast<size_t>(i)] == shared_color_of_b) {
            glue_b = i;
            break;
        }
    if (glue_a < 0 || glue_b < 0)
        throw std::invalid_argument("connected_sum: shared color has no component");

    r.nu = a.nu + b.nu - 1;
    r.colors = a.colors;
    std::vector<int> b_index(static_cast<size_t>(b.nu), -1);  // new index of b's components
    for (int i = 0; i < b.nu; ++i) {
        if (i == glue_b) {
            b_index[static_cast<size_t>(i)] = glue_a;
            continue;
        }
        b_index[static_cast<size_t>(i)] = static_cast<int>(r.colors.size());
        r.colors.push_back(bmap[static_cast<size_t>(b.colors[static_cast<size_t>(i)])]);
    }

    r.linking.assign(static_cast<size_t>(r.nu), std::vector<long long>(static_cast<size_t>(r.nu), 0));
    for (int i = 0; i < a.nu; ++i)
        for (int j = 0; j < a.nu; ++j)
            r.linking[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < b.nu; ++i)
        for (int j = 0; j < b.nu; ++j) {
            if (i == j) continue;
            int ni = b_index[static_cast<size_t>(i)];
            int nj = b_index[static_cast<size_t>(j)];
            r.linking[static_cast<size_t>(ni)][static_cast<size_t>(nj)] +=
                b.linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }

    r.seifert.mu = r.mu;
    r.seifert.n = a.seifert.n + b.seifert.n;
    for (const std::string& eps : sign_strings(r.mu)) {
        std::string eps_a = eps.substr(0, static_cast<size_t>(a.mu));
        std::string eps_b(static_cast<size_t>(b.mu), '+');
        for (int c = 1; c <= b.mu; ++c)
            eps_b[static_cast<size_t>(c - 1)] = eps[static_cast<size_t>(bmap[static_cast<size_t>(c)] - 1)];
        r.seifert.matrices[eps] = block_diag(a.seifert.at(eps_a), b.seifert.at(eps_b));
    }

    r.beta0_S = a.beta0_S + b.beta0_S - 1;
    r.clasp_count = a.clasp_count + b.clasp_count;
    // chi(S \ S_j) and basis splits are not derivable for the band sum
    r.chi_complement.reset();
    r.basis_split.reset();
    return r;
}

ColoredLinkModel disjoint_sum(const ColoredLinkModel& a, const ColoredLinkModel& b) {
    ColoredLinkModel r;
    r.mu = a.mu + b.mu;
    r.nu = a.nu + b.nu;
    r.colors = a.colors;
    for (int c : b.colors) r.colors.push_back(c + a.mu);
    r.linking = block_diag(a.linking, b.linking);

    r.seifert.mu = r.mu;
    r.seifert.n = a.seifert.n + b.seifert.n;
    for (const std::string& eps : sign_strings(r.mu)) {
        std::string eps_a = eps.substr(0, static_cast<size_t>(a.mu));
        std::string eps_b = eps.substr(static_cast<size_t>(a.mu));
        r.seifert.matrices[eps] = block_diag(a.seifert.at(eps_a), b.seifert.at(eps_b));
    }

    r.beta0_S = a.beta0_S + b.beta0_S;
    r.clasp_count = a.clasp_count + b.clasp_count;
    r.chi_complement.reset();
    r.basis_split.reset();
    return r;
}

namespace {

// shared body of the T1/T2 generators; picker(eps) is the pi/delta flag
ColoredLinkModel family_enlargement_impl(const ColoredLinkModel& m,
                                         const std::function<bool(const std::string&)>& positive,
                                         const std::map<std::string, std::vector<long long>>& u,
                                         long long w, long long clasp_delta,
                                         const std::vector<bool>& chi_touched) {
    const int n = m.seifert.n;
    ColoredLinkModel r = m;
    r.seifert.n = n + 2;
    for (const std::string& eps : sign_strings(m.mu)) {
        const IntMatrix& base = m.seifert.at(eps);
        auto it_u = u.find(eps);
        auto it_v = u.find(negate_sign(eps));
        std::vector<long long> col(static_cast<size_t>(n), 0);
        std::vector<long long> row(static_cast<size_t>(n), 0);
        if (it_u != u.end()) {
            if (static_cast<int>(it_u->second.size()) != n)
                throw std::invalid_argument("family enlargement: column length must be n");
            col = it_u->second;
        }
        if (it_v != u.end()) {
            if (static_cast<int>(it_v->second.size()) != n)
                throw std::invalid_argument("family enlargement: column length must be n");
            row = it_v->second;
        }
        IntMatrix big(static_cast<size_t>(n + 2), std::vector<long long>(static_cast<size_t>(n + 2), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                big[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    base[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i) {
            big[static_cast<size_t>(i)][static_cast<size_t>(n)] = col[static_cast<size_t>(i)];
            big[static_cast<size_t>(n)][static_cast<size_t>(i)] = row[static_cast<size_t>(i)];
        }
        big[static_cast<size_t>(n)][static_cast<size_t>(n)] = w;
        big[static_cast<size_t>(n)][static_cast<size_t>(n + 1)] = positive(negate_sign(eps)) ? 1 : 0;
        big[static_cast<size_t>(n + 1)][static_cast<size_t>(n)] = positive(eps) ? 1 : 0;
        r.seifert.matrices[eps] = std::move(big);
    }
    r.clasp_count += clasp_delta;
    // the move hangs new material on the touched surfaces; every other
    // complement loses two Euler characteristic units
    if (r.chi_complement) {
        for (int j = 0; j < m.mu; ++j)
            if (!chi_touched[static_cast<size_t>(j)]) (*r.chi_complement)[static_cast<size_t>(j)] -= 2;
    }
    // the appended generators break the ordered-basis assumption
    r.basis_split.reset();
    return r;
}

}  // namespace

ColoredLinkModel family_enlargement_t1(const ColoredLinkModel& m, int color,
                                       const std::map<std::string, std::vector<long long>>& u,
                                       long long w) {
    if (color < 1 || color > m.mu)
        throw std::invalid_argument("family enlargement: color index out of range");
    std::vector<bool> touched(static_cast<size_t>(m.mu), false);
    touched[static_cast<size_t>(color - 1)] = true;
    return family_enlargement_impl(
        m, [color](const std::string& eps) { return eps[static_cast<size_t>(color - 1)] == '+'; },
        u, w, 0, touched);
}

ColoredLinkModel family_enlargement_t2(const ColoredLinkModel& m, int color_j, int color_k,
                                       const std::map<std::string, std::vector<long long>>& u,
                                       long long w) {
    if (color_j < 1 || color_j > m.mu || color_k < 1 || color_k > m.mu || color_j == color_k)
        throw std::invalid_argument("family enlargement: need two distinct colors in range");
    std::vector<bool> touched(static_cast<size_t>(m.mu), false);
    touched[static_cast<size_t>(color_j - 1)] = true;
    touched[static_cast<size_t>(color_k - 1)] = true;
    return family_enlargement_impl(
        m,
        [color_j, color_k](const std::string& eps) {
            return eps[static_cast<size_t>(color_j - 1)] == '+' &&
                   eps[static_cast<size_t>(color_k - 1)] == '+';
        },
        u, w, 2, touched);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw std::runtime_error("model schema error at " + path + ": " + what);
}

IntMatrix read_int_matrix(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of rows");
    IntMatrix m;
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array()) schema_error(path + "/" + std::to_string(i), "expected a row array");
        std::vector<long long> r;
        for (size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_number_integer())
                schema_error(path + "/" + std::to_string(i) + "/" + std::to_string(k),
                             "expected an integer");
            r.push_back(row[k].get<long long>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

ColoredLinkModel model_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("model schema error: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) schema_error("/", "expected a JSON object");

    ColoredLinkModel m;
    auto require = [&](const char* key) -> const ordered_json& {
        if (!j.contains(key)) schema_error("/", std::string("missing key \"") + key + "\"");
        return j.at(key);
    };
    if (!require("mu").is_number_integer()) schema_error("/mu", "expected an integer");
    m.mu = j.at("mu").get<int>();
    if (m.mu < 1) schema_error("/mu", "must be positive");
    if (!require("nu").is_number_integer()) schema_error("/nu", "expected an integer");
    m.nu = j.at("nu").get<int>();
    if (!require("colors").is_array()) schema_error("/colors", "expected an array");
    for (const auto& c : j.at("colors")) {
        if (!c.is_number_integer()) schema_error("/colors", "expected integers");
        m.colors.push_back(c.get<int>());
    }
    m.linking = read_int_matrix(require("linking_matrix"), "/linking_matrix");
    if (!require("beta0_S").is_number_integer()) schema_error("/beta0_S", "expected an integer");
    m.beta0_S = j.at("beta0_S").get<int>();
    if (!require("clasp_count").is_number_integer())
        schema_error("/clasp_count", "expected an integer");
    m.clasp_count = j.at("clasp_count").get<long long>();

    const auto& chi = require("chi_complement");
    if (!chi.is_null()) {
        if (!chi.is_array()) schema_error("/chi_complement", "expected an array or null");
        std::vector<long long> v;
        for (const auto& x : chi) {
            if (!x.is_number_integer()) schema_error("/chi_complement", "expected integers");
            v.push_back(x.get<long long>());
        }
        m.chi_complement = std::move(v);
    }
    const auto& split = require("basis_split");
    if (!split.is_null()) {
        if (!split.is_array()) schema_error("/basis_split", "expected an array or null");
        std::vector<int> v;
        for (const auto& x : split) {
            if (!x.is_number_integer()) schema_error("/basis_split", "expected integers");
            v.push_back(x.get<int>());
        }
        m.basis_split = std::move(v);
    }

    const auto& fam = require("seifert");
    if (!fam.is_object()) schema_error("/seifert", "expected an object");
    m.seifert.mu = m.mu;
    for (const std::string& eps : sign_strings(m.mu)) {
        if (!fam.contains(eps))
            schema_error("/seifert", "missing sign vector \"" + eps + "\"");
        m.seifert.matrices[eps] = read_int_matrix(fam.at(eps), "/seifert/" + eps);
    }
    for (const auto& [key, value] : fam.items()) {
        (void)value;
        if (static_cast<int>(key.size()) != m.mu ||
            key.find_first_not_of("+-") != std::string::npos)
            schema_error("/seifert", "unexpected key \"" + key + "\"");
    }
    m.seifert.n = static_cast<int>(m.seifert.matrices.begin()->second.size());
    return m;
}

std::string model_to_json_text(const ColoredLinkModel& m) {
    ordered_json j;
    j["mu"] = m.mu;
    j["nu"] = m.nu;
    j["colors"] = m.colors;
    j["linking_matrix"] = m.linking;
    j["beta0_S"] = m.beta0_S;
    j["clasp_count"] = m.clasp_count;
    if (m.chi_complement)
        j["chi_complement"] = *m.chi_complement;
    else
        j["chi_complement"] = nullptr;
    if (m.basis_split)
        j["basis_split"] = *m.basis_split;
    else
        j["basis_split"] = nullptr;
    ordered_json fam = ordered_json::object();
    for (const std::string& eps : sign_strings(m.mu)) fam[eps] = m.seifert.at(eps);
    j["seifert"] = fam;
    return j.dump(2) + "\n";
}

ColoredLinkModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json_text(buf.str());
}

void save_model(const ColoredLinkModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << model_to_json_text(m);
}

// ---------------------------------------------------------------------------
// bundled examples

namespace {

ColoredLinkModel make_unknot() {
    ColoredLinkModel m;
    m.mu = 1;
    m.nu = 1;
    m.colors = {1};
    m.linking = {{0}};
    m.beta0_S = 1;
    m.clasp_count = 0;
    m.chi_complement = std::vector<long long>{0};
    m.seifert.mu = 1;
    m.seifert.n = 0;
    m.seifert.matrices["+"] = {};
    m.seifert.matrices["-"] = {};
    return m;
}

ColoredLinkModel make_hopf1() {
    // positive Hopf link with both components of color 1; V = (-1)
    ColoredLinkModel m;
    m.mu = 1;
    m.nu = 2;
    m.colors = {1, 1};
    m.linking = {{0, 1}, {1, 0}};
    m.beta0_S = 1;
    m.clasp_count = 0;
    m.chi_complement = std::vector<long long>{0};
    m.seifert.mu = 1;
    m.seifert.n = 1;
    m.seifert.matrices["-"] = {{-1}};
    m.seifert.matrices["+"] = {{-1}};
    return m;
}

ColoredLinkModel make_hopf2() {
    // 2-colored positive Hopf link; its C-complex is contractible
    ColoredLinkModel m;
    m.mu = 2;
    m.nu = 2;
    m.colors = {1, 2};
    m.linking = {{0, 1}, {1, 0}};
    m.beta0_S = 1;
    m.clasp_count = 1;
    m.chi_complement = std::vector<long long>{1, 1};
    m.basis_split = std::vector<int>{0, 0};
    m.seifert.mu = 2;
    m.seifert.n = 0;
    for (const std::string& eps : sign_strings(2)) m.seifert.matrices[eps] = {};
    return m;
}

ColoredLinkModel make_trefoil() {
    // right-hand trefoil, V = [[-1, 1], [0, -1]]
    ColoredLinkModel m;
    m.mu = 1;
    m.nu = 1;
    m.colors = {1};
    m.linking = {{0}};
    m.beta0_S = 1;
    m.clasp_count = 0;
    m.chi_complement = std::vector<long long>{0};
    m.seifert.mu = 1;
    m.seifert.n = 2;
    m.seifert.matrices["-"] = {{-1, 1}, {0, -1}};
    m.seifert.matrices["+"] = {{-1, 0}, {1, -1}};
    return m;
}

ColoredLinkModel make_clasp2() {
    // 2-colored link bounding two disks clasped twice, A^eps = (-1) when
    // eps_1 = eps_2 and (0) otherwise
    ColoredLinkModel m;
    m.mu = 2;
    m.nu = 2;
    m.colors = {1, 2};
    m.linking = {{0, 2}, {2, 0}};
    m.beta0_S = 1;
    m.clasp_count = 2;  // parity-consistent value, not printed in the source data
    m.chi_complement = std::vector<long long>{1, 1};
    m.basis_split = std::vector<int>{0, 0};
    m.seifert.mu = 2;
    m.seifert.n = 1;
    m.seifert.matrices["++"] = {{-1}};
    m.seifert.matrices["--"] = {{-1}};
    m.seifert.matrices["+-"] = {{0}};
    m.seifert.matrices["-+"] = {{0}};
    return m;
}

ColoredLinkModel make_threecolor() {
    // 3-colored link whose C-complex retracts to a circle through three
    // pairwise clasps; the single loop links its pushoff once only for
    // unanimous sign vectors
    ColoredLinkModel m;
    m.mu = 3;
    m.nu = 3;
    m.colors = {1, 2, 3};
    m.linking = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    m.beta0_S = 1;
    m.clasp_count = 3;
    m.chi_complement = std::vector<long long>{1, 1, 1};
    m.seifert.mu = 3;
    m.seifert.n = 1;
    for (const std::string& eps : sign_strings(3)) m.seifert.matrices[eps] = {{0}};
    m.seifert.matrices["+++"] = {{1}};
    m.seifert.matrices["---"] = {{1}};
    return m;
}

ColoredLinkModel make_fox() {
    // 3-colored slice example: A^eps = (-1) iff eps = (+,-,+) up to global
    // negation; pairwise linking numbers split the inferred total -1
    ColoredLinkModel m;
    m.mu = 3;
    m.nu = 3;
    m.colors = {1, 2, 3};
    m.linking = {{0, 1, -1}, {1, 0, -1}, {-1, -1, 0}};
    m.beta0_S = 1;
    m.clasp_count = 3;
    m.chi_complement = std::vector<long long>{1, 1, 1};
    m.seifert.mu = 3;
    m.seifert.n = 1;
    for (const std::string& eps : sign_strings(3)) m.seifert.matrices[eps] = {{0}};
    m.seifert.matrices["+-+"] = {{-1}};
    m.seifert.matrices["-+-"] = {{-1}};
    return m;
}

}  // namespace

std::vector<std::string> bundled_model_names() {
    return {"unknot", "hopf1", "hopf2", "trefoil", "clasp2", "threecolor", "fox"};
}

ColoredLinkModel bundled_model(const std::string& name) {
    if (name == "unknot") return make_unknot();
    if (name == "hopf1") return make_hopf1();
    if (name == "hopf2") return make_hopf2();
    if (name == "trefoil") return make_trefoil();
    if (name == "clasp2") return make_clasp2();
    if (name == "threecolor") return make_threecolor();
    if (name == "fox") return make_fox();
    throw std::invalid_argument("unknown bundled model: " + name);
}

}  // namespace clasp
