#include "clasp/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clasp/conway.hpp"
#include "clasp/invariants.hpp"
#include "clasp/model.hpp"
#include "clasp/obstructions.hpp"
#include "clasp/verify.hpp"

namespace clasp {

namespace {

// --model accepts a JSON path or the name of a bundled example
ColoredLinkModel resolve_model(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good()) return load_model(spec);
    for (const std::string& name : bundled_model_names())
        if (name == spec) return bundled_model(name);
    throw std::runtime_error("cannot open model file: " + spec);
}

SurgeryData load_surgery(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open surgery file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("surgery file is not valid JSON: ") + e.what());
    }
    SurgeryData s;
    if (!j.contains("framed_linking") || !j["framed_linking"].is_array())
        throw std::runtime_error("surgery file: missing framed_linking matrix");
    for (const auto& row : j["framed_linking"]) {
        std::vector<long long> r;
        for (const auto& x : row) r.push_back(x.get<long long>());
        s.framed_linking.push_back(std::move(r));
    }
    s.nu = static_cast<int>(s.framed_linking.size());
    if (!j.contains("q")) throw std::runtime_error("surgery file: missing q");
    s.q = j["q"].get<long long>();
    if (!j.contains("n") || !j["n"].is_array())
        throw std::runtime_error("surgery file: missing exponent list n");
    for (const auto& x : j["n"]) s.n.push_back(x.get<long long>());
    return s;
}

void print_signature_line(std::ostream& out, const SignatureResult& s) {
    out << "sigma=" << s.sigma << " eta=" << s.eta << " exact=" << (s.exact ? "true" : "false")
        << "\n";
}

std::ostream& open_sink(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty()) return fallback;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write output file: " + path);
    return file;
}

void print_matrix(std::ostream& out, const LaurentMatrix& m) {
    out << "rows=" << m.rows() << " cols=" << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        out << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << m.at(i, j).to_string();
        }
        out << "]\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signatures and nullities of colored links from Seifert matrix data"};
    app.require_subcommand(1);

    std::string model_path, omega_spec, out_path, surgery_path;
    long long q = 8, max_q = 8;
    double approx_tol = kDefaultApproxTol;
    bool diagonal_scan = false;
    long long sigma_in = 0;
    bool sigma_given = false;
    std::vector<std::string> verify_models;
    std::string emit_name;

    CLI::App* eval = app.add_subcommand("eval", "signature and nullity at a torus point");
    eval->add_option("--model", model_path, "model JSON file or bundled name")->required();
    eval->add_option("--omega", omega_spec, "torus point, e.g. 1/2,1/4 or ~0.785")->required();
    eval->add_option("--approx-tol", approx_tol, "tolerance for approximate points");

    CLI::App* grid = app.add_subcommand("grid", "scan the full grid of q-th roots");
    grid->add_option("--model", model_path)->required();
    grid->add_option("--q", q, "grid order")->required();
    grid->add_option("--out", out_path, "CSV output path (default: stdout)");

    CLI::App* delta = app.add_subcommand("delta", "determinant of the Alexander matrix");
    delta->add_option("--model", model_path)->required();

    CLI::App* presentation =
        app.add_subcommand("presentation", "presentation matrix of the Alexander module");
    presentation->add_option("--model", model_path)->required();

    CLI::App* potential_cmd = app.add_subcommand("potential", "Conway potential function");
    potential_cmd->add_option("--model", model_path)->required();

    CLI::App* obstruct = app.add_subcommand("obstruct", "scan for slice obstructions");
    obstruct->add_option("--model", model_path)->required();
    obstruct->add_option("--max-q", max_q, "largest prime-power conductor")->required();
    obstruct->add_flag("--diagonal", diagonal_scan, "scan the underlying 1-colored link");
    obstruct->add_option("--out", out_path, "JSON output path (default: stdout)");

    CLI::App* casson = app.add_subcommand("casson-gordon", "Casson-Gordon surgery invariant");
    casson->add_option("--surgery", surgery_path, "surgery data JSON")->required();
    casson->add_option("--model", model_path, "model to evaluate sigma_L at the character point");
    casson->add_option("--sigma", sigma_in, "externally computed sigma_L value")
        ->each([&](const std::string&) { sigma_given = true; });

    CLI::App* merge = app.add_subcommand("merge", "merge the last two colors at a point");
    merge->add_option("--model", model_path)->required();
    merge->add_option("--omega", omega_spec, "point with equal last coordinates")->required();

    CLI::App* diagonal =
        app.add_subcommand("diagonal", "Levine-Tristram data of the underlying link");
    diagonal->add_option("--model", model_path)->required();
    diagonal->add_option("--omega", omega_spec, "single coordinate, e.g. 1/2")->required();

    CLI::App* examples = app.add_subcommand("examples", "bundled example library");
    CLI::App* examples_list = examples->add_subcommand("list", "list bundled model names");
    CLI::App* examples_emit = examples->add_subcommand("emit", "write a bundled model to disk");
    examples_emit->add_option("name", emit_name, "bundled model name")->required();
    examples_emit->add_option("--out", out_path, "output path (default: <name>.json)");
    examples->require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("models", verify_models, "model files (default: bundled library)");
    verify->add_option("--q", q, "grid order for the exact sample");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) {
            SignatureResult s =
                signature(resolve_model(model_path), TorusPoint::parse(omega_spec), approx_tol);
            print_signature_line(out, s);
        } else if (grid->parsed()) {
            GridScan scan = grid_scan(resolve_model(model_path), q, model_path);
            std::ofstream file;
            write_grid_csv(scan, open_sink(out_path, file, out));
        } else if (delta->parsed()) {
            out << delta0(resolve_model(model_path)).to_string() << "\n";
            out << "note: determinant normalization; may differ from the Alexander polynomial "
                   "by factors (1 - t_i)\n";
        } else if (presentation->parsed()) {
            print_matrix(out, presentation_matrix(resolve_model(model_path)));
        } else if (potential_cmd->parsed()) {
            LaurentFraction nabla = potential(resolve_model(model_path));
            out << "numerator: " << nabla.numerator().to_string() << "\n";
            out << "denominator: " << nabla.denominator_poly().to_string() << "\n";
        } else if (obstruct->parsed()) {
            ColoredLinkModel m = resolve_model(model_path);
            auto ws = diagonal_scan ? slice_obstruction_diagonal(m, max_q)
                                    : slice_obstruction(m, max_q);
            std::ofstream file;
            open_sink(out_path, file, out) << witnesses_to_json_text(ws);
        } else if (casson->parsed()) {
            SurgeryData s = load_surgery(surgery_path);
            long long sigma_val = sigma_in;
            if (!model_path.empty()) {
                ColoredLinkModel m = resolve_model(model_path);
                std::vector<std::pair<long long, long long>> fr;
                for (long long ni : s.n) fr.emplace_back(ni, s.q);
                sigma_val = signature(m, TorusPoint::exact(fr)).sigma;
            } else if (!sigma_given) {
                err << "usage error: casson-gordon needs --model or --sigma\n";
                return 2;
            }
            out << "casson_gordon=" << casson_gordon(s, sigma_val).to_string() << "\n";
        } else if (merge->parsed()) {
            SignatureResult s =
                merge_colors(resolve_model(model_path), TorusPoint::parse(omega_spec));
            print_signature_line(out, s);
        } else if (diagonal->parsed()) {
            TorusPoint w = TorusPoint::parse(omega_spec);
            if (w.mu() != 1) throw std::invalid_argument("diagonal: expected a single coordinate");
            auto [sl, el] = diagonal_specialize(resolve_model(model_path), w.coord(0));
            out << "sigma_LT=" << sl << " eta_LT=" << el << "\n";
        } else if (examples_list->parsed()) {
            for (const std::string& name : bundled_model_names()) out << name << "\n";
        } else if (examples_emit->parsed()) {
            std::string path = out_path.empty() ? emit_name + ".json" : out_path;
            save_model(bundled_model(emit_name), path);
            out << "wrote " << path << "\n";
        } else if (verify->parsed()) {
            std::vector<std::pair<std::string, ColoredLinkModel>> models;
            if (verify_models.empty()) {
                for (const std::string& name : bundled_model_names())
                    models.emplace_back(name, bundled_model(name));
            } else {
                for (const std::string& path : verify_models)
                    models.emplace_back(path, resolve_model(path));
            }
            bool all_pass = true;
            for (const PropertyResult& r : run_verification(models, q)) {
                if (r.pass) {
                    out << "PASS " << r.name << "\n";
                } else {
                    all_pass = false;
                    out << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace clasp
