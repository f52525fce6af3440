#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specnorm/verify.hpp"

namespace fs = std::filesystem;
using namespace specnorm;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --config accepts a file path, a file under $SPECNORM_PRESET_DIR, or the
// name of an embedded preset bundle.
std::string load_config_text(const std::string& spec) {
    if (fs::exists(spec)) return read_file(spec);
    if (const char* dir = std::getenv("SPECNORM_PRESET_DIR")) {
        for (const auto& candidate :
             {fs::path(dir) / spec, fs::path(dir) / (spec + ".json")})
            if (fs::exists(candidate)) return read_file(candidate);
    }
    return preset_config_text(spec);
}

void emit(const std::string& out_dir, const std::string& stem, const std::string& ext,
          const std::string& payload) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    const fs::path final_path = fs::path(out_dir) / (stem + "." + ext);
    const fs::path tmp = final_path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << payload;
    }
    fs::rename(tmp, final_path);  // atomic per job
}

const RadialProfile& need_hamiltonian(const ConfigDocument& doc, const std::string& name) {
    const RadialProfile* h = doc.find_hamiltonian(name);
    if (!h) throw ConfigError("unknown hamiltonian: " + name);
    return *h;
}

const CofinalDiagram& need_diagram(const ConfigDocument& doc, const std::string& name) {
    const CofinalDiagram* d = doc.find_diagram(name);
    if (!d) throw ConfigError("unknown diagram: " + name);
    return *d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filtered cochain models of radial Hamiltonians: action spectra, "
                 "spectral invariants, barcodes, and colimit capacities"};
    app.require_subcommand(1);

    std::string config_spec = "annulus";
    std::string out_dir;
    std::string format = "csv";
    app.add_option("--config", config_spec, "config file path or preset name");
    app.add_option("--out", out_dir, "directory for emitted reports");
    app.add_option("--format", format, "csv, json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));

    std::string ham, diagram_name, class_label = "1";
    std::string s_str = "0", sp_str = "0";

    auto* cmd_orbits = app.add_subcommand("orbits", "orbit inventory of a Hamiltonian");
    cmd_orbits->add_option("--hamiltonian", ham)->required();
    auto* cmd_barcode = app.add_subcommand("barcode", "persistence barcode");
    cmd_barcode->add_option("--hamiltonian", ham)->required();
    auto* cmd_spectral = app.add_subcommand("spectral", "spectral invariant c(beta, H)");
    cmd_spectral->add_option("--hamiltonian", ham)->required();
    cmd_spectral->add_option("--class", class_label, "\"1\" for the unit class");
    auto* cmd_gamma = app.add_subcommand("gamma", "spectral norm");
    cmd_gamma->add_option("--hamiltonian", ham)->required();
    auto* cmd_embed = app.add_subcommand("embed", "gamma distance of rescalings");
    cmd_embed->add_option("--hamiltonian", ham)->required();
    cmd_embed->add_option("--s", s_str)->required();
    cmd_embed->add_option("--sp", sp_str)->required();
    auto* cmd_sh = app.add_subcommand("sh", "full-window colimit report");
    cmd_sh->add_option("--diagram", diagram_name)->required();
    auto* cmd_csh = app.add_subcommand("csh", "capacity of the diagram");
    cmd_csh->add_option("--diagram", diagram_name)->required();
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");

    // global options (--config, --out, --format) may appear after the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const ConfigDocument doc = parse_config(load_config_text(config_spec));

        if (cmd_verify->parsed()) {
            const auto results = run_verification();
            bool all = true;
            Json js = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name
                          << (r.detail.empty() ? "" : "  (" + r.detail + ")") << '\n';
                Json row;
                row["check"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                js.push_back(std::move(row));
            }
            if (!out_dir.empty()) emit(out_dir, "verify", "json", js.dump(2) + "\n");
            return all ? 0 : 1;
        }

        if (cmd_orbits->parsed()) {
            OrbitInventory inv =
                enumerate_orbits(doc.domain, need_hamiltonian(doc, ham));
            if (const auto* cls = doc.find_classification(ham))
                classify_H_delta_A_orbits(inv, *cls);
            emit(out_dir, "orbits-" + ham, format == "json" ? "json" : "csv",
                 format == "json" ? orbits_json(inv).dump(2) + "\n" : orbits_csv(inv));
            return 0;
        }
        if (cmd_barcode->parsed()) {
            const FilteredComplex c =
                build_complex(doc.domain, need_hamiltonian(doc, ham));
            const auto bars = barcode(c);
            if (format == "svg")
                emit(out_dir, "barcode-" + ham, "svg", barcode_svg(bars));
            else if (format == "json")
                emit(out_dir, "barcode-" + ham, "json", barcode_json(bars).dump(2) + "\n");
            else
                emit(out_dir, "barcode-" + ham, "csv", barcode_csv(bars));
            return 0;
        }
        if (cmd_spectral->parsed()) {
            const auto m = make_model(doc.domain, need_hamiltonian(doc, ham),
                                      DifferentialSpec::zero(), ham);
            SpectralResult r;
            if (class_label == "1") {
                r = c_unit(m);
            } else {
                int idx = 0;
                try {
                    idx = std::stoi(class_label);
                } catch (const std::exception&) {
                    throw ConfigError("--class must be \"1\" or a generator index");
                }
                if (idx < 0 || idx >= m.complex.size())
                    throw ConfigError("class index out of range");
                r = spectral_invariant(m.complex, gf2::Vector::unit(idx), class_label);
            }
            emit(out_dir, "spectral-" + ham, "json",
                 spectral_json(r, m.complex).dump(2) + "\n");
            return 0;
        }
        if (cmd_gamma->parsed()) {
            const auto m = make_model(doc.domain, need_hamiltonian(doc, ham),
                                      DifferentialSpec::zero(), ham);
            Json j;
            j["hamiltonian"] = ham;
            j["gamma"] = format_rational(gamma(m));
            if (m.profile.is_compactly_supported())
                j["hofer_norm"] = format_rational(hofer_norm(m));
            emit(out_dir, "gamma-" + ham, "json", j.dump(2) + "\n");
            return 0;
        }
        if (cmd_embed->parsed()) {
            const auto m = make_model(doc.domain, need_hamiltonian(doc, ham),
                                      DifferentialSpec::zero(), ham);
            const Rational s = parse_rational(s_str);
            const Rational sp = parse_rational(sp_str);
            Json j;
            j["s"] = format_rational(s);
            j["s_prime"] = format_rational(sp);
            j["distance"] = format_rational(embedding_distance(m, s, sp));
            emit(out_dir, "embed-" + ham, "json", j.dump(2) + "\n");
            return 0;
        }
        if (cmd_sh->parsed()) {
            const auto& d = need_diagram(doc, diagram_name);
            const auto space = colimit(d, Window::full());
            Json j = colimit_json(space);
            j["nonzero"] = sh_nonzero(d);
            emit(out_dir, "sh-" + diagram_name, "json", j.dump(2) + "\n");
            return 0;
        }
        if (cmd_csh->parsed()) {
            const auto& d = need_diagram(doc, diagram_name);
            const Bound cap = c_sh(d);
            Json j;
            j["diagram"] = diagram_name;
            j["c_sh"] = cap.is_finite() ? format_rational(cap.value()) : std::string("inf");
            emit(out_dir, "csh-" + diagram_name, "json", j.dump(2) + "\n");
            return 0;
        }
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
