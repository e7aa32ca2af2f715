// ribcat command-line front end: load a category file (or a built-in), run
// verifiers and computations, emit human- or machine-readable reports.
//
// Exit codes: 0 all requested checks pass, 1 at least one check fails
// (valid run, negative verdict), 2 malformed input or unsupported request.

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/dagger.hpp"
#include "ribcat/io.hpp"
#include "ribcat/modular.hpp"
#include "ribcat/spherical.hpp"
#include "ribcat/tqft.hpp"
#include "ribcat/treecalc.hpp"
#include "ribcat/zoo.hpp"

namespace {

using ribcat::Json;

struct Options {
    std::string input;
    double tol = 1e-9;
    std::string format = "human";
    int genus = -1;
    bool has_genus = false;
    std::string punctures;
    std::string surgery;
    bool has_surgery = false;
    int anyons = 0;
    std::string type_label;
    std::string charge_label;
    std::string export_name;
    std::string out_path;
};

struct Run {
    Json doc;
    bool any_fail = false;

    explicit Run(const std::string& command) {
        doc["command"] = command;
        doc["checks"] = Json::array();
        doc["results"] = Json::object();
    }
    void input_info(const std::string& path, const std::string& name) {
        doc["input"] = Json{{"path", path}, {"digest", ribcat::digest_file(path)}, {"name", name}};
    }
    void tolerance(double eps) { doc["tolerance"] = eps; }
    void add_report(const ribcat::ValidationReport& rep) {
        for (const auto& c : rep.checks) doc["checks"].push_back(ribcat::check_to_json(c));
        for (const auto& w : rep.warnings) doc["checks"].back()["warnings"].push_back(w);
        if (!rep.passed()) any_fail = true;
    }
    void add_check(const std::string& name, bool pass, const std::string& note = "") {
        Json j;
        j["name"] = name;
        j["verdict"] = pass ? "pass" : "fail";
        if (!note.empty()) j["note"] = note;
        doc["checks"].push_back(std::move(j));
        if (!pass) any_fail = true;
    }
};

std::string complex_str(std::complex<double> z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

void print_human(const Run& run) {
    const auto& doc = run.doc;
    std::cout << "command: " << doc["command"].get<std::string>() << "\n";
    if (doc.contains("input"))
        std::cout << "input: " << doc["input"]["name"].get<std::string>() << " (digest "
                  << doc["input"]["digest"].get<std::string>() << ")\n";
    for (const auto& check : doc["checks"]) {
        std::cout << "  [" << check["verdict"].get<std::string>() << "] "
                  << check["name"].get<std::string>();
        if (check.contains("instances")) std::cout << " (" << check["instances"] << " instances)";
        if (check.contains("note")) std::cout << " -- " << check["note"].get<std::string>();
        std::cout << "\n";
        if (check.contains("failures"))
            for (const auto& f : check["failures"]) {
                std::cout << "      at " << f["instance"].get<std::string>() << ": lhs "
                          << f["lhs"].get<std::string>() << " vs rhs " << f["rhs"].get<std::string>()
                          << " (residual " << f["residual"] << ")\n";
            }
    }
    if (!doc["results"].empty()) std::cout << "results: " << doc["results"].dump(1) << "\n";
    std::cout << "verdict: " << (run.any_fail ? "FAIL" : "PASS") << "\n";
}

int finish(Run& run, const Options& opt) {
    if (opt.format == "json")
        std::cout << run.doc.dump(1) << "\n";
    else
        print_human(run);
    return run.any_fail ? 1 : 0;
}

struct LoadedInput {
    ribcat::CategoryFile file;
    ribcat::DaggerStructure dagger;  // loaded or canonical all-ones
};

LoadedInput load_input(const Options& opt, Run& run) {
    ribcat::CategoryFile file = ribcat::load_category_file(opt.input);
    run.input_info(opt.input, file.name);
    ribcat::DaggerStructure dag = file.dagger ? *file.dagger : ribcat::DaggerStructure{};
    return {std::move(file), std::move(dag)};
}

std::vector<std::size_t> parse_labels(const std::string& csv, const ribcat::FusionRing& ring) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(ring.label_index(item));
    return out;
}

int cmd_verify(const Options& opt) {
    Run run("verify");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const ribcat::Tolerance tol{opt.tol};
    const auto& data = in.file.data;

    run.add_report(ribcat::validate_ring(data.ring()));
    run.add_report(ribcat::check_pentagon(data, tol));
    if (data.braided()) run.add_report(ribcat::check_hexagon(data, tol));
    if (data.braided() && data.has_twist()) run.add_report(ribcat::check_ribbon(data, tol));
    run.add_report(ribcat::check_zigzag(data, tol));
    run.add_report(ribcat::check_dagger_axioms(data, in.dagger, tol));
    return finish(run, opt);
}

int cmd_center(const Options& opt) {
    Run run("center");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const ribcat::Tolerance tol{opt.tol};
    const auto rep = ribcat::center_report(in.file.data, tol);
    const auto positivity = ribcat::classify_positivity(in.file.data, in.dagger, tol);

    Json& res = run.doc["results"];
    Json center = Json::array();
    for (std::size_t a : rep.center) center.push_back(in.file.data.ring().label(a));
    res["center"] = std::move(center);
    res["center_trivial"] = rep.trivial;
    res["classification"] = positivity.hermitian ? "hermitian" : "non-hermitian";
    Json transparent = Json::array();
    for (const auto& item : rep.transparent)
        transparent.push_back(Json{{"label", in.file.data.ring().label(item.label)},
                                   {"dim", item.dim.str()},
                                   {"dim_sq_equals_dim", item.dim_sq_equals_dim},
                                   {"abs_dim_is_one", item.abs_dim_is_one}});
    res["transparent_simples"] = std::move(transparent);
    run.add_check("center-criteria-agree", rep.criteria_agree,
                  "channel criterion vs S~ criterion");
    return finish(run, opt);
}

int cmd_modular(const Options& opt) {
    Run run("modular");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const ribcat::Tolerance tol{opt.tol};
    const auto md = ribcat::s_t_matrices(in.file.data);

    Json& res = run.doc["results"];
    Json qdims = Json::array(), s_rows = Json::array(), t_diag = Json::array();
    for (const auto& d : md.qdims) qdims.push_back(d.str());
    for (std::size_t i = 0; i < md.s_tilde.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < md.s_tilde.cols(); ++j) row.push_back(md.s_tilde(i, j).str());
        s_rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < md.t.rows(); ++i) t_diag.push_back(md.t(i, i).str());
    res["qdims"] = std::move(qdims);
    res["global_dim_sq"] = md.global_dim_sq.str();
    res["s_tilde"] = std::move(s_rows);
    res["t"] = std::move(t_diag);
    res["gauss_plus"] = md.gauss_plus.str();
    res["gauss_minus"] = md.gauss_minus.str();
    res["modular"] = md.modular;
    run.add_report(ribcat::torus_mcg_check(in.file.data, tol));
    return finish(run, opt);
}

int cmd_classify(const Options& opt) {
    Run run("classify");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const ribcat::Tolerance tol{opt.tol};
    const auto axioms = ribcat::check_dagger_axioms(in.file.data, in.dagger, tol);
    run.add_report(axioms);
    const auto rep = ribcat::classify_positivity(in.file.data, in.dagger, tol);
    Json& res = run.doc["results"];
    res["classification"] = rep.hermitian ? "hermitian" : "non-hermitian";
    res["evidence"] = rep.evidence;
    res["worst_unitarity_deviation"] = rep.worst_unitarity;
    res["literal_positivity"] = rep.literal_note;
    Json dims = Json::array();
    for (const auto& d : rep.dims) dims.push_back(d.str());
    res["qdims"] = std::move(dims);
    return finish(run, opt);
}

int cmd_spherical(const Options& opt) {
    Run run("spherical");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const auto rep = ribcat::spherical_report(in.file.data, ribcat::Tolerance{opt.tol});
    Json& res = run.doc["results"];
    res["pivotal_count"] = rep.items.size();
    res["spherical_count"] = rep.spherical_count;
    res["unique_spherical"] = rep.unique_spherical();
    Json items = Json::array();
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const auto& item = rep.items[i];
        Json ji;
        Json t = Json::array(), left = Json::array(), right = Json::array();
        for (const auto& s : item.pivotal.t) t.push_back(s.str());
        for (const auto& s : item.left_dims) left.push_back(s.str());
        for (const auto& s : item.right_dims) right.push_back(s.str());
        ji["pivotal"] = std::move(t);
        ji["left_dims"] = std::move(left);
        ji["right_dims"] = std::move(right);
        ji["spherical"] = item.spherical;
        ji["ribbon_candidate"] = rep.ribbon_candidate && *rep.ribbon_candidate == i;
        items.push_back(std::move(ji));
    }
    res["structures"] = std::move(items);
    return finish(run, opt);
}

int cmd_braid(const Options& opt) {
    Run run("braid");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const auto& data = in.file.data;
    if (opt.anyons < 2) throw ribcat::ComputeError("braid requires --anyons >= 2");
    const std::size_t type = data.ring().label_index(opt.type_label);
    const std::size_t charge = data.ring().label_index(opt.charge_label);
    const auto gens = ribcat::braid_rep(static_cast<std::size_t>(opt.anyons), type, charge, data);

    Json& res = run.doc["results"];
    Json matrices = Json::array();
    bool all_unitary = true;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Json jm;
        jm["generator"] = "sigma" + std::to_string(g + 1);
        Json rows = Json::array();
        for (std::size_t i = 0; i < gens[g].mat.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < gens[g].mat.cols(); ++j) row.push_back(gens[g].mat(i, j).str());
            rows.push_back(std::move(row));
        }
        jm["matrix"] = std::move(rows);
        const auto gg = ribcat::compose(gens[g], ribcat::dagger_of(gens[g], in.dagger));
        const double dev = ribcat::operator_norm(ribcat::to_complex(gg.mat) -
                                                 ribcat::ComplexMatrix::identity(gg.mat.rows()));
        jm["unitarity_deviation"] = dev;
        if (dev > opt.tol) all_unitary = false;
        matrices.push_back(std::move(jm));
    }
    res["generators"] = std::move(matrices);
    res["all_unitary"] = all_unitary;

    // braid relations are a genuine check; unitarity is informational
    bool relations = true;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
        const auto lhs = compose(gens[i], compose(gens[i + 1], gens[i]));
        const auto rhs = compose(gens[i + 1], compose(gens[i], gens[i + 1]));
        if (ribcat::max_abs_diff(lhs.mat, rhs.mat) > opt.tol) relations = false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 2; j < gens.size(); ++j)
            if (ribcat::max_abs_diff(compose(gens[i], gens[j]).mat, compose(gens[j], gens[i]).mat) >
                opt.tol)
                relations = false;
    run.add_check("braid-relations", relations);
    return finish(run, opt);
}

int cmd_tqft(const Options& opt) {
    Run run("tqft");
    run.tolerance(opt.tol);
    auto in = load_input(opt, run);
    const auto& data = in.file.data;
    Json& res = run.doc["results"];
    if (opt.has_genus) {
        if (opt.genus < 0) throw ribcat::ComputeError("genus must be non-negative");
        ribcat::SurfaceSpec surface;
        surface.genus = static_cast<unsigned>(opt.genus);
        surface.punctures = parse_labels(opt.punctures, data.ring());
        const auto out = ribcat::state_space_dim(surface, data);
        res["state_space_dim"] = out.dim;
        res["pre_rounding_residual"] = out.pre_rounding_residual;
        if (!out.modular) res["warning"] = "S~ is singular; Verlinde-type value reported for non-modular input";
    } else if (opt.has_surgery) {
        ribcat::SurgerySpec spec;
        std::stringstream ss(opt.surgery);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) spec.framings.push_back(std::stoll(item));
        const auto rep = ribcat::closed_invariant(spec, data);
        res["invariant"] = complex_str(rep.value);
        res["raw_product"] = complex_str(rep.raw_product);
        res["d"] = rep.d;
        res["d_exponent"] = rep.d_exponent;
        res["signature"] = rep.signature;
        res["anomaly_factor"] = complex_str(rep.anomaly_factor);
    } else {
        throw ribcat::ComputeError("tqft requires --genus or --surgery");
    }
    return finish(run, opt);
}

int cmd_zoo(const Options& opt) {
    Run run("zoo");
    if (opt.export_name.empty()) {
        Json names = Json::array();
        for (const auto& n : ribcat::zoo_names()) names.push_back(n);
        run.doc["results"]["entries"] = std::move(names);
        return finish(run, opt);
    }
    const ribcat::ZooEntry entry = ribcat::builtin(opt.export_name);
    const std::string path = opt.out_path.empty() ? entry.name + ".json" : opt.out_path;
    ribcat::save_category_file(path, entry.name, entry.data, &entry.dagger);
    run.doc["results"]["exported"] = path;
    return finish(run, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeletal ribbon fusion category toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("input", opt.input, "category file (JSON)")->required();
        cmd->add_option("--tol", opt.tol, "comparison tolerance")->capture_default_str();
        cmd->add_option("--format", opt.format, "human|json")->check(CLI::IsMember({"human", "json"}));
    };

    auto* verify = app.add_subcommand("verify", "run all skeletal and dagger verifiers");
    add_common(verify, true);
    auto* center = app.add_subcommand("center", "Muger center and transparency report");
    add_common(center, true);
    auto* modular = app.add_subcommand("modular", "S~/T matrices, Gauss sums, mapping-class relations");
    add_common(modular, true);
    auto* classify = app.add_subcommand("classify", "hermitian / non-hermitian classification");
    add_common(classify, true);
    auto* spherical = app.add_subcommand("spherical", "pivotal enumeration and sphericality report");
    add_common(spherical, true);
    auto* braid = app.add_subcommand("braid", "braid-group representation matrices");
    add_common(braid, true);
    braid->add_option("--anyons", opt.anyons, "strand count")->required();
    braid->add_option("--type", opt.type_label, "anyon label")->required();
    braid->add_option("--charge", opt.charge_label, "total charge label")->required();
    auto* tqft = app.add_subcommand("tqft", "state-space dimensions and surgery invariants");
    add_common(tqft, true);
    tqft->add_option("--genus", opt.genus, "surface genus");
    tqft->add_option("--punctures", opt.punctures, "comma-separated puncture labels");
    tqft->add_option("--surgery", opt.surgery, "comma-separated framings of an unlink");
    auto* zoo = app.add_subcommand("zoo", "list or export built-in categories");
    zoo->add_option("--export", opt.export_name, "entry name to export");
    zoo->add_option("--out", opt.out_path, "output path for export");
    zoo->add_option("--format", opt.format, "human|json")->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    opt.has_genus = tqft->count("--genus") > 0;
    opt.has_surgery = tqft->count("--surgery") > 0;

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (center->parsed()) return cmd_center(opt);
        if (modular->parsed()) return cmd_modular(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (spherical->parsed()) return cmd_spherical(opt);
        if (braid->parsed()) return cmd_braid(opt);
        if (tqft->parsed()) return cmd_tqft(opt);
        if (zoo->parsed()) return cmd_zoo(opt);
    } catch (const ribcat::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ribcat::ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
