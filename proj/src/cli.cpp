#include "hyperlap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlap/bounds.hpp"
#include "hyperlap/cheeger.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/io.hpp"
#include "hyperlap/nodal.hpp"
#include "hyperlap/operators.hpp"
#include "hyperlap/spectra.hpp"
#include "hyperlap/verify.hpp"

namespace hyperlap {

namespace {

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return read_stream(f);
}

void emit(std::ostream& out, const ordered_json& doc) {
    out << doc.dump(2) << "\n";
}

OrientedHypergraph make_family(const std::string& family, int n, int c, std::string& name) {
    auto need = [&](const char* flag, int v) {
        if (v <= 0)
            throw CLI::ValidationError("generate",
                                       "family " + family + " requires " + flag + " > 0");
    };
    if (family == "complete_graph") {
        need("--n", n);
        name = "complete_graph(" + std::to_string(n) + ")";
        return complete_graph(n);
    }
    if (family == "c_complete_signless") {
        need("--n", n);
        need("--c", c);
        name = "c_complete_signless(" + std::to_string(n) + "," + std::to_string(c) + ")";
        return c_complete_signless(n, c);
    }
    if (family == "symmetric_2c_complete") {
        need("--n", n);
        need("--c", c);
        name = "symmetric_2c_complete(" + std::to_string(n) + "," + std::to_string(c) + ")";
        return symmetric_2c_complete(n, c);
    }
    if (family == "singleton_hyperedges") {
        need("--n", n);
        name = "singleton_hyperedges(" + std::to_string(n) + ")";
        return singleton_hyperedges(n);
    }
    if (family == "full_hyperedge") {
        need("--n", n);
        name = "full_hyperedge(" + std::to_string(n) + ")";
        return full_hyperedge(n);
    }
    if (family == "remark_4_3") {
        name = "remark_4_3";
        return remark_4_3();
    }
    throw CLI::ValidationError("generate", "unknown family: " + family);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> vs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) throw std::runtime_error("empty entry in vertex list: " + text);
        char* end = nullptr;
        const long v = std::strtol(item.c_str(), &end, 10);
        if (end == item.c_str() || *end != '\0')
            throw std::runtime_error("not an integer in vertex list: " + item);
        vs.push_back(static_cast<int>(v));
    }
    return vs;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"oriented-hypergraph Laplacian spectra, Cheeger constants, and eigenvalue bounds"};
    app.name("hyperlap");
    app.require_subcommand(1);

    const Limits lims = limits_from_env();
    int exit_code = 0;

    std::string input = "-";
    bool allow_invalid = false;
    EigenConfig cfg;
    unsigned long seed = 1;
    std::vector<int> delete_set;

    auto load = [&]() {
        const std::string text = input == "-" ? read_stream(in) : read_file(input);
        return parse_document(text, allow_invalid);
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "input document path ('-' reads stdin)");
        sub->add_flag("--allow-invalid", allow_invalid,
                      "tolerate isolated vertices in the input document");
    };
    auto add_tols = [&](CLI::App* sub) {
        sub->add_option("--tol-offdiag", cfg.off_diag_tol, "Jacobi off-diagonal threshold");
        sub->add_option("--tol-zero-scale", cfg.zero_tol_scale,
                        "per-dimension zero-eigenvalue tolerance scale");
        sub->add_option("--tol-cluster", cfg.cluster_tol, "eigenvalue cluster tolerance");
        sub->add_option("--max-sweeps", cfg.max_sweeps, "Jacobi sweep cap");
    };

    // generate
    std::string family;
    int gen_n = 0, gen_c = 0;
    std::string gen_name;
    auto* gen = app.add_subcommand("generate", "emit a generated instance document");
    gen->add_option("family", family,
                    "complete_graph | c_complete_signless | symmetric_2c_complete | "
                    "singleton_hyperedges | full_hyperedge | remark_4_3")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--c", gen_c, "side size parameter");
    gen->add_option("--name", gen_name, "override the document name");
    gen->callback([&]() {
        std::string name;
        const OrientedHypergraph g = make_family(family, gen_n, gen_c, name);
        if (!gen_name.empty()) name = gen_name;
        emit(out, serialize(g, name));
    });

    // spectrum
    std::string spec_op = "normalized";
    auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues of one operator");
    add_input(spec_cmd);
    add_tols(spec_cmd);
    spec_cmd->add_option("--operator", spec_op, "normalized | unnormalized | hyperedge")
        ->check(CLI::IsMember({"normalized", "unnormalized", "hyperedge"}));
    spec_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        const ZeroMultiplicities zm = zero_multiplicities(doc.g, cfg);
        Spectrum spec;
        if (spec_op == "normalized") spec = spectrum_normalized(doc.g, cfg);
        else if (spec_op == "unnormalized") spec = spectrum_unnormalized(doc.g, cfg);
        else spec = spectrum_hyperedge(doc.g, cfg);
        emit(out, spectrum_json(spec_op, spec, zm.m_v, zm.m_h));
    });

    // matrix
    std::string mat_op = "laplacian";
    std::string mat_fmt = "json";
    auto* mat_cmd = app.add_subcommand("matrix", "one operator matrix, JSON or CSV");
    add_input(mat_cmd);
    mat_cmd->add_option("--operator", mat_op,
                        "incidence | degree | adjacency | laplacian | sym-laplacian | "
                        "unnormalized | hyperedge")
        ->check(CLI::IsMember({"incidence", "degree", "adjacency", "laplacian", "sym-laplacian",
                               "unnormalized", "hyperedge"}));
    mat_cmd->add_option("--format", mat_fmt, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    mat_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        DenseMatrix m;
        if (mat_op == "incidence") m = incidence(doc.g);
        else if (mat_op == "degree") m = degree_matrix(doc.g);
        else if (mat_op == "adjacency") m = adjacency(doc.g);
        else if (mat_op == "laplacian") m = normalized_laplacian(doc.g);
        else if (mat_op == "sym-laplacian") m = sym_laplacian(doc.g).matrix();
        else if (mat_op == "unnormalized") m = unnormalized_laplacian(doc.g).matrix();
        else m = hyperedge_laplacian(doc.g).matrix();
        if (mat_fmt == "json") emit(out, matrix_json(m));
        else out << matrix_csv(m);
    });

    // cheeger
    int cheeger_limit = 20;
    bool include_prime = false;
    std::vector<int> subset_arg;
    auto* ch_cmd = app.add_subcommand("cheeger", "generalized Cheeger constants");
    add_input(ch_cmd);
    ch_cmd->add_option("--limit", cheeger_limit, "subset enumeration vertex cap");
    ch_cmd->add_flag("--prime", include_prime, "also report the unrestricted constant");
    ch_cmd->add_option("--subset", subset_arg, "evaluate one subset i,j,k instead")
        ->delimiter(',');
    ch_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        if (!subset_arg.empty()) {
            std::vector<int> s = subset_arg;
            std::sort(s.begin(), s.end());
            const double nu = nu_tilde(doc.g, s); // validates the subset and its volume
            ordered_json j;
            j["subset"] = s;
            j["volume"] = doc.g.volume(s);
            j["e_tilde"] = e_tilde(doc.g, s);
            j["nu_tilde"] = json_real(nu);
            emit(out, j);
            return;
        }
        const CheegerResult res =
            cheeger_constants(doc.g, std::min(cheeger_limit, lims.subset));
        emit(out, cheeger_json(res, include_prime));
    });

    // nodal
    auto* nodal_cmd = app.add_subcommand("nodal", "weak nodal-domain counts per eigenvector");
    add_input(nodal_cmd);
    add_tols(nodal_cmd);
    nodal_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        ordered_json arr = ordered_json::array();
        for (const NodalReport& r : verify_courant(doc.g, cfg)) arr.push_back(to_json(r));
        emit(out, arr);
    });

    // bounds
    std::string suite = "all";
    auto* bounds_cmd = app.add_subcommand("bounds", "eigenvalue bound reports");
    add_input(bounds_cmd);
    add_tols(bounds_cmd);
    bounds_cmd->add_option("--suite", suite, "all | eigen1 | general | coloring")
        ->check(CLI::IsMember({"all", "eigen1", "general", "coloring"}));
    bounds_cmd->add_option("--delete-set", delete_set,
                           "vertices i,j,k whose weak deletion backs deletion-premise bounds")
        ->delimiter(',');
    bounds_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        std::vector<BoundReport> reports;
        const bool all = suite == "all";
        if (all || suite == "eigen1") {
            for (BoundReport& r : verify_eigenvalue_one(doc.g, cfg))
                reports.push_back(std::move(r));
            reports.push_back(verify_duplicate_ratio(doc.g, cfg));
        }
        if (all || suite == "general") {
            reports.push_back(verify_c_quantities(doc.g, cfg));
            reports.push_back(sign_vector_bound(doc.g, cfg, lims.signs));
            reports.push_back(sandwich_bound(doc.g, cfg));
        }
        if (all || suite == "coloring") {
            ColoringBoundOptions copt;
            copt.chromatic_limit = lims.chromatic;
            copt.subset_sweep_limit = lims.coloring_subsets;
            copt.subset_enum_limit = lims.subset;
            copt.delete_set = delete_set;
            for (BoundReport& r : verify_coloring_bounds(doc.g, cfg, copt))
                reports.push_back(std::move(r));
            reports.push_back(
                verify_sharpness_characterization(doc.g, cfg, lims.chromatic, lims.colorings));
        }
        std::stable_sort(reports.begin(), reports.end(),
                         [](const BoundReport& a, const BoundReport& b) { return a.name < b.name; });
        ordered_json arr = ordered_json::array();
        for (const BoundReport& r : reports) arr.push_back(to_json(r));
        emit(out, arr);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run every applicable check");
    add_input(verify_cmd);
    add_tols(verify_cmd);
    verify_cmd->add_option("--seed", seed, "seed for the randomized identity spot-checks");
    verify_cmd->add_option("--delete-set", delete_set,
                           "vertices i,j,k whose weak deletion backs deletion-premise checks")
        ->delimiter(',');
    verify_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        VerifyOptions vo;
        vo.cfg = cfg;
        vo.limits = lims;
        vo.seed = seed;
        vo.delete_set = delete_set;
        vo.instance_name = doc.name;
        const VerificationReport rep = run_verification(doc.g, vo);
        emit(out, verification_json(rep, vo));
        if (rep.fail > 0) exit_code = 1;
    });

    // transform
    std::string transform_op;
    std::string transform_arg;
    auto* tr_cmd = app.add_subcommand("transform", "dual | product <file> | weak-delete i,j");
    add_input(tr_cmd);
    tr_cmd->add_option("op", transform_op, "dual | product | weak-delete")->required();
    tr_cmd->add_option("arg", transform_arg, "second document path (product) or vertex list");
    tr_cmd->callback([&]() {
        const HypergraphDocument doc = load();
        if (transform_op == "dual") {
            const std::string name = doc.name.empty() ? "" : doc.name + ":dual";
            emit(out, serialize(dual(doc.g), name));
            return;
        }
        if (transform_op == "product") {
            if (transform_arg.empty())
                throw CLI::ValidationError("transform", "product needs a second document path");
            const HypergraphDocument other = parse_document(read_file(transform_arg), allow_invalid);
            std::string name;
            if (!doc.name.empty() && !other.name.empty()) name = doc.name + " x " + other.name;
            emit(out, serialize(cartesian_product(doc.g, other.g), name));
            return;
        }
        if (transform_op == "weak-delete") {
            if (transform_arg.empty())
                throw CLI::ValidationError("transform", "weak-delete needs a vertex list i,j");
            const std::vector<int> vs = parse_int_list(transform_arg);
            const std::string name = doc.name.empty() ? "" : doc.name + ":weak-delete";
            emit(out, serialize(weak_delete(doc.g, vs), name));
            return;
        }
        throw CLI::ValidationError("transform", "unknown transform: " + transform_op);
    });

    try {
        std::vector<const char*> argv;
        argv.push_back("hyperlap");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace hyperlap
