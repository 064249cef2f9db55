// Command-line front end: analyze one group, verify closed-form family
// predictions, or print basic group facts. Exit codes: 0 success/all-match,
// 1 usage, 2 validation, 3 verification mismatch, 4 numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgb/report.hpp"
#include "sgb/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNumeric = 4;

std::vector<sgb::MatrixKind> parse_matrix_list(const std::string& arg) {
    std::vector<sgb::MatrixKind> kinds;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "a") kinds.push_back(sgb::MatrixKind::adjacency);
        else if (tok == "l") kinds.push_back(sgb::MatrixKind::laplacian);
        else if (tok == "q") kinds.push_back(sgb::MatrixKind::signless_laplacian);
        else if (tok == "cn") kinds.push_back(sgb::MatrixKind::common_neighborhood);
        else throw sgb::validation_error("unknown matrix kind '" + tok + "', expected a,l,q,cn");
    }
    if (kinds.empty()) throw sgb::validation_error("empty matrix list");
    return kinds;
}

std::vector<std::int64_t> parse_prime_list(const std::string& arg) {
    std::vector<std::int64_t> primes;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
            primes.push_back(v);
        } catch (const std::exception&) {
            throw sgb::validation_error("bad prime '" + tok + "' in --primes");
        }
    }
    if (primes.empty()) throw sgb::validation_error("empty --primes list");
    return primes;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sgb::validation_error("cannot open output file: " + out_path);
    out << text;
}

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    double tol = 1e-8;
    int max_order = 40;
    bool exact_only = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_numeric) {
    cmd->add_option("--format", opts.format, "Output format: json|csv|markdown")
        ->default_val("json");
    cmd->add_option("--out", opts.out_path, "Write output to PATH instead of stdout");
    cmd->add_option("--max-order", opts.max_order, "Ceiling on group order")->default_val(40);
    if (with_numeric) {
        cmd->add_option("--tol", opts.tol, "Numeric spectrum match tolerance")->default_val(1e-8);
        cmd->add_flag("--exact-only", opts.exact_only, "Skip the numeric eigenvalue cross-check");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgroup-generating bipartite graph toolkit: spectra, energies and "
                 "closed-form family verification"};
    app.set_version_flag("--version", std::string(sgb::kToolName) + " " + sgb::kToolVersion);
    app.require_subcommand(1);

    std::string group_token;
    CommonOpts analyze_opts;
    std::string matrix_arg = "a,l,q,cn";
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Full pipeline on one group (spectra, energies, classification)");
    analyze->add_option("group", group_token, "Group spec: cyclic:N | dihedral:N | dicyclic:M | cayley:PATH")
        ->required();
    analyze->add_option("--matrix", matrix_arg, "Comma list of matrix kinds: a,l,q,cn")
        ->default_val("a,l,q,cn");
    add_common(analyze, analyze_opts, true);

    std::string family_token;
    std::string primes_arg;
    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Diff brute-force results against closed-form family predictions");
    verify->add_option("family", family_token, "Family: D2p | D2p2 | Q4p | Q4p2")->required();
    verify->add_option("--primes", primes_arg, "Comma list of primes, e.g. 2,3,5")->required();
    add_common(verify, verify_opts, true);

    std::string info_token;
    CommonOpts info_opts;
    CLI::App* info = app.add_subcommand("group-info", "Order, element orders, subgroup lattice");
    info->add_option("group", info_token, "Group spec: cyclic:N | dihedral:N | dicyclic:M | cayley:PATH")
        ->required();
    add_common(info, info_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            sgb::GroupSpec spec = sgb::parse_group_spec(group_token);
            auto kinds = parse_matrix_list(matrix_arg);
            sgb::OutputFormat fmt = sgb::parse_output_format(analyze_opts.format);
            sgb::AnalysisDocument doc = sgb::analyze_group(
                spec, kinds, analyze_opts.tol, analyze_opts.max_order, analyze_opts.exact_only);
            emit(sgb::render_analysis(doc, fmt), analyze_opts.out_path);
            return doc.numeric_all_matched() ? kExitOk : kExitMismatch;
        }
        if (verify->parsed()) {
            sgb::OutputFormat fmt = sgb::parse_output_format(verify_opts.format);
            sgb::VerificationDocument doc;
            doc.family = sgb::parse_family(family_token);
            doc.tol = verify_opts.tol;
            doc.exact_only = verify_opts.exact_only;
            sgb::VerificationOptions vopt;
            vopt.max_order = verify_opts.max_order;
            vopt.tol = verify_opts.tol;
            vopt.exact_only = verify_opts.exact_only;
            // Inadmissible entries become per-entry errors; the batch runs on.
            for (std::int64_t p : parse_prime_list(primes_arg)) {
                sgb::VerificationEntry entry;
                entry.p = p;
                try {
                    entry.report = sgb::verify_family({doc.family, p}, vopt);
                } catch (const sgb::validation_error& e) {
                    entry.error = e.what();
                }
                doc.entries.push_back(std::move(entry));
            }
            emit(sgb::render_verification(doc, fmt), verify_opts.out_path);
            if (doc.any_inadmissible()) return kExitValidation;
            return doc.all_match() ? kExitOk : kExitMismatch;
        }
        if (info->parsed()) {
            sgb::GroupSpec spec = sgb::parse_group_spec(info_token);
            sgb::OutputFormat fmt = sgb::parse_output_format(info_opts.format);
            sgb::GroupInfoDocument doc = sgb::group_info(spec, info_opts.max_order);
            emit(sgb::render_group_info(doc, fmt), info_opts.out_path);
            return kExitOk;
        }
    } catch (const sgb::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const sgb::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
