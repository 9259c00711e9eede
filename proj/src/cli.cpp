#include "spectral_tetris/cli.hpp"

#include "spectral_tetris/construct.hpp"
#include "spectral_tetris/document.hpp"
#include "spectral_tetris/errors.hpp"
#include "spectral_tetris/fusion.hpp"
#include "spectral_tetris/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace stetris {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content)) throw ValidationError("cannot write " + path);
}

std::string join(std::span<const int> v, int offset = 0) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
    return s;
}

void print_groups(std::ostream& out, const FusionPartition& p) {
    out << "groups (0-based columns):";
    for (const auto& g : p.groups) out << " {" << join(g) << "}";
    out << '\n';
}

void print_report(std::ostream& out, const VerificationReport& r) {
    for (const Check& c : r.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  max residual " << c.max_residual
            << (c.exact ? "  (exact)" : "") << '\n';
}

struct ConstructArgs {
    int n = 0;
    int m = 0;
    bool tight = false;
    std::string eigenvalues;
    std::string method = "auto";
    bool allow_small = false;
    std::string out;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
    static const std::map<std::string, Method> methods{
        {"auto", Method::automatic}, {"stc", Method::stc}, {"tdftst", Method::tdftst}, {"dftst", Method::dftst}};
    ConstructRequest req;
    req.n = a.n;
    req.m = a.m;
    req.tight = a.tight;
    if (!a.eigenvalues.empty()) req.spectrum = parse_spectrum(a.eigenvalues);
    req.method = methods.at(a.method);
    req.allow_small_eigenvalues = a.allow_small;

    const Spectrum lam = request_spectrum(req);
    FrameDocument doc{construct(req), lam, std::nullopt};
    const SparsityReport sp = sparsity(doc.frame);
    const VerificationReport report = verify_frame(doc.frame, lam);

    out << "constructed " << doc.frame.rows() << "x" << doc.frame.cols() << " frame with "
        << to_string(doc.frame.method()) << '\n';
    out << "sparsity " << sp.structural_nonzeros;
    if (sp.formula_value) out << " (formula " << *sp.formula_value << ")";
    out << '\n';
    for (const auto& w : doc.frame.warnings()) out << "warning: " << w << '\n';
    out << "verification " << (report.passed() ? "passed" : "FAILED") << '\n';
    if (!a.out.empty()) {
        write_output(a.out, write_document(doc), out);
        out << "wrote " << a.out << '\n';
    }
    return report.passed() ? kExitOk : kExitValidation;
}

int run_rff(const std::string& eigenvalues, const std::string& path, std::ostream& out) {
    const Spectrum lam = parse_spectrum(eigenvalues);
    ReferenceFusionFrame ref = reference_fusion_frame(lam);
    out << "reference fusion frame with " << ref.partition.groups.size() << " groups\n";
    out << "dims " << join(ref.dims) << '\n';
    print_groups(out, ref.partition);
    if (!path.empty()) {
        write_output(path, write_document({std::move(ref.frame), lam, std::move(ref.partition)}), out);
        out << "wrote " << path << '\n';
    }
    return kExitOk;
}

int run_fusion(const std::string& eigenvalues, const std::string& dims_text, const std::string& path, std::ostream& out) {
    const Spectrum lam = parse_spectrum(eigenvalues);
    const DimensionProfile dims(parse_dims(dims_text));
    FusionFrame ff = build_fusion_frame(lam, dims);
    const VerificationReport report = verify_fusion(ff.frame, ff.partition, dims.given(), lam);
    out << "reference dims " << join(ff.reference_dims) << '\n';
    out << "fusion frame with dims " << join(dims.given()) << " after " << ff.iterations << " rebalancing steps\n";
    print_groups(out, ff.partition);
    out << "verification " << (report.passed() ? "passed" : "FAILED") << '\n';
    if (!path.empty()) {
        write_output(path, write_document({std::move(ff.frame), lam, std::move(ff.partition)}), out);
        out << "wrote " << path << '\n';
    }
    return report.passed() ? kExitOk : kExitValidation;
}

int run_verify(const std::string& file, double tol, std::ostream& out) {
    const FrameDocument doc = read_document(read_file(file));
    const VerificationReport frame = verify_frame(doc.frame, doc.eigenvalues, tol);
    out << "frame " << doc.frame.rows() << "x" << doc.frame.cols() << ", tolerance " << tol << '\n';
    print_report(out, frame);
    out << "frame bounds " << frame.lower_frame_bound << " " << frame.upper_frame_bound << '\n';
    bool ok = frame.passed();
    if (doc.partition) {
        const auto sizes = doc.partition->sizes();
        const VerificationReport fusion = verify_fusion(doc.frame, *doc.partition, sizes, doc.eigenvalues, tol);
        print_report(out, fusion);
        ok = ok && fusion.passed();
    }
    const SparsityReport sp = sparsity(doc.frame);
    out << "sparsity " << sp.structural_nonzeros;
    if (sp.formula_value) out << " (formula " << *sp.formula_value << (*sp.optimal ? ", optimal" : ", NOT optimal") << ")";
    out << '\n' << (ok ? "all checks passed" : "verification failed") << '\n';
    return ok ? kExitOk : kExitValidation;
}

int run_export(const std::string& file, const std::string& format, const std::string& path, std::ostream& out) {
    const FrameDocument doc = read_document(read_file(file));
    std::string content;
    if (format == "json")
        content = write_document(doc);
    else if (format == "mtx")
        content = write_matrix_market(doc.frame);
    else
        content = write_csv(doc.frame);
    write_output(path, content, out);
    return kExitOk;
}

int run_order(const std::string& eigenvalues, std::ostream& out) {
    const Spectrum lam = parse_spectrum(eigenvalues);
    const BlockwiseOrder order = blockwise_order(lam);
    const Spectrum reordered = lam.permuted(order.permutation, SpectrumOrder::blockwise_heuristic);
    out << "order (1-based) " << join(order.permutation, 1) << '\n';
    out << "eigenvalues ";
    for (int i = 0; i < reordered.dimension(); ++i) out << (i ? "," : "") << reordered[static_cast<std::size_t>(i)].to_string();
    out << '\n';
    out << "integral partial sums " << order.integral_prefixes << " (given order " << integral_prefix_count(lam) << ")"
        << (order.certified ? ", maximal" : ", heuristic") << '\n';
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral tetris frames and fusion frames", "stetris"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build a unit norm frame with a prescribed spectrum");
    construct_cmd->add_option("--n", ca.n, "Dimension N");
    construct_cmd->add_option("--m", ca.m, "Number of vectors M");
    auto* tight_flag = construct_cmd->add_flag("--tight", ca.tight, "Tight frame, eigenvalues M/N");
    construct_cmd->add_option("--eigenvalues", ca.eigenvalues, "Comma-separated eigenvalues")->excludes(tight_flag);
    construct_cmd->add_option("--method", ca.method, "Constructor")->check(CLI::IsMember({"auto", "stc", "tdftst", "dftst"}));
    construct_cmd->add_flag("--allow-small-eigenvalues", ca.allow_small, "Run stc on eigenvalues below 2");
    construct_cmd->add_option("--out", ca.out, "Write the frame document here");

    std::string eigenvalues;
    std::string dims;
    std::string out_path;
    std::string file;
    std::string format;
    double tol = kDefaultTolerance;

    auto* rff_cmd = app.add_subcommand("rff", "Reference fusion frame of the spectral tetris frame");
    rff_cmd->add_option("--eigenvalues", eigenvalues, "Comma-separated eigenvalues")->required();
    rff_cmd->add_option("--out", out_path, "Write the frame document here");

    auto* fusion_cmd = app.add_subcommand("fusion", "Fusion frame with prescribed subspace dimensions");
    fusion_cmd->add_option("--eigenvalues", eigenvalues, "Comma-separated eigenvalues")->required();
    fusion_cmd->add_option("--dims", dims, "Comma-separated subspace dimensions")->required();
    fusion_cmd->add_option("--out", out_path, "Write the frame document here");

    auto* verify_cmd = app.add_subcommand("verify", "Check a frame document");
    verify_cmd->add_option("file", file, "Frame document")->required();
    verify_cmd->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);

    auto* export_cmd = app.add_subcommand("export", "Convert a frame document");
    export_cmd->add_option("file", file, "Frame document")->required();
    export_cmd->add_option("--format", format, "json, mtx or csv")->required()->check(CLI::IsMember({"json", "mtx", "csv"}));
    export_cmd->add_option("--out", out_path, "Output file (default standard output)");

    auto* order_cmd = app.add_subcommand("order", "Blockwise eigenvalue order");
    order_cmd->add_option("--eigenvalues", eigenvalues, "Comma-separated eigenvalues")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*construct_cmd) return run_construct(ca, out);
        if (*rff_cmd) return run_rff(eigenvalues, out_path, out);
        if (*fusion_cmd) return run_fusion(eigenvalues, dims, out_path, out);
        if (*verify_cmd) return run_verify(file, tol, out);
        if (*export_cmd) return run_export(file, format, out_path, out);
        if (*order_cmd) return run_order(eigenvalues, out);
    } catch (const MajorizationFailed& e) {
        err << (e.certified_nonexistence() ? "nonexistence certified: " : "method limit: ") << e.what() << '\n';
        return kExitMajorization;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace stetris
