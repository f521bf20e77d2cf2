#include "cyclo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclo/classifier.hpp"
#include "cyclo/constructions.hpp"
#include "cyclo/group.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/subgroups.hpp"

namespace cyclo::cli {

namespace {

struct AnalyzeArgs {
    std::string expr;
    std::string cayley_path;
    std::string format = "text";
};

struct EnumerateArgs {
    int n = 0;
    std::string emit_dir;
};

struct VerifyArgs {
    int max_order = 0;
    std::string format = "text";
    bool strict = false;
    int jobs = 1;
};

struct PosetArgs {
    std::string expr;
    std::string dot_path;
};

void print_int_set(std::ostream& out, const std::vector<int>& values) {
    out << "{";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << "}";
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    if (args.expr.empty() == args.cayley_path.empty()) {
        err << "analyze: give exactly one of <expr> or --cayley <path>\n";
        return 1;
    }
    const Group g =
        args.expr.empty() ? read_cayley_file(args.cayley_path) : build_expr(args.expr);
    const OrderSpectrum spectrum = g.order_spectrum();
    const CyclicPoset poset = cyclic_subgroups(g);
    const CountingReport counting = check_counting_identities(g);
    const ClassLabel label = paper_predicate(g);

    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["name"] = g.name();
        j["order"] = g.order();
        j["pi"] = spectrum.pi;
        j["pi_e"] = spectrum.pi_e;
        j["exponent"] = spectrum.exponent;
        j["c_histogram"] = nlohmann::ordered_json::array();
        for (const auto& [k, ck] : poset.c_histogram)
            j["c_histogram"].push_back(nlohmann::ordered_json::array({k, ck}));
        j["count_cyclic"] = static_cast<int>(poset.members.size());
        j["sum_c_phi"] = counting.phi_weighted_sum;
        j["sum_c"] = counting.histogram_sum;
        j["order_identity"] = counting.order_identity;
        j["count_identity"] = counting.count_identity;
        j["label"] = label.str();
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "group: " << (g.name().empty() ? "(unnamed)" : g.name()) << "\n";
    out << "order: " << g.order() << "\n";
    out << "pi: ";
    print_int_set(out, spectrum.pi);
    out << "\npi_e: ";
    print_int_set(out, spectrum.pi_e);
    out << "\nexponent: " << spectrum.exponent << "\n";
    out << "c_k:";
    for (const auto& [k, ck] : poset.c_histogram) out << " c_" << k << "=" << ck;
    out << "\n|C(G)|: " << poset.members.size() << "\n";
    out << "sum c_k*phi(k): " << counting.phi_weighted_sum << " vs |G| = " << counting.group_order
        << (counting.order_identity ? " (equal)" : " (MISMATCH)") << "\n";
    out << "sum c_k: " << counting.histogram_sum << " vs |C(G)| = " << counting.poset_size
        << (counting.count_identity ? " (equal)" : " (MISMATCH)") << "\n";
    out << "label: " << label.str() << "\n";
    return 0;
}

void warn_if_slow(int n, std::ostream& err) {
    if (n > 14)
        err << "warning: order " << n
            << " enumeration runs without canonization and can take a long time;"
               " orders up to 12 are the intended range\n";
}

int run_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
    warn_if_slow(args.n, err);
    EnumOptions opts;
    opts.cap = kEnumHardCap;
    const std::vector<Group> groups = enumerate_groups(args.n, opts);
    out << "groups of order " << args.n << ": " << groups.size() << "\n";
    if (!args.emit_dir.empty()) {
        std::filesystem::create_directories(args.emit_dir);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            std::ostringstream name;
            name << "order" << args.n << "_" << std::setw(2) << std::setfill('0') << i
                 << ".tbl";
            write_cayley_file((std::filesystem::path(args.emit_dir) / name.str()).string(),
                              groups[i]);
        }
    }
    return 0;
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    warn_if_slow(args.max_order, err);
    EnumOptions opts;
    opts.cap = kEnumHardCap;
    opts.jobs = args.jobs;
    const DiffReport report = verify_theorem(args.max_order, opts);
    out << (args.format == "json" ? to_json(report) : to_text(report));
    if (args.strict && report.has_mismatches()) return 3;
    return 0;
}

int run_poset(const PosetArgs& args, std::ostream&, std::ostream&) {
    const Group g = build_expr(args.expr);
    const CyclicPoset poset = cyclic_subgroups(g);
    std::ofstream file(args.dot_path);
    if (!file) throw FormatError("cannot open " + args.dot_path + " for writing");
    file << poset_dot(poset);
    if (!file) throw FormatError("error writing " + args.dot_path);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclic-subgroup structure of finite groups"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze",
                                       "order spectrum, cyclic-subgroup counts and "
                                       "classification of one group");
    analyze->add_option("expr", analyze_args.expr,
                        "group expression, e.g. \"C4\", \"Q8\", \"C2 x S3\"");
    analyze->add_option("--cayley", analyze_args.cayley_path,
                        "read the group from a Cayley table file");
    analyze->add_option("--format", analyze_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    EnumerateArgs enumerate_args;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "exhaustively enumerate all groups of one order "
                                         "up to isomorphism");
    enumerate->add_option("n", enumerate_args.n, "group order (fast up to 12, hard cap 16)")
        ->required()
        ->check(CLI::Range(1, kEnumHardCap));
    enumerate->add_option("--emit-cayley", enumerate_args.emit_dir,
                          "write each group as a Cayley table file into this directory");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify",
                                      "diff the classification against exhaustive "
                                      "enumeration up to an order bound");
    verify->add_option("--max-order", verify_args.max_order, "largest order to enumerate")
        ->required()
        ->check(CLI::Range(1, kEnumHardCap));
    verify->add_option("--format", verify_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--strict", verify_args.strict, "exit 3 when mismatches exist");
    verify->add_option("--jobs", verify_args.jobs, "parallel search tasks")
        ->check(CLI::Range(1, 64));

    PosetArgs poset_args;
    auto* poset = app.add_subcommand("poset",
                                     "write the Hasse diagram of the cyclic-subgroup poset "
                                     "as a DOT file");
    poset->add_option("expr", poset_args.expr, "group expression")->required();
    poset->add_option("--dot", poset_args.dot_path, "output DOT path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_args, out, err);
        if (enumerate->parsed()) return run_enumerate(enumerate_args, out, err);
        if (verify->parsed()) return run_verify(verify_args, out, err);
        if (poset->parsed()) return run_poset(poset_args, out, err);
    } catch (const cyclo::ParseError& e) {
        err << "error: " << e.what() << " (at position " << e.position << ")\n";
        return 1;
    } catch (const cyclo::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 1;
}

}  // namespace cyclo::cli
