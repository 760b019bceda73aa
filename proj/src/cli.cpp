#include "qbasis/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qbasis/io/documents.hpp"
#include "qbasis/io/problem.hpp"
#include "qbasis/oracle.hpp"
#include "qbasis/quasibasis.hpp"

namespace qbasis::cli {
namespace {

using io::Json;
using io::Problem;
using Q = Rational;

struct Options {
    std::string input;
    std::string output;
    std::string candidate;
    std::optional<std::size_t> query;
    bool oracle_check = false;
    bool quiet = false;
};

void add_common(CLI::App& cmd, Options& opt) {
    cmd.add_option("input", opt.input, "Problem file (JSON)")->required();
    cmd.add_option("--output", opt.output, "Write the result document here instead of standard output");
    cmd.add_flag("--quiet", opt.quiet, "Suppress the document on standard output and all diagnostics");
}

// Queries selected by --query, or all of them.
std::vector<std::size_t> selected_queries(const Problem& problem, const Options& opt) {
    if (problem.queries.empty()) {
        throw io::InputError("problem has no \"queries\"");
    }
    if (opt.query) {
        if (*opt.query >= problem.queries.size()) {
            throw io::InputError("--query " + std::to_string(*opt.query) + " out of range (" +
                                 std::to_string(problem.queries.size()) + " queries)");
        }
        return {*opt.query};
    }
    std::vector<std::size_t> all(problem.queries.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return all;
}

int cmd_compute(const Problem& problem, const Options& opt, Json& doc) {
    const auto qb = construct(problem.generators);
    const auto profile = rank_profile(qb);
    std::optional<RankProfile> oracle;
    if (opt.oracle_check) oracle = oracle_rank_profile(problem.generators);
    doc = io::compute_document(problem, qb, profile, oracle);
    return oracle && !(*oracle == profile) ? kOracleMismatch : kOk;
}

int cmd_verify(const Problem& problem, const Options& opt, Json& doc) {
    std::vector<io::Vector> elements;
    if (!opt.candidate.empty()) {
        const auto cand = io::parse_json_file(opt.candidate);
        if (!cand.is_object() || !cand.contains("elements")) {
            throw io::InputError(opt.candidate + ": candidate document has no \"elements\"");
        }
        elements = io::parse_vector_list(cand["elements"], problem.space, problem.ambient_rank, "elements");
    } else if (problem.basis) {
        elements = *problem.basis;
    } else {
        throw io::InputError("no candidate basis: give --candidate or a \"basis\" field");
    }
    const QuasiBasis<Q> candidate(problem.space, problem.ambient_rank, std::move(elements));
    const auto report = verify(candidate, problem.generators);
    doc = io::verify_document(problem, candidate, report);
    return report.ok() ? kOk : kNegative;
}

int cmd_member(const Problem& problem, const Options& opt, Json& doc) {
    doc = io::document_header("member", problem);
    Json results = Json::array();
    bool all_members = true;
    for (std::size_t k : selected_queries(problem, opt)) {
        const auto report = nonmembership_idempotent(problem.queries[k], problem.generators);
        all_members = all_members && report.is_member();
        results.push_back(io::membership_entry(k, report));
    }
    doc["results"] = std::move(results);
    return all_members ? kOk : kNegative;
}

int cmd_coords(const Problem& problem, const Options& opt, Json& doc) {
    const auto qb = construct(problem.generators);
    doc = io::document_header("coords", problem);
    Json basis = Json::array();
    for (const auto& x : qb.elements()) basis.push_back(io::encode_vector(x));
    doc["basis"] = std::move(basis);
    Json results = Json::array();
    bool all_ok = true;
    for (std::size_t k : selected_queries(problem, opt)) {
        try {
            results.push_back(io::coordinates_entry(k, coordinates(problem.queries[k], qb)));
        } catch (const MembershipError& e) {
            all_ok = false;
            results.push_back(io::coordinates_failure_entry(k, e.outside()));
        }
    }
    doc["results"] = std::move(results);
    return all_ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-bases of finitely generated modules over K^Ω"};
    app.require_subcommand(1);
    Options opt;

    auto* compute = app.add_subcommand("compute", "Construct a quasi-basis and its rank strata");
    add_common(*compute, opt);
    compute->add_flag("--oracle-check", opt.oracle_check, "Cross-check strata against the fiber-rank oracle");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a candidate quasi-basis against the generators");
    add_common(*verify_cmd, opt);
    verify_cmd->add_option("--candidate", opt.candidate, "Result document whose \"elements\" are the candidate");

    auto* member = app.add_subcommand("member", "Separation idempotent of each query against the span");
    add_common(*member, opt);
    member->add_option("--query", opt.query, "Index of the query to run (default: all)");

    auto* coords = app.add_subcommand("coords", "Coordinates of each query in the constructed quasi-basis");
    add_common(*coords, opt);
    coords->add_option("--query", opt.query, "Index of the query to run (default: all)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    Json doc;
    int code = kOk;
    try {
        const Problem problem = io::load_problem(opt.input);
        if (compute->parsed()) {
            code = cmd_compute(problem, opt, doc);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(problem, opt, doc);
        } else if (member->parsed()) {
            code = cmd_member(problem, opt, doc);
        } else {
            code = cmd_coords(problem, opt, doc);
        }
    } catch (const Error& e) {
        if (!opt.quiet) err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    const std::string text = io::render(doc);
    if (!opt.output.empty()) {
        std::ofstream file(opt.output, std::ios::binary);
        if (!file || !(file << text)) {
            if (!opt.quiet) err << "error: cannot write " << opt.output << '\n';
            return kInvalidInput;
        }
    } else if (!opt.quiet) {
        out << text;
    }
    if (code == kOracleMismatch && !opt.quiet) {
        err << "error: constructed strata disagree with the oracle\n";
    }
    return code;
}

}  // namespace qbasis::cli
