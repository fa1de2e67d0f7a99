// coinf: exact influence analysis of binary linear codes under erasures.
//
// Subcommands: analyze, influence, verify, mds, recover, mc.  All output is
// canonical JSON (sorted keys, exact values as decimal strings) unless
// --format csv asks for the lossy plotting projection.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coinf/report.hpp"
#include "coinf/verify.hpp"

namespace {

using coinf::json;

json read_spec(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    return json::parse(in);
}

std::vector<mpq_class> parse_grid(const std::string& csv) {
    std::vector<mpq_class> grid;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        const mpq_class p = coinf::parse_rational(item);
        if (p <= 0 || p >= 1) throw std::invalid_argument("evaluation point " + item + " outside (0, 1)");
        grid.push_back(p);
    }
    return grid;
}

void emit(const json& value) { std::cout << value.dump(2) << "\n"; }

void dump_indicators(const coinf::BinaryCode& code, const std::string& dir, int cap, bool omegas) {
    std::filesystem::create_directories(dir);
    const auto write = [&](const std::string& name, const coinf::IndicatorMap& map) {
        std::ofstream out(dir + "/" + name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
        map.write_blob(out);
    };
    for (int j = 0; j < code.n(); ++j) write("b_" + std::to_string(j) + ".bin", coinf::b_set(code, j, cap));
    if (omegas)
        for (int i = 0; i < code.n(); ++i)
            write("omega_" + std::to_string(i) + ".bin", coinf::omega(code, i, cap));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coordinate-influence analysis of binary linear codes under erasures"};
    app.require_subcommand(1);

    int cap = coinf::kDefaultBruteForceCap;
    int threads = 1;
    std::string format = "json";
    app.add_option("--cap", cap, "brute-force length cap (hard limit 28)")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (speed only; output is identical)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline: structure, influences, closed forms");
    std::string analyze_spec;
    std::string analyze_eval;
    std::string analyze_dump_dir;
    bool retain_omegas = false;
    analyze_cmd->add_option("spec", analyze_spec, "code spec JSON file, or - for stdin")->required();
    analyze_cmd->add_option("--eval", analyze_eval, "comma-separated rationals in (0,1) for exact evaluation");
    analyze_cmd->add_flag("--retain-omegas", retain_omegas, "include per-coordinate omega summaries");
    analyze_cmd->add_option("--dump-indicators", analyze_dump_dir,
                            "write raw indicator blobs (b_<j>.bin, omega_<i>.bin) into this directory");

    // influence
    auto* influence_cmd = app.add_subcommand("influence", "per-coordinate influence records");
    std::string influence_spec;
    std::string influence_eval;
    int influence_j = -1;
    influence_cmd->add_option("spec", influence_spec, "code spec JSON file, or - for stdin")->required();
    influence_cmd->add_option("--j", influence_j, "single coordinate (default: all)");
    influence_cmd->add_option("--eval", influence_eval, "comma-separated rationals in (0,1)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "closed-form vs brute-force family sweeps");
    std::string suite_name;
    verify_cmd->add_option("suite", suite_name, "one of: parity_check repetition distinct_weight hybrid product toy")
        ->required();

    // mds
    auto* mds_cmd = app.add_subcommand("mds", "detect minimum disjoint support structure");
    std::string mds_spec;
    mds_cmd->add_option("spec", mds_spec, "code spec JSON file, or - for stdin")->required();

    // recover
    auto* recover_cmd = app.add_subcommand("recover", "decode a received word with erasures");
    std::string recover_spec;
    std::string recover_word;
    recover_cmd->add_option("spec", recover_spec, "code spec JSON file, or - for stdin")->required();
    recover_cmd->add_option("--word", recover_word, "received word over {0,1,*}")->required();

    // mc
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of the unrecoverability probability");
    std::string mc_spec;
    std::string mc_p = "1/2";
    int mc_i = 0;
    uint64_t mc_trials = 100000;
    uint64_t mc_seed = 0;
    mc_cmd->add_option("spec", mc_spec, "code spec JSON file, or - for stdin")->required();
    mc_cmd->add_option("--i", mc_i, "coordinate")->capture_default_str();
    mc_cmd->add_option("--p", mc_p, "erasure probability, exact rational")->capture_default_str();
    mc_cmd->add_option("--trials", mc_trials, "number of trials")->capture_default_str();
    mc_cmd->add_option("--seed", mc_seed, "64-bit seed (required: runs must be reproducible)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            const coinf::BinaryCode code = coinf::code_from_spec(read_spec(analyze_spec));
            coinf::AnalyzeOptions options;
            options.cap = cap;
            options.threads = threads;
            options.retain_omegas = retain_omegas;
            if (!analyze_eval.empty()) options.eval_grid = parse_grid(analyze_eval);
            if (format == "csv") {
                std::cout << coinf::analysis_csv(code, options);
                return 0;
            }
            const coinf::Analysis analysis = coinf::analyze(code, options);
            if (!analyze_dump_dir.empty() && code.n() <= cap)
                dump_indicators(code, analyze_dump_dir, cap, retain_omegas);
            emit(analysis.report);
            return analysis.closed_form_mismatch ? 2 : 0;
        }
        if (*influence_cmd) {
            const coinf::BinaryCode code = coinf::code_from_spec(read_spec(influence_spec));
            coinf::AnalyzeOptions options;
            options.cap = cap;
            options.threads = threads;
            if (!influence_eval.empty()) options.eval_grid = parse_grid(influence_eval);
            if (format == "csv") {
                std::cout << coinf::analysis_csv(code, options);
                return 0;
            }
            const coinf::Analysis analysis = coinf::analyze(code, options);
            const json& records = analysis.report.at("influence").at("per_coordinate");
            if (influence_j >= 0) {
                if (influence_j >= code.n()) throw std::out_of_range("coordinate out of range");
                emit(records.at(static_cast<size_t>(influence_j)));
            } else {
                emit(records);
            }
            return analysis.closed_form_mismatch ? 2 : 0;
        }
        if (*verify_cmd) {
            const coinf::VerifySuite suite = coinf::run_verify_suite(suite_name, cap, threads);
            for (const auto& instance : suite.instances)
                std::cout << (instance.pass ? "PASS" : "FAIL") << " " << suite.name << "/" << instance.label
                          << ": " << instance.detail << "\n";
            for (const auto& note : suite.notes) std::cout << "NOTE " << note << "\n";
            std::cout << "invariant checks: " << suite.invariant_checks
                      << ", violations: " << suite.invariant_violations << "\n";
            std::cout << (suite.all_pass() ? "OK" : "FAILED") << " " << suite.name << "\n";
            return suite.all_pass() ? 0 : 1;
        }
        if (*mds_cmd) {
            const coinf::BinaryCode code = coinf::code_from_spec(read_spec(mds_spec));
            if (code.k() > coinf::kMaxEnumerableDim)
                throw std::length_error("dimension too large for structure detection");
            const coinf::MdsDetection det = coinf::detect_mds(code);
            json parts = json::array();
            json u = json::array();
            if (det.is_mds()) {
                for (const auto& part : det.structure->parts) parts.push_back(part);
                for (const coinf::Word& w : det.structure->u) u.push_back(w.str());
            }
            emit(json{{"is_mds", det.is_mds()},
                      {"reason", det.is_mds() ? json(nullptr) : json(det.reason())},
                      {"parts", parts},
                      {"u", u}});
            return 0;
        }
        if (*recover_cmd) {
            const coinf::BinaryCode code = coinf::code_from_spec(read_spec(recover_spec));
            const coinf::ReceivedWord word = coinf::ReceivedWord::parse(recover_word);
            const coinf::RecoveryOutcome outcome = coinf::decode_erasures(code, word);
            json out;
            switch (outcome.kind) {
                case coinf::RecoveryOutcome::Kind::decoded: out["outcome"] = "decoded"; break;
                case coinf::RecoveryOutcome::Kind::ambiguous: out["outcome"] = "ambiguous"; break;
                default: out["outcome"] = "inconsistent"; break;
            }
            out["codeword"] = outcome.codeword ? json(outcome.codeword->str()) : json(nullptr);
            out["witnesses"] =
                outcome.witnesses
                    ? json(json::array({outcome.witnesses->first.str(), outcome.witnesses->second.str()}))
                    : json(nullptr);
            out["consistent_count"] = std::to_string(outcome.consistent_count);
            out["ambiguity_dim"] = outcome.ambiguity_dim;
            out["erasure_pattern"] = word.erasure_pattern().str();
            emit(out);
            return 0;
        }
        if (*mc_cmd) {
            const coinf::BinaryCode code = coinf::code_from_spec(read_spec(mc_spec));
            const mpq_class p = coinf::parse_rational(mc_p);
            const coinf::McEstimate estimate =
                coinf::mc_unrecoverable_prob(code, mc_i, p, mc_trials, mc_seed, threads);
            json out{{"algorithm", estimate.algorithm},
                     {"coordinate", mc_i},
                     {"estimate", estimate.estimate},
                     {"p", coinf::rational_str(p)},
                     {"seed", mc_seed},
                     {"stderr", estimate.standard_error},
                     {"trials", estimate.trials},
                     {"unrecoverable", estimate.unrecoverable}};
            if (code.n() <= cap) {
                const mpq_class exact = coinf::mu_p(coinf::omega(code, mc_i, cap), p);
                out["exact"] = coinf::rational_str(exact);
                out["z_score"] = estimate.standard_error > 0
                                     ? json((estimate.estimate - exact.get_d()) / estimate.standard_error)
                                     : json(nullptr);
            } else {
                out["exact"] = nullptr;
                out["z_score"] = nullptr;
            }
            emit(out);
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
