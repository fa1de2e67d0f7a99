#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coinf/hypercube.hpp"
#include "coinf/io.hpp"

using coinf::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("coinf_cli_test_" + std::to_string(static_cast<unsigned long>(::getpid())));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    static int counter = 0;
    const auto out_path = scratch_dir() / ("out" + std::to_string(counter));
    const auto err_path = scratch_dir() / ("err" + std::to_string(counter));
    const auto in_path = scratch_dir() / ("in" + std::to_string(counter));
    ++counter;
    std::string command = std::string(COINF_CLI_PATH) + " " + args;
    if (!stdin_data.empty()) {
        std::ofstream in(in_path);
        in << stdin_data;
        command += " < " + in_path.string();
    }
    command += " > " + out_path.string() + " 2> " + err_path.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

const std::string kToySpec = R"({"type":"matrix","n":5,"rows":["11100","00111"]})";
const std::string kNineSpec =
    R"({"type":"matrix","n":9,"rows":["100010101","010010110","001001100","000111111"]})";

}  // namespace

TEST_CASE("analyze reports a repetition code exactly") {
    const auto spec = write_file("rep.json", R"({"type":"repetition","r":3,"k":5})");
    const CliResult result = run_cli("analyze " + spec.string() + " --eval 1/2");
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report.at("code").at("n") == 15);
    CHECK(report.at("code").at("d") == 3);
    CHECK(report.at("mds").at("is_mds") == true);
    for (const auto& record : report.at("influence").at("per_coordinate")) {
        CHECK(record.at("closed_form") == "p");
        CHECK(record.at("matches_closed_form") == true);
        CHECK(record.at("monomial_coeffs") == json::array({"0", "1"}));
        CHECK(record.at("evaluations").at("1/2") == "1/2");
    }
    CHECK(report.at("influence").at("total").at("closed_form") == "15p");
    CHECK(report.at("influence").at("total").at("matches_closed_form") == true);
}

TEST_CASE("analyze reports the toy code with its two polynomial classes") {
    const auto spec = write_file("toy.json", kToySpec);
    const CliResult result = run_cli("analyze " + spec.string());
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report.at("mds").at("is_mds") == false);
    CHECK(report.at("mds").at("reason") == "no minimum at coordinate 0");
    const auto& records = report.at("influence").at("per_coordinate");
    const json outer = json::array({"0", "1", "1", "-1"});
    const json middle = json::array({"0", "2", "0", "-2"});
    for (int j : {0, 1, 3, 4}) CHECK(records.at(static_cast<size_t>(j)).at("monomial_coeffs") == outer);
    CHECK(records.at(2).at("monomial_coeffs") == middle);
    CHECK(records.at(2).at("closed_form") == nullptr);
    CHECK(report.at("influence").at("total").at("monomial_coeffs") == json::array({"0", "6", "4", "-6"}));
}

TEST_CASE("analyze output re-parses and re-emits byte-identically") {
    const auto spec = write_file("roundtrip.json", R"({"type":"distinct_weight","r":1,"k":2})");
    const CliResult result = run_cli("analyze " + spec.string() + " --eval 1/10,9/10 --retain-omegas");
    REQUIRE(result.exit_code == 0);
    const json parsed = json::parse(result.out);
    CHECK(parsed.dump(2) + "\n" == result.out);
}

TEST_CASE("analyze reads stdin and rejects malformed specs") {
    const CliResult ok = run_cli("analyze -", kToySpec);
    CHECK(ok.exit_code == 0);

    const CliResult bad = run_cli("analyze -", R"({"type":"matrix","n":5})");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("error:") != std::string::npos);

    const CliResult garbage = run_cli("analyze -", "not json at all {");
    CHECK(garbage.exit_code == 1);
    CHECK_FALSE(garbage.err.empty());
}

TEST_CASE("analyze over the cap still reports closed forms") {
    const auto spec = write_file("bigrep.json", R"({"type":"repetition","r":3,"k":10})");  // n = 30
    const CliResult result = run_cli("analyze " + spec.string());
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report.at("influence").at("computed") == false);
    CHECK(report.at("mds").at("is_mds") == true);
    CHECK(report.at("mds").at("source") == "detected");  // k = 10 still enumerates
    CHECK(report.at("influence").at("per_coordinate").at(0).at("closed_form") == "p");
    bool skipped_note = false;
    for (const auto& note : report.at("notes"))
        if (note.get<std::string>().find("brute force skipped") != std::string::npos) skipped_note = true;
    CHECK(skipped_note);

    // Past the enumeration cap the structure comes from the construction.
    const auto huge = write_file("hugerep.json", R"({"type":"repetition","r":2,"k":30})");  // n = 60, k = 30
    const CliResult tagged = run_cli("analyze " + huge.string());
    REQUIRE(tagged.exit_code == 0);
    const json tagged_report = json::parse(tagged.out);
    CHECK(tagged_report.at("mds").at("is_mds") == true);
    CHECK(tagged_report.at("mds").at("source") == "family");
    CHECK(tagged_report.at("code").at("d") == nullptr);
    CHECK(tagged_report.at("influence").at("total").at("closed_form") == "60");
}

TEST_CASE("csv projection emits the evaluation grid") {
    const auto spec = write_file("pc6.json", R"({"type":"parity_check","n":6})");
    const CliResult result = run_cli("--format csv analyze " + spec.string());
    REQUIRE(result.exit_code == 0);
    std::stringstream lines(result.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,I_0,I_1,I_2,I_3,I_4,I_5,total");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 9);
    CHECK(result.out.find("1/2,") != std::string::npos);
}

TEST_CASE("mds subcommand emits the structure schema") {
    const CliResult toy = run_cli("mds -", kToySpec);
    REQUIRE(toy.exit_code == 0);
    CHECK(json::parse(toy.out) == json{{"is_mds", false},
                                       {"reason", "no minimum at coordinate 0"},
                                       {"parts", json::array()},
                                       {"u", json::array()}});

    const CliResult rep = run_cli("mds -", R"({"type":"repetition","r":2,"k":2})");
    const json parsed = json::parse(rep.out);
    CHECK(parsed.at("is_mds") == true);
    CHECK(parsed.at("reason") == nullptr);
    CHECK(parsed.at("parts") == json::array({{0, 1}, {2, 3}}));
    CHECK(parsed.at("u") == json::array({"1100", "1100", "0011", "0011"}));
}

TEST_CASE("recover reproduces the motivating ambiguity") {
    const auto spec = write_file("nine.json", kNineSpec);
    const CliResult result = run_cli("recover " + spec.string() + " --word '**1*001**'");
    REQUIRE(result.exit_code == 0);
    const json out = json::parse(result.out);
    CHECK(out.at("outcome") == "ambiguous");
    CHECK(out.at("erasure_pattern") == "110100011");
    CHECK(out.at("consistent_count") == "2");
    REQUIRE(out.at("witnesses").is_array());
    CHECK(out.at("witnesses").size() == 2);

    const CliResult decoded = run_cli("recover " + spec.string() + " --word 110000011");
    CHECK(json::parse(decoded.out).at("outcome") == "decoded");
    const CliResult inconsistent = run_cli("recover " + spec.string() + " --word 100000000");
    CHECK(json::parse(inconsistent.out).at("outcome") == "inconsistent");
}

TEST_CASE("mc is seeded, reproducible, and within tolerance") {
    const auto spec = write_file("rep_mc.json", R"({"type":"repetition","r":3,"k":5})");
    const std::string args = "mc " + spec.string() + " --i 0 --p 1/2 --trials 100000 --seed 42";
    const CliResult first = run_cli(args);
    REQUIRE(first.exit_code == 0);
    const CliResult second = run_cli(args);
    CHECK(first.out == second.out);
    const CliResult threaded = run_cli("--threads 4 " + args);
    const json a = json::parse(first.out);
    const json b = json::parse(threaded.out);
    CHECK(a.at("unrecoverable") == b.at("unrecoverable"));
    CHECK(a.at("algorithm") == "splitmix64");
    CHECK(a.at("exact") == "1/8");
    CHECK(std::abs(a.at("z_score").get<double>()) <= 4.0);

    // The seed is mandatory.
    const CliResult unseeded = run_cli("mc " + spec.string() + " --i 0 --p 1/2 --trials 100");
    CHECK(unseeded.exit_code != 0);
}

TEST_CASE("verify subcommand prints per-instance verdicts") {
    const CliResult result = run_cli("verify parity_check");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("PASS parity_check/n=2") != std::string::npos);
    CHECK(result.out.find("PASS parity_check/n=14") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);
    CHECK(result.out.find("OK parity_check") != std::string::npos);

    const CliResult toy = run_cli("verify toy");
    REQUIRE(toy.exit_code == 0);
    CHECK(toy.out.find("printed total discrepancy") != std::string::npos);
    CHECK(toy.out.find("NOTE") != std::string::npos);

    const CliResult unknown = run_cli("verify nonsense");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("influence subcommand emits a single record on request") {
    const CliResult result = run_cli("influence - --j 2 --eval 1/2", kToySpec);
    REQUIRE(result.exit_code == 0);
    const json record = json::parse(result.out);
    CHECK(record.at("j") == 2);
    CHECK(record.at("monomial_coeffs") == json::array({"0", "2", "0", "-2"}));
    CHECK(record.at("evaluations").at("1/2") == "3/4");
    CHECK(record.at("weight_profile") == json::array({0, 0, 2, 6, 4, 0}));
    CHECK(record.at("basis_form") == json::array({{2, 1, 3}, {6, 2, 2}, {4, 3, 1}}));
}

TEST_CASE("matrix json serialization round-trips") {
    const coinf::GF2Matrix m = coinf::GF2Matrix::from_strings({"11010", "00111"}, 5);
    const json serialized = coinf::matrix_to_json(m);
    CHECK(serialized == json{{"n", 5}, {"rows", {"11010", "00111"}}});
    CHECK(coinf::matrix_from_json(serialized) == m);
    CHECK_THROWS_AS(coinf::matrix_from_json(json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("cap flag is honored and bounded") {
    const CliResult small_cap = run_cli("--cap 4 analyze -", kToySpec);
    REQUIRE(small_cap.exit_code == 0);
    CHECK(json::parse(small_cap.out).at("influence").at("computed") == false);

    const CliResult raised = run_cli("--cap 28 analyze -", kToySpec);
    CHECK(raised.exit_code == 0);

    const CliResult too_high = run_cli("--cap 29 analyze -", kToySpec);
    CHECK(too_high.exit_code == 1);
    CHECK(too_high.err.find("28") != std::string::npos);
}

TEST_CASE("dumped indicator blobs match the in-process tables") {
    const auto spec = write_file("dump_spec.json", R"({"type":"repetition","r":2,"k":3})");
    const auto dir = scratch_dir() / "blobs";
    const CliResult result =
        run_cli("analyze " + spec.string() + " --retain-omegas --dump-indicators " + dir.string());
    REQUIRE(result.exit_code == 0);
    const coinf::BinaryCode code = coinf::repetition_code(2, 3);
    for (int j = 0; j < code.n(); ++j) {
        std::ifstream in(dir / ("b_" + std::to_string(j) + ".bin"), std::ios::binary);
        REQUIRE(in.good());
        CHECK(coinf::IndicatorMap::read_blob(in) == coinf::b_set(code, j));
    }
    std::ifstream in(dir / "omega_0.bin", std::ios::binary);
    REQUIRE(in.good());
    CHECK(coinf::IndicatorMap::read_blob(in) == coinf::omega(code, 0));
}
