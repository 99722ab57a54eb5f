#include <doctest.h>

#include "srujac/cli.hpp"
#include "srujac/constructions.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

using namespace srujac;

namespace {

std::string value_of(const CommandResult& r, const std::string& key) {
    for (const auto& [k, v] : r.payload)
        if (k == key) return v;
    FAIL("payload key missing: " << key);
    return {};
}

bool has_key(const CommandResult& r, const std::string& key) {
    for (const auto& [k, v] : r.payload)
        if (k == key) return true;
    return false;
}

}  // namespace

TEST_CASE("jacobian subcommand reports the pinned u24 values") {
    CommandResult r = run_command({"jacobian", "--family", "u24", "--verify"});
    REQUIRE(r.exit_code == 0);
    CHECK(value_of(r, "snf") == "1+w, 2+2w");
    CHECK(value_of(r, "divisors") == "1+w, 2+2w");
    CHECK(value_of(r, "jacobian") == "E/(1+w) + E/(2+2w)");
    CHECK(value_of(r, "abelian") == "Z/6 + Z/6");
    CHECK(value_of(r, "order") == "36");
    CHECK(value_of(r, "bases") == "6");
    CHECK(value_of(r, "verified") == "true");
    CHECK(r.report ==
          "snf: 1+w, 2+2w\n"
          "divisors: 1+w, 2+2w\n"
          "jacobian: E/(1+w) + E/(2+2w)\n"
          "abelian: Z/6 + Z/6\n"
          "order: 36\n"
          "bases: 6\n"
          "verified: order = bases^2\n");
}

TEST_CASE("compare subcommand separates the conjugated pair") {
    CommandResult r = run_command(
        {"compare", "--family", "counterexample_m", "--family2", "counterexample_mprime"});
    REQUIRE(r.exit_code == 0);
    CHECK(value_of(r, "left") == "21, 147");
    CHECK(value_of(r, "right") == "3, 1029");
    CHECK(value_of(r, "e_module") == "different");
    CHECK(value_of(r, "abelian") == "different");

    CommandResult same = run_command({"compare", "--family", "ag23", "--family2", "ag23"});
    CHECK(value_of(same, "e_module") == "same");
    CHECK(value_of(same, "abelian") == "same");
}

TEST_CASE("validate subcommand flags bad input through the exit code") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "srujac-test-cli";
    fs::create_directories(dir);
    fs::path bad = dir / "bad.hmat";
    write_matrix_file(
        [] {
            MatrixE m(2, 2);
            m(0, 0) = 1;
            m(0, 1) = 1;
            m(1, 0) = -1;
            m(1, 1) = 1;  // determinant 2
            return m;
        }(),
        bad.string());

    CommandResult ok = run_command({"validate", "--family", "ag23", "--level", "full"});
    CHECK(ok.exit_code == 0);
    CHECK(value_of(ok, "result") == "valid");
    CHECK(value_of(ok, "minors_checked") == "219");

    CommandResult fail = run_command({"validate", "--file", bad.string()});
    CHECK(fail.exit_code == 1);
    CHECK(value_of(fail, "result") == "invalid");
    CHECK(value_of(fail, "violation").find("minor") != std::string::npos);

    CommandResult entries = run_command(
        {"validate", "--file", bad.string(), "--level", "entries"});
    CHECK(entries.exit_code == 0);  // entries all lie in H

    fs::remove_all(dir);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_command({}).exit_code == 2);
    CHECK(run_command({"jacobian"}).exit_code == 2);  // no input source
    CHECK(run_command({"jacobian", "--family", "u24", "--file", "x.hmat"}).exit_code == 2);
    CHECK(run_command({"frobnicate"}).exit_code == 2);
    CHECK(run_command({"validate", "--family", "u24", "--level", "bogus"}).exit_code == 2);
    CHECK(run_command({"class", "--family", "u24", "--vector", "1,0"}).exit_code == 2);
    CommandResult r = run_command({"jacobian"});
    CHECK(has_key(r, "error"));
    CHECK(r.report.find("usage error") != std::string::npos);
}

TEST_CASE("computation failures exit with code 1") {
    CommandResult r = run_command({"jacobian", "--file", "/nonexistent/x.hmat"});
    CHECK(r.exit_code == 1);
    CHECK(r.report.find("error:") != std::string::npos);
    CHECK(run_command({"gen", "--family", "nosuch"}).exit_code == 1);
    CHECK(run_command({"gen", "--family", "t_r:1"}).exit_code == 1);
}

TEST_CASE("help exits cleanly") {
    CommandResult top = run_command({"--help"});
    CHECK(top.exit_code == 0);
    CHECK(top.report.find("Usage") != std::string::npos);
    CommandResult sub = run_command({"jacobian", "--help"});
    CHECK(sub.exit_code == 0);
    CHECK(sub.report.find("jacobian") != std::string::npos);
}

TEST_CASE("gen writes files the other subcommands can read") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "srujac-test-cli-gen";
    fs::create_directories(dir);
    fs::path out = dir / "w4.hmat";

    CommandResult gen = run_command({"gen", "--family", "whirl:4", "--output", out.string()});
    REQUIRE(gen.exit_code == 0);
    CHECK(value_of(gen, "rank") == "4");
    CHECK(value_of(gen, "size") == "8");
    CHECK(value_of(gen, "written") == out.string());

    CommandResult jac = run_command({"jacobian", "--file", out.string()});
    REQUIRE(jac.exit_code == 0);
    CHECK(value_of(jac, "order") == "2116");  // 46^2 spanning-tree pairs

    // without --output the matrix text lands in the report
    CommandResult inline_gen = run_command({"gen", "--family", "u24"});
    CHECK(inline_gen.report.find("2 4") != std::string::npos);
    CHECK(inline_gen.report.find("1 0 1 1") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("twosum reproduces the counterexample invariants") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "srujac-test-cli-twosum";
    fs::create_directories(dir);
    fs::path left = dir / "m1.hmat";
    fs::path right = dir / "m8.hmat";
    write_matrix_file(m1_matrix(), left.string());
    MatrixE m8 = m8_matrix();
    std::vector<int> labels(m8.cols());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = 101 + static_cast<int>(i);
    m8.set_labels(labels);
    write_matrix_file(m8, right.string());

    fs::path glued = dir / "m.hmat";
    CommandResult ts = run_command({"twosum", "--file", left.string(), "--file2",
                                    right.string(), "--basepoint1", "1", "--basepoint2",
                                    "101", "--output", glued.string()});
    REQUIRE(ts.exit_code == 0);
    CHECK(value_of(ts, "rank") == "7");
    CHECK(value_of(ts, "size") == "21");

    CommandResult jac = run_command({"jacobian", "--file", glued.string()});
    CHECK(value_of(jac, "divisors") == "21, 147");

    CommandResult conj = run_command({"twosum", "--file", left.string(), "--file2",
                                      right.string(), "--basepoint1", "1", "--basepoint2",
                                      "101", "--conjugate-second", "--output",
                                      glued.string()});
    REQUIRE(conj.exit_code == 0);
    CommandResult jac2 = run_command({"jacobian", "--file", glued.string()});
    CHECK(value_of(jac2, "divisors") == "3, 1029");

    fs::remove_all(dir);
}

TEST_CASE("class subcommand emits canonical residues") {
    CommandResult r = run_command({"class", "--family", "u24", "--vector", "1,0,0,0"});
    REQUIRE(r.exit_code == 0);
    CHECK(value_of(r, "class") == "0, 1");
    CHECK(r.report == "class: 0, 1\n");
    CommandResult zero = run_command({"class", "--family", "u24", "--vector", "0, 0, 0, 0"});
    CHECK(value_of(zero, "class") == "0, 0");
    CHECK(run_command({"class", "--family", "u24", "--vector", "1,,0,0"}).exit_code == 2);
}

TEST_CASE("projection subcommand verifies the averaging identity") {
    CommandResult r =
        run_command({"projection", "--family", "ag23", "--verify-averaging"});
    REQUIRE(r.exit_code == 0);
    CHECK(value_of(r, "kappa") == "72");
    CHECK(value_of(r, "averaging") == "verified");
    CHECK(r.report.find("N = 72*P verified") != std::string::npos);

    CommandResult rows = run_command({"projection", "--family", "u24"});
    CHECK(rows.report.find("row 1:") != std::string::npos);
    CHECK(rows.report.find("row 4:") != std::string::npos);
}

TEST_CASE("json payloads parse and preserve keys") {
    CommandResult r = run_command({"--json", "bases", "--family", "u24", "--count"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.json);
    nlohmann::json payload;
    // reconstruct exactly what run_cli prints
    nlohmann::ordered_json obj;
    for (const auto& [k, v] : r.payload) obj[k] = v;
    payload = nlohmann::json::parse(obj.dump());
    CHECK(payload.at("count") == "6");

    // flag position is flexible thanks to fallthrough
    CommandResult r2 = run_command({"bases", "--family", "u24", "--count", "--json"});
    CHECK(r2.json);
}

TEST_CASE("bases subcommand lists sorted label sets") {
    CommandResult r = run_command({"bases", "--family", "u24"});
    REQUIRE(r.exit_code == 0);
    CHECK(value_of(r, "count") == "6");
    CHECK(value_of(r, "bases") == "1 2;1 3;1 4;2 3;2 4;3 4");
    CHECK(r.report.find("basis: 1 2\n") != std::string::npos);
}
