#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "polyaut/criterion.hpp"
#include "polyaut/mapzoo.hpp"
#include "polyaut/polynomial_io.hpp"
#include "polyaut/report.hpp"
#include "support/subprocess.hpp"

using namespace polyaut;
using polyaut::testing::run_command;

namespace {

const std::string cli = POLYAUT_CLI_BIN;
const std::string data_dir = POLYAUT_DATA_DIR;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("report document JSON round-trips") {
    const CriterionReport report = check_automorphism(fixtures().at("nagata"));
    for (bool timings : {false, true}) {
        const ReportDocument doc = make_report_document(report, timings);
        const ReportDocument back = report_from_json(report_to_json(doc));
        CHECK(back == doc);
    }

    const ReportDocument wdoc =
        make_report_document(compute_wronskians(fixtures().at("toy2")), false);
    CHECK(!wdoc.verdict.has_value());
    CHECK(report_from_json(report_to_json(wdoc)) == wdoc);
}

TEST_CASE("report entries are sorted and re-parseable") {
    const CriterionReport report = check_automorphism(fixtures().at("nagata"));
    const ReportDocument doc = make_report_document(report, false);
    REQUIRE(doc.entries.size() == 27);
    for (std::size_t t = 1; t < doc.entries.size(); ++t) {
        const auto& a = doc.entries[t - 1];
        const auto& b = doc.entries[t];
        CHECK(std::tuple{a.k, a.i, a.j} < std::tuple{b.k, b.i, b.j});
    }
    for (const auto& e : doc.entries) {
        CHECK_NOTHROW(parse_polynomial(e.value_in_x, doc.n));
        if (e.f_expression) CHECK_NOTHROW(parse_polynomial(*e.f_expression, doc.n));
    }
    REQUIRE(doc.inverse.has_value());
    for (const auto& g : *doc.inverse) CHECK_NOTHROW(parse_polynomial(g, doc.n));
}

TEST_CASE("cli: exit codes") {
    CHECK(run_command(cli + " check " + data_dir + "/identity3.map").exit_code == 0);
    CHECK(run_command(cli + " check " + data_dir + "/nagata.map").exit_code == 0);
    CHECK(run_command(cli + " check " + data_dir + "/not_constant.map").exit_code == 2);
    CHECK(run_command(cli + " check " + data_dir + "/nagata.map --budget 3").exit_code == 3);
    CHECK(run_command(cli + " check " + data_dir + "/nagata.map --timeout 0.000000001").exit_code == 3);
    CHECK(run_command(cli + " check /nonexistent.map").exit_code == 64);
    CHECK(run_command(cli + " wronskians " + data_dir + "/not_constant.map").exit_code == 2);
    CHECK(run_command(cli + " invert " + data_dir + "/not_constant.map").exit_code == 2);

    // syntax error in a map file
    const std::string bad = "/tmp/polyaut_bad.map";
    std::ofstream(bad) << "F1 = x1 + 2x2\n";
    CHECK(run_command(cli + " check " + bad).exit_code == 64);
}

TEST_CASE("cli: check --json reproduces the criterion report") {
    const auto res =
        run_command(cli + " check " + data_dir + "/nagata.map --json --no-timings");
    REQUIRE(res.exit_code == 0);
    const ReportDocument doc = report_from_json(res.output);
    CHECK(doc.map_label == "nagata");
    CHECK(doc.verdict == "automorphism");
    CHECK(doc.jacobian_det == "1");
    CHECK(doc.counts.computed == 15);
    CHECK(doc.counts.by_symmetry == 9);
    CHECK(doc.counts.by_trace == 3);
    CHECK(!doc.timings_ms.has_value());
    REQUIRE(doc.inverse.has_value());

    const ReportDocument direct =
        make_report_document(check_automorphism(fixtures().at("nagata")), false);
    CHECK(doc == direct);
}

TEST_CASE("cli: runs are byte-identical across parallelism settings") {
    const std::string base = cli + " check " + data_dir + "/nagata.map --json --no-timings";
    const auto serial = run_command(base + " --parallel 1");
    const auto wide = run_command(base + " --parallel 4");
    const auto again = run_command(base + " --parallel 4");
    REQUIRE(serial.exit_code == 0);
    CHECK(serial.output == wide.output);
    CHECK(wide.output == again.output);
}

TEST_CASE("cli: wronskians with and without reduction") {
    const auto reduced =
        run_command(cli + " wronskians " + data_dir + "/nagata.map --json --no-timings");
    REQUIRE(reduced.exit_code == 0);
    const ReportDocument rdoc = report_from_json(reduced.output);
    CHECK(!rdoc.verdict.has_value());
    CHECK(rdoc.counts.computed == 15);
    CHECK(rdoc.entries.size() == 27);
    for (const auto& e : rdoc.entries) CHECK(!e.member.has_value());

    const auto full = run_command(cli + " wronskians " + data_dir +
                                  "/nagata.map --no-reduction --json --no-timings");
    REQUIRE(full.exit_code == 0);
    const ReportDocument fdoc = report_from_json(full.output);
    CHECK(fdoc.counts.computed == 27);
    CHECK(fdoc.entries.size() == 27);
    // same values entry-by-entry
    for (std::size_t t = 0; t < 27; ++t) {
        CHECK(fdoc.entries[t].value_in_x == rdoc.entries[t].value_in_x);
    }
}

TEST_CASE("cli: invert") {
    const auto toy = run_command(cli + " invert " + data_dir + "/toy2.map");
    REQUIRE(toy.exit_code == 0);
    CHECK(toy.output.find("G1 = y1") != std::string::npos);
    CHECK(toy.output.find("G2 = -y1^2 + y2") != std::string::npos);

    const auto nagata = run_command(cli + " invert " + data_dir + "/nagata.map --json");
    REQUIRE(nagata.exit_code == 0);
    const auto j = nlohmann::json::parse(nagata.output);
    REQUIRE(j.at("inverse").size() == 3);
    const PolynomialMap& map = fixtures().at("nagata");
    for (int i = 0; i < 3; ++i) {
        const Polynomial g = parse_polynomial(j.at("inverse")[static_cast<std::size_t>(i)].get<std::string>(), 3);
        CHECK(g.substitute(map.components) == Polynomial::variable(3, i));
    }
}

TEST_CASE("cli: druzkowski generation is byte-identical to the shipped fixture") {
    const std::string out = "/tmp/polyaut_druzkowski13.map";
    const auto res = run_command(cli + " druzkowski " + data_dir + "/druzkowski13.matrix -o " + out);
    REQUIRE(res.exit_code == 0);
    CHECK(read_file(out) == read_file(data_dir + "/druzkowski13.map"));

    // zero matrix gives the identity map
    const std::string zero = "/tmp/polyaut_zero.matrix";
    std::ofstream(zero) << "2\n0 0\n0 0\n";
    const auto id = run_command(cli + " druzkowski " + zero);
    REQUIRE(id.exit_code == 0);
    CHECK(id.output == "F1 = x1\nF2 = x2\n");

    // rank-1 nilpotent shear
    const std::string shear = "/tmp/polyaut_shear.matrix";
    std::ofstream(shear) << "2\n0 1\n0 0\n";
    const auto sh = run_command(cli + " druzkowski " + shear);
    REQUIRE(sh.exit_code == 0);
    CHECK(sh.output == "F1 = x2^3 + x1\nF2 = x2\n");

    CHECK(run_command(cli + " druzkowski /nonexistent.matrix").exit_code == 64);
}

TEST_CASE("cli: generated map files feed back into check") {
    const std::string shear = "/tmp/polyaut_shear2.matrix";
    std::ofstream(shear) << "3\n0 1 2\n0 0 0\n0 0 0\n";
    const std::string out = "/tmp/polyaut_shear2.map";
    REQUIRE(run_command(cli + " druzkowski " + shear + " -o " + out).exit_code == 0);
    CHECK(run_command(cli + " check " + out).exit_code == 0);
}
