#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mspace/cli.hpp"
#include "mspace/construct.hpp"
#include "mspace/io.hpp"

using namespace mspace;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify emits the documented JSON schema") {
    CliResult r = run_cli({"classify", fixture("nt3_f3.mspace"), "--json"});
    REQUIRE(r.code == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["field"] == 3);
    CHECK(j["n"] == 3);
    REQUIRE(j["blocks"].size() == 3);
    for (const auto& b : j["blocks"]) CHECK(b["size"] == 1);
    CHECK(j["verified"] == true);
    CHECK(j.contains("basis_change"));
}

TEST_CASE("check reports the spectrum and encodes the decision in the exit code") {
    CliResult good = run_cli({"check", fixture("nt2_f3.mspace")});
    CHECK(good.code == 0);
    CHECK(good.out.find("trivial spectrum:      true") != std::string::npos);

    CliResult bad = run_cli({"check", fixture("e11_f3.mspace"), "--json"});
    CHECK(bad.code == 1);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(bad.out);
    CHECK(j["trivial_spectrum"] == false);
    CHECK(j["witness"]["x"].dump() == "[1,0]");
}

TEST_CASE("similar and equiv decisions map to exit codes") {
    CHECK(run_cli({"similar", fixture("nt2_f3.mspace"), fixture("nt2_f3.mspace")}).code == 0);
    CHECK(run_cli({"similar", fixture("nt2_f3.mspace"), fixture("companion11_f3.mspace")}).code == 1);

    CHECK(run_cli({"equiv", fixture("affine_i2nt2_f3.mspace"), fixture("affine_i2nt2_f3.mspace")}).code == 0);
    CHECK(run_cli({"equiv", fixture("affine_palt_i2_f3.mspace"), fixture("affine_palt_d12_f3.mspace")}).code == 1);
    CHECK(run_cli({"equiv", fixture("affine_palt_i2_f3.mspace"), fixture("affine_i2nt2_f3.mspace")}).code == 1);
}

TEST_CASE("construct subcommands emit parseable canonical files") {
    CliResult alt = run_cli({"construct", "alt", "-n", "3", "--field", "5"});
    REQUIRE(alt.code == 0);
    ParsedSpace parsed = parse_mspace(alt.out);
    CHECK(std::get<MatrixSubspace>(parsed) == alt_space(3, FieldDesc::prime(5)));

    CliResult comp = run_cli({"construct", "companion", "--field", "3", "--a", "1", "--b", "1"});
    REQUIRE(comp.code == 0);
    CHECK(std::get<MatrixSubspace>(parse_mspace(comp.out)) ==
          companion_line(Scalar(FieldDesc::prime(3), 1), Scalar(FieldDesc::prime(3), 1)));

    CliResult palt = run_cli({"construct", "palt", fixture("gram_d12_f3.mspace")});
    REQUIRE(palt.code == 0);
    CHECK(std::get<MatrixSubspace>(parse_mspace(palt.out)) ==
          p_alt(Matrix::from_ints(FieldDesc::prime(3), {{1, 0}, {0, 2}})));

    CliResult v = run_cli({"construct", "vee", fixture("nt2_f3.mspace"), fixture("nt2_f3.mspace")});
    REQUIRE(v.code == 0);
    MatrixSubspace nt2 = nt_space(2, FieldDesc::prime(3));
    CHECK(std::get<MatrixSubspace>(parse_mspace(v.out)) == vee(nt2, nt2));

    CliResult affine = run_cli({"construct", "nt", "-n", "2", "--field", "3", "--affine"});
    REQUIRE(affine.code == 0);
    CHECK(std::holds_alternative<AffineSpace>(parse_mspace(affine.out)));
}

TEST_CASE("verify runs a suite and encodes pass/fail") {
    CliResult r = run_cli({"verify", "f2-counterexample", "--json"});
    CHECK(r.code == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["suite"] == "f2-counterexample");
    CHECK(j["failures"].empty());

    CliResult text = run_cli({"verify", "action1", "--n", "2", "--q", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage and input problems exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"classify"}).code == 2);                       // missing file
    CHECK(run_cli({"classify", "/nonexistent.mspace"}).code == 2); // unreadable
    CHECK(run_cli({"verify", "no-such-suite"}).code == 2);
    // affine space where a linear one is required
    CHECK(run_cli({"classify", fixture("affine_i2nt2_f3.mspace")}).code == 2);
    // linear space where an affine one is required
    CHECK(run_cli({"equiv", fixture("nt2_f3.mspace"), fixture("nt2_f3.mspace")}).code == 2);
    // classify of a non-maximal space is an input error
    CHECK(run_cli({"classify", fixture("e11_f3.mspace")}).code == 2);
    // rational spaces cannot be checked
    CHECK(run_cli({"check", fixture("rational_line.mspace")}).code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"classify", "--help"}).code == 0);
}

TEST_CASE("verify JSON is byte-identical across --jobs through the CLI") {
    CliResult one = run_cli({"verify", "action1", "--n", "3", "--q", "5", "--json"});
    CliResult two = run_cli({"verify", "action1", "--n", "3", "--q", "5", "--json", "--jobs", "2"});
    CliResult four = run_cli({"verify", "action1", "--n", "3", "--q", "5", "--json", "--jobs", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == four.out);
}

TEST_CASE("the guardrail surfaces through the CLI and --force overrides it") {
    // 65537^2 > 2^24: the spectrum check refuses without --force
    std::string path =
        (std::filesystem::temp_directory_path() / "mspace_big_field.mspace").string();
    {
        std::ofstream f(path);
        f << "field 65537\nn 2\nspace 0\n";
    }
    CliResult refused = run_cli({"check", path});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("GuardrailExceeded") != std::string::npos);
    CliResult forced = run_cli({"check", path, "--force"});
    CHECK(forced.code == 0); // the zero space has a trivial spectrum
    std::remove(path.c_str());
}
