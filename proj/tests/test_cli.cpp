#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zsig/cli.hpp"

using zsig::cli::run;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples run verbatim") {
    SECTION("phi") {
        auto r = cli({"phi", "--n", "6", "--field", "q", "--f", "T", "--g", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "T^2 - T + 1\n");
    }
    SECTION("theorem sweep over F_7, json") {
        auto r = cli({"verify", "--statement", "thm-1.3", "--field", "fp:7", "--f", "T^2", "--g",
                      "T+1", "--max-n", "60", "--seed", "1", "--format", "json"});
        CHECK(r.code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CHECK(j["statement"] == "thm-1.3");
        CHECK(j["verdict"] == "verified-in-range");
        CHECK(j["cases"] == 52);
        CHECK(j["seed"] == 1);
    }
    SECTION("degenerate lucas counterexample exits 2") {
        auto r = cli({"verify", "--statement", "lemma-2.2", "--field", "q-sqrt:2", "--P",
                      "T^2+(1+1*w)*T+(0+1*w)", "--max-n", "3"});
        CHECK(r.code == 2);
        CHECK(r.out.find("counterexample") != std::string::npos);
        CHECK(r.out.find("T + 1") != std::string::npos);
    }
    SECTION("factor") {
        auto r = cli({"factor", "--field", "fp:7", "--f", "T^6-1", "--seed", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "1 * (T + 1) * (T + 2) * (T + 3) * (T + 4) * (T + 5) * (T + 6)\n");
    }
    SECTION("lucas term") {
        auto r = cli({"seq", "--field", "q-sqrt:2", "--P", "T^2+(1+1*w)*T+(0+1*w)", "--n", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "term(2) = 2*T^2 + 2*T\n");
    }
    SECTION("survey") {
        auto r = cli({"survey", "--field", "fp:3", "--f", "T^2", "--g", "T+1", "--max-n", "9"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "# spec\tzsigmondy field=fp:3 f=T^2 g=T + 1\n"
              "n\tskipped\tdeg_term\tdeg_primitive_part\thas_primitive\tmatches_phi\n"
              "1\t0\t2\t2\t1\t1\n"
              "2\t0\t4\t2\t1\t1\n"
              "3\t1\t6\t0\t0\t-\n"
              "4\t0\t8\t4\t1\t1\n"
              "5\t0\t10\t8\t1\t1\n"
              "6\t1\t12\t0\t0\t-\n"
              "7\t0\t14\t12\t1\t1\n"
              "8\t0\t16\t8\t1\t1\n"
              "9\t1\t18\t0\t0\t-\n");
    }
    SECTION("char2-search") {
        auto r = cli({"char2-search", "--field", "fp:2", "--count", "25", "--deg-max", "3",
                      "--max-n", "25", "--seed", "7", "--format", "tsv"});
        CHECK(r.code == 0);
        CHECK(r.out == "char2-remark\trecorded-only\t2613\t0\t7\n");
    }
    SECTION("primitive record as json lines") {
        auto r = cli({"primitive", "--field", "fp:5", "--f", "T^2", "--g", "T+1", "--n", "6",
                      "--factors", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "{\"n\":6,\"skipped\":false,\"deg_term\":12,\"deg_primitive_part\":4,"
              "\"primitive_part\":\"T^4 + 4*T^3 + 2*T + 1\",\"has_primitive\":true,"
              "\"matches_phi\":true,\"primitive_factors\":{\"unit\":\"1\",\"factors\":"
              "[{\"factor\":\"T^2 + 3\",\"multiplicity\":1},"
              "{\"factor\":\"T^2 + 4*T + 2\",\"multiplicity\":1}]}}\n");
    }
}

TEST_CASE("usage and parse errors exit 1") {
    CHECK(cli({"verify", "--statement", "bogus", "--field", "fp:7", "--f", "T", "--g", "1"}).code == 1);
    CHECK(cli({"verify", "--field", "fp:7", "--f", "T", "--g", "1"}).code == 1);  // no statement
    CHECK(cli({"phi", "--field", "q", "--f", "T", "--g", "1"}).code == 1);        // no --n
    CHECK(cli({"factor", "--field", "q", "--f", "T^2-1"}).code == 1);  // unsupported field
    CHECK(cli({"seq", "--field", "fp:4", "--f", "T", "--g", "1", "--n", "1"}).code == 1);
    CHECK(cli({"seq", "--field", "fp:5", "--f", "T^^2", "--g", "1", "--n", "1"}).code == 1);
    CHECK(cli({"seq", "--field", "fp:5", "--f", "1/5*T", "--g", "1", "--n", "1"}).code == 1);
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"primitive", "--field", "q", "--f", "T^2", "--g", "T+1", "--n", "3", "--factors"})
              .code == 1);  // listing unsupported over characteristic 0
    CHECK(cli({"verify", "--statement", "lemma-2.3", "--field", "q-sqrt:2", "--P", "T+(0+1*w)"}).code ==
          1);  // characteristic 0 has no frobenius statement
    auto r = cli({"seq", "--field", "fp:5", "--f", "T*", "--g", "1", "--n", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("help exits 0") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"verify", "--help"}).code == 0);
}

TEST_CASE("byte-identical output for identical argv and seed") {
    const std::vector<std::string> argv = {"verify",  "--statement", "thm-1.3", "--field",
                                           "fp:5",    "--f",         "T^3+2",   "--g",
                                           "T+1",     "--max-n",     "40",      "--seed",
                                           "9",       "--format",    "json"};
    auto a = cli(argv);
    auto b = cli(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("ZSIG_SEED environment fallback") {
    setenv("ZSIG_SEED", "4242", 1);
    auto env_run = cli({"char2-search", "--field", "fp:2", "--count", "5", "--deg-max", "2",
                        "--max-n", "9", "--format", "json"});
    unsetenv("ZSIG_SEED");
    auto flag_run = cli({"char2-search", "--field", "fp:2", "--count", "5", "--deg-max", "2",
                         "--max-n", "9", "--seed", "4242", "--format", "json"});
    CHECK(env_run.code == 0);
    CHECK(env_run.out == flag_run.out);
    auto j = nlohmann::ordered_json::parse(env_run.out);
    CHECK(j["seed"] == 4242);
}

TEST_CASE("--out writes the report to a file and keeps stdout empty") {
    const std::string path = "/tmp/zsig_cli_out_test.json";
    std::remove(path.c_str());
    auto r = cli({"verify", "--statement", "lemma-1.2", "--field", "fp:5", "--f", "T^2+1", "--g",
                  "T", "--max-n", "10", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    auto j = nlohmann::ordered_json::parse(buf.str());
    CHECK(j["statement"] == "lemma-1.2");
    CHECK(j["verdict"] == "verified-in-range");
    std::remove(path.c_str());
}

TEST_CASE("parsed commands round-trip through the canonical argv form") {
    zsig::cli::Options o;
    o.field_spec = "fp:7";
    o.statement = "thm-1.3";
    o.f_text = "T^2";
    o.g_text = "T+1";
    o.max_n = 60;
    o.seed_text = "1";
    o.format = "json";
    auto argv1 = o.canonical_argv("verify");
    zsig::cli::Options o2 = o;
    auto argv2 = o2.canonical_argv("verify");
    CHECK(argv1 == argv2);
    // and the canonical form itself parses and runs
    auto r = cli(std::vector<std::string>(argv1.begin(), argv1.end()));
    CHECK(r.code == 0);
}
