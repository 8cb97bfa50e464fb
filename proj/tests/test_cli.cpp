#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bierfan/cli.hpp"
#include "bierfan/json_io.hpp"

using bierfan::cli::run;
using bierfan::cli::RunResult;

namespace {
const std::string kPentagonInput = R"({"m":3,"facets":[[1],[2,3]]})";
}

TEST_CASE("bier emits the five worked-example facets byte-exactly") {
    const RunResult r = run({"bier", kPentagonInput});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"facets\":[[1,5],[1,6],[2,3],[2,6],[3,5]],\"m\":6,\"primed_offset\":3}\n");
}

TEST_CASE("dual, verify, locate and report on the worked example") {
    CHECK(run({"dual", kPentagonInput}).out == "{\"facets\":[[2],[3]],\"m\":3}\n");

    const RunResult v = run({"verify", kPentagonInput});
    CHECK(v.status == 0);
    CHECK(v.out == "{\"complete\":true,\"regular\":true}\n");

    const RunResult l = run({"locate", kPentagonInput, "--point", "1,0"});
    CHECK(l.status == 0);
    CHECK(l.out == "{\"I\":[2,3],\"J\":[]}\n");
    CHECK(run({"locate", kPentagonInput, "--point", "0,1"}).out == "{\"I\":[],\"J\":[2]}\n");
    CHECK(run({"locate", kPentagonInput, "--point", "0,0"}).out == "{\"I\":[],\"J\":[]}\n");
    CHECK(run({"locate", kPentagonInput, "--point", "-1/2,-1/2"}).out ==
          "{\"I\":[],\"J\":[3]}\n");

    const RunResult rep = run({"report", kPentagonInput});
    CHECK(rep.status == 0);
    CHECK(rep.out ==
          "{\"betti\":[1,0,3,0,1],\"dims\":{\"dim_M\":4,\"dim_M_real\":2,\"dim_R\":2,"
          "\"dim_Z\":7,\"rank_H\":3},\"ds_ok\":true,\"euler\":5,\"f\":[1,5,5],"
          "\"h\":[1,3,1],\"m\":3,\"orientability\":{\"criterion\":false,"
          "\"m_even\":false,\"matches\":true}}\n");
}

TEST_CASE("fan export is sorted by tag") {
    const RunResult r = run({"fan", R"({"m":3,"facets":[]})"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"m\":3,\"max_cones\":["
          "{\"I\":[],\"J\":[1,2],\"generators\":[[1,0],[0,1]]},"
          "{\"I\":[],\"J\":[1,3],\"generators\":[[1,0],[-1,-1]]},"
          "{\"I\":[],\"J\":[2,3],\"generators\":[[0,1],[-1,-1]]}]}\n");
}

TEST_CASE("identical invocations are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bier", kPentagonInput},
             {"verify", kPentagonInput},
             {"report", kPentagonInput},
             {"classify", "--m", "3"}}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("bier output round-trips byte-exactly through the parser") {
    const std::string out = run({"bier", kPentagonInput}).out;
    const bierfan::BierComplex B = bierfan::bier_from_json(bierfan::json::parse(out));
    CHECK(bierfan::dump_canonical(bierfan::bier_to_json(B)) == out);
}

TEST_CASE("input errors exit with status 2") {
    SUBCASE("malformed JSON") {
        const RunResult r = run({"bier", "{\"m\":3,\"facets\":"});
        CHECK(r.status == 2);
        CHECK(r.err.find("malformed JSON") != std::string::npos);
    }
    SUBCASE("full simplex") {
        const RunResult r = run({"bier", R"({"m":3,"facets":[[1,2,3]]})"});
        CHECK(r.status == 2);
        CHECK(r.err == "K must differ from the full simplex\n");
    }
    SUBCASE("missing file") {
        CHECK(run({"bier", "/nonexistent/path.json"}).status == 2);
    }
    SUBCASE("label out of range") {
        CHECK(run({"bier", R"({"m":3,"facets":[[4]]})"}).status == 2);
    }
    SUBCASE("missing field") {
        CHECK(run({"bier", R"({"facets":[[1]]})"}).status == 2);
    }
    SUBCASE("bad point") {
        CHECK(run({"locate", kPentagonInput, "--point", "1,zebra"}).status == 2);
        CHECK(run({"locate", kPentagonInput, "--point", "1"}).status == 2);
    }
    SUBCASE("unknown flag") {
        CHECK(run({"bier", kPentagonInput, "--frobnicate"}).status == 2);
    }
    SUBCASE("non-integer labels") {
        CHECK(run({"bier", R"({"m":3,"facets":[["a"]]})"}).status == 2);
        CHECK(run({"bier", R"({"m":"three","facets":[]})"}).status == 2);
    }
    SUBCASE("negative sample count") {
        CHECK(run({"verify", kPentagonInput, "--samples", "-5"}).status == 2);
    }
}

TEST_CASE("classify --m 3 reports four classes") {
    const RunResult r = run({"classify", "--m", "3"});
    CHECK(r.status == 0);
    const auto j = bierfan::json::parse(r.out);
    CHECK(j["m"] == 3);
    CHECK(j["total_complexes"] == 18);
    CHECK(j["classes"].size() == 4);
    for (const auto& cls : j["classes"]) {
        CHECK(cls["fan_regular"] == true);
        CHECK(cls["fan_complete"] == true);
    }
}

TEST_CASE("text format renders primed labels") {
    const RunResult r = run({"bier", kPentagonInput, "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "m = 6\nfacets: {1,2'} {1,3'} {2,3} {2,3'} {3,2'}\n");
    CHECK(run({"verify", kPentagonInput, "--format", "text"}).out ==
          "regular: yes\ncomplete: complete (verified)\n");
}

TEST_CASE("--strip-ghosts emits the pentagon on five labels") {
    const RunResult r = run({"bier", kPentagonInput, "--strip-ghosts"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"facets\":[[1,4],[1,5],[2,3],[2,5],[3,4]],\"m\":5}\n");
}

TEST_CASE("--out writes the file instead of stdout") {
    const std::string path = "bierfan_cli_test_out.json";
    const RunResult r = run({"bier", kPentagonInput, "--out", path});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "{\"facets\":[[1,5],[1,6],[2,3],[2,6],[3,5]],\"m\":6,\"primed_offset\":3}\n");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(!r.out.empty());
}
