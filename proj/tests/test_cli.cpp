#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ricci/cli.hpp"
#include "ricci/graph.hpp"

using ricci::cli::run;

namespace {

struct Invocation {
    int exit_code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("curvature of a single edge") {
    auto r = invoke({"curvature", "--graph", "cycle:5", "--edge", "g0,g1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "schema_version: 1"));
    CHECK(contains(r.out, "kappa_lly: 1/2"));
    CHECK(contains(r.out, "kappa_zero: 0"));
    CHECK(contains(r.out, "cross_check: true"));
    CHECK(r.err.empty());
}

TEST_CASE("curvature with idleness and decimal rendering") {
    auto r = invoke({"curvature", "--graph", "cycle:4", "--edge", "g0,g1", "--alpha", "1/4",
                     "--approx"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha: 1/4"));
    CHECK(contains(r.out, "kappa_alpha: 1/2"));
    CHECK(contains(r.out, "kappa_lly_approx: 1.000000"));
}

TEST_CASE("curvature over all edges") {
    auto r = invoke({"curvature", "--graph", "h1", "--all"});
    CHECK(r.exit_code == 0);
    // 12 edges, each with its own cross-checked block
    std::size_t count = 0, pos = 0;
    while ((pos = r.out.find("cross_check: true", pos)) != std::string::npos) {
        ++count;
        pos += 1;
    }
    CHECK(count == 12);
}

TEST_CASE("curvature on a product spec with composite labels") {
    auto r = invoke({"curvature", "--graph", "strong(cycle:4,h1)", "--edge", "(g0,y1),(g1,y2)"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "kappa_lly: -1/11"));
    CHECK(contains(r.out, "opt: 13"));
}

TEST_CASE("dump-edges round-trips through file specs") {
    auto dump = invoke({"curvature", "--graph", "petersen", "--dump-edges"});
    CHECK(dump.exit_code == 0);
    ricci::Graph back = ricci::parse_edge_list(dump.out);
    CHECK(back.vertex_count() == 10);
    CHECK(back.edge_count() == 15);

    std::string path = std::string(RICCI_TEST_DATA_DIR) + "/h1.edges";
    auto r = invoke({"curvature", "--graph", "file:" + path, "--edge", "y1,y2"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "kappa_lly: 0"));
    CHECK(contains(r.out, "kappa_zero: -1/3"));
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(invoke({}).exit_code == 1);
    CHECK(invoke({"frobnicate"}).exit_code == 1);
    CHECK(invoke({"curvature", "--graph", "cycle:5"}).exit_code == 1);
    CHECK(invoke({"curvature", "--graph", "cycle:2", "--all"}).exit_code == 1);
    CHECK(invoke({"curvature", "--graph", "nosuch:5", "--all"}).exit_code == 1);
    CHECK(invoke({"curvature", "--graph", "cycle:5", "--edge", "g0g1"}).exit_code == 1);
    CHECK(invoke({"verify"}).exit_code == 1);
    auto bad = invoke({"curvature", "--graph", "strong(cycle:4", "--all"});
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.err, "position"));
}

TEST_CASE("precondition violations exit with status 2") {
    CHECK(invoke({"curvature", "--graph", "cycle:5", "--edge", "g0,g7"}).exit_code == 2);
    CHECK(invoke({"curvature", "--graph", "cycle:6", "--edge", "g0,g3"}).exit_code == 2);
    CHECK(invoke({"curvature", "--graph", "cycle:5", "--edge", "g0,g1", "--alpha", "7/2"})
              .exit_code == 2);
    CHECK(invoke({"verify", "--strong", "path:4", "cycle:5"}).exit_code == 2);
}

TEST_CASE("verify sweep reports and succeeds") {
    auto r = invoke({"verify", "--strong", "complete:3", "cycle:5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "failed: 0"));
    CHECK(contains(r.out, "id: T2-LLY"));
    CHECK(contains(r.out, "holds: true"));
    CHECK(!contains(r.out, "holds: false"));
}

TEST_CASE("verify with a theorem filter and attainment requirement") {
    auto r = invoke({"verify", "--strong", "cycle:4", "cycle:4", "--theorems", "T3",
                     "--require-attained", "--jobs", "2"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "worst_slack: 0"));
    CHECK(contains(r.out, "attained: "));
    CHECK(!contains(r.out, "attained: none"));

    // C6 x C6 satisfies the bound strictly on every diagonal edge
    auto strict = invoke({"verify", "--strong", "cycle:6", "cycle:6", "--theorems", "T3",
                          "--require-attained", "--jobs", "2"});
    CHECK(strict.exit_code == 4);
    CHECK(contains(strict.out, "attained: none"));
    CHECK(contains(strict.out, "failed: 0"));
}

TEST_CASE("verify cartesian products") {
    auto r = invoke({"verify", "--cartesian", "complete:2", "cycle:4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "failed: 0"));
    CHECK(contains(r.out, "id: T4-LLY"));
}

TEST_CASE("idleness sampling emits a consistent CSV") {
    auto r = invoke({"idleness", "--graph", "cycle:4", "--edge", "g0,g1", "--samples", "4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha,kappa_alpha,formula_kappa_alpha\n"));
    // grid 0,1/4,1/2,3/4,1 plus the breakpoint 1/3
    CHECK(contains(r.out, "\n1/3,2/3,2/3\n"));
    CHECK(contains(r.out, "\n0,0,0\n"));
    CHECK(contains(r.out, "\n1,0,0\n"));

    CHECK(invoke({"idleness", "--graph", "cycle:4", "--edge", "g0,g1", "--samples", "0"})
              .exit_code == 1);
}
