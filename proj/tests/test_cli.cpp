#include <cuboidforge/cli.hpp>

#include <cuboidforge/checkpoint.hpp>

#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace cuboidforge;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli verify reports the smallest brick") {
    CliResult r = cli({"verify", "44", "117", "240"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "125"));
    CHECK(contains(r.out, "244"));
    CHECK(contains(r.out, "267"));
    CHECK(contains(r.out, "class: body"));
    CHECK(contains(r.out, "primitive"));
}

TEST_CASE("cli verify handles degenerate and structured output") {
    CliResult r = cli({"verify", "1", "2", "3"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "class: none"));

    r = cli({"verify", "44", "117", "240", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "44,117,240,body,125,244,267,,verify,\"input=44,117,240\",true"));

    r = cli({"verify", "240", "44", "117", "--format", "jsonl"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"a\":44")); // canonicalized

    testutil::TempDir tmp("cli-verify");
    auto path = (tmp.path / "v.csv").string();
    r = cli({"verify", "44", "117", "240", "--format", "csv", "--out", path});
    CHECK(r.status == 0);
    CHECK(contains(testutil::slurp(path), "44,117,240,body"));
}

TEST_CASE("cli classify prints the label only") {
    CliResult r = cli({"classify", "3", "4", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == "one-diag\n");
}

TEST_CASE("cli usage errors") {
    CliResult r = cli({"verify", "44", "117", "24x"});
    CHECK(r.status == 1);
    CHECK(contains(r.err, "24x"));

    r = cli({"verify", "44", "117"});
    CHECK(r.status == 1);

    r = cli({"verify", "--bogus-flag", "1", "2", "3"});
    CHECK(r.status == 1);

    r = cli({"frobnicate"});
    CHECK(r.status == 1);

    r = cli({"verify", "0", "1", "2"});
    CHECK(r.status == 1);
    CHECK(contains(r.err, "positive"));

    r = cli({"search", "--strategy", "warp-drive", "--max-edge", "10"});
    CHECK(r.status == 1);
}

TEST_CASE("cli reports overflow distinctly") {
    CliResult r = cli({"verify", "18446744073709551615", "18446744073709551615",
                       "18446744073709551615"});
    CHECK(r.status == 2);
    CHECK(contains(r.err, "overflow"));
}

TEST_CASE("cli search writes deterministic files") {
    testutil::TempDir tmp("cli-search");
    auto out1 = (tmp.path / "r1.jsonl").string();
    auto out2 = (tmp.path / "r2.jsonl").string();
    CliResult r1 = cli({"search", "--strategy", "triple-join", "--max-edge", "500",
                        "--format", "jsonl", "--out", out1});
    CHECK(r1.status == 0);
    CliResult r2 = cli({"search", "--strategy", "triple-join", "--max-edge", "500",
                        "--format", "jsonl", "--out", out2, "--threads", "3"});
    CHECK(r2.status == 0);
    std::string bytes1 = testutil::slurp(out1);
    CHECK(bytes1 == testutil::slurp(out2));
    CHECK(contains(bytes1, "\"a\":44,\"b\":117,\"c\":240"));
    CHECK(contains(r1.out, "found 2 primitive cuboid(s)"));
}

TEST_CASE("cli search to stdout and csv") {
    CliResult r = cli({"search", "--strategy", "korec", "--x", "117", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "a,b,c,class"));
    CHECK(contains(r.out, "44,117,240,body"));
    CHECK(contains(r.err, "found"));
}

TEST_CASE("cli search sharding flags") {
    CliResult r = cli({"search", "--strategy", "triple-join", "--max-edge", "300",
                       "--shard-index", "0", "--shard-count", "2"});
    CHECK(r.status == 0);
    r = cli({"search", "--strategy", "triple-join", "--max-edge", "300",
             "--shard-index", "0"});
    CHECK(r.status == 1); // --shard-index needs --shard-count
    r = cli({"search", "--strategy", "triple-join", "--max-edge", "300",
             "--shard-index", "5", "--shard-count", "2"});
    CHECK(r.status == 1);
}

TEST_CASE("cli perfect scan stays quiet at desk scale") {
    CliResult r = cli({"search", "--strategy", "triple-join", "--max-edge", "500",
                       "--perfect-only"});
    CHECK(r.status == 0);
    CHECK(contains(r.err, "found 0 primitive cuboid(s)"));
}

TEST_CASE("cli quadruple-gen audit") {
    CliResult r = cli({"search", "--strategy", "quadruple-gen", "--max-z", "25",
                       "--max-param", "25"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "23"));
    CHECK(contains(r.out, "every primitive quadruple is generated"));

    r = cli({"search", "--strategy", "quadruple-gen", "--max-z", "25", "--format",
             "jsonl"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"primitive_count\":23"));
    CHECK(contains(r.out, "\"unhit\":[]"));

    r = cli({"search", "--strategy", "quadruple-gen", "--max-z", "2"});
    CHECK(r.status == 1);
}

TEST_CASE("cli kraitchik pruning is labeled as heuristic") {
    CliResult r = cli({"search", "--strategy", "triple-join", "--max-edge", "300",
                       "--kraitchik-prune"});
    CHECK(r.status == 0);
    CHECK(contains(r.err, "heuristic"));
}

TEST_CASE("cli audit-lemma") {
    CliResult r = cli({"audit-lemma", "1", "2", "2", "4"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "case-i"));
    CHECK(contains(r.out, "confirmed"));

    r = cli({"audit-lemma", "1", "2", "6", "3"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "not-covered"));

    r = cli({"audit-lemma", "--substitution", "1", "2", "20", "10"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "c=0"));

    r = cli({"audit-lemma", "--equal-sums", "1", "8", "4", "7"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "120"));

    r = cli({"audit-lemma", "--equal-sums", "3", "4", "5", "1"});
    CHECK(r.status == 1);

    r = cli({"audit-lemma", "--family", "case-iii", "--k1", "1", "--k2", "2", "--r", "5"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "(1, 2, 20, 10)"));
    CHECK(contains(r.out, "c=0"));
}

TEST_CASE("cli audit-coverage") {
    CliResult r = cli({"audit-coverage", "--bound", "6"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "not-covered: 20"));
    CHECK(contains(r.out, "1,2,6,3"));

    r = cli({"audit-coverage", "--bound", "4", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "m,n,p,q,k1,r1,k2,r2,a_root,case"));
    CHECK(contains(r.out, "1,2,4,2,"));
}

TEST_CASE("cli param subcommands") {
    CliResult r = cli({"param", "quadruple", "1", "1", "1", "0"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "(1, 2, 2, 3)"));

    r = cli({"param", "perfect-conditions", "1", "2", "6", "3"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "x^2+y^2 = 900 = 30^2: square"));
    CHECK(contains(r.out, "all three hold: false"));

    r = cli({"param", "shared-leg", "3", "2", "2", "18"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "a^2 = 400 (= 20^2)"));
    CHECK(contains(r.out, "b = 21  c = 15  d = 29  e = 25"));

    r = cli({"param", "shared-leg", "1", "1", "2", "3"});
    CHECK(r.status == 1);
    CHECK(contains(r.err, "parity"));

    r = cli({"param", "shared-leg-inverse", "21", "15", "29", "25"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "(3, 2, 2, 18)"));

    r = cli({"param", "saunderson", "3", "4", "5"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "44 117 240"));
    CHECK(contains(r.out, "body"));

    r = cli({"param", "saunderson", "3", "4", "5", "--variant", "as-printed"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "64 117 240"));

    r = cli({"param", "saunderson", "3", "4", "5", "--audit"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "as-printed non-integer face diagonals: d_ab"));

    r = cli({"param", "saunderson", "2", "3", "4"});
    CHECK(r.status == 1);

    r = cli({"param", "lal-blundon", "1", "2", "1", "2"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "6 6 8"));
    CHECK(contains(r.out, "d(x,y) = 10"));
}

TEST_CASE("cli report-divisibility") {
    testutil::TempDir tmp("cli-div");
    auto results = (tmp.path / "results.jsonl").string();
    CHECK(cli({"search", "--strategy", "triple-join", "--max-edge", "500", "--out",
               results})
              .status == 0);

    CliResult r = cli({"report-divisibility", "--in", results});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "44 117 240"));
    CHECK(contains(r.out, "all constraints present"));
    CHECK(contains(r.out, "aggregate: every primitive body cuboid satisfies"));

    r = cli({"report-divisibility", "--in", results, "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "44,117,240,a;c,c,b;c,b,c,a,true,true,true,true,true,true,true"));

    // tampered records fail verification loudly
    std::string text = testutil::slurp(results);
    auto pos = text.find("\"class\":\"body\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "\"class\":\"face\"");
    auto tampered = (tmp.path / "tampered.jsonl").string();
    {
        std::ofstream f(tampered, std::ios::binary);
        f << text;
    }
    r = cli({"report-divisibility", "--in", tampered});
    CHECK(r.status == 2);
    CHECK(contains(r.err, "re-verify"));

    r = cli({"report-divisibility", "--in", (tmp.path / "missing.jsonl").string()});
    CHECK(r.status == 2);
}

TEST_CASE("cli checkpointed search resumes to the same bytes") {
    testutil::TempDir tmp("cli-cp");
    auto direct_path = (tmp.path / "direct.jsonl").string();
    auto resumed_path = (tmp.path / "resumed.jsonl").string();
    auto cp_path = (tmp.path / "cp.json").string();

    CHECK(cli({"search", "--strategy", "triple-join", "--max-edge", "400", "--out",
               direct_path})
              .status == 0);

    // interrupt at the library level, then finish through the CLI
    SearchTask task;
    task.strategy = SearchStrategy::TripleJoin;
    task.max_edge = 400;
    CheckpointedRun half;
    half.task = task;
    half.checkpoint_path = cp_path;
    half.partial_path = cp_path + ".partial.jsonl";
    half.stop_after = [](u64 watermark) { return watermark >= 200; };
    CHECK_FALSE(run_search_checkpointed(half).has_value());

    CliResult r = cli({"search", "--strategy", "triple-join", "--max-edge", "400",
                       "--out", resumed_path, "--checkpoint", cp_path});
    CHECK(r.status == 0);
    CHECK(testutil::slurp(resumed_path) == testutil::slurp(direct_path));
    CHECK_FALSE(std::filesystem::exists(cp_path)); // cleaned up after success

    // a checkpoint from a different task refuses to resume
    CHECK_FALSE(run_search_checkpointed(half).has_value());
    r = cli({"search", "--strategy", "triple-join", "--max-edge", "401", "--out",
             resumed_path, "--checkpoint", cp_path});
    CHECK(r.status == 1);
    CHECK(contains(r.err, "refusing to resume"));
}

TEST_CASE("cli env thread default is honored") {
    ::setenv("CUBOID_FORGE_THREADS", "3", 1);
    CliResult r = cli({"search", "--strategy", "triple-join", "--max-edge", "300"});
    CHECK(r.status == 0);
    ::setenv("CUBOID_FORGE_THREADS", "zebra", 1);
    r = cli({"search", "--strategy", "triple-join", "--max-edge", "300"});
    CHECK(r.status == 1);
    CHECK(contains(r.err, "zebra"));
    ::unsetenv("CUBOID_FORGE_THREADS");
}

TEST_CASE("cli help") {
    CliResult r = cli({"--help"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "verify"));
    CHECK(contains(r.out, "search"));
}
