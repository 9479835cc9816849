// ============================================================================
// tests/test_cli.cpp — the command-line surface, exit codes and outputs
// ============================================================================
//
// Drives alcomega::cli::run in-process (stdout captured through a temp file
// via dup2) so exit codes, printed verdicts and emitted files can all be
// asserted without spawning processes or depending on the build layout.
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alcomega/cli.hpp"
#include "alcomega/model.hpp"
#include "alcomega/parser.hpp"

using namespace alcomega;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::cout.flush();
    std::fflush(stdout);
    std::string path = "/tmp/alcomega_cli_test_out.txt";
    int saved = dup(STDOUT_FILENO);
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    dup2(fileno(f), STDOUT_FILENO);
    int code = cli::run(args);
    std::cout.flush();
    std::fflush(stdout);
    dup2(saved, STDOUT_FILENO);
    close(saved);
    std::fclose(f);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli({}).code == 64);
    CHECK(run_cli({"frobnicate"}).code == 64);
    CHECK(run_cli({"translate"}).code == 64);        // missing input
    CHECK(run_cli({"decide", "data/eagle.kb"}).code == 64);  // no query
    CHECK(run_cli({"translate", "data/eagle.kb", "--to", "klingon"}).code ==
          64);
}

TEST_CASE("missing files exit with 66, malformed input with 65") {
    CHECK(run_cli({"translate", "no/such/file.kb", "--to", "alcoi"}).code ==
          66);
    write_file("/tmp/alcomega_cli_bad.kb", "A [= B");  // missing final dot
    CHECK(run_cli({"decide", "/tmp/alcomega_cli_bad.kb", "--query",
                   "A [= B."})
              .code == 65);
    write_file("/tmp/alcomega_cli_bad.json", "{ not json");
    CHECK(run_cli({"check-model", "/tmp/alcomega_cli_bad.json",
                   "data/eagle.kb"})
              .code == 65);
}

TEST_CASE("translate writes the ALCOI image to the output positional") {
    std::string out = "/tmp/alcomega_cli_translated.kb";
    RunResult r =
        run_cli({"translate", "data/eagle.kb", out, "--to", "alcoi"});
    CHECK(r.code == 0);
    CHECK(slurp(out) ==
          "RedListSpecies [= all $e . CannotHunt.\n"
          "Eagle [= some inv($e) . {$e_Eagle}.\n"
          "some inv($e) . {$e_Eagle} [= Eagle.\n"
          "PolarCreature and Bear [= some inv($e) . "
          "{$e_PolarCreature_and_Bear}.\n"
          "some inv($e) . {$e_PolarCreature_and_Bear} [= PolarCreature and "
          "Bear.\n"
          "Eagle(harry).\n"
          "RedListSpecies($e_Eagle).\n"
          "RedListSpecies($e_PolarCreature_and_Bear).\n"
          "(not some $e . Top)(harry).\n");
}

TEST_CASE("translate emits set-theoretic goals as s-expressions and TPTP") {
    write_file("/tmp/alcomega_cli_ab.kb", "A [= B.\n");
    RunResult sexp = run_cli({"translate", "/tmp/alcomega_cli_ab.kb", "--to",
                              "set-lc", "--query", "A [= B."});
    CHECK(sexp.code == 0);
    CHECK(sexp.out.find("(forall x (implies (forall q1") == 0);

    RunResult tptp =
        run_cli({"translate", "/tmp/alcomega_cli_ab.kb", "--to", "set-lc",
                 "--query", "A [= B.", "--format", "tptp"});
    CHECK(tptp.code == 0);
    CHECK(tptp.out.find("fof(") != std::string::npos);
    CHECK(tptp.out.find("conjecture") != std::string::npos);

    // set-* targets require a query.
    CHECK(run_cli({"translate", "/tmp/alcomega_cli_ab.kb", "--to", "set-lc"})
              .code == 64);
}

TEST_CASE("decide reports the verdict in the exit code") {
    RunResult yes = run_cli(
        {"decide", "data/eagle.kb", "--query", "CannotHunt(harry)."});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("Entailed (tableau)") == 0);

    std::string wpath = "/tmp/alcomega_cli_witness.json";
    RunResult no =
        run_cli({"decide", "data/eagle.kb", "--query",
                 "RedListSpecies(harry).", "--emit-witness", wpath});
    CHECK(no.code == 1);
    CHECK(no.out.find("NotEntailed") == 0);
    // The emitted witness is a checkable model that falsifies the query.
    Interpretation w = interpretation_from_json(slurp(wpath));
    KnowledgeBase K = parse_kb(slurp("data/eagle.kb"));
    CHECK(check_kb(w, K).all_satisfied());
    CHECK_FALSE(check_query(w, parse_query("RedListSpecies(harry).")));
}

TEST_CASE("decide runs query files in batch mode, one TSV line each") {
    write_file("/tmp/alcomega_cli_query.txt",
               "# payment status per member\n"
               "(some has_paid . Fee)(bob).\n"
               "(some has_paid . Fee)(carl).\n");
    RunResult r = run_cli({"decide", "data/readinggroup.kb", "--query-file",
                           "/tmp/alcomega_cli_query.txt", "--mode", "direct",
                           "--bound", "8", "--seed", "3"});
    CHECK(r.code == 0);  // batch mode reports per line, not via exit code
    CHECK(r.out ==
          "(some has_paid . Fee)(bob).\tEntailed\n"
          "(some has_paid . Fee)(carl).\tNotEntailed\n");
}

TEST_CASE("check-model verifies axioms and an optional query") {
    write_file("/tmp/alcomega_cli_model.json", R"({
        "nodes": [0, 1, 2],
        "elems": {"0": [], "1": [0], "2": []},
        "atoms": [0],
        "concepts": {"Eagle": [0], "CannotHunt": [0],
                     "RedListSpecies": [1, 2]},
        "individuals": {"harry": 0},
        "denotations": {"Eagle": 1, "PolarCreature and Bear": 2}
    })");
    RunResult ok = run_cli(
        {"check-model", "/tmp/alcomega_cli_model.json", "data/eagle.kb"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    RunResult q = run_cli({"check-model", "/tmp/alcomega_cli_model.json",
                           "data/eagle.kb", "--query", "CannotHunt(harry)."});
    CHECK(q.code == 0);
    CHECK(q.out.find("query: satisfied") != std::string::npos);

    RunResult bad = run_cli({"check-model", "/tmp/alcomega_cli_model.json",
                             "data/eagle.kb", "--query", "Bot(harry)."});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("query: violated") != std::string::npos);

    // A model of the wrong KB reports the failing axioms.
    RunResult wrong = run_cli(
        {"check-model", "data/five_node.json", "data/eagle.kb"});
    CHECK(wrong.code == 1);
    CHECK(wrong.out.find("FAIL") != std::string::npos);
}

TEST_CASE("solve-sets prints the solution graph") {
    RunResult r = run_cli({"solve-sets", "data/fig1.eq"});
    CHECK(r.code == 0);
    CHECK(r.out.find("well-founded: no") == 0);
    CHECK(r.out.find("x -> node") != std::string::npos);
    CHECK(r.out.find("y -> node") != std::string::npos);

    RunResult wf = run_cli({"solve-sets", "data/hf0.eq"});
    CHECK(wf.code == 0);
    CHECK(wf.out.find("well-founded: yes") == 0);
}

TEST_CASE("emit-dot handles both equation systems and model files") {
    RunResult eq = run_cli({"emit-dot", "data/fig1.eq"});
    CHECK(eq.code == 0);
    CHECK(eq.out.find("digraph") == 0);
    CHECK(eq.out.find("->") != std::string::npos);

    RunResult mj = run_cli({"emit-dot", "data/five_node.json"});
    CHECK(mj.code == 0);
    CHECK(mj.out.find("digraph") == 0);
}

TEST_CASE("roundtrip sweeps the transport harnesses cleanly") {
    RunResult r =
        run_cli({"roundtrip", "data/eagle.kb", "--trials", "3", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 fail") != std::string::npos);
    CHECK(r.out.find("lift") != std::string::npos);
    CHECK(r.out.find("collapse") != std::string::npos);
    CHECK(r.out.find("encode") != std::string::npos);
}
