#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/utfree_cli_test.out";
    const std::string cmd =
        std::string(UTFREE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_path.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

std::string fixture(const std::string& name) {
    return std::string(UTFREE_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decide subcommand") {
    const RunResult injective = run("decide --input " + fixture("example1.json") + " --json");
    CHECK(injective.exit_code == 0);
    CHECK(contains(injective.output, "\"injective\": true"));
    CHECK(contains(injective.output, "\"branch\": \"Main-Injective\""));
    CHECK(contains(injective.output, "\"witness\": null"));

    const RunResult collision =
        run("decide --input " + fixture("example2.json") + " --witness");
    CHECK(collision.exit_code == 0);
    CHECK(contains(collision.output, "not injective"));
    CHECK(contains(collision.output, "A1-t1"));
    CHECK(contains(collision.output, "witness: (0) vs (1)"));

    const RunResult singular = run("decide --input " + fixture("singular_x.json"));
    CHECK(singular.exit_code == 0);
    CHECK(contains(singular.output, "SingularX-tGe2"));
}

TEST_CASE("decide rejects unsupported and malformed inputs") {
    const RunResult unsupported = run("decide --input " + fixture("singular_z.json"));
    CHECK(unsupported.exit_code == 3);
    CHECK(contains(unsupported.output, "singular"));

    const RunResult malformed = run("decide --input " + fixture("bad_rational.json"));
    CHECK(malformed.exit_code == 2);

    const RunResult missing = run("decide --input " + fixture("no_such_file.json"));
    CHECK(missing.exit_code == 2);
}

TEST_CASE("automaton subcommand") {
    const RunResult small = run("automaton --base 3 --digits -2,-1,0,1,2");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "states: 5"));

    const RunResult fractional = run("automaton --base 3/2 --digits -2,-1,0,1,2");
    CHECK(fractional.exit_code == 0);
    CHECK(contains(fractional.output, "states: 17"));

    const std::string dot_path = "/tmp/utfree_cli_test.dot";
    const RunResult with_dot =
        run("automaton --base 2 --digits 0,1 --dot " + dot_path);
    CHECK(with_dot.exit_code == 0);
    std::ifstream dot(dot_path);
    std::stringstream buffer;
    buffer << dot.rdbuf();
    CHECK(contains(buffer.str(), "digraph nfa"));
    CHECK(contains(buffer.str(), "doublecircle"));
    std::remove(dot_path.c_str());

    CHECK(run("automaton --base 1 --digits 0,1").exit_code == 2);
    CHECK(run("automaton --base x --digits 0,1").exit_code == 2);
    CHECK(run("automaton --base 2 --digits 0,1/2").exit_code == 2);
}

TEST_CASE("encode subcommand") {
    const RunResult ok = run("encode --poly " + fixture("poly_x1x2.json") + " --eval 2,3");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "gadget: 6, polynomial: 6"));
    CHECK(contains(ok.output, "\"k\": 16"));

    const RunResult fractional = run("encode --poly " + fixture("poly_half.json"));
    CHECK(fractional.exit_code == 2);

    const RunResult too_big = run("encode --poly " + fixture("poly_big.json"));
    CHECK(too_big.exit_code == 4);
    CHECK(contains(too_big.output, "exceeds the cap"));
}

TEST_CASE("oracle subcommand accepts singular z-images") {
    const RunResult collisions =
        run("oracle --input " + fixture("example2.json") + " --bound 2");
    CHECK(collisions.exit_code == 0);
    CHECK(contains(collisions.output, "\"found\": true"));

    const RunResult singular =
        run("oracle --input " + fixture("singular_z.json") + " --bound 3");
    CHECK(singular.exit_code == 0);
    CHECK(contains(singular.output, "\"found\": true"));

    const RunResult clean = run("oracle --input " + fixture("example1.json") + " --bound 4");
    CHECK(clean.exit_code == 0);
    CHECK(contains(clean.output, "\"found\": false"));
}

TEST_CASE("lemma7 subcommand") {
    const RunResult hit =
        run("lemma7 --poly " + fixture("poly_x1_minus_2x2.json") + " --a 4 --bound 5");
    CHECK(hit.exit_code == 0);
    CHECK(contains(hit.output, "\"collision\": {"));

    const RunResult none =
        run("lemma7 --poly " + fixture("poly_x1_minus_2x2.json") + " --a 3 --bound 8");
    CHECK(none.exit_code == 0);
    CHECK(contains(none.output, "\"collision\": null"));

    CHECK(run("lemma7 --poly " + fixture("poly_half.json") + " --a 1").exit_code == 2);
}

TEST_CASE("bad usage reports a CLI error") {
    CHECK(run("").exit_code != 0);
    CHECK(run("decide").exit_code != 0);
    CHECK(run("frobnicate").exit_code != 0);
}
