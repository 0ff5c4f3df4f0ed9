#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ge2/specparse.hpp"

#include <cstdio>
#include <string>

using namespace ge2;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// ctest runs in the build directory, next to the ge2 binary
RunResult run_cli(std::string const &args)
{
    std::string cmd = "./ge2 " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, p))
        out += buf;
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}

} // namespace

TEST_CASE("algebra descriptors")
{
    CHECK(parse_algebra_descriptor("Q")->kind == AlgKind::Rational);
    CHECK(parse_algebra_descriptor("Qi:7")->d == 7);
    auto q = parse_algebra_descriptor("quat:-1,-3");
    CHECK(q->u == -1);
    CHECK(q->v == -3);
    CHECK_THROWS_AS(parse_algebra_descriptor("Qi:0"), parse_error);
    CHECK_THROWS_AS(parse_algebra_descriptor("Qi:4"), parse_error);
    CHECK_THROWS_AS(parse_algebra_descriptor("quat:1,-1"), parse_error);
    CHECK_THROWS_AS(parse_algebra_descriptor("R"), parse_error);
}

TEST_CASE("order specs")
{
    CHECK(parse_order_spec("Iq:3").name == "I3");
    CHECK(parse_order_spec("O2").name == "O2");
    CHECK_THROWS_AS(parse_order_spec("Iq:0"), parse_error);
    CHECK_THROWS_AS(parse_order_spec("nothing"), parse_error);

    // a maximal order beyond the builtins: ring of integers of Q(sqrt -5)
    auto i5 = parse_order_spec("Iq:5");
    CHECK(i5.rank() == 2);
    CHECK(short_vectors(i5, 1).size() == 2);

    // Lipschitz quaternions from an explicit basis
    auto lip = parse_order_spec(
        "custom:{\"descriptor\":\"quat:-1,-1\",\"basis\":"
        "[[\"1\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"],"
        "[\"0\",\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\",\"1\"]]}");
    CHECK(order_isomorphic(lip, builtin_order("L")));
    CHECK_THROWS_AS(parse_order_spec("custom:{\"descriptor\":\"Q\"}"),
                    parse_error);
    CHECK_THROWS_AS(parse_order_spec("custom:not json"), parse_error);
}

TEST_CASE("group specs")
{
    CHECK(parse_group_spec("S3").n == 6);
    CHECK(parse_group_spec("perm:[[1,2,0]]").n == 3);
    CHECK(parse_group_spec("perm:[[1,0,2],[0,2,1]]").n == 6);
    CHECK(parse_group_spec("table:[[0,1],[1,0]]").n == 2);
    CHECK_THROWS_AS(parse_group_spec("nothing"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("perm:[bad"), parse_error);
}

TEST_CASE("word syntax round-trips")
{
    auto o = builtin_order("I1");
    Word w = parse_word(o, "E(1,-1); inv(D(0,1)); [(0,1),(1,0)]; inv(E(2,3))");
    CHECK(w.size() == 4);
    CHECK(w[0].kind == Letter::Kind::E);
    CHECK(w[0].x == IVec{1, -1});
    CHECK(w[1].inverse);
    CHECK(w[1].mu == IVec{0, 1});
    CHECK(w[2].nu == IVec{1, 0});
    CHECK(parse_word(o, word_str(w)).size() == 4);
    // value survives printing and reparsing
    CHECK(eval_word(o, parse_word(o, word_str(w))) == eval_word(o, w));

    CHECK_THROWS_AS(parse_word(o, "E(1)"), parse_error);        // wrong rank
    CHECK_THROWS_AS(parse_word(o, "F(1,2)"), parse_error);      // bad letter
    CHECK_THROWS_AS(parse_word(o, "D(1,1)"), domain_error);     // not a unit
    CHECK_THROWS_AS(parse_word(o, "[(1,1),(1,0)]"), domain_error);
}

TEST_CASE("cli end to end")
{
    auto r = run_cli("ab e2 --order Z --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"free_rank\":0,\"invariants\":[12],"
                   "\"structure\":\"C12\"}\n");

    r = run_cli("order units --order O5 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"structure\":\"C6\"") != std::string::npos);
    CHECK(r.out.find("\"count\":6") != std::string::npos);

    r = run_cli("group hfa --group S3 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"hfa\":false") != std::string::npos);
    CHECK(r.out.find("\"forbidden_witness\":\"S3\"") != std::string::npos);
    CHECK(r.out.find("\"fa\":\"open\"") != std::string::npos);

    r = run_cli("group hfa --group Q8 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"hfa\":true") != std::string::npos);

    r = run_cli("decide grk --order Z --mode D2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"witness\":\"none\"") != std::string::npos);

    r = run_cli("rel reduce --order I1 --word "
                "\"E(1,-1);E(1,1);E(1,-1);E(1,1);E(0,0);E(0,0)\" --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"final_length\":0") != std::string::npos);

    r = run_cli("mat decompose --order Z --matrix \"[[[1],[2]],[[3],[7]]]\" "
                "--json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"word\"") != std::string::npos);

    // exit codes: parse 1, domain 2
    CHECK(run_cli("ab e2 --order Iq:0").exit_code == 1);
    CHECK(run_cli("order info --order bogus").exit_code == 1);
    CHECK(run_cli("rel reduce --order Z --word \"E(5)\"").exit_code == 2);
    CHECK(run_cli("group odd --group C6").exit_code == 2);

    // identical seeds give identical reports
    auto a = run_cli("rel verify --order I3 --samples 20 --seed 7 --json");
    auto b = run_cli("rel verify --order I3 --samples 20 --seed 7 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
