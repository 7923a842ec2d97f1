#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "weylcalc/cli.hpp"

using namespace weylcalc;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hull membership subcommand") {
    CliRun r = run({"hull", "--mode", "norm", "--lambda", R"({"0":3,"1":1})", "--mu",
                    R"({"0":2,"1":2})"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"member\":true}\n");

    CliRun weak = run({"hull", "--mode", "weakstar", "--lambda", R"({"0":3,"1":1})", "--mu",
                       R"({"0":2})"});
    CHECK(weak.code == 0);
    CHECK(weak.out == "{\"member\":true}\n");

    CliRun non = run({"hull", "--mode", "norm", "--lambda", R"({"0":3,"1":1})", "--mu",
                      R"({"0":2})"});
    CHECK(non.out == "{\"member\":false}\n");
}

TEST_CASE("hull oracle cross-check stays quiet on agreement") {
    for (const char* mode : {"norm", "weakstar"}) {
        CliRun r = run({"hull", "--mode", mode, "--lambda", R"({"0":3,"1":1})", "--mu",
                        R"({"0":2,"1":2})", "--oracle"});
        CHECK(r.code == 0);
        CHECK(r.out == "{\"member\":true}\n");
        CHECK(r.err.empty());
    }
}

TEST_CASE("separate emits a unit-gap certificate") {
    CliRun r = run({"separate", "--lambda", R"({"0":2})", "--mu", R"({"0":1,"1":1})", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"gap\":\"1\"") != std::string::npos);
    CHECK(r.out.find("lambda_outside_co_mu") != std::string::npos);
}

TEST_CASE("decompose matches the worked table") {
    CliRun r = run({"decompose", "--n", "2", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[{\"dimM\":1,\"dimS\":3,\"partition\":[2]},{\"dimM\":1,\"dimS\":1,\"partition\":[1,1]}]\n");
}

TEST_CASE("orbit-eq, extremes, support, weights-of") {
    CHECK(run({"orbit-eq", "--lambda", R"({"0":2,"1":1})", "--mu", R"({"7":1,"3":2})",
               "--oracle"})
              .out == "{\"equal\":true}\n");

    CliRun ext = run({"extremes", "--mode", "weakstar", "--lambda", R"({"0":2,"1":-1})",
                      "--oracle"});
    CHECK(ext.code == 0);
    CHECK(ext.out.find("\"signatures\"") != std::string::npos);

    CliRun extn = run({"extremes", "--mode", "norm", "--lambda", R"({"0":2,"1":-1})", "--oracle"});
    CHECK(extn.code == 0);

    CliRun sup = run({"support", "--lambda", R"({"0":3,"1":1})", "--x", R"({"0":1,"1":1})",
                      "--oracle"});
    CHECK(sup.out == "{\"value\":\"4\"}\n");

    CliRun wts = run({"weights-of", "--partition", "[2,1]", "--n", "2", "--oracle"});
    CHECK(wts.code == 0);
    CHECK(wts.out.find("\"multiplicity\":1") != std::string::npos);
}

TEST_CASE("matrix subcommands") {
    const std::string d31 = R"({"n":2,"re":[[3,0],[0,1]],"im":[[0,0],[0,0]]})";
    CliRun sk = run({"sk", "--matrix", d31, "--k", "2"});
    CHECK(sk.out == "{\"value\":\"4\"}\n");

    CliRun mom = run({"momentum-check", "--lambda", R"({"0":3,"1":1})", "--matrix",
                      R"({"n":2,"re":[["2",0],[0,"2"]]})", "--mode", "norm", "--oracle"});
    CHECK(mom.code == 0);
    CHECK(mom.out == "{\"member\":true}\n");

    CliRun tri = run({"triple", "--lambda", R"({"0":1})", "--matrix",
                      R"({"n":2,"re":[[1,2],[3,4]]})"});
    CHECK(tri.code == 0);
    CHECK(tri.out.find("\"block_diagonal\"") != std::string::npos);

    CliRun kae = run({"kaehler", "--lambda", R"({"0":1})", "--matrix",
                      R"({"n":2,"re":[[0,1],[0,0]],"im":[[0,2],[0,0]]})"});
    CHECK(kae.out == "{\"value\":\"10\"}\n");
}

TEST_CASE("exit codes") {
    SUBCASE("parse errors exit 2") {
        CHECK(run({"hull", "--lambda", "{bad json", "--mu", "{}"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"hull", "--lambda", R"({"0":0})", "--mu", "{}"}).code == 2);  // zero entry
        CHECK(run({"hull", "--mode", "sideways", "--lambda", "{}", "--mu", "{}"}).code == 2);
    }
    SUBCASE("resource limits exit 3") {
        CHECK(run({"decompose", "--n", "4", "--k", "6"}).code == 3);
        CHECK(run({"momentum-check", "--lambda", R"({"0":1})", "--matrix",
                   R"({"n":9,"re":[[]],"im":[[]]})"})
                  .code == 3);
    }
    SUBCASE("oracle and plain runs give identical primary output") {
        std::vector<std::string> base{"hull", "--mode", "norm", "--lambda", R"({"0":3,"1":1})",
                                      "--mu", R"({"0":2,"1":2})"};
        CliRun plain = run(base);
        base.push_back("--oracle");
        CliRun checked = run(base);
        CHECK(plain.out == checked.out);
    }
}

TEST_CASE("wrapped weight form and --out") {
    CliRun wrapped = run({"orbit-eq", "--lambda", R"({"entries":{"0":2}})", "--mu", R"({"5":2})"});
    CHECK(wrapped.out == "{\"equal\":true}\n");

    std::string path = "cli_out_test.json";
    CliRun r = run({"decompose", "--n", "2", "--k", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string contents((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(contents.find("\"dimS\":3") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("environment variables tighten the resource caps") {
    setenv("WEYLCALC_MAX_AMBIENT", "1", 1);
    CliRun r = run({"sk", "--matrix", R"({"n":2,"re":[[3,0],[0,1]]})", "--k", "1"});
    unsetenv("WEYLCALC_MAX_AMBIENT");
    CHECK(r.code == 3);

    setenv("WEYLCALC_MAX_TENSOR_DIM", "8", 1);
    CliRun t = run({"decompose", "--n", "2", "--k", "4"});
    unsetenv("WEYLCALC_MAX_TENSOR_DIM");
    CHECK(t.code == 3);
}

TEST_CASE("output is byte-identical across runs") {
    std::vector<std::string> args{"extremes", "--mode", "weakstar", "--lambda",
                                  R"({"0":2,"1":1,"2":-3})"};
    CHECK(run(args).out == run(args).out);
}
