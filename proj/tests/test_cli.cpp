#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

std::string bin() {
    const char* b = std::getenv("TATESYZ_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string data(const std::string& name) {
    const char* d = std::getenv("TATESYZ_DATA");
    REQUIRE(d != nullptr);
    return std::string(d) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_file = "cli_out.tmp";
    std::string cmd = bin() + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    std::remove(out_file.c_str());
    return r;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("analyze exit codes: 0 = theorem applies, 2 = bounded-inconclusive, 1 = error") {
    CHECK(run("analyze " + data("lambda2.alg")).exit_code == 0);
    CHECK(run("analyze " + data("lambda1.alg")).exit_code == 2);
    CHECK(run("analyze /no/such/file.alg").exit_code == 1);
    CHECK(run("analyze " + data("lambda2.alg") + " --range 6..2").exit_code == 1);
}

TEST_CASE("analyze prints the headline facts") {
    auto r = run("analyze " + data("lambda2.alg"));
    CHECK(r.output.find("GorensteinOfDimension(1)") != std::string::npos);
    CHECK(r.output.find("n = 2, p = 2") != std::string::npos);
    auto r2 = run("analyze " + data("lambda1.alg"));
    CHECK(r2.output.find("NotGorensteinUpTo(12)") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic up to timings") {
    std::string j1 = "cli_rep1.json", j2 = "cli_rep2.json";
    REQUIRE(run("analyze " + data("a.alg") + " --json " + j1).exit_code == 0);
    REQUIRE(run("analyze " + data("a.alg") + " --json " + j2).exit_code == 0);
    auto a = load_json(j1), b = load_json(j2);
    a.erase("timings_ms");
    b.erase("timings_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a["schema"] == "tate-syzygy/1");
    CHECK(a["gorenstein"]["status"] == "GorensteinOfDimension(1)");
    CHECK(a["periodicity"]["n"] == 1);
    CHECK(a["tables"].size() == 2);
    for (auto& c : a["checks"]) CHECK(c["pass"] == true);
    std::remove(j1.c_str());
    std::remove(j2.c_str());
}

TEST_CASE("--field overrides the presentation field") {
    auto r = run("analyze " + data("kx2.alg") + " --field F2 --json cli_f2.json");
    CHECK(r.exit_code == 0);
    auto j = load_json("cli_f2.json");
    CHECK(j["input"]["field"] == "F2");
    CHECK(j["periodicity"]["p"] == 1);
    std::remove("cli_f2.json");
}

TEST_CASE("tensor writes a loadable dump and analyze accepts it") {
    std::string dump = "cli_tensor.json";
    REQUIRE(run("tensor " + data("kx2.alg") + " " + data("gamma1.alg") + " " + dump).exit_code ==
            0);
    auto j = load_json(dump);
    CHECK(j["schema"] == "tate-syzygy/algebra/1");
    CHECK(j["dim"] == 6);
    auto r = run("analyze " + dump);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim 6") != std::string::npos);
    // field mismatch on a dump is refused
    CHECK(run("analyze " + dump + " --field F2").exit_code == 1);
    std::remove(dump.c_str());
}

TEST_CASE("resolve agrees with the Bardzell oracle and reports structure") {
    auto r = run("resolve " + data("lambda1.alg") +
                 " --module regular-bimodule --length 6 --bardzell");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d o d = 0: pass") != std::string::npos);
    CHECK(r.output.find("minimality (im d in rad): pass") != std::string::npos);
    CHECK(r.output.find("DISAGREE") == std::string::npos);
    // simple module selector
    CHECK(run("resolve " + data("lambda2.alg") + " --module simple 1 --length 4").exit_code ==
          0);
    CHECK(run("resolve " + data("lambda2.alg") + " --module simple 9 --length 4").exit_code ==
          1);
    // the oracle needs a monomial presentation
    CHECK(run("resolve " + data("a.alg") + " --module regular-bimodule --bardzell").exit_code ==
          1);
}

TEST_CASE("tensor-check passes both parity branches and flags bad hypotheses") {
    CHECK(run("tensor-check " + data("kx2.alg") + " " + data("gamma1.alg")).exit_code == 0);
    auto odd = run("tensor-check " + data("kx2_f2.alg") + " " + data("gamma1.alg") +
                   " --field F2");
    CHECK(odd.exit_code == 0);
    CHECK(odd.output.find("odd period") != std::string::npos);
    CHECK(run("tensor-check " + data("gamma1.alg") + " " + data("gamma1.alg")).exit_code == 2);
}

TEST_CASE("make-gamma emits a presentation analyze accepts") {
    std::string f = "cli_gamma3.alg";
    REQUIRE(run("make-gamma 3 -o " + f).exit_code == 0);
    auto r = run("analyze " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("GorensteinOfDimension(3)") != std::string::npos);
    std::remove(f.c_str());
}
