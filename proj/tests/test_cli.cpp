#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("AUTOSEQ_CLI");
    REQUIRE_MESSAGE(p != nullptr, "AUTOSEQ_CLI must point at the binary");
    return p;
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("AUTOSEQ_FIXTURES");
    REQUIRE_MESSAGE(dir != nullptr, "AUTOSEQ_FIXTURES must point at tests/fixtures");
    return std::string(dir) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/autoseq_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("gen prints the expected prefix") {
    auto res = run("gen --spec " + fixture("f4.json") + " --terms 7");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "1,0\n1,1\n1,1\n0,1\n1,1\n1,0\n1,1\n");
}

TEST_CASE("output is byte deterministic") {
    std::string args = "certify --spec " + fixture("f4.json") +
                       " --order 150 --format json";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"residual_theta\": true") != std::string::npos);
    CHECK(a.out.find("\"residual_rho\": true") != std::string::npos);
}

TEST_CASE("validation problems exit with 1") {
    CHECK(run("gen --spec /nonexistent.json --terms 4").exit_code == 1);
    CHECK(run("gen --terms 4").exit_code == 1);  // missing --spec

    auto bad = temp_file("bad_family.json", R"({
        "family": "thm9", "field": {"p": 2, "s": 1},
        "ell": 1, "r": 2, "k": 1})");
    CHECK(run("gen --spec " + bad + " --terms 4").exit_code == 1);

    auto bad_k = temp_file("bad_k.json", R"({
        "family": "thm2", "field": {"p": 2, "s": 2},
        "ell": 1, "r": 4, "k": 3,
        "lambda_init": ["1,0"],
        "alpha": ["1,0", "1,0", "1,0"],
        "beta": ["1,0", "1,0", "1,0"]})");
    CHECK(run("gen --spec " + bad_k + " --terms 4").exit_code == 1);

    auto composite = temp_file("composite_p.json", R"({
        "family": "prop1", "field": {"p": 6, "s": 1},
        "ell": 1, "r": 2, "lambda_init": ["1"],
        "eps1": "1", "eps2": "1"})");
    CHECK(run("gen --spec " + composite + " --terms 4").exit_code == 1);
}

TEST_CASE("a corrupted equation fixture exits with 2") {
    // A wrong C: the true one for the f4 example is the constant 1.
    auto eq = temp_file("corrupt_eq.json", R"({
        "A": {"num": ["0,1", "0,0", "1,0"], "den": ["0,0", "1,0", "0,0", "1,0"]},
        "B": {"num": ["0,0"], "den": ["1,0"]},
        "C": {"num": ["0,1"], "den": ["1,0"]}})");
    auto res = run("certify --spec " + fixture("f4.json") + " --order 100 --equation " + eq);
    CHECK(res.exit_code == 2);
}

TEST_CASE("the dfao export is stable dot text") {
    std::string args = "dfao-dot --spec " + fixture("f4.json") + " --horizon 256";
    auto a = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out.rfind("digraph", 0) == 0);
    CHECK(a.out == run(args).out);
}

TEST_CASE("kernel and report emit json") {
    auto k = run("kernel --spec " + fixture("f4.json") + " --horizon 256");
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("\"closed\": true") != std::string::npos);

    auto rep = run("report --spec " + fixture("f4.json") + " --terms 2000");
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("\"kernel_closed\": true") != std::string::npos);
}

TEST_CASE("cf subcommand lists quotients") {
    auto res = run("cf --spec " + fixture("f4.json") + " --order 60 --quotients 12");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("T") != std::string::npos);
}

TEST_CASE("prop3 passes on the worked example") {
    auto res = run("prop3 --spec " + fixture("f4.json") + " --order 200 --depth 5");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"theta_identity\": true") != std::string::npos);
    CHECK(res.out.find("\"gap_witness\"") != std::string::npos);
}

TEST_CASE("output lands in the --out file") {
    std::string path = "/tmp/autoseq_cli_gen_out.txt";
    std::remove(path.c_str());
    auto res = run("gen --spec " + fixture("f4.json") + " --terms 3 --out " + path);
    CHECK(res.exit_code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "1,0\n1,1\n1,1\n");
}
