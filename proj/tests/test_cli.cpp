// Drives the installed CLI binary end to end; paths are injected by CMake.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = ZETACOUNT_CLI_PATH;
const fs::path kData = ZETACOUNT_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "zc_cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

fs::path write_temp(const std::string& name, const std::string& body) {
    const auto path = fs::temp_directory_path() / name;
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("constants reproduces the first reference row") {
    const auto res =
        run("constants --config " + (kData / "table2_row1.cfg").string() + " --round-up");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("0.103787") != std::string::npos);
    CHECK(res.stdout_text.find("9.367419") != std::string::npos);
    CHECK(res.stdout_text.find("c,r,eta,sigma1,delta,T0,J1,J2,C1,C2,C3,C3prime") !=
          std::string::npos);
}

TEST_CASE("constants markdown output carries the table header") {
    const auto res = run("constants --config " + (kData / "table2_row2.cfg").string() +
                         " --out md");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("| c | r | eta |") != std::string::npos);
}

TEST_CASE("constants exits 2 on a constraint violation naming the inequality") {
    std::ifstream base(kData / "table2_row1.cfg");
    std::stringstream body;
    body << base.rdbuf();
    std::string text = body.str();
    text = text.substr(0, text.find("eta = ")) + "eta = 0.6\n" +
           text.substr(text.find('\n', text.find("eta = ")) + 1);
    const auto cfg = write_temp("zc_cli_bad_eta.cfg", text);
    const fs::path err = fs::temp_directory_path() / "zc_cli_err.txt";
    const std::string cmd = kCli + " constants --config " + cfg.string() + " 2> " +
                            err.string() + " >/dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::ifstream in(err);
    std::stringstream msg;
    msg << in.rdbuf();
    CHECK(msg.str().find("0 < eta <= 1/2") != std::string::npos);
}

TEST_CASE("constants exits 3 on a parse failure") {
    const auto cfg = write_temp("zc_cli_bad_syntax.cfg", "c = oops\n");
    CHECK(run("constants --config " + cfg.string()).exit_code == 3);
    CHECK(run("constants --config /nonexistent/path.cfg").exit_code == 3);
}

TEST_CASE("optimize honors budget and emits deterministic traces") {
    CHECK(run("optimize --budget 0").exit_code == 4);

    const fs::path trace1 = fs::temp_directory_path() / "zc_cli_trace1.txt";
    const fs::path trace2 = fs::temp_directory_path() / "zc_cli_trace2.txt";
    const auto res1 = run("optimize --objective c1 --budget 400 --seed 5 --trace " +
                          trace1.string());
    CHECK(res1.exit_code == 0);
    const auto res2 = run("optimize --objective c1 --budget 400 --seed 5 --trace " +
                          trace2.string());
    CHECK(res2.exit_code == 0);

    std::ifstream a(trace1), b(trace2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}

TEST_CASE("optimize with the shipped starts file reaches the reference C1") {
    const auto res = run("optimize --objective c1 --budget 800 --starts " +
                         (kData / "optimizer_starts.txt").string());
    CHECK(res.exit_code == 0);
    const auto pos = res.stdout_text.find("objective=");
    REQUIRE(pos != std::string::npos);
    const double c1 = std::stod(res.stdout_text.substr(pos + 10));
    CHECK(c1 <= 0.10379);
}

TEST_CASE("validate passes on the fixture and exits 5 past its coverage") {
    const auto ok = run("validate --zeros " + (kData / "zeros_1000.txt").string() +
                        " --heights 20,50,100");
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("T,N,main_term,deviation,bound,margin,pass") !=
          std::string::npos);

    const auto far = run("validate --zeros " + (kData / "zeros_1000.txt").string() +
                         " --heights 2000");
    CHECK(far.exit_code == 5);
}

TEST_CASE("validate with assembled constants") {
    const auto res = run("validate --zeros " + (kData / "zeros_1000.txt").string() +
                         " --heights 100,500 --constants " +
                         (kData / "table2_row2.cfg").string());
    CHECK(res.exit_code == 0);
}

TEST_CASE("verify-q passes on a reduced grid and fails for a broken Q0") {
    const auto ok = run("verify-q --tmax 50");
    CHECK(ok.exit_code == 0);

    std::ifstream base(kData / "table2_row2.cfg");
    std::stringstream body;
    body << base.rdbuf();
    std::string text = body.str();
    text += "\n";
    const auto pos = text.find("Q0 = 1");
    text = text.substr(0, pos) + "Q0 = 0.01" + text.substr(pos + 6);
    const auto cfg = write_temp("zc_cli_low_q0.cfg", text);
    const auto bad = run("verify-q --tmax 20 --config " + cfg.string());
    CHECK(bad.exit_code == 6);
    CHECK(bad.stdout_text.find("[FAIL]") != std::string::npos);

    CHECK(run("verify-q --tmax 0").exit_code == 4);
}

TEST_CASE("check-properties passes and rejects zero samples") {
    const auto ok = run("check-properties --samples 60");
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("all property suites passed") != std::string::npos);

    CHECK(run("check-properties --samples 0").exit_code == 4);
}

TEST_CASE("a weakened half-line constant trips the region-bound suite") {
    std::ifstream base(kData / "table2_row2.cfg");
    std::stringstream body;
    body << base.rdbuf();
    std::string text = body.str();
    const auto pos = text.find("k1 = 0.77");
    text = text.substr(0, pos) + "k1 = 0.5" + text.substr(pos + 9);
    const auto cfg = write_temp("zc_cli_low_k1.cfg", text);
    const auto res = run("check-properties --samples 200 --config " + cfg.string());
    CHECK(res.exit_code == 6);
    CHECK(res.stdout_text.find("[FAIL]") != std::string::npos);
    CHECK(res.stdout_text.find("region bound at s =") != std::string::npos);
}

}  // TEST_SUITE
