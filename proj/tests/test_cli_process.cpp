#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Black-box tests of the installed binary: the harness passes its path in
// FPQUAD_BIN. Contract under test: output formats, exit code 0 on success,
// 2 on usage errors, 3 on numerical failures.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    return (std::filesystem::temp_directory_path() /
            ("fpquad_" + std::to_string(getpid()) + "_" + tag))
        .string();
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("FPQUAD_BIN");
    REQUIRE(bin != nullptr);
    const std::string out = temp_path("stdout.txt");
    const std::string err = temp_path("stderr.txt");
    const std::string cmd = std::string(bin) + " " + args + " > " + out + " 2> " + err;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// value of "<label> = <number>" or "<label>=<number>"; NaN when missing
double labeled_value(const std::string& text, const std::string& label) {
    const std::size_t at = text.find(label);
    if (at == std::string::npos) return std::nan("");
    std::size_t eq = text.find('=', at);
    if (eq == std::string::npos) return std::nan("");
    return std::strtod(text.c_str() + eq + 1, nullptr);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::vector<double> csv_fields(const std::string& line) {
    std::vector<double> out;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) out.push_back(std::strtod(field.c_str(), nullptr));
    return out;
}

} // namespace

TEST_CASE("compute prints the exp benchmark value") {
    const RunResult r = run_cli("compute --f exp --alpha 0.1 --n 1 --rho 10 --N 32");
    CHECK(r.code == 0);
    CHECK(std::abs(labeled_value(r.out, "value") - 9.4385815275268217) <= 1e-11);
}

TEST_CASE("compute csv layout") {
    const RunResult r = run_cli("compute --f exp --alpha 0.1 --n 1 --rho 10 --N 32 --format csv");
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "value,loop_part,correction,N");
    const auto f = csv_fields(lines[1]);
    REQUIRE(f.size() == 4);
    CHECK(std::abs(f[0] - 9.4385815275268217) <= 1e-11);
    CHECK(std::abs(f[0] - (f[1] + f[2])) <= 1e-12);
    CHECK(f[3] == 32.0);
}

TEST_CASE("compute handles each built-in integrand") {
    // at N = 16 the loop part still carries a ~1e-11 trapezoid residual;
    // doubling N pushes it below roundoff
    const RunResult one16 = run_cli("compute --f one --alpha 0.1 --n 1 --rho 3 --N 16");
    CHECK(one16.code == 0);
    CHECK(std::abs(labeled_value(one16.out, "value") + 1.1111111111111112) <= 1e-10);
    const RunResult one = run_cli("compute --f one --alpha 0.1 --n 1 --rho 3 --N 32");
    CHECK(one.code == 0);
    CHECK(std::abs(labeled_value(one.out, "value") + 1.1111111111111112) <= 1e-12);

    const RunResult mono = run_cli("compute --f monomial --m 3 --alpha 0.5 --n 1 --rho 3 --N 48");
    CHECK(mono.code == 0);
    CHECK(std::abs(labeled_value(mono.out, "value") - 0.4) <= 1e-10);

    const RunResult poly = run_cli("compute --f poly --coeffs 1,0,-2 --alpha 0.1 --n 3 --rho 3 --N 48");
    CHECK(poly.code == 0);
    // 1/(0.1-3) - 2/(0.1-1)
    CHECK(std::abs(labeled_value(poly.out, "value") - 1.8773946360153257) <= 1e-10);
}

TEST_CASE("compute reports the error bound when asked") {
    // N = 8 keeps the symmetric-rule error above roundoff so the bound,
    // which only models discretization, still has to dominate it
    const RunResult r = run_cli("compute --f exp --alpha 0.1 --n 1 --rho 10 --N 8 --dprime auto");
    CHECK(r.code == 0);
    const double value = labeled_value(r.out, "value");
    const double dp = labeled_value(r.out, "d_prime");
    const double bound = labeled_value(r.out, "bound");
    CHECK(dp > 1.0);
    CHECK(bound > 0.0);
    CHECK(bound >= std::abs(value - 9.4385815275268217));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("compute --f exp --alpha 1.5 --n 1").code == 2);
    CHECK(run_cli("compute --f exp --alpha 0.5 --n 0").code == 2);
    CHECK(run_cli("compute --f exp --alpha 0.5 --n 1 --rho 0.9").code == 2);
    CHECK(run_cli("compute --f nosuch --alpha 0.5 --n 1").code == 2);
    CHECK(run_cli("compute --f exp --n 1").code == 2);
    CHECK(run_cli("compute --f poly --alpha 0.5 --n 1").code == 2);
    CHECK(run_cli("compute --f poly --coeffs 1,x --alpha 0.5 --n 1").code == 2);
    CHECK(run_cli("bound --f exp --alpha 0.5 --n 1").code == 2);
    CHECK(run_cli("compute --f exp --alpha 0.5 --n 1 --dprime -3").code == 2);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("compute") != std::string::npos);
}

TEST_CASE("numerical failures exit with code 3") {
    // poles of 1/(1+x^2) live inside the rho = 10 ellipse
    const RunResult swallowed = run_cli("compute --f rational1px2 --alpha 0.1 --n 1 --rho 10 --N 16");
    CHECK(swallowed.code == 3);
    CHECK(swallowed.err.find("contour") != std::string::npos);

    // strip too wide: the inner line folds over [0,1]
    const RunResult folded =
        run_cli("bound --f rational1px2 --alpha 0.1 --n 1 --rho 2 --dprime 1.0 --Nmin 8 --Nmax 8");
    CHECK(folded.code == 3);
}

TEST_CASE("converge writes a csv table and a rate summary") {
    const std::string csv = temp_path("converge.csv");
    const std::string cmd =
        "converge --f exp --alpha 0.1 --n 1 --rho 10 --Nmin 4 --Nmax 24 --Nstep 1 --out " + csv;
    const RunResult r = run_cli(cmd);
    CHECK(r.code == 0);
    const std::string text = slurp(csv);
    CHECK(text.find('\r') == std::string::npos);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 22);
    CHECK(lines[0] == "N,value,abs_error,rel_error");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv_fields(lines[i]);
        REQUIRE(f.size() == 4);
        CHECK(f[0] == static_cast<double>(i) + 3.0);
    }
    const double rate = labeled_value(r.out, "fitted rate");
    CHECK(rate > 0.001);
    CHECK(rate < 0.2);

    const RunResult again = run_cli(cmd);
    CHECK(again.code == 0);
    CHECK(slurp(csv) == text);  // byte-identical rerun
}

TEST_CASE("converge without --out streams csv to stdout") {
    const RunResult r =
        run_cli("converge --f exp --alpha 0.3 --n 2 --rho 6 --Nmin 4 --Nmax 16 --Nstep 4");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("N,value,abs_error,rel_error", 0) == 0);
    CHECK(r.err.find("fitted rate") != std::string::npos);
}

TEST_CASE("bound tabulates a dominating envelope") {
    const std::string csv = temp_path("bound.csv");
    const RunResult r = run_cli(
        "bound --f exp --alpha 0.1 --n 1 --rho 10 --dprime auto --Nmin 8 --Nmax 24 --Nstep 4 --out " +
        csv);
    CHECK(r.code == 0);
    const double dp = labeled_value(r.out, "d_prime");
    CHECK(dp >= 1.5);
    CHECK(dp <= 2.2);
    const auto lines = split_lines(slurp(csv));
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "N,bound,actual_error");
    int checked = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv_fields(lines[i]);
        REQUIRE(f.size() == 3);
        if (f[2] > 1e-12) {  // pre-plateau rows only; roundoff is out of scope
            CHECK(f[1] >= f[2]);
            ++checked;
        }
    }
    CHECK(checked >= 3);
}
