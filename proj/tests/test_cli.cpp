#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef QDILOG_CLI_PATH
#error "QDILOG_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QDILOG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("eval emits the documented JSON schema") {
    auto r = run("eval li2q --z 0.25 --q 0.5 --prec 50");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["function"] == "li2q");
    CHECK(j["digits"] == 50);
    CHECK(j["params"]["z"] == "0.25");
    CHECK(j["value_re"].is_string());
    CHECK(j["value_im"].is_string());
    CHECK(j["terms_used"].is_number_integer());
    double v = std::stod(j["value_re"].get<std::string>());
    CHECK(v == doctest::Approx(0.54891491425).epsilon(1e-9));
}

TEST_CASE("eval zero value and domain error exit codes") {
    auto zero = run("eval li2q --z 0 --q 0.5");
    CHECK(zero.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(zero.output);
    CHECK(std::stod(j["value_re"].get<std::string>()) == 0.0);

    CHECK(run("eval li2q --z 1.5 --q 0.5").exit_code == 3);
    CHECK(run("eval nosuchfn --z 0.5").exit_code == 2);
    CHECK(run("eval hurwitz --s 1 --zparam 0.5").exit_code == 3);  // pole
    CHECK(run("eval li2q --z 0.5 --q 0.5 --prec 10").exit_code == 2);
}

TEST_CASE("eval covers the documented function set") {
    CHECK(run("eval qlog --z 0.3 --q 0.5 --prec 20").exit_code == 0);
    CHECK(run("eval qpolylog --n 3 --z 0.3 --q 0.5 --prec 20").exit_code == 0);
    CHECK(run("eval hurwitz --s 2.5 --zparam 2 --prec 20").exit_code == 0);
    CHECK(run("eval periodic_zeta --theta 0.3 --s 2.5 --prec 20").exit_code == 0);
    CHECK(run("eval polylog --s 2 --z 0.5 --prec 20").exit_code == 0);
    CHECK(run("eval polygamma --n 1 --zparam 1 --prec 20").exit_code == 0);
    CHECK(run("eval bernoulli --n 3 --z 0.5 --prec 20").exit_code == 0);
    CHECK(run("eval apostol --n 2 --z 0.4 --lambda -1 --prec 20").exit_code == 0);
    CHECK(run("eval euler_series --z 0.25 --q 0.5 --prec 20").exit_code == 0);

    // complex argument parsing, re+imi
    auto r = run("eval hurwitz --s 2.5+1.5i --zparam 1.5-0.25i --prec 20");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(std::stod(j["value_im"].get<std::string>()) != 0.0);
}

TEST_CASE("verify reports round-trip byte-identically and deterministically") {
    auto a = run("verify limits --prec 20");
    CHECK(a.exit_code == 0);
    auto b = run("verify limits --prec 20");
    CHECK(a.output == b.output);  // determinism

    auto j = nlohmann::ordered_json::parse(a.output);
    CHECK(j["suite"] == "limits");
    CHECK(j["pass"].is_boolean());
    // parse -> re-serialize is byte-identical (numbers live in strings)
    std::string dumped = j.dump(2) + "\n";
    CHECK(dumped == a.output);

    CHECK(run("verify nosuchsuite").exit_code == 2);
}

TEST_CASE("verify accepts a grid file") {
    const char* path = "/tmp/qdilog_test_grid.json";
    {
        std::ofstream f(path);
        f << R"({"cases":[{"q":"0.5","z_re":"0.25","z_im":"0"},{"q":"0.3","z_re":"0.1","z_im":"0.2"}]})";
    }
    auto r = run(std::string("verify kirillov --prec 30 --grid ") + path);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["cases"].size() == 2);
    std::remove(path);

    CHECK(run("verify kirillov --grid /nonexistent/grid.json").exit_code == 3);
}

TEST_CASE("expand CSV shape") {
    auto r = run("expand q1 --zparam 2 --theta 0.3 --order 4 --provenance closed_form --prec 20");
    CHECK(r.exit_code == 0);
    size_t rows = 0;
    for (char c : r.output)
        if (c == '\n') ++rows;
    CHECK(rows == 7);  // header + powers -1..4
    CHECK(r.output.rfind("power,coeff_re,coeff_im,provenance\n", 0) == 0);

    // boundary order: two rows only
    auto r0 = run("expand q1 --zparam 2 --theta 0.3 --order 0 --provenance closed_form --prec 20");
    CHECK(r0.exit_code == 0);
    rows = 0;
    for (char c : r0.output)
        if (c == '\n') ++rows;
    CHECK(rows == 3);

    // q0 ci part at theta=1/2: all coefficients zero
    auto rq0 =
        run("expand q0 --part ci --zparam 2 --theta 0.5 --order 2 --provenance closed_form "
            "--prec 20");
    CHECK(rq0.exit_code == 0);
    std::istringstream lines(rq0.output);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        double re = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(std::abs(re) < 1e-12);  // zero to working tolerance
    }

    CHECK(run("expand q2 --zparam 2 --theta 0.3").exit_code == 2);
    CHECK(run("expand q0 --part xx --zparam 2 --theta 0.3").exit_code == 2);
}

TEST_CASE("integral JSON and abscissa validation") {
    auto r = run("integral --which li2 --x 1 --zparam 2 --theta 0.3 --c 1.5 --prec 20");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["which"] == "li2");
    CHECK(j["nodes_used"].is_number_integer());
    CHECK(j["self_consistency_estimate"].is_string());
    double re = std::stod(j["value_re"].get<std::string>());
    CHECK(re == doctest::Approx(-0.0740070035708).epsilon(1e-9));

    CHECK(run("integral --which li2 --c 0.5").exit_code == 2);
    CHECK(run("integral --which ci2 --c 2.5").exit_code == 2);
    CHECK(run("integral --which nope --c 1.5").exit_code == 2);
}

TEST_CASE("QDILOG_MAX_TERMS overrides the summation cap") {
    // with a tiny cap the series cannot meet tolerance: non-convergence, exit 4
    std::string cmd = std::string("QDILOG_MAX_TERMS=5 ") + QDILOG_CLI_PATH +
                      " eval li2q --z 0.9 --q 0.5 --prec 30 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 256> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 4);
}

TEST_CASE("crossover CSV") {
    auto empty = run("crossover --zparam 2 --theta 0.3 --prec 20");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output == "x,direct_terms,direct_time,asymp_N,asymp_error,direct_error\n");

    auto r = run("crossover --zparam 2 --theta 0.3 --xs 1.0,0.1 --prec 20");
    CHECK(r.exit_code == 0);
    size_t rows = 0;
    for (char c : r.output)
        if (c == '\n') ++rows;
    CHECK(rows == 3);
}
