#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "besselcert/cli.hpp"

using namespace besselcert;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string second_line(const std::string& s) {
    const auto a = s.find('\n');
    return s.substr(a + 1, s.find('\n', a + 1) - a - 1);
}

}  // namespace

TEST_CASE("eval prints the oracle value") {
    const Run r = run({"eval", "--nu", "0", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("subject,nu,x,value,oracle,half_width,ratio,holds\n", 0) == 0);
    CHECK(split(second_line(r.out))[3] == "0.76519768655796655");
}

TEST_CASE("zeros prints a bracket around a_1") {
    const Run r = run({"zeros", "--family", "airy", "--s", "1", "--mode", "full"});
    CHECK(r.code == 0);
    const auto cells = split(second_line(r.out));
    REQUIRE(cells.size() == 8);
    CHECK(std::fabs(std::stod(cells[3]) - 2.338107410) < 0.00122);
    CHECK(cells[7] == "true");
}

TEST_CASE("approx with mu = 0 has zero width") {
    const Run r = run({"approx", "--nu", "0.5", "--x", "3"});
    CHECK(r.code == 0);
    CHECK(split(second_line(r.out))[5] == "0");
}

TEST_CASE("bounds and scans") {
    CHECK(run({"bounds", "--name", "envelope", "--nu", "5", "--x", "20"}).code == 0);
    CHECK(run({"bounds", "--name", "airy_maxima"}).code == 0);
    const Run s = run({"scan", "--method", "classic", "--nu-list", "0,2.5", "--x-lo", "1", "--x-hi", "50", "--points",
                       "10"});
    CHECK(s.code == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 21);
    CHECK(run({"--format", "plain", "sup", "--nu", "2", "--points", "300"}).code == 0);
}

TEST_CASE("exit code 1 exactly when a row fails") {
    const std::vector<std::vector<std::string>> cases = {
        {"approx", "--nu", "0", "--x", "0.1", "--method", "olver", "--l1", "1", "--l2", "1"},
        {"approx", "--nu", "10", "--x", "10.5"},
        {"bounds", "--name", "monotonic", "--nu", "3", "--x", "1"},
        {"zeros", "--family", "bessel", "--s", "3", "--nu", "20"},
        {"scan", "--bound", "derivative", "--nu-list", "0.5,5", "--x-lo", "1", "--x-hi", "100", "--points", "30"},
    };
    for (const auto& args : cases) {
        const Run r = run(args);
        bool any_fail = false;
        std::stringstream lines(r.out);
        std::string line;
        std::getline(lines, line);
        while (std::getline(lines, line)) {
            const auto c = split(line);
            REQUIRE(c.size() == 8);
            any_fail = any_fail || c[7] == "false" || (!c[6].empty() && std::stod(c[6]) > 1.0);
        }
        CHECK(r.code == (any_fail ? 1 : 0));
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--x", "1"}).code == 2);
    CHECK(run({"approx", "--nu", "0", "--x", "1", "--method", "bogus"}).code == 2);
    CHECK(run({"eval", "--nu", "0", "--x", "500"}).code == 2);
    const Run r = run({"bounds", "--name", "watson", "--nu", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("needs --x") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"scan", "--bound", "envelope", "--nu-list", "0,5", "--x-lo", "0.5",
                                           "--x-hi", "60", "--points", "25"};
    CHECK(run(args).out == run(args).out);
}
