#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"
#include "rational.hpp"

using pienc::Rational;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// run the installed binary through the shell, stderr folded into stdout
RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string("\"") + PIENC_CLI_PATH + "\" " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
    int rc = pclose(f);
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t eol = s.find('\n', pos);
        if (eol == std::string::npos) eol = s.size();
        out.push_back(s.substr(pos, eol - pos));
        pos = eol + 1;
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

} // namespace

TEST_CASE("pi arcsin text shows the exact bound and series head") {
    RunResult r = run_cli("pi --method arcsin --terms 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("method      arcsin") != std::string::npos);
    CHECK(r.out.find("work        2 terms") != std::string::npos);
    CHECK(r.out.find("149/60") != std::string::npos);
    CHECK(r.out.find("209/60") != std::string::npos);
    CHECK(r.out.find("series      2 + 1/3 + 3/20") != std::string::npos);
}

TEST_CASE("pi quadrature with one subinterval is [2, 4]") {
    RunResult r = run_cli("pi --method quadrature --subintervals 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("enclosure   [2.00, 4.00]") != std::string::npos);
    CHECK(r.out.find("exact       [2/1, 4/1]") != std::string::npos);
}

TEST_CASE("pi all prints four methods, intersection, digits") {
    RunResult r = run_cli("pi --method all --target-width 1e-6");
    CHECK(r.code == 0);
    std::size_t a = r.out.find("method      arcsin");
    std::size_t c = r.out.find("method      cosroot");
    std::size_t h = r.out.find("method      archimedes");
    std::size_t q = r.out.find("method      quadrature");
    REQUIRE(a != std::string::npos);
    REQUIRE(c != std::string::npos);
    REQUIRE(h != std::string::npos);
    REQUIRE(q != std::string::npos);
    CHECK(a < c);
    CHECK(c < h);
    CHECK(h < q);
    CHECK(r.out.find("intersection  [3.14159") != std::string::npos);
    CHECK(r.out.find("guaranteed digits  3.14159") != std::string::npos);
}

TEST_CASE("json output carries decimal and exact endpoints") {
    RunResult r = run_cli("pi --method arcsin --terms 2 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 6);
    for (const char* key : {"method", "lo", "hi", "width", "work", "elapsed_ms"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["method"] == "arcsin");
    CHECK(j["work"] == 2);
    CHECK(j["lo"]["exact"] == "149/60");
    CHECK(j["hi"]["exact"] == "209/60");
    // outward decimal rounding, exact comparison
    CHECK(Rational::parse(j["lo"]["decimal"].get<std::string>()) <= Rational(149, 60));
    CHECK(Rational::parse(j["hi"]["decimal"].get<std::string>()) >= Rational(209, 60));
    CHECK(Rational::parse(j["width"].get<std::string>()) >= Rational(1));
}

TEST_CASE("json output for all methods") {
    RunResult r = run_cli("pi --method all --target-width 0.01 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["enclosures"].size() == 4);
    CHECK(j["enclosures"][0]["method"] == "arcsin");
    CHECK(j["enclosures"][1]["method"] == "cosroot");
    CHECK(j["enclosures"][2]["method"] == "archimedes");
    CHECK(j["enclosures"][3]["method"] == "quadrature");
    CHECK(j["intersection"]["method"] == "intersection");
    std::string digits = j["guaranteed_digits"].get<std::string>();
    CHECK(digits.substr(0, 4) == "3.14");
    // every method's interval contains the intersection
    Rational ilo = Rational::parse(j["intersection"]["lo"]["exact"].get<std::string>());
    Rational ihi = Rational::parse(j["intersection"]["hi"]["exact"].get<std::string>());
    REQUIRE(ilo < ihi);
    for (const auto& e : j["enclosures"]) {
        CHECK(Rational::parse(e["lo"]["exact"].get<std::string>()) <= ilo);
        CHECK(Rational::parse(e["hi"]["exact"].get<std::string>()) >= ihi);
    }
}

TEST_CASE("csv output") {
    RunResult r = run_cli("pi --method cosroot --target-width 0.01 --format csv");
    REQUIRE(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "method,work,lo,hi,width");
    CHECK(lines[1].substr(0, 10) == "cosroot,8,");

    RunResult all = run_cli("pi --method all --target-width 0.05 --format csv");
    REQUIRE(all.code == 0);
    std::vector<std::string> alines = lines_of(all.out);
    REQUIRE(alines.size() == 6); // header, four methods, intersection
    CHECK(alines[0] == "method,work,lo,hi,width");
    CHECK(split_csv(alines[5])[0] == "intersection");
}

TEST_CASE("bits flag pins the dyadic rounding") {
    RunResult r = run_cli("pi --method archimedes --doublings 0 --bits 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("exact       [181/64, 4/1]") != std::string::npos);
}

TEST_CASE("table schedules, determinism, monotone widths") {
    RunResult r1 = run_cli("table --method archimedes --doublings 3");
    RunResult r2 = run_cli("table --method archimedes --doublings 3");
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    std::vector<std::string> lines = lines_of(r1.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "method,work,lo,hi,width");
    // k = 0 row: lo <= 2.8285, hi = 4
    std::vector<std::string> row0 = split_csv(lines[1]);
    REQUIRE(row0.size() == 5);
    CHECK(row0[0] == "archimedes");
    CHECK(row0[1] == "0");
    CHECK(Rational::parse(row0[2]) <= Rational::parse("2.8285"));
    CHECK(Rational::parse(row0[3]) >= Rational(4));
    Rational prev(-1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> row = split_csv(lines[i]);
        Rational w = Rational::parse(row[4]);
        if (prev.sign() >= 0) CHECK(w <= prev);
        prev = w;
    }
}

TEST_CASE("arcsin table rows at N=1,2 carry widths 2 and 1") {
    RunResult r = run_cli("table --method arcsin --terms 2");
    REQUIRE(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    std::vector<std::string> row1 = split_csv(lines[1]), row2 = split_csv(lines[2]);
    CHECK(row1[1] == "1");
    CHECK(row2[1] == "2");
    Rational w1 = Rational::parse(row1[4]), w2 = Rational::parse(row2[4]);
    CHECK(w1 >= Rational(2));
    CHECK(w1 <= Rational::parse("2.001"));
    CHECK(w2 >= Rational(1));
    CHECK(w2 <= Rational::parse("1.001"));
}

TEST_CASE("cosroot table walks the bisection steps") {
    RunResult r = run_cli("table --method cosroot --target-width 0.05");
    REQUIRE(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 7); // header + steps 1..6
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> row = split_csv(lines[i]);
        CHECK(row[0] == "cosroot");
        CHECK(row[1] == std::to_string(i));
    }
    CHECK(Rational::parse(split_csv(lines[6])[4]) <= Rational::parse("0.05"));
}

TEST_CASE("quadrature table doubles up to the cap") {
    RunResult r = run_cli("table --method quadrature --subintervals 12");
    REQUIRE(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 6); // 1,2,4,8,12
    CHECK(split_csv(lines[1])[1] == "1");
    CHECK(split_csv(lines[2])[1] == "2");
    CHECK(split_csv(lines[3])[1] == "4");
    CHECK(split_csv(lines[4])[1] == "8");
    CHECK(split_csv(lines[5])[1] == "12");
}

TEST_CASE("verify passes and prints the reversion line") {
    RunResult r = run_cli("verify");
    CHECK(r.code == 0);
    CHECK(r.out.find("sin coefficients recovered through order 9") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    CHECK(lines.back() == "ALL CHECKS PASSED");
}

TEST_CASE("verify with an injected disjoint enclosure fails") {
    RunResult r = run_cli("verify --inject-disjoint");
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL pi-methods.cross-consistency") != std::string::npos);
    CHECK(r.out.find("ALL CHECKS PASSED") == std::string::npos);
}

TEST_CASE("demo formats") {
    RunResult text = run_cli("demo-circularity");
    CHECK(text.code == 0);
    CHECK(text.out.find("CYCLE") != std::string::npos);
    CHECK(text.out.find("pi -> circle length -> arcsin -> pi") != std::string::npos);
    CHECK(text.out.find("PARAMETRIC-DEAD-END") != std::string::npos);
    CHECK(text.out.find("REPAIR") != std::string::npos);

    RunResult machine = run_cli("demo-circularity --format machine");
    CHECK(machine.code == 0);
    CHECK(machine.out.find("edge.cycle=node.4->node.1") != std::string::npos);

    RunResult js = run_cli("demo-circularity --format json");
    REQUIRE(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    REQUIRE(j["nodes"].size() == 4);
    CHECK(j["nodes"][0]["id"] == "node.1");
    CHECK(j["cycle"] == "node.4->node.1");
    CHECK(j["deadend"] == "integral[0,2pi] 1 dt = 2pi");

    RunResult bad = run_cli("demo-circularity --format csv");
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("pi --method arcsin").code == 2);                       // budget missing
    CHECK(run_cli("pi --method arcsin --terms 2 --doublings 1").code == 2); // extra budget
    CHECK(run_cli("pi --method cosroot --terms 2").code == 2);            // wrong budget kind
    CHECK(run_cli("pi").code == 2);                     // method 'all' without --target-width
    CHECK(run_cli("pi --method newton --terms 1").code == 2);
    CHECK(run_cli("pi --method cosroot --target-width -1").code == 2);
    CHECK(run_cli("table --method all --target-width 1").code == 2);
    CHECK(run_cli("table --method arcsin --terms 0").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2); // a subcommand is required
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("pi --help").code == 0);
}
