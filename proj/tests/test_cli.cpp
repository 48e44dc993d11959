#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MILNOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = (status >= 256) ? status / 256 : status;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fixture(const std::string& name) {
    return std::string(MILNOR_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
    return std::string(MILNOR_GOLDEN_DIR) + "/" + name;
}

void check_golden(const std::string& args, const std::string& golden_name) {
    RunResult res = run(args);
    CHECK(res.exit_code == 0);
    CHECK(res.out == slurp(golden(golden_name)));
}

}  // namespace

TEST_CASE("byte-stable outputs against the committed goldens") {
    std::string banded = fixture("banded.link");
    std::string unbanded = fixture("unbanded.link");
    std::string borromean = fixture("borromean.link");

    check_golden("invariant " + banded + " L", "invariant_banded_L.txt");
    check_golden("invariant " + banded + " L --format tsv", "invariant_banded_L.tsv");
    check_golden("invariant " + unbanded + " Lprime", "invariant_unbanded_Lprime.txt");
    check_golden("invariant " + borromean + " borromean", "invariant_borromean.txt");
    check_golden("normalize " + banded + " L", "normalize_banded_L.txt");
    check_golden("normalize " + unbanded + " Lprime", "normalize_unbanded_Lprime.txt");
    check_golden("normalize " + borromean + " borromean", "normalize_borromean.txt");
    check_golden("longitudes " + banded + " L", "longitudes_banded_L.txt");
    check_golden("longitudes " + unbanded + " Lprime", "longitudes_unbanded_Lprime.txt");
    check_golden("present " + banded + " L --k 3", "present_banded_L_k3.txt");
    check_golden("present " + unbanded + " Lprime --k 3", "present_unbanded_Lprime_k3.txt");

    // a second run is byte-identical
    RunResult a = run("invariant " + banded + " L");
    RunResult b = run("invariant " + banded + " L");
    CHECK(a.out == b.out);
}

TEST_CASE("compare verdicts and exit codes") {
    std::string banded = fixture("banded.link");
    std::string unbanded = fixture("unbanded.link");
    std::string borromean = fixture("borromean.link");

    RunResult distinct = run("compare " + banded + " L " + unbanded + " Lprime");
    CHECK(distinct.exit_code == 1);
    CHECK(distinct.out.find("DISTINCT in M") != std::string::npos);
    CHECK(distinct.out.find("witness functional value: 1 vs 0") != std::string::npos);

    RunResult equal = run("compare " + banded + " L " + banded + " L");
    CHECK(equal.exit_code == 0);
    CHECK(equal.out == "EQUAL in M\n");

    RunResult inc = run("compare " + banded + " L " + borromean + " borromean");
    CHECK(inc.exit_code == 4);
    CHECK(inc.out == "INCOMPARABLE (linking numbers differ)\n");
}

TEST_CASE("missing links and invalid input") {
    std::string banded = fixture("banded.link");
    CHECK(run("invariant " + banded + " nope").exit_code == 2);

    std::string bad = "tmp_broken.link";
    {
        std::ofstream out(bad);
        out << "link broken\ncomponents 3\nword 1 2\n";  // lk inconsistent
    }
    CHECK(run("invariant " + bad + " broken").exit_code == 3);
    std::remove(bad.c_str());

    std::string selfy = "tmp_selfy.link";
    {
        std::ofstream out(selfy);
        out << "link s\ncomponents 3\nword 1 1 1-\n";
    }
    CHECK(run("invariant " + selfy + " s").exit_code == 0);
    CHECK(run("invariant " + selfy + " s --strict").exit_code == 3);
    std::remove(selfy.c_str());
}

TEST_CASE("longitudes and presentations need a clasp presentation") {
    std::string borromean = fixture("borromean.link");
    CHECK(run("longitudes " + borromean + " borromean").exit_code == 3);
    CHECK(run("present " + borromean + " borromean").exit_code == 3);
}

TEST_CASE("realize feeds back into invariant") {
    std::string out = "tmp_realized.link";
    CHECK(run("realize -2 --out " + out).exit_code == 0);
    RunResult inv = run("invariant " + out + " L-2");
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("f = -2\n") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("quotient subcommand") {
    RunResult ones = run("quotient --n 4 --lk ones");
    CHECK(ones.exit_code == 0);
    CHECK(ones.out == "M = Z^1\n");

    RunResult zero = run("quotient --n 5 --lk zero");
    CHECK(zero.out == "M = Z^10\n");
}
