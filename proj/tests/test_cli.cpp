#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(MACD_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, p)) out += buf;
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("compute") {
    auto r = run("compute --partition 1,1 --nvars 2 --q 1/2 --t 1/3 --method gram");
    CHECK(r.code == 0);
    // Q_(1,1) = (t;t)_2/(q;t)_2 e_2
    CHECK(r.out == "64/45*x1*x2\n");
    CHECK(run("compute --partition \"\" --nvars 2").out == "1\n");
    auto x = run("compute --partition 2,1 --nvars 3 --cross-check");
    CHECK(x.code == 0);
    CHECK(x.out.find("all methods agree") != std::string::npos);
    CHECK(run("compute --partition 2,1 --q 1 --t 1/3").code == 2);
    CHECK(run("compute --partition 1,2").code != 0);
}

TEST_CASE("verify") {
    CHECK(run("verify --identity cn87n-conjecture --n 2 --m 2,1 --draws 10 --seed 42").code == 0);
    CHECK(run("verify --identity an65 --n 1 --M 3").code == 0);
    CHECK(run("verify --identity matinv-orthogonality-A --n 2 --window 3").code == 0);
    CHECK(run("verify --identity nonesuch").code == 64);
}

TEST_CASE("reports are versioned and reproducible") {
    std::string a = "cli_report_a.json", b = "cli_report_b.json";
    CHECK(run("verify --identity an87n --n 2 --M 2 --draws 3 --seed 5 --json " + a).code == 0);
    CHECK(run("verify --identity an87n --n 2 --M 2 --draws 3 --seed 5 --json " + b).code == 0);
    auto ja = read_json(a), jb = read_json(b);
    CHECK(ja["schema"] == 1);
    CHECK(ja["status"] == "PASS");
    CHECK(ja["draws"].size() == 3);
    CHECK(ja.contains("wall_time_s"));
    ja.erase("wall_time_s");
    jb.erase("wall_time_s");
    CHECK(ja == jb);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("suites and seeds") {
    CHECK(run("suite nonesuch").code == 64);
    CHECK(run("suite section5 --seed 1").code == 0);
    auto l = run("list-identities");
    CHECK(l.code == 0);
    CHECK(l.out.find("cn87n-conjecture") != std::string::npos);
    CHECK(run("").code == 64);
}

TEST_CASE("MACD_SEED sets the default seed") {
    std::string a = "cli_seed_a.json", b = "cli_seed_b.json";
    run("verify --identity an65 --n 2 --M 2 --draws 2 --seed 17 --json " + a);
    std::string cmd = "MACD_SEED=17 " + std::string(MACD_CLI_PATH) + " verify --identity an65 --n 2 --M 2 --draws 2 --json " +
                      b + " > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    auto ja = read_json(a), jb = read_json(b);
    CHECK(jb["seed"] == 17);
    CHECK(ja["draws"] == jb["draws"]);
    std::remove(a.c_str());
    std::remove(b.c_str());
}
