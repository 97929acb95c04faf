#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(VXK_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe))
        r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("density --bogus-flag 3").exit_code == 1);
    CHECK(run_cli("density --edges 0 --alpha 1").exit_code == 1);
    CHECK(run_cli("density --edges 2 --alpha -1").exit_code == 1);
    CHECK(run_cli("staircase --edges 2 --alpha 0 --omega nonsense")
              .exit_code == 1);
    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("density") != std::string::npos);
    CHECK(help.output.find("energy-density") != std::string::npos);
}

TEST_CASE("energy-density sweep writes the documented CSV") {
    TempFile out("cli_t00.csv");
    const auto r = run_cli(
        "energy-density --edges 3 --alpha 1 --x 0.1:5:100 --format csv "
        "--out " + out.path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 101);  // header + 100 rows
    CHECK(lines[0] == "x,T00_closed,T00_numeric");
    // rows are comma-separated triples in grid order, LF endings, no
    // trailing comma
    CHECK(lines[1].substr(0, 20) == "0.10000000000000001,");
    CHECK(lines.back().substr(0, 2) == "5,");
    for (size_t i = 1; i < lines.size(); ++i) {
        CHECK(lines[i].back() != ',');
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 2);
    }
    // the two routes agree along the sweep
    for (size_t i = 1; i < lines.size(); i += 17) {
        std::istringstream is(lines[i]);
        std::string x, closed, numeric;
        std::getline(is, x, ',');
        std::getline(is, closed, ',');
        std::getline(is, numeric, ',');
        CHECK(std::abs(std::stod(closed) - std::stod(numeric)) <=
              std::max(1e-5 * std::abs(std::stod(closed)), 1e-8));
    }
}

TEST_CASE("vacuous staircase sweep is identically zero") {
    TempFile out("cli_stair.csv");
    const auto r = run_cli(
        "staircase --edges 2 --alpha 0 --omega 0:10:50 --out " + out.path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 51);
    CHECK(lines[0] == "omega,delta_N");
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        CHECK(lines[i].substr(comma + 1) == "0");
    }
}

TEST_CASE("json output parses and matches the documented shape") {
    TempFile out("cli_density.json");
    const auto r = run_cli(
        "density --edges 1 --alpha 2 --omega 0.5:2:4 --x 0:1:3 "
        "--format json --out " + out.path);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(out.path));
    REQUIRE(doc.contains("columns"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["columns"] ==
          nlohmann::json::array({"omega", "x", "rho"}));
    CHECK(doc["rows"].size() == 12);
    for (const auto& row : doc["rows"]) {
        REQUIRE(row.size() == 3);
        CHECK(row[2].is_number());
    }
}

TEST_CASE("global density reports the delta weight as metadata") {
    TempFile csv("cli_global.csv");
    auto r = run_cli(
        "density --global --edges 1 --alpha 2 --omega 0:4:9 --out " +
        csv.path);
    REQUIRE(r.exit_code == 0);
    const auto text = slurp(csv.path);
    CHECK(text.find("# delta_weight_at_zero = -0.25\n") == 0);
    CHECK(text.find("omega,rho_regular\n") != std::string::npos);

    TempFile js("cli_global.json");
    r = run_cli(
        "density --global --edges 1 --alpha 2 --omega 0:4:9 --format json "
        "--out " + js.path);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(js.path));
    REQUIRE(doc.contains("metadata"));
    CHECK(doc["metadata"]["delta_weight_at_zero"] == -0.25);
}

TEST_CASE("identical invocations produce byte-identical files") {
    TempFile a("cli_det_a.csv");
    TempFile b("cli_det_b.csv");
    const std::string args =
        "kernel --kind cylinder --edges 3 --alpha 1.5 --t 0.5 "
        "--x 0:2:7 --y 0:2:7 --j 1 --l 2";
    REQUIRE(run_cli(args + " --out " + a.path).exit_code == 0);
    REQUIRE(run_cli(args + " --out " + b.path).exit_code == 0);
    const std::string text = slurp(a.path);
    CHECK(!text.empty());
    CHECK(text == slurp(b.path));
}

TEST_CASE("wave-evolve tabulates all edges") {
    TempFile out("cli_wave.csv");
    const auto r = run_cli(
        "wave-evolve --edges 2 --alpha 1 --t 2 --x 0:4:9 --bump 1:2:1 "
        "--out " + out.path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(slurp(out.path));
    CHECK(lines[0] == "edge,x,u");
    CHECK(lines.size() == 1 + 2 * 9);
}

TEST_CASE("quantum kernel sweep carries re/im columns") {
    TempFile out("cli_quantum.csv");
    const auto r = run_cli(
        "kernel --kind quantum --edges 2 --alpha 1 --t 0.5 --x 0.3 "
        "--y 0:1:4 --out " + out.path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(slurp(out.path));
    CHECK(lines[0] == "t,x,y,G_re,G_im");
    CHECK(lines.size() == 5);
}

TEST_CASE("unwritable output path fails without crashing") {
    const auto r = run_cli(
        "staircase --edges 1 --alpha 1 --omega 0:1:5 "
        "--out /nonexistent-dir/x.csv");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify --quick passes on a correct build") {
    const auto r = run_cli("verify --quick");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    // one line per suite check
    size_t passes = 0;
    for (size_t pos = 0; (pos = r.output.find("PASS", pos)) !=
                         std::string::npos;
         ++pos)
        ++passes;
    CHECK(passes == 10);
}

TEST_CASE("threaded sweeps match single-threaded output") {
    TempFile a("cli_thr_a.csv");
    TempFile b("cli_thr_b.csv");
    const std::string args =
        "density --edges 3 --alpha 0.5 --omega 0.1:4:40 --x 0:3:11";
    {
        const std::string cmd = "VERTEXKERNELS_THREADS=1 " +
                                std::string(VXK_CLI_PATH) + " " + args +
                                " --out " + a.path;
        REQUIRE(std::system(cmd.c_str()) == 0);
    }
    {
        const std::string cmd = "VERTEXKERNELS_THREADS=7 " +
                                std::string(VXK_CLI_PATH) + " " + args +
                                " --out " + b.path;
        REQUIRE(std::system(cmd.c_str()) == 0);
    }
    CHECK(slurp(a.path) == slurp(b.path));
}
