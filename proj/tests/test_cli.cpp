#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + VALLEYSPLIT_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch() {
    auto d = fs::temp_directory_path() / "valleysplit_cli_tests";
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("exit codes") {
    const auto dir = scratch();
    CHECK(run("oracles") == 0);
    CHECK(run("print-config --figure fig2") == 0);
    CHECK(run("") == 1);
    CHECK(run("sweep-width --bogus") == 1);
    CHECK(run("sweep-width --constants-mode guess") == 1);
    CHECK(run("figure fig9") == 1);
    CHECK(run("sweep-width --well-nm 6 -o /nonexistent_dir/out.csv") == 3);
    CHECK(run("sweep-width -c /nonexistent_dir/cfg.json") == 3);
    // elements this coarse cannot resolve the barrier decay; the oracles must say so
    CHECK(run("oracles --mesh-h 0.5") == 2);

    std::ofstream(dir / "bad.json") << R"({"subbands": 2, "typo": 1})";
    CHECK(run("sweep-width -c " + (dir / "bad.json").string()) == 1);
}

TEST_CASE("sweeps write identical CSV on repeated runs") {
    const auto dir = scratch();
    const auto a = dir / "a.csv";
    const auto b = dir / "b.csv";
    const std::string args = " --well-nm 6 --field 1e8 --subbands 2 -o ";
    REQUIRE(run("sweep-width" + args + a.string()) == 0);
    REQUIRE(run("sweep-width" + args + b.string()) == 0);
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.rfind("material,W_nm,F_V_per_m,n,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("figure writes CSV and gnuplot script") {
    const auto dir = scratch();
    const auto csv = dir / "fig1.csv";
    const auto gp = dir / "fig1.gp";
    fs::remove(csv);
    fs::remove(gp);
    REQUIRE(run("figure fig1 --mesh-h 0.1 -o " + csv.string()) == 0);
    CHECK(fs::exists(csv));
    REQUIRE(fs::exists(gp));
    CHECK(slurp(gp).find("fig1.csv") != std::string::npos);
}

TEST_CASE("print-config output loads back") {
    const auto dir = scratch();
    const auto cfg = dir / "printed.json";
    REQUIRE(run("print-config --figure fig3 -o " + cfg.string()) == 0);
    CHECK(slurp(cfg) == slurp(fs::path(VALLEYSPLIT_SOURCE_DIR) / "configs" / "fig3.json"));
    CHECK(run("sweep-field -c " + cfg.string() + " --field 1e8 -o " + (dir / "f.csv").string()) == 0);
}
