// End-to-end checks of the command-line tool: exit statuses, output
// round-trips, atomicity, determinism across worker counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string cli = INVAR_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("invar_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    const std::string command = cli + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("hilbert-basis emits the canonical JSON document") {
    TempDir tmp;
    const fs::path out = tmp.path / "basis.json";
    REQUIRE(run("hilbert-basis --weights 1,2 --modulus 3 --out " + out.string()) == 0);

    const std::string text = slurp(out);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["weights"] == nlohmann::json::parse("[1,2]"));
    CHECK(j["modulus"] == 3);
    CHECK(j["complete_to_degree"] == 3);
    CHECK(j["elements"].size() == 3);

    // re-serializing an emitted basis reproduces it exactly
    CHECK(nlohmann::ordered_json::parse(text).dump(2) + "\n" == text);
}

TEST_CASE("four-element free basis and empty no-mixed-signs basis") {
    TempDir tmp;
    const fs::path out = tmp.path / "basis.json";
    REQUIRE(run("hilbert-basis --weights 1,2,3,-3 --modulus 0 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["elements"].size() == 4);

    REQUIRE(run("hilbert-basis --weights 1 --modulus 0 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["elements"].empty());
}

TEST_CASE("worker count never changes the bytes") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.json", b = tmp.path / "b.json",
                   c = tmp.path / "c.json";
    const std::string base = "hilbert-basis --weights 1,2,3,4,5,6,7,8,9,10,11 "
                             "--modulus 12 --out ";
    REQUIRE(run(base + a.string() + " --workers 1") == 0);
    REQUIRE(run(base + b.string() + " --workers 8") == 0);
    REQUIRE(run(base + c.string() + " --workers 1") == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
}

TEST_CASE("exit statuses") {
    CHECK(run("hilbert-basis --modulus 3") == 2);          // missing --weights
    CHECK(run("hilbert-basis --weights 1,x --modulus 3") == 2);
    CHECK(run("hilbert-basis --weights 1,2 --modulus -2") == 2);
    CHECK(run("hilbert-basis --weights 1,2 --modulus 3 --cap 0") == 2);
    CHECK(run("binary-forms --n 0") == 2);
    CHECK(run("verify no-such-suite") == 2);
    CHECK(run("hilbert-basis --weights 1,2 --modulus 3 --workers 0") == 2);
    CHECK(run("hilbert-basis --weights 1,2 --modulus 3 --budget 10") == 2);

    // window too large for the weights: budget-style failure
    CHECK(run("hilbert-basis --weights 1000000,-1000000 --modulus 0") == 3);
    // enumeration budget exhausted inside the oracle suite
    CHECK(run("verify oracle --budget 10000") == 3);
}

TEST_CASE("consistency failures exit with status 4") {
    TempDir tmp;
    // fundamental_weights that are not the true fundamental weights produce
    // a non-integral Weyl product
    const fs::path bad = tmp.path / "bad.json";
    std::ofstream(bad) << R"({"rank":1,"positive_roots":[[1]],"gram":[[1]],
                              "fundamental_weights":[["1/3"]]})";
    CHECK(run("weyl --file " + bad.string() + " --lambda 1 --n 1") == 4);
}

TEST_CASE("failed runs leave no partial output") {
    TempDir tmp;
    const fs::path out = tmp.path / "never.json";
    CHECK(run("hilbert-basis --weights 1000000,-1000000 --modulus 0 --out " +
              out.string()) == 3);
    CHECK_FALSE(fs::exists(out));
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path))
        ++entries;
    CHECK(entries == 0); // no stray temporaries either
}

TEST_CASE("environment overrides with flag precedence") {
    TempDir tmp;
    const std::string out = (tmp.path / "o.json").string();
    ::setenv("INVAR_BUDGET", "10000", 1);
    CHECK(run("verify oracle --max-n 12") == 3);
    CHECK(run("verify oracle --max-n 12 --budget 1000000000 --out " + out) == 0);
    ::unsetenv("INVAR_BUDGET");

    const fs::path a = tmp.path / "env_a.json", b = tmp.path / "env_b.json";
    ::setenv("INVAR_WORKERS", "4", 1);
    REQUIRE(run("hilbert-basis --weights 1,2,3,4,5,6 --modulus 7 --out " + a.string()) == 0);
    ::unsetenv("INVAR_WORKERS");
    REQUIRE(run("hilbert-basis --weights 1,2,3,4,5,6 --modulus 7 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    ::setenv("INVAR_WORKERS", "0", 1);
    CHECK(run("hilbert-basis --weights 1,2 --modulus 3") == 2);
    ::unsetenv("INVAR_WORKERS");
}

TEST_CASE("weyl evaluations") {
    TempDir tmp;
    const fs::path out = tmp.path / "w.json";
    REQUIRE(run("weyl --preset A1 --lambda 1 --n 7 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["dim"] == "8");

    REQUIRE(run("weyl --preset A1 --lambda 1 --n 0 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["dim"] == "1");

    REQUIRE(run("weyl --preset A2 --lambda 1,1 --poly --out " + out.string()) == 0);
    const auto poly = nlohmann::json::parse(slurp(out));
    CHECK(poly["degree"] == 3);
    CHECK(poly["coefficients"] == nlohmann::json::parse(R"(["1","3","3","1"])"));

    CHECK(run("weyl --preset A1 --lambda 1 --n 2 --poly") == 2); // both modes
    CHECK(run("weyl --lambda 1 --n 2") == 2);                    // no system
}

TEST_CASE("sl2 emits both tables and the a_2 row") {
    TempDir tmp;
    const fs::path out = tmp.path / "sl2.csv";
    REQUIRE(run("sl2 --n-max 6 --d-max 6 --format csv --out " + out.string()) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("2,1,0,1,0,1,0,1\n") != std::string::npos); // a_2 row, d = 0..6
    CHECK(csv.find("lower_bounds") != std::string::npos);
}

TEST_CASE("growth writes plot data") {
    TempDir tmp;
    const fs::path plot = tmp.path / "plot.dat";
    const fs::path out = tmp.path / "g.json";
    REQUIRE(run("growth --d 6 --n-max 40 --plot-data " + plot.string() + " --out " +
                out.string()) == 0);
    CHECK(fs::exists(plot));
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["d"] == 6);
    CHECK(j["samples"].size() == 39);
}

TEST_CASE("verify reports are deterministic") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.txt", b = tmp.path / "b.txt";
    REQUIRE(run("verify transport --out " + a.string() + " --workers 1") == 0);
    REQUIRE(run("verify transport --out " + b.string() + " --workers 8") == 0);
    CHECK(slurp(a) == slurp(b));
}
