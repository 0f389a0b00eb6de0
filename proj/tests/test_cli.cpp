#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

std::string bin_path() {
#ifdef KGCORE_BIN_PATH
    return KGCORE_BIN_PATH;
#else
    const char* env = std::getenv("KGCORE_BIN");
    REQUIRE(env != nullptr);
    return env;
#endif
}

struct RunResult {
    int code = -1;
    std::string out;
};

// stderr is discarded unless the command redirects it itself
RunResult run(const std::string& args) {
    std::string cmd = "'" + bin_path() + "' " + args;
    if (args.find("2>") == std::string::npos) cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("kgcore_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string write_toy(const Scratch& scratch) {
    std::string path = scratch.path("toy.hg");
    std::ofstream(path) << kgtest::toy_text();
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string build_toy_index(const Scratch& scratch, const std::string& variant) {
    std::string idx = scratch.path("toy-" + variant + ".kgidx");
    RunResult r = run("build --input '" + write_toy(scratch) + "' --output '" + idx +
                      "' --variant " + variant);
    REQUIRE(r.code == 0);
    return idx;
}

}  // namespace

TEST_CASE("help exits cleanly, a bare invocation does not") {
    CHECK(run("--help").code == 0);
    CHECK(run("build --help").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("build prints a stats line and writes a loadable index") {
    Scratch scratch;
    std::string idx = scratch.path("toy.kgidx");
    RunResult r = run("build --input '" + write_toy(scratch) + "' --output '" + idx + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("variant=lse-hvd") != std::string::npos);
    CHECK(r.out.find("nodes=6") != std::string::npos);
    CHECK(r.out.find("g_star=3") != std::string::npos);
    CHECK(r.out.find("entries=9") != std::string::npos);
    CHECK(fs::exists(idx));

    RunResult q = run("query --index '" + idx + "' -k 3 -g 1");
    CHECK(q.code == 0);
    CHECK(q.out == "1\n2\n3\n4\n");

    RunResult empty = run("query --index '" + idx + "' -k 9 -g 9");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("query --output writes the members to a file") {
    Scratch scratch;
    std::string idx = build_toy_index(scratch, "lse-h");
    std::string out = scratch.path("core.txt");
    RunResult r = run("query --index '" + idx + "' -k 1 -g 3 --output '" + out + "'");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out) == "1\n2\n4\n5\n");
}

TEST_CASE("size-query prints k g size rows") {
    Scratch scratch;
    std::string idx = build_toy_index(scratch, "naive");
    RunResult r = run("size-query --index '" + idx + "' --lb 4 --ub 4");
    CHECK(r.code == 0);
    CHECK(r.out == "3 1 4\n1 3 4\n");

    RunResult none = run("size-query --index '" + idx + "' --lb 7 --ub 10");
    CHECK(none.code == 0);
    CHECK(none.out.empty());

    CHECK(run("size-query --index '" + idx + "' --lb 5 --ub 4").code == 2);
}

TEST_CASE("peel answers without an index") {
    Scratch scratch;
    std::string toy = write_toy(scratch);
    RunResult r = run("peel --input '" + toy + "' -k 1 -g 3");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n4\n5\n");
    CHECK(run("peel --input '" + toy + "' -k 0 -g 1").code == 2);
}

TEST_CASE("stats reports storage and optional jaccard lines") {
    Scratch scratch;
    std::string idx = build_toy_index(scratch, "lse-hv");
    RunResult r = run("stats --index '" + idx + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("variant=lse-hv") != std::string::npos);
    CHECK(r.out.find("entries=14") != std::string::npos);
    CHECK(r.out.find("jaccard") == std::string::npos);

    RunResult j = run("stats --index '" + idx + "' --jaccard");
    CHECK(j.code == 0);
    CHECK(j.out.find("jaccard 2 2 1") != std::string::npos);
    CHECK(j.out.find("jaccard_mean=0.777778 cells=3") != std::string::npos);
}

TEST_CASE("bench emits json on stdout and to a file") {
    Scratch scratch;
    std::string toy = write_toy(scratch);
    std::string json_path = scratch.path("bench.json");
    RunResult r = run("bench --input '" + toy + "' --variants naive,lse-hvd --skip-peeling --json '" +
                      json_path + "'");
    CHECK(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["dataset"]["nodes"] == 6);
    CHECK(doc["variants"].size() == 2);
    CHECK(doc["peeling"]["ran"] == false);
    CHECK(nlohmann::json::parse(slurp(json_path)) == doc);

    CHECK(run("bench --input '" + toy + "' --variants bogus").code == 2);
}

TEST_CASE("gen is deterministic and validates its arguments") {
    Scratch scratch;
    std::string a = scratch.path("a.hg");
    std::string b = scratch.path("b.hg");
    std::string base = "gen --nodes 20 --edges 50 --cmin 2 --cmax 4 --seed 5 --output ";
    CHECK(run(base + "'" + a + "'").code == 0);
    CHECK(run(base + "'" + b + "'").code == 0);
    std::string bytes = slurp(a);
    CHECK(bytes == slurp(b));
    CHECK(!bytes.empty());

    RunResult stdout_run = run("gen --nodes 20 --edges 50 --cmin 2 --cmax 4 --seed 5");
    CHECK(stdout_run.code == 0);
    CHECK(stdout_run.out == bytes);

    CHECK(run("gen --nodes 20 --edges 50").code == 2);
    CHECK(run("gen --nodes 3 --edges 5 --cmax 4 --seed 1").code == 2);
}

TEST_CASE("io failures exit with 1 and parse failures with 2") {
    Scratch scratch;
    CHECK(run("build --input '" + scratch.path("missing.hg") + "' --output '" +
              scratch.path("x.kgidx") + "' 2>&1")
              .code == 1);
    CHECK(run("query --index '" + scratch.path("missing.kgidx") + "' -k 1 -g 1 2>&1").code == 1);
    CHECK(run("build --input '" + write_toy(scratch) + "' --output '" + scratch.path("x.kgidx") +
              "' --variant bogus 2>&1")
              .code == 2);

    std::string bad = scratch.path("bad.kgidx");
    std::ofstream(bad) << "KGIDX 99 naive 0 0 0\n";
    RunResult r = run("query --index '" + bad + "' -k 1 -g 1 2>&1");
    CHECK(r.code == 1);
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(r.out.find("version") != std::string::npos);
}

TEST_CASE("KGCORE_LOG enables progress messages on stderr") {
    Scratch scratch;
    std::string toy = write_toy(scratch);
    std::string idx = scratch.path("toy.kgidx");
    std::string cmd = "KGCORE_LOG=1 '" + bin_path() + "' build --input '" + toy +
                      "' --output '" + idx + "' 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("kgcore: parsed") != std::string::npos);

    RunResult quiet = run("peel --input '" + toy + "' -k 1 -g 1 2>&1");
    CHECK(quiet.out.find("kgcore:") == std::string::npos);
}
