#include "helpers.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int         exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MINMOD_BIN) + " " + args + " 2>/dev/null";
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
    return std::string(MINMOD_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("find: hef_ex is minimized to {h,j}") {
    RunResult r = run("find " + data("hef_example.cnft") + " --operator hef");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\":\"minimal\"") != std::string::npos);
    CHECK(r.out.find("\"model\":[\"h\",\"j\"]") != std::string::npos);
    CHECK(r.out.find("\"operator\":\"hef\"") != std::string::npos);
}

TEST_CASE("find: failure on theory P, fallback rescues it") {
    RunResult failed = run("find " + data("nonhef_p.cnft") + " --operator hef");
    CHECK(failed.exit_code == 2);
    CHECK(failed.out.find("\"status\":\"failure\"") != std::string::npos);
    CHECK(failed.out.find("\"model\":[\"a\",\"b\",\"c\"]") != std::string::npos);

    RunResult saved = run("find " + data("nonhef_p.cnft") + " --operator hef --fallback exp");
    CHECK(saved.exit_code == 0);
    CHECK(saved.out.find("\"status\":\"minimal\"") != std::string::npos);
    CHECK(saved.out.find("\"model\":[\"a\",\"b\",\"c\"]") != std::string::npos);
}

TEST_CASE("find: constraints are redirected to positive-form") {
    RunResult r = run("find " + data("posform_example.cnft"));
    CHECK(r.exit_code == 1);
}

TEST_CASE("check exit codes follow the verdict") {
    fs::path tmp = fs::temp_directory_path() / "minmod_cli_test";
    fs::create_directories(tmp);

    auto write = [&](const char* name, const char* text) {
        std::FILE* f = std::fopen((tmp / name).string().c_str(), "w");
        std::fputs(text, f);
        std::fclose(f);
        return (tmp / name).string();
    };

    std::string all   = write("all.txt", "a b c d e f g h i j\n");
    std::string hj    = write("hj.txt", "h j\n");
    std::string justh = write("h.txt", "h\n");
    std::string ad    = write("ad.txt", "a d\n");

    CHECK(run("check " + data("stable_example_reduct.cnft") + " " + ad).exit_code == 0);

    RunResult not_min = run("check " + data("hef_example.cnft") + " " + all);
    CHECK(not_min.exit_code == 3);
    CHECK(not_min.out.find("\"witness\":[\"h\",\"j\"]") != std::string::npos);

    CHECK(run("check " + data("hef_example.cnft") + " " + hj).exit_code == 0);
    CHECK(run("check " + data("hef_example.cnft") + " " + justh).exit_code == 4);

    // minimize always reports the witness-or-model
    RunResult minimized = run("minimize " + data("hef_example.cnft") + " " + hj);
    CHECK(minimized.exit_code == 0);
    CHECK(minimized.out.find("\"witness\":[\"h\",\"j\"]") != std::string::npos);
}

TEST_CASE("stable: bundled program with {a,d}") {
    RunResult r = run("stable " + data("stable_example.lp") + " " + data("stable_example_model.txt") +
                      " --emit-reduct");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\":\"minimal\"") != std::string::npos);
    CHECK(r.out.find("\"reduct\":") != std::string::npos);
    CHECK(r.out.find("a | b <-.") != std::string::npos);
}

TEST_CASE("stable: non-stable candidates exit with 3 and carry a witness") {
    fs::path tmp = fs::temp_directory_path() / "minmod_stable_test";
    fs::create_directories(tmp);
    auto write = [&](const char* name, const char* text) {
        std::FILE* f = std::fopen((tmp / name).string().c_str(), "w");
        std::fputs(text, f);
        std::fclose(f);
        return (tmp / name).string();
    };
    std::string prog = write("p.lp", "b <- not a.\na.\n");
    std::string ab   = write("ab.txt", "a b\n");

    RunResult r = run("stable " + prog + " " + ab + " --operator exp");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("\"witness\":[\"a\"]") != std::string::npos);
}

TEST_CASE("positive-form: the constraint example solves to {c,d}") {
    RunResult r = run("positive-form " + data("posform_example.cnft") + " --operator hef");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\":\"minimal\"") != std::string::npos);
    CHECK(r.out.find("\"model\":[\"c\",\"d\"]") != std::string::npos);
}

TEST_CASE("gen is byte-deterministic; bench emits the fixed CSV header") {
    fs::path dir1 = fs::temp_directory_path() / "minmod_gen_a";
    fs::path dir2 = fs::temp_directory_path() / "minmod_gen_b";
    fs::remove_all(dir1);
    fs::remove_all(dir2);

    std::string flags = " --count 5 --atoms 5 --clauses 6 --seed 7 --certify";
    CHECK(run("gen --out " + dir1.string() + flags).exit_code == 0);
    CHECK(run("gen --out " + dir2.string() + flags).exit_code == 0);

    int files = 0;
    for (const auto& entry : fs::directory_iterator(dir1)) {
        ++files;
        std::string a = testutil::read_file(entry.path().string());
        std::string b = testutil::read_file((dir2 / entry.path().filename()).string());
        CHECK(a == b);
        CHECK(a.find("# hef=") != std::string::npos);
    }
    CHECK(files == 5);

    RunResult bench = run("bench " + dir1.string() + " --operator hef");
    CHECK(bench.exit_code == 0);
    CHECK(bench.out.rfind("file,atoms,clauses,operator,status,iterations,micros\n", 0) == 0);
    CHECK(bench.out.find("summary,") != std::string::npos);

    fs::path empty_dir = fs::temp_directory_path() / "minmod_gen_empty";
    fs::create_directories(empty_dir);
    RunResult empty = run("bench " + empty_dir.string());
    CHECK(empty.out.rfind("file,atoms,clauses,operator,status,iterations,micros\n", 0) == 0);
}

TEST_CASE("gen --certify marks Horn-only corpora hef=true") {
    fs::path dir = fs::temp_directory_path() / "minmod_gen_horn";
    fs::remove_all(dir);
    CHECK(run("gen --out " + dir.string() +
              " --count 4 --atoms 6 --clauses 7 --max-head 1 --seed 11 --certify")
              .exit_code == 0);
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string text = testutil::read_file(entry.path().string());
        CHECK(text.find("# hcf=true") != std::string::npos);
        CHECK(text.find("# hef=true") != std::string::npos);
    }
}

TEST_CASE("bench row for the bundled HEF example") {
    fs::path dir = fs::temp_directory_path() / "minmod_bench_one";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::copy_file(data("hef_example.cnft"), dir / "hef_example.cnft");

    RunResult r = run("bench " + dir.string() + " --operator hef");
    CHECK(r.out.find("hef_example.cnft,10,17,hef,minimal,2,") != std::string::npos);
    CHECK(r.out.find("success=1/1") != std::string::npos);
}

TEST_CASE("graph --emit-dot") {
    RunResult r = run("graph " + data("hef_example.cnft") + " --emit-dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("a -> d;") != std::string::npos);
}

TEST_CASE("parse errors exit with 1") {
    fs::path bad = fs::temp_directory_path() / "minmod_bad.cnft";
    std::FILE* f = std::fopen(bad.string().c_str(), "w");
    std::fputs("a <- b\n", f);
    std::fclose(f);
    CHECK(run("find " + bad.string()).exit_code == 1);
}
