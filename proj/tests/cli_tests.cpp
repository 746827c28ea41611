// End-to-end checks of the command-line tool. Usage: cli_tests <path-to-binary>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

static int failures = 0;
#define CHECK(cond)                                                              \
    do {                                                                         \
        if (!(cond)) {                                                           \
            ++failures;                                                          \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                      << "\n";                                                   \
        }                                                                        \
    } while (0)

namespace {

std::string exe;
fs::path dir;

int run(const std::string& args) {
    const int status = std::system((exe + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string f(const char* name) { return (dir / name).string(); }

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <formation-binary>\n";
        return 1;
    }
    exe = argv[1];
    dir = fs::temp_directory_path() / "formation_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);

    // pipeline: gen -> plan -> schedule -> verify, all quiet on stderr checks
    CHECK(run("gen grid 7 6 --out " + f("inst.json") + " 2>/dev/null") == 0);
    CHECK(run("plan " + f("inst.json") + " --out " + f("paths.json") +
              " 2>/dev/null") == 0);
    CHECK(run("schedule " + f("inst.json") + " --out " + f("sched.json") +
              " 2>/dev/null") == 0);
    CHECK(run("verify " + f("sched.json") + " --instance " + f("inst.json") +
              " --out " + f("report.json") + " 2>/dev/null") == 0);
    CHECK(slurp(f("report.json")).find("\"violations\": []") != std::string::npos);

    // deterministic reruns are byte-identical
    CHECK(run("gen grid 7 6 --out " + f("inst2.json") + " 2>/dev/null") == 0);
    CHECK(slurp(f("inst.json")) == slurp(f("inst2.json")));
    CHECK(run("plan " + f("inst.json") + " --out " + f("paths2.json") +
              " 2>/dev/null") == 0);
    CHECK(slurp(f("paths.json")) == slurp(f("paths2.json")));

    // schedule accepts externally planned paths
    CHECK(run("schedule " + f("inst.json") + " --paths " + f("paths.json") +
              " --out " + f("sched2.json") + " 2>/dev/null") == 0);
    CHECK(slurp(f("sched.json")) == slurp(f("sched2.json")));

    // text table rendering names agents 1-based
    CHECK(run("schedule " + f("inst.json") + " --format table --out " +
              f("table.txt") + " 2>/dev/null") == 0);
    {
        const std::string table = slurp(f("table.txt"));
        CHECK(table.find("agent") != std::string::npos);
        CHECK(table.find("t=0") != std::string::npos);
        CHECK(table.find("(0,0)") != std::string::npos);
    }

    // simulate agrees with the centralized run on totals and seeds are echoed
    CHECK(run("simulate " + f("inst.json") + " --tie-break random --seed 9 --out " +
              f("trace.json") + " 2>" + f("sim.log")) == 0);
    CHECK(slurp(f("sim.log")).find("seed") != std::string::npos);
    CHECK(run("simulate " + f("inst.json") + " --tie-break random --seed 9 --out " +
              f("trace2.json") + " 2>/dev/null") == 0);
    CHECK(slurp(f("trace.json")) == slurp(f("trace2.json")));

    // oracle reports the matching cost and tiny-instance completion
    CHECK(run("gen star 2 1 1 --out " + f("star.json") + " 2>/dev/null") == 0);
    CHECK(run("oracle " + f("star.json") + " --out " + f("oracle.json") +
              " 2>/dev/null") == 0);
    {
        const std::string oracle = slurp(f("oracle.json"));
        CHECK(oracle.find("\"matching_cost\": 6") != std::string::npos);
        CHECK(oracle.find("\"min_completion\": 4") != std::string::npos);
    }

    // timed scheduling through the CLI verifies too
    CHECK(run("gen star 2 1 2 --out " + f("fat.json") + " 2>/dev/null") == 0);
    CHECK(run("schedule " + f("fat.json") + " --capacity-mode unit --out " +
              f("timed.json") + " 2>/dev/null") == 0);
    CHECK(run("verify " + f("timed.json") + " --instance " + f("fat.json") +
              " --out /dev/null 2>/dev/null") == 0);

    // svg frames land numbered next to the prefix
    CHECK(run("export-svg " + f("sched.json") + " --instance " + f("inst.json") +
              " --out " + f("frame") + " 2>/dev/null") == 0);
    CHECK(fs::exists(f("frame_000.svg")));
    CHECK(slurp(f("frame_000.svg")).rfind("<svg", 0) == 0);

    // a corrupted schedule trips verify with exit 1
    {
        std::string sched = slurp(f("sched.json"));
        const std::string needle = "\"occupancy\": [\n        0,";
        const auto pos = sched.find(needle);
        CHECK(pos != std::string::npos);
        if (pos != std::string::npos) {
            sched.replace(pos, needle.size(), "\"occupancy\": [\n        20,");
            spit(f("bad.json"), sched);
            CHECK(run("verify " + f("bad.json") + " --instance " + f("inst.json") +
                      " --out " + f("badreport.json") + " 2>/dev/null") == 1);
            CHECK(slurp(f("badreport.json")).find("wrong-start") != std::string::npos);
        }
    }

    // usage and format errors exit 2
    CHECK(run("plan " + f("missing.json") + " 2>/dev/null") == 2);
    CHECK(run("frobnicate 2>/dev/null") == 2);
    CHECK(run("gen grid 7 2>/dev/null") == 2);
    spit(f("junk.json"), "{ not json\n");
    CHECK(run("plan " + f("junk.json") + " 2>/dev/null") == 2);

    if (failures == 0) std::cout << "cli_tests: all checks passed\n";
    else std::cout << "cli_tests: " << failures << " check(s) failed\n";
    return failures == 0 ? 0 : 1;
}
