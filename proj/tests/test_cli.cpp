#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "fractiso/io.hpp"
#include "fractiso/signature.hpp"

using namespace fractiso;
using namespace fractiso::testing;

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int exit_code;
    std::string out;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "fractiso_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

CliRun run_cli(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const std::string cmd = std::string(FRACTISO_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return CliRun{WEXITSTATUS(status), slurp(out)};
}

fs::path kernel_file(const std::string& name, const StepKernel& w) {
    const fs::path p = work_dir() / name;
    spit(p, kernel_to_json(w));
    return p;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("convert writes the graphon of an edge list") {
    const fs::path edges = work_dir() / "k2.edges";
    spit(edges, "n 2\n0 1\n");
    const CliRun r = run_cli("convert " + edges.string());
    CHECK(r.exit_code == 0);
    CHECK(parse_kernel_json(r.out) == graph_to_graphon(FiniteGraph(2, {{0, 1}})));

    const fs::path c6 = work_dir() / "c6.edges";
    spit(c6, "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    CHECK(parse_kernel_json(run_cli("convert " + c6.string()).out) == graph_to_graphon(cycle_graph(6)));

    const fs::path loop = work_dir() / "loop.edges";
    spit(loop, "n 2\n0 0\n");
    CHECK(run_cli("convert " + loop.string()).exit_code == 2);
}

TEST_CASE("fiso exit codes and cross-oracle agreement") {
    const fs::path c6 = kernel_file("c6.json", graph_to_graphon(cycle_graph(6)));
    const fs::path tt = kernel_file("tt.json", graph_to_graphon(two_triangles()));
    const fs::path c5 = kernel_file("c5.json", graph_to_graphon(cycle_graph(5)));

    const CliRun pos = run_cli("fiso " + c6.string() + " " + tt.string());
    CHECK(pos.exit_code == 0);
    CHECK(pos.out.find("\"verdict\": true") != std::string::npos);
    CHECK(pos.out.find("\"tree\": null") != std::string::npos);

    const CliRun neg = run_cli("fiso " + c6.string() + " " + c5.string());
    CHECK(neg.exit_code == 1);
    CHECK(neg.out.find("\"tree\": \"(())\"") != std::string::npos);
    CHECK(neg.out.find("\"distinguishing_level\": 1") != std::string::npos);

    const fs::path bad = work_dir() / "bad.json";
    spit(bad, R"({"masses": ["1/2","1/3"], "matrix": [["0","0"],["0","0"]], "symmetric": true})");
    CHECK(run_cli("fiso " + c6.string() + " " + bad.string()).exit_code == 2);

    // two runs produce identical bytes
    CHECK(run_cli("fiso " + c6.string() + " " + tt.string()).out == pos.out);
    // and the parallel path matches the sequential one
    CHECK(run_cli("fiso --parallel " + c6.string() + " " + tt.string()).out == pos.out);
    // skipping oracles still yields the DIDM verdict
    const CliRun skipped = run_cli("fiso --skip quotient,intertwiner,witness " + c6.string() + " " + c5.string());
    CHECK(skipped.exit_code == 1);
}

TEST_CASE("fiso exit code tracks didm_equal on sampled corpus pairs") {
    const auto& corpus = acceptance_corpus();
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 8; ++trial) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const auto& a = corpus[(state >> 30) % corpus.size()];
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const auto& b = corpus[(state >> 30) % corpus.size()];
        const fs::path fa = kernel_file("pair_a.json", a.kernel);
        const fs::path fb = kernel_file("pair_b.json", b.kernel);
        const CliRun r = run_cli("fiso --skip witness " + fa.string() + " " + fb.string());
        CHECK(r.exit_code == (didm_equal(a.kernel, b.kernel).equal ? 0 : 1));
    }
}

TEST_CASE("refine and quotient emit deterministic reports") {
    const fs::path star = kernel_file("star.json", graph_to_graphon(star_graph(3)));
    const CliRun trace = run_cli("refine " + star.string());
    CHECK(trace.exit_code == 0);
    CHECK(trace.out.find("\"stabilized_at\": 1") != std::string::npos);

    const CliRun quotient = run_cli("quotient " + star.string());
    CHECK(quotient.exit_code == 0);
    CHECK(quotient.out.find("\"masses\": [\n    \"3/4\",\n    \"1/4\"\n  ]") != std::string::npos);
    CHECK(quotient.out == run_cli("quotient " + star.string()).out);
}

TEST_CASE("treedensity prints exact scalars") {
    const fs::path half = kernel_file("half.json", constant_kernel(Ratio(1, 2)));
    const CliRun single = run_cli("treedensity " + half.string() + " --tree \"(())\"");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "1/2\n");

    // P3 is centroid-rooted at its middle vertex
    const CliRun all = run_cli("treedensity " + half.string() + " --all-up-to 3");
    CHECK(all.out == "() 1/1\n(()) 1/2\n(()()) 1/4\n");
}

TEST_CASE("blowup is byte-deterministic for a fixed seed") {
    const fs::path base = kernel_file("base.json", k13_quotient());
    const std::string args = "blowup --base " + base.string() + " --splits 2,3 --seed 12345";
    const CliRun first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(run_cli(args).out == first.out);
    const StepKernel w = parse_kernel_json(first.out);
    CHECK(w.class_count() == 5);
    CHECK(didm_equal(quotient_kernel(w, refinement_fixpoint(w).fixpoint()).quotient, k13_quotient()).equal);
}

} // TEST_SUITE
