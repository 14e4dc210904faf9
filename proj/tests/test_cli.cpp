#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "bookram/graph.hpp"
#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI named by BOOKRAM_CLI with the given arguments.
RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("BOOKRAM_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "BOOKRAM_CLI must point at the built binary");
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos ||
           text.rfind(line) == text.size() - line.size();
}

}  // namespace

TEST_CASE("cli constants") {
    RunResult res = run_cli("constants --p 2");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "schema bookram.constants/1"));
    CHECK(has_line(res.output, "p 2"));
    CHECK(has_line(res.output, "upper 0.000125"));
    CHECK(res.output.find("c0 0.04340714") != std::string::npos);
}

TEST_CASE("cli books") {
    RunResult res = run_cli("books --graph Bw --r 2");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "bs 1"));
    CHECK(has_line(res.output, "base 0 1"));

    CHECK(run_cli("books --graph Bw --r 2 --q 1").exit_code == 0);
    CHECK(run_cli("books --graph Bw --r 2 --q 2").exit_code == 1);  // domain false
}

TEST_CASE("cli witness and ramsey") {
    RunResult w = run_cli("witness --p 2 --q 2 --r 2");
    CHECK(w.exit_code == 0);
    CHECK(has_line(w.output, "verified true"));
    CHECK(has_line(w.output, "complement_bs 1"));

    RunResult rm = run_cli("ramsey --p 2 --q 1 --r 2");
    CHECK(rm.exit_code == 0);
    CHECK(has_line(rm.output, "schema bookram.ramsey/1"));
    CHECK(has_line(rm.output, "value 6"));
    CHECK(has_line(rm.output, "formula 5"));
    CHECK(has_line(rm.output, "formula_match false"));
}

TEST_CASE("cli stability") {
    std::string g6 = bookram::serialize_graph6(
        bookram::Graph::complete_multipartite(std::vector<int>{3, 3}));
    RunResult res = run_cli("stability --graph " + g6 + " --p 2 --alpha 1e-5");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "hypothesis_met true"));
    CHECK(has_line(res.output, "p_chromatic true"));
}

TEST_CASE("cli regularity pair mode") {
    // half-split 4+4 vs 4+4 on 16 vertices
    bookram::GraphBuilder b(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            b.add_edge(i, 8 + j);
            b.add_edge(4 + i, 12 + j);
        }
    std::string g6 = bookram::serialize_graph6(std::move(b).build());
    RunResult res = run_cli("regularity --graph " + g6 +
                            " --a 0,1,2,3,4,5,6,7 --b 8,9,10,11,12,13,14,15 --eps 0.3");
    CHECK(res.exit_code == 1);  // irregular pair found
    CHECK(has_line(res.output, "regular false"));
    CHECK(res.output.find("witness_x") != std::string::npos);

    RunResult both = run_cli("regularity --graph " + g6 + " --eps 0.3");
    CHECK(both.exit_code == 2);  // neither pair nor partition arguments
}

TEST_CASE("cli regularity partition mode") {
    std::string g6 =
        bookram::serialize_graph6(bookram::Graph::complete_multipartite(std::vector<int>{4, 4, 4}));
    std::string part_path = "cli_partition_demo.txt";
    {
        std::ofstream out(part_path);
        out << "n 12\nexceptional\npart 0 1 2 3\npart 4 5 6 7\npart 8 9 10 11\n";
    }
    RunResult res = run_cli("regularity --graph " + g6 + " --partition " + part_path +
                            " --p 2 --r 2 --xi 0.5 --cpr 0.166");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "schema bookram.regularity.partition/1"));
    CHECK(has_line(res.output, "e_hi 3"));
    CHECK(has_line(res.output, "e_irr 0"));
    std::remove(part_path.c_str());
}

TEST_CASE("cli lower-bound seeded determinism") {
    std::string cmd = "lower-bound --m 20 --k 1 --r 2 --trials 20 --seed 7";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(has_line(a.output, "N 18"));
    CHECK(has_line(a.output, "witnesses 20"));
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("books --graph not_actually_graph6 --r 2").exit_code == 2);
    CHECK(run_cli("ramsey --p 2 --q 2").exit_code == 2);
    CHECK(run_cli("constants --p 1").exit_code == 2);
}
