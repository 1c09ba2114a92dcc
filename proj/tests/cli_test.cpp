// Drives the installed binary end to end through temp files.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nllmp/io.hpp"
#include "nllmp/oracle.hpp"

namespace nllmp {
namespace {

namespace fs = std::filesystem;

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout followed by stderr
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("nllmp_cli_test_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }

    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    CommandResult run(const std::string& args) const {
        const std::string out = path("stdout.txt");
        const std::string err = path("stderr.txt");
        const std::string command =
            std::string(NLLMP_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
        const int raw = std::system(command.c_str());
        CommandResult result;
        result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        result.output = slurp(out) + slurp(err);
        return result;
    }

    static std::string slurp(const std::string& file) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(path(name), std::ios::binary);
        out << content;
    }

    // the wall-time metadata line varies run to run
    static std::string without_wall_time(const std::string& text) {
        std::istringstream in(text);
        std::string line, out;
        while (std::getline(in, line))
            if (line.rfind("wall-time-seconds", 0) != 0) out += line + "\n";
        return out;
    }

    fs::path dir_;
};

TEST_F(CliTest, GenerateSolveVerifyPipeline) {
    ASSERT_EQ(run("generate --seed 5 --nodes 12 --labels 3 --edge-density 0.4 "
                  "--lift-density 0.3 -o " +
                  path("a.nllmp"))
                  .exit_code,
              0);
    ASSERT_EQ(run("solve " + path("a.nllmp") + " --algorithm kljr -o " + path("a.sol") +
                  " --trace " + path("a.csv"))
                  .exit_code,
              0);
    const CommandResult verify = run("verify " + path("a.nllmp") + " " + path("a.sol"));
    EXPECT_EQ(verify.exit_code, 0) << verify.output;
    EXPECT_NE(verify.output.find("OK"), std::string::npos);

    const std::string csv = slurp(path("a.csv"));
    EXPECT_EQ(csv.rfind("elapsed_seconds,objective\n", 0), 0u);
    EXPECT_GT(std::count(csv.begin(), csv.end(), '\n'), 1);
}

TEST_F(CliTest, AllAlgorithmsSolveAndVerify) {
    ASSERT_EQ(run("generate --seed 9 --nodes 10 --labels 2 -o " + path("b.nllmp")).exit_code, 0);
    for (const std::string algorithm : {"kljr", "kljstarr", "icm", "gaec-only"}) {
        ASSERT_EQ(run("solve " + path("b.nllmp") + " --algorithm " + algorithm + " -o " +
                      path(algorithm + ".sol"))
                      .exit_code,
                  0)
            << algorithm;
        EXPECT_EQ(run("verify " + path("b.nllmp") + " " + path(algorithm + ".sol")).exit_code, 0)
            << algorithm;
    }
}

TEST_F(CliTest, InitModesSolveAndVerify) {
    ASSERT_EQ(run("generate --seed 13 --nodes 9 --labels 2 -o " + path("g.nllmp")).exit_code, 0);
    for (const std::string init : {"gaec", "singletons", "joined"}) {
        ASSERT_EQ(run("solve " + path("g.nllmp") + " --init " + init + " -o " +
                      path(init + ".sol"))
                      .exit_code,
                  0)
            << init;
        EXPECT_EQ(run("verify " + path("g.nllmp") + " " + path(init + ".sol")).exit_code, 0)
            << init;
    }
}

TEST_F(CliTest, SolversRespectTheOracleOnASmallInstance) {
    ASSERT_EQ(run("generate --seed 31 --nodes 7 --labels 2 --edge-density 0.5 -o " +
                  path("c.nllmp"))
                  .exit_code,
              0);
    const Instance instance = parse_instance(slurp(path("c.nllmp")));
    const double optimum = brute_force_solve(instance).solution.objective;
    for (const std::string algorithm : {"kljr", "kljstarr"}) {
        ASSERT_EQ(run("solve " + path("c.nllmp") + " --algorithm " + algorithm + " -o " +
                      path("c.sol"))
                      .exit_code,
                  0);
        const SolutionRecord record = parse_solution(slurp(path("c.sol")));
        EXPECT_GE(record.objective, optimum) << algorithm;
    }
}

TEST_F(CliTest, IdenticalInvocationsAgreeUpToWallTime) {
    ASSERT_EQ(run("generate --seed 77 --nodes 14 --labels 3 -o " + path("d.nllmp")).exit_code,
              0);
    ASSERT_EQ(run("solve " + path("d.nllmp") + " --algorithm kljstarr --seed 4 -o " +
                  path("d1.sol"))
                  .exit_code,
              0);
    ASSERT_EQ(run("solve " + path("d.nllmp") + " --algorithm kljstarr --seed 4 -o " +
                  path("d2.sol"))
                  .exit_code,
              0);
    const std::string first = slurp(path("d1.sol"));
    const std::string second = slurp(path("d2.sol"));
    EXPECT_EQ(without_wall_time(first), without_wall_time(second));
    EXPECT_NE(without_wall_time(first), first);  // the stripped line was present
}

TEST_F(CliTest, VerifyRejectsACorruptedObjective) {
    ASSERT_EQ(run("generate --seed 3 --nodes 6 --labels 2 -o " + path("e.nllmp")).exit_code, 0);
    ASSERT_EQ(run("solve " + path("e.nllmp") + " -o " + path("e.sol")).exit_code, 0);
    SolutionRecord record = parse_solution(slurp(path("e.sol")));
    record.objective += 1.0;
    write("bad.sol", serialize_solution(record));
    const CommandResult verify = run("verify " + path("e.nllmp") + " " + path("bad.sol"));
    EXPECT_EQ(verify.exit_code, 1);
    EXPECT_NE(verify.output.find("objective"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsAnInfeasiblePartitionWithAWitness) {
    // path 0-1-2: components {0,2} and {1} split the articulation node away
    write("path.nllmp",
          "nllmp-instance\nnodes 3\nlabels 1\nnode-costs\n0\n0\n0\n"
          "base-edges 2\n0 1\n1 2\n"
          "lifted-arcs 2\narc 0 1\njoin 0\ncut 0\narc 1 2\njoin 0\ncut 0\nend\n");
    write("split.sol",
          "nllmp-solution\nnodes 3\nobjective 0\nfeasible 1\nalgorithm none\n"
          "iterations 0\nwall-time-seconds 0\nassignments\n0 0\n0 1\n0 0\nend\n");
    const CommandResult verify = run("verify " + path("path.nllmp") + " " + path("split.sol"));
    EXPECT_EQ(verify.exit_code, 1);
    EXPECT_NE(verify.output.find("inequality violated"), std::string::npos) << verify.output;
}

TEST_F(CliTest, ParseErrorsExitWithUsageCode) {
    write("broken.nllmp", "nllmp-instance\nnodes 2\nlabels 1\nnode-costs\n0\n0\n"
                          "base-edges 1\n0 1\nlifted-arcs 0\nend\n");
    const CommandResult solve = run("solve " + path("broken.nllmp"));
    EXPECT_EQ(solve.exit_code, 2);
    EXPECT_NE(solve.output.find("line"), std::string::npos);
    EXPECT_EQ(run("solve " + path("missing.nllmp")).exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST_F(CliTest, ReduceProducesSolvableInstances) {
    write("chain.tspec",
          "tracking-spec\ndetections 3\nunaries\n-1 -1 -1\nedges 2\n0 1 -1\n1 2 -1\nend\n");
    ASSERT_EQ(run("reduce --from tracking " + path("chain.tspec") + " -o " +
                  path("chain.nllmp"))
                  .exit_code,
              0);
    ASSERT_EQ(run("solve " + path("chain.nllmp") + " --algorithm kljstarr -o " +
                  path("chain.sol"))
                  .exit_code,
              0);
    EXPECT_EQ(run("verify " + path("chain.nllmp") + " " + path("chain.sol")).exit_code, 0);
    const SolutionRecord record = parse_solution(slurp(path("chain.sol")));
    // all three detections active in one track
    EXPECT_EQ(record.objective, -5.0);

    write("broken.tspec", "tracking-spec\ndetections 2\nunaries\n1\n");
    EXPECT_EQ(run("reduce --from tracking " + path("broken.tspec")).exit_code, 2);
}

TEST_F(CliTest, ShippedSamplesStayConsistent) {
    const std::string samples = NLLMP_SAMPLES_DIR;
    EXPECT_EQ(run("verify " + samples + "/path3.nllmp " + samples + "/path3.sol").exit_code, 0);
    for (const std::string kind : {"tracking", "pose"}) {
        const std::string spec =
            samples + (kind == "tracking" ? "/tracking_chain.tspec" : "/pose_pair.pspec");
        ASSERT_EQ(run("reduce --from " + kind + " " + spec + " -o " + path("r.nllmp"))
                      .exit_code,
                  0)
            << kind;
        ASSERT_EQ(run("solve " + path("r.nllmp") + " -o " + path("r.sol")).exit_code, 0);
        EXPECT_EQ(run("verify " + path("r.nllmp") + " " + path("r.sol")).exit_code, 0) << kind;
    }
}

TEST_F(CliTest, TimeLimitStillWritesAValidSolution) {
    ASSERT_EQ(run("generate --seed 11 --nodes 16 --labels 3 -o " + path("f.nllmp")).exit_code,
              0);
    ASSERT_EQ(run("solve " + path("f.nllmp") + " --max-iterations 1 -o " + path("f.sol"))
                  .exit_code,
              0);
    EXPECT_EQ(run("verify " + path("f.nllmp") + " " + path("f.sol")).exit_code, 0);
}

}  // namespace
}  // namespace nllmp
