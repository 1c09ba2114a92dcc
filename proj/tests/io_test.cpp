#include <string>

#include <gtest/gtest.h>

#include "nllmp/io.hpp"
#include "nllmp/oracle.hpp"
#include "test_util.hpp"

namespace nllmp {
namespace {

using testing::random_instance;

TEST(ParseInstance, MinimalDocument) {
    const Instance instance = parse_instance(
        "nllmp-instance\n"
        "nodes 1\n"
        "labels 1\n"
        "node-costs\n0\n"
        "base-edges 0\n"
        "lifted-arcs 0\n"
        "end\n");
    EXPECT_EQ(instance.num_nodes(), 1u);
    EXPECT_EQ(instance.num_labels(), 1u);
    EXPECT_EQ(instance.num_arcs(), 0u);
}

TEST(ParseInstance, CommentsAndWhitespaceAreFree) {
    const Instance instance = parse_instance(
        "# a tiny instance\n"
        "nllmp-instance  nodes 2 labels 1\n"
        "node-costs 0 0  # per node\n"
        "base-edges 1\n"
        "0 1\n"
        "lifted-arcs 1 arc 0 1 join -4 cut 0 end");
    EXPECT_EQ(instance.num_base_edges(), 1u);
    EXPECT_EQ(instance.join_cost(0, 0, 0), -4.0);
}

TEST(ParseInstance, FailingCorpus) {
    // one input per documented error kind, each rejected with its code and a
    // line/column position
    for (const auto& [text, code] : testing::failing_instance_corpus()) {
        try {
            parse_instance(text);
            FAIL() << "input unexpectedly parsed:\n" << text;
        } catch (const ParseError& error) {
            EXPECT_EQ(static_cast<int>(error.code()), static_cast<int>(code)) << error.what();
            EXPECT_GE(error.line(), 1u);
            EXPECT_GE(error.column(), 1u);
        }
    }
}

TEST(SerializeInstance, RoundTripsBitExactly) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance instance = random_instance(seed, 12, 3);
        const std::string text = serialize_instance(instance);
        const Instance parsed = parse_instance(text);
        EXPECT_TRUE(parsed == instance) << "seed " << seed;
        EXPECT_EQ(serialize_instance(parsed), text);
    }
}

TEST(SerializeInstance, CanonicalizesArcOrder) {
    // arcs listed out of order serialize sorted by (min, max)
    const Instance instance = testing::TestInstance(3, 1)
                                  .base_edge(1, 2)
                                  .base_edge(0, 1)
                                  .arc(2, 0)
                                  .build();
    const std::string text = serialize_instance(instance);
    const std::size_t first = text.find("arc 0 1");
    const std::size_t second = text.find("arc 2 0");
    const std::size_t third = text.find("arc 1 2");
    ASSERT_NE(first, std::string::npos);
    ASSERT_NE(second, std::string::npos);
    ASSERT_NE(third, std::string::npos);
    EXPECT_LT(first, second);
    EXPECT_LT(second, third);
}

TEST(SolutionFiles, RoundTripAndRecomputation) {
    const Instance instance = testing::two_node_example();
    SolutionRecord record;
    record.labeling = NodeLabeling({0, 0});
    record.partition = ComponentLabeling({0, 0});
    record.objective = objective_of(instance, record.labeling, record.partition);
    record.feasible = true;
    record.algorithm = "kljr";
    record.iterations = 3;
    record.wall_time_seconds = 0.015625;
    const std::string text = serialize_solution(record);
    const SolutionRecord parsed = parse_solution(text);
    EXPECT_EQ(parsed.labeling, record.labeling);
    EXPECT_EQ(parsed.partition, record.partition);
    EXPECT_EQ(parsed.objective, record.objective);
    EXPECT_EQ(parsed.feasible, record.feasible);
    EXPECT_EQ(parsed.algorithm, record.algorithm);
    EXPECT_EQ(parsed.iterations, record.iterations);
    EXPECT_EQ(parsed.wall_time_seconds, record.wall_time_seconds);
    EXPECT_EQ(serialize_solution(parsed), text);
    // the stored objective matches a recomputation on load
    EXPECT_EQ(objective_of(instance, parsed.labeling, parsed.partition), parsed.objective);
}

TEST(SolutionFiles, RejectsBadFlagsAndTruncation) {
    EXPECT_THROW(parse_solution("nllmp-solution\nnodes 1\nobjective 0\nfeasible 2\n"),
                 ParseError);
    EXPECT_THROW(parse_solution("nllmp-solution\nnodes 1\nobjective 0\n"), ParseError);
}

TEST(SpecFiles, ParseAllFourKinds) {
    const UiqpSpec uiqp = parse_uiqp_spec(
        "uiqp-spec\nnodes 2\nlabels 2\nnode-costs\n1 2\n3 4\n"
        "arcs 1\narc 0 1\ncosts 0 -1 -1 0\nend\n");
    EXPECT_EQ(uiqp.num_nodes, 2u);
    EXPECT_EQ(uiqp.pair_costs.size(), 4u);

    const LmpSpec lmp = parse_lmp_spec(
        "lmp-spec\nnodes 3\nbase-edges 2\n0 1 -1\n1 2 2\nlifted-edges 1\n0 2 5\nend\n");
    EXPECT_EQ(lmp.base_edges.size(), 2u);
    EXPECT_EQ(lmp.lifted_costs, std::vector<double>({5.0}));

    const PoseSpec pose = parse_pose_spec(
        "pose-spec\ndetections 2\nclasses 2\nunaries\n-1 0\n0 -1\n"
        "pairs 1\npair 0 1\nbeta 0 -2 0 0\nend\n");
    EXPECT_EQ(pose.pair_costs.size(), 1u);

    const TrackingSpec tracking = parse_tracking_spec(
        "tracking-spec\ndetections 3\nunaries\n-1 -1 -1\nedges 2\n0 1 -1\n1 2 -1\nend\n");
    EXPECT_EQ(tracking.edges.size(), 2u);
    EXPECT_EQ(tracking.pair_costs.size(), 2u);
}

TEST(GenerateRandom, DeterministicForAFixedSeed) {
    RandomInstanceOptions options;
    options.num_nodes = 9;
    options.num_labels = 3;
    options.edge_density = 0.4;
    options.lift_density = 0.3;
    EXPECT_EQ(serialize_instance(generate_random(12345, options)),
              serialize_instance(generate_random(12345, options)));
    EXPECT_NE(serialize_instance(generate_random(12345, options)),
              serialize_instance(generate_random(12346, options)));
}

TEST(GenerateRandom, ZeroDensityGivesASpanningTree) {
    RandomInstanceOptions options;
    options.num_nodes = 12;
    options.edge_density = 0.0;
    options.lift_density = 0.0;
    const Instance instance = generate_random(7, options);
    EXPECT_EQ(instance.num_base_edges(), options.num_nodes - 1);
    EXPECT_EQ(instance.num_arcs(), options.num_nodes - 1);
}

TEST(GenerateRandom, SmallInstancesFitTheOracleBudget) {
    RandomInstanceOptions options;
    options.num_nodes = 8;
    options.num_labels = 2;
    options.edge_density = 0.5;
    options.lift_density = 0.5;
    const Instance instance = generate_random(99, options);
    const auto result = brute_force_solve(instance);
    EXPECT_TRUE(is_feasible(instance, result.solution.partition));
}

TEST(GenerateRandom, RejectsBadParameters) {
    RandomInstanceOptions options;
    options.edge_density = 1.5;
    EXPECT_THROW(generate_random(1, options), std::invalid_argument);
    options.edge_density = 0.5;
    options.cost_min = 10;
    options.cost_max = -10;
    EXPECT_THROW(generate_random(1, options), std::invalid_argument);
    options.cost_min = -10;
    options.cost_max = 10;
    options.num_nodes = 0;
    EXPECT_THROW(generate_random(1, options), std::invalid_argument);
}

}  // namespace
}  // namespace nllmp
