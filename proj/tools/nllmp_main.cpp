// Command-line front end: solve, verify, generate and reduce subcommands
// over the canonical instance and solution file formats.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "nllmp/gaec.hpp"
#include "nllmp/io.hpp"
#include "nllmp/local_search.hpp"
#include "nllmp/oracle.hpp"
#include "nllmp/reductions.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;    // verification or optimization failure
constexpr int exit_bad_input = 2;  // usage, parse or validation errors

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string trace_csv(const nllmp::SearchTrace& trace) {
    std::string csv = "elapsed_seconds,objective\n";
    for (const auto& point : trace.checkpoints)
        csv += nllmp::detail::format_number(point.elapsed_seconds) + "," +
               nllmp::detail::format_number(point.objective) + "\n";
    return csv;
}

struct SolveOptions {
    std::string instance_path;
    std::string output_path;
    std::string trace_path;
    std::string algorithm = "kljr";
    std::string init = "gaec";
    std::uint64_t seed = 0;  // reserved; the shipped algorithms are deterministic
    double time_limit = 0.0;
    std::uint64_t max_iterations = 0;
};

int cmd_solve(const SolveOptions& options) {
    const nllmp::Instance instance = nllmp::parse_instance(read_file(options.instance_path));

    nllmp::Solution initial;
    if (options.init == "gaec")
        initial = nllmp::initial_solution(instance);
    else if (options.init == "singletons")
        initial = nllmp::all_singletons_solution(instance);
    else
        initial = nllmp::all_joined_solution(instance);

    nllmp::SearchLimits limits;
    if (options.time_limit > 0.0) limits.max_seconds = options.time_limit;
    if (options.max_iterations > 0) limits.max_alternations = options.max_iterations;

    nllmp::Solution solution;
    nllmp::SearchTrace trace;
    if (options.algorithm == "kljr")
        std::tie(solution, trace) = nllmp::solve_kljr(instance, initial, limits);
    else if (options.algorithm == "kljstarr")
        std::tie(solution, trace) = nllmp::solve_klj_star_r(instance, initial, limits);
    else if (options.algorithm == "icm")
        std::tie(solution, trace) = nllmp::solve_icm(instance, initial, limits);
    else {  // gaec-only: the initializer is the result
        solution = initial;
        trace.checkpoints.push_back({0.0, initial.objective});
    }

    nllmp::SolutionRecord record;
    record.labeling = solution.labeling;
    record.partition = solution.partition;
    record.objective = solution.objective;
    record.feasible = solution.feasible;
    record.algorithm = options.algorithm;
    record.iterations = trace.counters.alternations;
    record.wall_time_seconds =
        trace.checkpoints.empty() ? 0.0 : trace.checkpoints.back().elapsed_seconds;
    write_output(options.output_path, nllmp::serialize_solution(record));
    if (!options.trace_path.empty()) write_output(options.trace_path, trace_csv(trace));
    if (trace.truncated)
        std::cerr << "note: stopped at the budget; best solution so far written\n";
    return exit_ok;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
    const nllmp::Instance instance = nllmp::parse_instance(read_file(instance_path));
    const nllmp::SolutionRecord record = nllmp::parse_solution(read_file(solution_path));

    if (record.labeling.size() != instance.num_nodes()) {
        std::cerr << "verify: solution has " << record.labeling.size()
                  << " nodes, instance has " << instance.num_nodes() << "\n";
        return exit_failure;
    }
    for (nllmp::Node v = 0; v < instance.num_nodes(); ++v)
        if (record.labeling[v] >= instance.num_labels()) {
            std::cerr << "verify: node " << v << " carries label " << record.labeling[v]
                      << ", instance has " << instance.num_labels() << " labels\n";
            return exit_failure;
        }

    bool ok = true;
    const double recomputed = objective_of(instance, record.labeling, record.partition);
    if (recomputed != record.objective) {
        std::cerr << "verify: stored objective "
                  << nllmp::detail::format_number(record.objective)
                  << " differs from recomputed " << nllmp::detail::format_number(recomputed)
                  << "\n";
        ok = false;
    }
    const bool feasible = is_feasible(instance, record.partition);
    if (!feasible) {
        std::cerr << "verify: a component is disconnected in the base graph\n";
        ok = false;
    }
    if (record.feasible != feasible) {
        std::cerr << "verify: stored feasibility flag is wrong\n";
        ok = false;
    }
    const nllmp::OracleLimits oracle_limits;
    if (instance.num_nodes() <= oracle_limits.max_inequality_nodes) {
        if (const auto violation = find_partition_violation(instance, record.partition)) {
            std::cerr << "verify: " << *violation << "\n";
            ok = false;
        }
    }
    if (ok)
        std::cout << "verify: OK (objective " << nllmp::detail::format_number(recomputed)
                  << ", feasible)\n";
    return ok ? exit_ok : exit_failure;
}

struct GenerateOptions {
    std::uint64_t seed = 1;
    nllmp::RandomInstanceOptions instance;
    std::string output_path;
};

int cmd_generate(const GenerateOptions& options) {
    write_output(options.output_path,
                 nllmp::serialize_instance(
                     nllmp::generate_random(options.seed, options.instance)));
    return exit_ok;
}

int cmd_reduce(const std::string& kind, const std::string& input_path,
               const std::string& output_path) {
    const std::string text = read_file(input_path);
    const nllmp::Instance instance = [&] {
        if (kind == "uiqp") return nllmp::from_uiqp(nllmp::parse_uiqp_spec(text));
        if (kind == "lmp") return nllmp::from_lmp(nllmp::parse_lmp_spec(text));
        if (kind == "pose") return nllmp::from_pose(nllmp::parse_pose_spec(text));
        return nllmp::from_tracking(nllmp::parse_tracking_spec(text));
    }();
    write_output(output_path, nllmp::serialize_instance(instance));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Node-labeling lifted multicut solver"};
    app.require_subcommand(1);

    SolveOptions solve_options;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("instance", solve_options.instance_path, "instance file")->required();
    solve->add_option("-o,--output", solve_options.output_path,
                      "solution file ('-' for stdout)");
    solve->add_option("--algorithm", solve_options.algorithm, "search algorithm")
        ->check(CLI::IsMember({"kljr", "kljstarr", "icm", "gaec-only"}));
    solve->add_option("--init", solve_options.init, "initial solution")
        ->check(CLI::IsMember({"gaec", "singletons", "joined"}));
    solve->add_option("--seed", solve_options.seed, "reserved for randomized variants");
    solve->add_option("--time-limit", solve_options.time_limit,
                      "wall-clock budget in seconds");
    solve->add_option("--max-iterations", solve_options.max_iterations, "alternation budget");
    solve->add_option("--trace", solve_options.trace_path,
                      "write an elapsed_seconds,objective curve as CSV");

    std::string verify_instance, verify_solution;
    CLI::App* verify =
        app.add_subcommand("verify", "Check a solution file against its instance");
    verify->add_option("instance", verify_instance, "instance file")->required();
    verify->add_option("solution", verify_solution, "solution file")->required();

    GenerateOptions generate_options;
    CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
    generate->add_option("--seed", generate_options.seed, "random seed");
    generate->add_option("--nodes", generate_options.instance.num_nodes, "node count");
    generate->add_option("--labels", generate_options.instance.num_labels, "label count");
    generate->add_option("--edge-density", generate_options.instance.edge_density,
                         "base edge probability beyond the spanning tree");
    generate->add_option("--lift-density", generate_options.instance.lift_density,
                         "lifted arc probability");
    generate->add_option("--cost-min", generate_options.instance.cost_min,
                         "integer cost bound");
    generate->add_option("--cost-max", generate_options.instance.cost_max,
                         "integer cost bound");
    generate->add_option("-o,--output", generate_options.output_path, "output file");

    std::string reduce_kind, reduce_input, reduce_output;
    CLI::App* reduce = app.add_subcommand("reduce", "Convert a spec file into an instance");
    reduce->add_option("--from", reduce_kind, "spec kind")
        ->required()
        ->check(CLI::IsMember({"uiqp", "lmp", "pose", "tracking"}));
    reduce->add_option("input", reduce_input, "spec file")->required();
    reduce->add_option("-o,--output", reduce_output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_options);
        if (verify->parsed()) return cmd_verify(verify_instance, verify_solution);
        if (generate->parsed()) return cmd_generate(generate_options);
        return cmd_reduce(reduce_kind, reduce_input, reduce_output);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_bad_input;
    }
}
