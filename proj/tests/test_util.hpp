#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/io.hpp"
#include "nllmp/labeling.hpp"
#include "nllmp/reductions.hpp"

namespace nllmp::testing {

/// Incremental construction of small instances for tests. Costs default to
/// zero; join/cut setters address the unordered pair and respect the stored
/// orientation.
class TestInstance {
public:
    TestInstance(std::size_t num_nodes, std::size_t num_labels)
        : num_nodes_(num_nodes),
          num_labels_(num_labels),
          node_costs_(num_nodes * num_labels, 0.0) {}

    TestInstance& base_edge(Node v, Node w) {
        base_edges_.emplace_back(v, w);
        return arc(v, w);
    }

    TestInstance& arc(Node v, Node w) {
        arcs_.push_back({v, w});
        join_costs_.resize(arcs_.size() * num_labels_ * num_labels_, 0.0);
        cut_costs_.resize(arcs_.size() * num_labels_ * num_labels_, 0.0);
        return *this;
    }

    TestInstance& node_cost(Node v, Label l, double c) {
        node_costs_[v * num_labels_ + l] = c;
        return *this;
    }

    TestInstance& join(Node v, Node w, Label lv, Label lw, double c) {
        return pair_cost(join_costs_, v, w, lv, lw, c);
    }

    TestInstance& cut(Node v, Node w, Label lv, Label lw, double c) {
        return pair_cost(cut_costs_, v, w, lv, lw, c);
    }

    TestInstance& join_all(double c) {
        for (double& x : join_costs_) x = c;
        return *this;
    }

    TestInstance& cut_all(double c) {
        for (double& x : cut_costs_) x = c;
        return *this;
    }

    Instance build() const {
        return Instance(num_nodes_, num_labels_, base_edges_, arcs_, node_costs_, join_costs_,
                        cut_costs_);
    }

private:
    TestInstance& pair_cost(std::vector<double>& tensor, Node v, Node w, Label lv, Label lw,
                            double c) {
        for (std::size_t a = 0; a < arcs_.size(); ++a) {
            if (arcs_[a].tail == v && arcs_[a].head == w) {
                tensor[(a * num_labels_ + lv) * num_labels_ + lw] = c;
                return *this;
            }
            if (arcs_[a].tail == w && arcs_[a].head == v) {
                tensor[(a * num_labels_ + lw) * num_labels_ + lv] = c;
                return *this;
            }
        }
        throw std::logic_error("no arc for that node pair");
    }

    std::size_t num_nodes_;
    std::size_t num_labels_;
    std::vector<std::pair<Node, Node>> base_edges_;
    std::vector<Arc> arcs_;
    std::vector<double> node_costs_;
    std::vector<double> join_costs_;
    std::vector<double> cut_costs_;
};

/// The running two-node example: one arc, two labels, c(v0, 0) = 1, join
/// cost -2 on labels (0, 0), cut costs 3 everywhere.
inline Instance two_node_example() {
    return TestInstance(2, 2)
        .base_edge(0, 1)
        .node_cost(0, 0, 1.0)
        .join(0, 1, 0, 0, -2.0)
        .cut_all(3.0)
        .build();
}

inline Instance path_instance(std::size_t n, std::size_t k) {
    TestInstance t(n, k);
    for (Node v = 0; v + 1 < n; ++v) t.base_edge(v, v + 1);
    return t.build();
}

inline Instance triangle_instance(std::size_t k) {
    return TestInstance(3, k).base_edge(0, 1).base_edge(1, 2).base_edge(0, 2).build();
}

inline NodeLabeling random_labeling(std::mt19937_64& rng, const Instance& instance) {
    NodeLabeling labeling(instance.num_nodes());
    for (Node v = 0; v < instance.num_nodes(); ++v)
        labeling[v] = rng() % instance.num_labels();
    return labeling;
}

inline ComponentLabeling random_partition(std::mt19937_64& rng, const Instance& instance) {
    ComponentLabeling partition(instance.num_nodes());
    for (Node v = 0; v < instance.num_nodes(); ++v)
        partition[v] = rng() % instance.num_nodes();
    return partition;
}

inline ComponentLabeling random_feasible_partition(std::mt19937_64& rng,
                                                   const Instance& instance) {
    return repair(instance, random_partition(rng, instance));
}

/// Mixed-size random instances for property suites.
inline Instance random_instance(std::uint64_t seed, std::size_t max_nodes,
                                std::size_t max_labels) {
    std::mt19937_64 mix(seed * 0x9e3779b97f4a7c15ull + 1);
    RandomInstanceOptions options;
    options.num_nodes = 1 + mix() % max_nodes;
    options.num_labels = 1 + mix() % max_labels;
    const double densities[] = {0.0, 0.1, 0.3, 0.6, 0.9};
    options.edge_density = densities[mix() % 5];
    options.lift_density = densities[mix() % 5];
    options.cost_min = -20;
    options.cost_max = 20;
    return generate_random(seed, options);
}

// --- independent evaluators for the reduction equivalence checks ---

inline double uiqp_value(const UiqpSpec& spec, const std::vector<Label>& labels) {
    double total = 0.0;
    for (Node v = 0; v < spec.num_nodes; ++v)
        total += spec.node_costs[v * spec.num_labels + labels[v]];
    for (std::size_t a = 0; a < spec.arcs.size(); ++a)
        total += spec.pair_costs[(a * spec.num_labels + labels[spec.arcs[a].tail]) *
                                     spec.num_labels +
                                 labels[spec.arcs[a].head]];
    return total;
}

inline double uiqp_minimum(const UiqpSpec& spec) {
    std::vector<Label> labels(spec.num_nodes, 0);
    double best = uiqp_value(spec, labels);
    for (;;) {
        std::size_t pos = spec.num_nodes;
        while (pos > 0 && labels[pos - 1] + 1 == spec.num_labels) labels[--pos] = 0;
        if (pos == 0) break;
        ++labels[pos - 1];
        best = std::min(best, uiqp_value(spec, labels));
    }
    return best;
}

inline UiqpSpec random_uiqp(std::uint64_t seed, std::size_t max_nodes, std::size_t max_labels,
                            bool connected) {
    std::mt19937_64 rng(seed);
    UiqpSpec spec;
    spec.num_nodes = 1 + rng() % max_nodes;
    spec.num_labels = 1 + rng() % max_labels;
    spec.node_costs.resize(spec.num_nodes * spec.num_labels);
    for (double& c : spec.node_costs) c = static_cast<double>(rng() % 21) - 10.0;
    for (Node v = 0; v < spec.num_nodes; ++v)
        for (Node w = v + 1; w < spec.num_nodes; ++w) {
            const bool keep = connected && w == v + 1 ? true : rng() % 3 == 0;
            if (!keep) continue;
            spec.arcs.push_back({v, w});
            for (std::size_t c = 0; c < spec.num_labels * spec.num_labels; ++c)
                spec.pair_costs.push_back(static_cast<double>(rng() % 21) - 10.0);
        }
    return spec;
}

inline double lmp_value(const LmpSpec& spec, const ComponentLabeling& partition) {
    double total = 0.0;
    for (std::size_t i = 0; i < spec.base_edges.size(); ++i)
        if (partition[spec.base_edges[i].first] != partition[spec.base_edges[i].second])
            total += spec.base_costs[i];
    for (std::size_t i = 0; i < spec.lifted_edges.size(); ++i)
        if (partition[spec.lifted_edges[i].first] != partition[spec.lifted_edges[i].second])
            total += spec.lifted_costs[i];
    return total;
}

inline LmpSpec random_lmp(std::uint64_t seed, std::size_t max_nodes) {
    std::mt19937_64 rng(seed);
    LmpSpec spec;
    spec.num_nodes = 2 + rng() % (max_nodes - 1);
    for (Node v = 1; v < spec.num_nodes; ++v) {
        spec.base_edges.emplace_back(rng() % v, v);
        spec.base_costs.push_back(static_cast<double>(rng() % 21) - 10.0);
    }
    for (Node v = 0; v < spec.num_nodes; ++v)
        for (Node w = v + 1; w < spec.num_nodes; ++w) {
            bool used = false;
            for (const auto& e : spec.base_edges)
                if (std::min(e.first, e.second) == v && std::max(e.first, e.second) == w)
                    used = true;
            if (used || rng() % 3 != 0) continue;
            spec.lifted_edges.emplace_back(v, w);
            spec.lifted_costs.push_back(static_cast<double>(rng() % 21) - 10.0);
        }
    return spec;
}

/// Every documented instance parse error with an input that triggers it.
inline std::vector<std::pair<std::string, ParseErrorCode>> failing_instance_corpus() {
    const std::string head = "nllmp-instance\nnodes 2\nlabels 1\nnode-costs\n0\n0\n";
    return {
        {"nllmp-solution\n", ParseErrorCode::syntax},
        {"nllmp-instance\nnodes two\n", ParseErrorCode::bad_number},
        {"nllmp-instance\nnodes 0\n", ParseErrorCode::invalid_value},
        {"nllmp-instance\nnodes 1\nlabels 0\n", ParseErrorCode::invalid_value},
        {head + "base-edges 2\n0 1\n", ParseErrorCode::truncated},
        {head + "base-edges 1\n0 2\n", ParseErrorCode::node_out_of_range},
        {head + "base-edges 1\n1 1\n", ParseErrorCode::self_loop},
        {head + "base-edges 2\n0 1\n1 0\n", ParseErrorCode::duplicate_edge},
        {head + "base-edges 1\n0 1\nlifted-arcs 2\narc 0 1\njoin 0\ncut 0\narc 0 1\n"
                "join 0\ncut 0\nend\n",
         ParseErrorCode::duplicate_edge},
        {head + "base-edges 1\n0 1\nlifted-arcs 2\narc 0 1\njoin 0\ncut 0\narc 1 0\n"
                "join 0\ncut 0\nend\n",
         ParseErrorCode::orientation_conflict},
        {head + "base-edges 1\n0 1\nlifted-arcs 0\nend\n", ParseErrorCode::missing_base_arc},
        {"nllmp-instance\nnodes 2\nlabels 1\nnode-costs\n0\n0\nbase-edges 0\n"
         "lifted-arcs 1\narc 0 1\njoin 0\ncut 0\nend\n",
         ParseErrorCode::disconnected_graph},
        {head + "base-edges 1\n0 1\nlifted-arcs 1\narc 0 1\njoin 0\ncut 0\nend\nextra\n",
         ParseErrorCode::syntax},
    };
}

}  // namespace nllmp::testing
