#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/labeling.hpp"

namespace nllmp {

/// Size guards for the exact reference routines. Exceeding a guard is an
/// explicit refusal (OracleBudgetError), never silence.
struct OracleLimits {
    std::size_t max_partition_nodes = 12;
    std::size_t max_inequality_nodes = 10;
    std::size_t max_states = 10'000'000;
};

class OracleBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Restricted-growth strings enumerated so that the all-singletons string
// comes first and the all-joined string last; partitions whose blocks are
// not connected in G are skipped.
template <class Visitor>
void connected_partitions_rec(const Instance& instance, std::vector<std::size_t>& value,
                              std::size_t pos, std::size_t prefix_max, Visitor&& visit) {
    if (pos == value.size()) {
        ComponentLabeling partition{value};
        if (is_feasible(instance, partition)) visit(partition);
        return;
    }
    const std::size_t limit = pos == 0 ? 0 : prefix_max + 1;
    for (std::size_t m = limit + 1; m-- > 0;) {
        value[pos] = m;
        connected_partitions_rec(instance, value, pos + 1, std::max(prefix_max, m),
                                 std::forward<Visitor>(visit));
    }
}

}  // namespace detail

/// Visits every partition of V into G-connected blocks exactly once, in
/// canonical order (finest first, coarsest last).
template <class Visitor>
void for_each_connected_partition(const Instance& instance, Visitor&& visit,
                                  const OracleLimits& limits = {}) {
    if (instance.num_nodes() > limits.max_partition_nodes)
        throw OracleBudgetError("instance exceeds the partition enumeration guard of " +
                                std::to_string(limits.max_partition_nodes) + " nodes");
    std::vector<std::size_t> value(instance.num_nodes(), 0);
    detail::connected_partitions_rec(instance, value, 0, 0, std::forward<Visitor>(visit));
}

inline std::vector<ComponentLabeling> enumerate_connected_partitions(
    const Instance& instance, const OracleLimits& limits = {}) {
    std::vector<ComponentLabeling> out;
    for_each_connected_partition(
        instance, [&](const ComponentLabeling& p) { out.push_back(p); }, limits);
    return out;
}

namespace detail {

struct BaseEdgeRef {
    Node v;
    Node w;
    ArcIndex arc;
};

inline std::vector<BaseEdgeRef> base_edge_refs(const Instance& instance) {
    std::vector<BaseEdgeRef> out;
    for (ArcIndex a = 0; a < instance.num_arcs(); ++a)
        if (instance.arc_is_base(a))
            out.push_back({instance.arc(a).tail, instance.arc(a).head, a});
    return out;
}

// All simple cycles of G, each reported once as a list of base-arc indices.
// The smallest node of a cycle starts it and the orientation is fixed by
// requiring the second node to be smaller than the last.
inline std::vector<std::vector<ArcIndex>> enumerate_cycles(const Instance& instance) {
    const std::size_t n = instance.num_nodes();
    std::vector<std::vector<std::pair<Node, ArcIndex>>> adj(n);
    for (const auto& e : base_edge_refs(instance)) {
        adj[e.v].emplace_back(e.w, e.arc);
        adj[e.w].emplace_back(e.v, e.arc);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::vector<ArcIndex>> cycles;
    std::vector<char> on_path(n, 0);
    std::vector<Node> path;
    std::vector<ArcIndex> path_arcs;

    auto extend = [&](auto&& self, Node start, Node u) -> void {
        for (const auto& [w, arc] : adj[u]) {
            if (w == start && path.size() >= 3 && path[1] < u) {
                path_arcs.push_back(arc);
                cycles.push_back(path_arcs);
                path_arcs.pop_back();
                continue;
            }
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            path_arcs.push_back(arc);
            self(self, start, w);
            path_arcs.pop_back();
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (Node start = 0; start < n; ++start) {
        on_path[start] = 1;
        path.assign(1, start);
        extend(extend, start, start);
        on_path[start] = 0;
    }
    return cycles;
}

// All simple v-w paths of G as lists of base-arc indices.
inline std::vector<std::vector<ArcIndex>> enumerate_paths(const Instance& instance, Node from,
                                                          Node to) {
    const std::size_t n = instance.num_nodes();
    std::vector<std::vector<std::pair<Node, ArcIndex>>> adj(n);
    for (const auto& e : base_edge_refs(instance)) {
        adj[e.v].emplace_back(e.w, e.arc);
        adj[e.w].emplace_back(e.v, e.arc);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::vector<ArcIndex>> paths;
    std::vector<char> on_path(n, 0);
    std::vector<ArcIndex> path_arcs;

    auto extend = [&](auto&& self, Node u) -> void {
        if (u == to) {
            paths.push_back(path_arcs);
            return;
        }
        for (const auto& [w, arc] : adj[u]) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path_arcs.push_back(arc);
            self(self, w);
            path_arcs.pop_back();
            on_path[w] = 0;
        }
    };
    on_path[from] = 1;
    extend(extend, from);
    return paths;
}

}  // namespace detail

namespace detail {

inline std::optional<std::string> check_cycles(const Instance& instance,
                                               const std::vector<char>& base_flags) {
    for (const auto& cycle : enumerate_cycles(instance)) {
        int total = 0;
        for (ArcIndex a : cycle) total += base_flags[a] ? 1 : 0;
        for (ArcIndex a : cycle)
            if (base_flags[a] && total - 1 < 1)
                return "cycle inequality violated: edge {" +
                       std::to_string(instance.arc(a).tail) + "," +
                       std::to_string(instance.arc(a).head) +
                       "} is the only cut edge of a cycle of length " +
                       std::to_string(cycle.size());
    }
    return std::nullopt;
}

// Path inequalities when the pair is cut, cut inequalities when it is
// joined; base_flags carries the cut state of the base arcs. Cuts are
// enumerated as the edge sets crossing node subsets; every other cut
// contains one of these, with a right-hand side at least as large.
inline std::optional<std::string> check_pair(const Instance& instance, Node v, Node w,
                                             bool pair_cut,
                                             const std::vector<char>& base_flags) {
    const std::size_t n = instance.num_nodes();
    const std::string pair_text = "{" + std::to_string(v) + "," + std::to_string(w) + "}";
    if (pair_cut) {
        for (const auto& path : enumerate_paths(instance, v, w)) {
            int total = 0;
            for (ArcIndex e : path) total += base_flags[e] ? 1 : 0;
            if (total < 1)
                return "path inequality violated: pair " + pair_text +
                       " is cut but joined along a path of length " +
                       std::to_string(path.size());
        }
    } else {
        // subsets S with v inside and w outside, encoded over the other nodes
        std::vector<Node> others;
        for (Node u = 0; u < n; ++u)
            if (u != v && u != w) others.push_back(u);
        const auto refs = base_edge_refs(instance);
        std::vector<char> in_s(n, 0);
        in_s[v] = 1;
        for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
            for (std::size_t i = 0; i < others.size(); ++i)
                in_s[others[i]] = (mask >> i) & 1 ? 1 : 0;
            int joined_crossing = 0;
            for (const auto& e : refs)
                if (in_s[e.v] != in_s[e.w] && !base_flags[e.arc]) ++joined_crossing;
            if (joined_crossing < 1)
                return "cut inequality violated: pair " + pair_text +
                       " is joined but a cut of the base graph separates it";
        }
    }
    return std::nullopt;
}

inline void check_inequality_guard(const Instance& instance, const OracleLimits& limits) {
    if (instance.num_nodes() > limits.max_inequality_nodes)
        throw OracleBudgetError("instance exceeds the inequality check guard of " +
                                std::to_string(limits.max_inequality_nodes) + " nodes");
}

}  // namespace detail

/// Checks the three inequality families against a raw 01-vector over the
/// arcs (1 meaning cut), by explicit enumeration of cycles, paths and cuts.
/// Returns a description of the first violated inequality, or nothing.
inline std::optional<std::string> find_inequality_violation(const Instance& instance,
                                                            const std::vector<char>& cut_flags,
                                                            const OracleLimits& limits = {}) {
    detail::check_inequality_guard(instance, limits);
    if (cut_flags.size() != instance.num_arcs())
        throw std::invalid_argument("cut vector size does not match the arc list");
    if (auto violation = detail::check_cycles(instance, cut_flags)) return violation;
    for (ArcIndex a = 0; a < instance.num_arcs(); ++a) {
        if (instance.arc_is_base(a)) continue;
        if (auto violation = detail::check_pair(instance, instance.arc(a).tail,
                                                instance.arc(a).head, cut_flags[a] != 0,
                                                cut_flags))
            return violation;
    }
    return std::nullopt;
}

inline std::vector<char> cut_vector_of(const Instance& instance,
                                       const ComponentLabeling& partition) {
    if (partition.size() != instance.num_nodes())
        throw std::invalid_argument("partition size does not match the instance");
    std::vector<char> flags(instance.num_arcs());
    for (ArcIndex a = 0; a < instance.num_arcs(); ++a)
        flags[a] = partition[instance.arc(a).tail] != partition[instance.arc(a).head] ? 1 : 0;
    return flags;
}

/// Checks the inequality systems against the partition's induced cut
/// indicators over every node pair, not only the listed arcs: a pair of
/// disconnected nodes in one component violates a cut inequality whether or
/// not the cost graph carries that pair. On this completion the families
/// hold exactly when every component is connected, which makes the check an
/// independent route to is_feasible.
inline std::optional<std::string> find_partition_violation(const Instance& instance,
                                                           const ComponentLabeling& partition,
                                                           const OracleLimits& limits = {}) {
    detail::check_inequality_guard(instance, limits);
    const std::vector<char> flags = cut_vector_of(instance, partition);
    if (auto violation = detail::check_cycles(instance, flags)) return violation;

    std::vector<std::vector<char>> base_pair(instance.num_nodes(),
                                             std::vector<char>(instance.num_nodes(), 0));
    for (const auto& [v, w] : instance.base_edges()) base_pair[v][w] = base_pair[w][v] = 1;
    for (Node v = 0; v < instance.num_nodes(); ++v)
        for (Node w = v + 1; w < instance.num_nodes(); ++w) {
            if (base_pair[v][w]) continue;
            if (auto violation =
                    detail::check_pair(instance, v, w, partition[v] != partition[w], flags))
                return violation;
        }
    return std::nullopt;
}

/// True iff the partition's induced cut indicators satisfy the cycle, path
/// and cut inequality families.
inline bool check_lifted_inequalities(const Instance& instance,
                                      const ComponentLabeling& partition,
                                      const OracleLimits& limits = {}) {
    return !find_partition_violation(instance, partition, limits).has_value();
}

struct BruteForceResult {
    Solution solution;
    std::size_t states_evaluated = 0;
    std::size_t num_partitions = 0;
};

/// Exhaustive minimization over all labelings and all connected partitions.
/// Ties break toward the lexicographically smallest labeling, then the
/// earliest partition in canonical enumeration order.
inline BruteForceResult brute_force_solve(const Instance& instance,
                                          const OracleLimits& limits = {}) {
    const std::size_t n = instance.num_nodes();
    const std::size_t k = instance.num_labels();

    std::size_t num_partitions = 0;
    for_each_connected_partition(
        instance, [&](const ComponentLabeling&) { ++num_partitions; }, limits);

    double labelings = 1.0;
    for (std::size_t i = 0; i < n; ++i) labelings *= static_cast<double>(k);
    if (labelings * static_cast<double>(num_partitions) >
        static_cast<double>(limits.max_states))
        throw OracleBudgetError("state space exceeds the budget of " +
                                std::to_string(limits.max_states) + " states");

    BruteForceResult result;
    result.num_partitions = num_partitions;
    double best = 0.0;
    bool have_best = false;
    std::vector<Label> best_labels;
    std::size_t best_partition_index = 0;
    ComponentLabeling best_partition;

    std::size_t partition_index = 0;
    for_each_connected_partition(
        instance,
        [&](const ComponentLabeling& partition) {
            const auto cut = cut_vector_of(instance, partition);
            std::vector<Label> labels(n, 0);
            for (;;) {
                double value = 0.0;
                for (Node v = 0; v < n; ++v) value += instance.node_cost(v, labels[v]);
                for (ArcIndex a = 0; a < instance.num_arcs(); ++a) {
                    const Arc arc = instance.arc(a);
                    value += cut[a] ? instance.cut_cost(a, labels[arc.tail], labels[arc.head])
                                    : instance.join_cost(a, labels[arc.tail], labels[arc.head]);
                }
                ++result.states_evaluated;
                const bool better =
                    !have_best || value < best ||
                    (value == best &&
                     (labels < best_labels ||
                      (labels == best_labels && partition_index < best_partition_index)));
                if (better) {
                    have_best = true;
                    best = value;
                    best_labels = labels;
                    best_partition_index = partition_index;
                    best_partition = partition;
                }
                // next labeling, lexicographic odometer
                std::size_t pos = n;
                while (pos > 0 && labels[pos - 1] + 1 == k) labels[--pos] = 0;
                if (pos == 0) break;
                ++labels[pos - 1];
            }
            ++partition_index;
        },
        limits);

    result.solution.labeling = NodeLabeling(std::move(best_labels));
    result.solution.partition = std::move(best_partition);
    result.solution.objective = best;
    result.solution.feasible = true;
    return result;
}

}  // namespace nllmp
