#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"

namespace nllmp {

/// Total map from nodes to labels.
class NodeLabeling {
public:
    NodeLabeling() = default;
    explicit NodeLabeling(std::size_t num_nodes, Label fill = 0) : labels_(num_nodes, fill) {}
    explicit NodeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
    NodeLabeling(std::initializer_list<Label> labels) : labels_(labels) {}

    std::size_t size() const { return labels_.size(); }
    Label operator[](Node v) const { return labels_[v]; }
    Label& operator[](Node v) { return labels_[v]; }
    const std::vector<Label>& values() const { return labels_; }

    friend bool operator==(const NodeLabeling&, const NodeLabeling&) = default;

private:
    std::vector<Label> labels_;
};

/// Map from nodes to component indices. Two nodes are joined iff their
/// indices agree; the encoding is feasible iff every index class induces a
/// connected subgraph of G.
class ComponentLabeling {
public:
    ComponentLabeling() = default;
    explicit ComponentLabeling(std::size_t num_nodes, std::size_t fill = 0)
        : components_(num_nodes, fill) {}
    explicit ComponentLabeling(std::vector<std::size_t> components)
        : components_(std::move(components)) {}
    ComponentLabeling(std::initializer_list<std::size_t> components)
        : components_(components) {}

    std::size_t size() const { return components_.size(); }
    std::size_t operator[](Node v) const { return components_[v]; }
    std::size_t& operator[](Node v) { return components_[v]; }
    const std::vector<std::size_t>& values() const { return components_; }

    friend bool operator==(const ComponentLabeling&, const ComponentLabeling&) = default;

private:
    std::vector<std::size_t> components_;
};

struct Solution {
    NodeLabeling labeling;
    ComponentLabeling partition;
    double objective = 0.0;
    bool feasible = false;
};

inline std::ostream& operator<<(std::ostream& out, const NodeLabeling& labeling) {
    out << '[';
    for (std::size_t v = 0; v < labeling.size(); ++v) out << (v ? " " : "") << labeling[v];
    return out << ']';
}

inline std::ostream& operator<<(std::ostream& out, const ComponentLabeling& partition) {
    out << '[';
    for (std::size_t v = 0; v < partition.size(); ++v) out << (v ? " " : "") << partition[v];
    return out << ']';
}

namespace detail {

inline void check_state_sizes(const Instance& instance, std::size_t labeling_size,
                              std::size_t partition_size) {
    if (labeling_size != instance.num_nodes() || partition_size != instance.num_nodes())
        throw std::invalid_argument("labeling or partition size does not match the instance");
}

}  // namespace detail

/// Evaluates the objective: node costs plus, per arc, the join cost when the
/// endpoints share a component and the cut cost otherwise. Defined for every
/// component labeling, feasible or not.
inline double objective_of(const Instance& instance, const NodeLabeling& labeling,
                           const ComponentLabeling& partition) {
    detail::check_state_sizes(instance, labeling.size(), partition.size());
    double total = 0.0;
    for (Node v = 0; v < instance.num_nodes(); ++v) {
        const Label l = labeling[v];
        if (l >= instance.num_labels())
            throw std::invalid_argument("label out of range");
        total += instance.node_cost(v, l);
    }
    for (ArcIndex a = 0; a < instance.num_arcs(); ++a) {
        const Arc arc = instance.arc(a);
        total += partition[arc.tail] != partition[arc.head]
                     ? instance.cut_cost(a, labeling[arc.tail], labeling[arc.head])
                     : instance.join_cost(a, labeling[arc.tail], labeling[arc.head]);
    }
    return total;
}

namespace detail {

// Connected-component labeling of G restricted to classes of `partition`,
// breadth first, fresh indices in order of first discovery.
inline std::vector<std::size_t> component_scan(const Instance& instance,
                                               const ComponentLabeling& partition,
                                               std::size_t& num_found) {
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> out(instance.num_nodes(), unassigned);
    std::vector<Node> queue;
    num_found = 0;
    for (Node seed = 0; seed < instance.num_nodes(); ++seed) {
        if (out[seed] != unassigned) continue;
        const std::size_t index = num_found++;
        out[seed] = index;
        queue.assign(1, seed);
        std::size_t head = 0;
        while (head < queue.size()) {
            const Node u = queue[head++];
            for (Node w : instance.base_neighbors(u))
                if (out[w] == unassigned && partition[w] == partition[seed]) {
                    out[w] = index;
                    queue.push_back(w);
                }
        }
    }
    return out;
}

}  // namespace detail

/// True iff every component index class is connected in G.
inline bool is_feasible(const Instance& instance, const ComponentLabeling& partition) {
    if (partition.size() != instance.num_nodes())
        throw std::invalid_argument("partition size does not match the instance");
    std::size_t connected_classes = 0;
    detail::component_scan(instance, partition, connected_classes);
    std::unordered_set<std::size_t> distinct(partition.values().begin(),
                                             partition.values().end());
    return connected_classes == distinct.size();
}

/// Splits every disconnected index class into its connected pieces. Output
/// indices are 0,1,2,... in order of first breadth-first discovery, so the
/// result is deterministic and always feasible.
inline ComponentLabeling repair(const Instance& instance, const ComponentLabeling& partition) {
    if (partition.size() != instance.num_nodes())
        throw std::invalid_argument("partition size does not match the instance");
    std::size_t num_found = 0;
    return ComponentLabeling(detail::component_scan(instance, partition, num_found));
}

/// Returns the labeling with entry v changed to l.
inline NodeLabeling relabel_node(NodeLabeling labeling, Node v, Label l) {
    if (v >= labeling.size())
        throw std::invalid_argument("node out of range");
    labeling[v] = l;
    return labeling;
}

/// Returns the partition with node v moved to component m. The result may be
/// infeasible when v is an articulation node of its component.
inline ComponentLabeling move_node(ComponentLabeling partition, Node v, std::size_t m) {
    if (v >= partition.size())
        throw std::invalid_argument("node out of range");
    partition[v] = m;
    return partition;
}

/// Puts every node of component m into component m_into.
inline ComponentLabeling join_components(ComponentLabeling partition, std::size_t m,
                                         std::size_t m_into) {
    for (Node v = 0; v < partition.size(); ++v)
        if (partition[v] == m) partition[v] = m_into;
    return partition;
}

inline std::size_t num_components(const ComponentLabeling& partition) {
    std::unordered_set<std::size_t> distinct(partition.values().begin(),
                                             partition.values().end());
    return distinct.size();
}

/// Renumbers component indices to 0,1,2,... in order of first occurrence.
inline ComponentLabeling canonical_components(const ComponentLabeling& partition) {
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> out(partition.size());
    std::vector<std::pair<std::size_t, std::size_t>> mapping;  // (old index, new index)
    for (Node v = 0; v < partition.size(); ++v) {
        std::size_t next = unassigned;
        for (const auto& [from, to] : mapping)
            if (from == partition[v]) {
                next = to;
                break;
            }
        if (next == unassigned) {
            next = mapping.size();
            mapping.emplace_back(partition[v], next);
        }
        out[v] = next;
    }
    return ComponentLabeling(std::move(out));
}

/// True iff the two maps induce the same partition of the node set.
inline bool same_partition(const ComponentLabeling& a, const ComponentLabeling& b) {
    if (a.size() != b.size()) return false;
    return canonical_components(a) == canonical_components(b);
}

inline Solution make_solution(const Instance& instance, NodeLabeling labeling,
                              ComponentLabeling partition) {
    Solution s{std::move(labeling), std::move(partition), 0.0, false};
    s.objective = objective_of(instance, s.labeling, s.partition);
    s.feasible = is_feasible(instance, s.partition);
    return s;
}

}  // namespace nllmp
