#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace nllmp {

using Node = std::size_t;
using Label = std::size_t;
using ArcIndex = std::size_t;

/// Directed node pair fixing the orientation of a cost-graph edge.
struct Arc {
    Node tail{};
    Node head{};

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// One end of an arc as seen from a node: the arc index, the node at the
/// opposite end, and whether the viewing node is the arc's tail.
struct ArcIncidence {
    ArcIndex arc{};
    Node neighbor{};
    bool at_tail{};

    friend bool operator==(const ArcIncidence&, const ArcIncidence&) = default;
};

/// A problem instance over nodes 0..n-1 and labels 0..k-1.
///
/// The connectivity graph G is given by `base_edges`. The cost graph G' is
/// given by `arcs`, which also fix an orientation per edge; every base edge
/// must appear among the arcs in exactly one orientation. Join costs are
/// paid on an arc whose endpoints share a component, cut costs otherwise;
/// both are dense |arcs| x k x k tensors indexed (arc, tail label, head
/// label). Instances are immutable after construction and safe to share
/// across threads.
class Instance {
public:
    Instance(std::size_t num_nodes, std::size_t num_labels,
             std::vector<std::pair<Node, Node>> base_edges,
             std::vector<Arc> arcs,
             std::vector<double> node_costs,
             std::vector<double> join_costs,
             std::vector<double> cut_costs)
        : num_nodes_(num_nodes),
          num_labels_(num_labels),
          base_edges_(std::move(base_edges)),
          arcs_(std::move(arcs)),
          node_costs_(std::move(node_costs)),
          join_costs_(std::move(join_costs)),
          cut_costs_(std::move(cut_costs)) {
        validate();
        build_adjacency();
    }

    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t num_labels() const { return num_labels_; }
    std::size_t num_base_edges() const { return base_edges_.size(); }
    std::size_t num_arcs() const { return arcs_.size(); }

    const std::vector<std::pair<Node, Node>>& base_edges() const { return base_edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<double>& node_costs() const { return node_costs_; }
    const std::vector<double>& join_costs() const { return join_costs_; }
    const std::vector<double>& cut_costs() const { return cut_costs_; }

    Arc arc(ArcIndex a) const { return arcs_[a]; }
    bool arc_is_base(ArcIndex a) const { return arc_is_base_[a] != 0; }

    double node_cost(Node v, Label l) const { return node_costs_[v * num_labels_ + l]; }

    double join_cost(ArcIndex a, Label tail_label, Label head_label) const {
        return join_costs_[(a * num_labels_ + tail_label) * num_labels_ + head_label];
    }

    double cut_cost(ArcIndex a, Label tail_label, Label head_label) const {
        return cut_costs_[(a * num_labels_ + tail_label) * num_labels_ + head_label];
    }

    /// Join cost of an incident arc with `own` the label of the viewing node.
    double join_cost_from(const ArcIncidence& in, Label own, Label other) const {
        return in.at_tail ? join_cost(in.arc, own, other) : join_cost(in.arc, other, own);
    }

    double cut_cost_from(const ArcIncidence& in, Label own, Label other) const {
        return in.at_tail ? cut_cost(in.arc, own, other) : cut_cost(in.arc, other, own);
    }

    /// Neighbors of v in the connectivity graph G, ascending.
    std::span<const Node> base_neighbors(Node v) const {
        return {base_adjacency_.data() + base_offsets_[v],
                base_offsets_[v + 1] - base_offsets_[v]};
    }

    /// Incidences of v in the cost graph G', in arc-index order.
    std::span<const ArcIncidence> incident_arcs(Node v) const {
        return {incidences_.data() + incidence_offsets_[v],
                incidence_offsets_[v + 1] - incidence_offsets_[v]};
    }

    /// Sum of |c| over all three cost tensors.
    double cost_magnitude_sum() const {
        double total = 0.0;
        for (double c : node_costs_) total += std::abs(c);
        for (double c : join_costs_) total += std::abs(c);
        for (double c : cut_costs_) total += std::abs(c);
        return total;
    }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    static std::uint64_t pair_key(Node v, Node w, std::size_t n) {
        const auto lo = std::min(v, w);
        const auto hi = std::max(v, w);
        return static_cast<std::uint64_t>(lo) * n + hi;
    }

    void validate() const {
        if (num_nodes_ == 0)
            throw std::invalid_argument("instance requires at least one node");
        if (num_labels_ == 0)
            throw std::invalid_argument("instance requires at least one label");
        if (node_costs_.size() != num_nodes_ * num_labels_)
            throw std::invalid_argument("node cost table has wrong size");
        const std::size_t matrix = num_labels_ * num_labels_;
        if (join_costs_.size() != arcs_.size() * matrix)
            throw std::invalid_argument("join cost tensor has wrong size");
        if (cut_costs_.size() != arcs_.size() * matrix)
            throw std::invalid_argument("cut cost tensor has wrong size");
        for (double c : node_costs_)
            if (!std::isfinite(c)) throw std::invalid_argument("node costs must be finite");
        for (double c : join_costs_)
            if (!std::isfinite(c)) throw std::invalid_argument("join costs must be finite");
        for (double c : cut_costs_)
            if (!std::isfinite(c)) throw std::invalid_argument("cut costs must be finite");

        std::unordered_set<std::uint64_t> arc_pairs;
        arc_pairs.reserve(arcs_.size() * 2);
        for (const Arc& a : arcs_) {
            if (a.tail >= num_nodes_ || a.head >= num_nodes_)
                throw std::invalid_argument("arc endpoint out of range");
            if (a.tail == a.head)
                throw std::invalid_argument("self-loop arc");
            if (!arc_pairs.insert(pair_key(a.tail, a.head, num_nodes_)).second)
                throw std::invalid_argument("node pair listed twice among arcs");
        }

        std::unordered_set<std::uint64_t> edge_pairs;
        edge_pairs.reserve(base_edges_.size() * 2);
        for (const auto& [v, w] : base_edges_) {
            if (v >= num_nodes_ || w >= num_nodes_)
                throw std::invalid_argument("base edge endpoint out of range");
            if (v == w)
                throw std::invalid_argument("self-loop base edge");
            if (!edge_pairs.insert(pair_key(v, w, num_nodes_)).second)
                throw std::invalid_argument("duplicate base edge");
            if (arc_pairs.find(pair_key(v, w, num_nodes_)) == arc_pairs.end())
                throw std::invalid_argument("base edge missing from the arc list");
        }

        // G must be connected.
        std::vector<std::vector<Node>> adj(num_nodes_);
        for (const auto& [v, w] : base_edges_) {
            adj[v].push_back(w);
            adj[w].push_back(v);
        }
        std::vector<char> seen(num_nodes_, 0);
        std::vector<Node> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const Node u = queue.back();
            queue.pop_back();
            for (Node w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
        }
        if (reached != num_nodes_)
            throw std::invalid_argument("graph of base edges is not connected");
    }

    void build_adjacency() {
        base_offsets_.assign(num_nodes_ + 1, 0);
        for (const auto& [v, w] : base_edges_) {
            ++base_offsets_[v + 1];
            ++base_offsets_[w + 1];
        }
        for (std::size_t i = 0; i < num_nodes_; ++i)
            base_offsets_[i + 1] += base_offsets_[i];
        base_adjacency_.resize(base_edges_.size() * 2);
        std::vector<std::size_t> cursor(base_offsets_.begin(), base_offsets_.end() - 1);
        for (const auto& [v, w] : base_edges_) {
            base_adjacency_[cursor[v]++] = w;
            base_adjacency_[cursor[w]++] = v;
        }
        for (std::size_t v = 0; v < num_nodes_; ++v)
            std::sort(base_adjacency_.begin() + base_offsets_[v],
                      base_adjacency_.begin() + base_offsets_[v + 1]);

        incidence_offsets_.assign(num_nodes_ + 1, 0);
        for (const Arc& a : arcs_) {
            ++incidence_offsets_[a.tail + 1];
            ++incidence_offsets_[a.head + 1];
        }
        for (std::size_t i = 0; i < num_nodes_; ++i)
            incidence_offsets_[i + 1] += incidence_offsets_[i];
        incidences_.resize(arcs_.size() * 2);
        cursor.assign(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
        for (ArcIndex a = 0; a < arcs_.size(); ++a) {
            const Arc& arc = arcs_[a];
            incidences_[cursor[arc.tail]++] = ArcIncidence{a, arc.head, true};
            incidences_[cursor[arc.head]++] = ArcIncidence{a, arc.tail, false};
        }

        arc_is_base_.assign(arcs_.size(), 0);
        std::unordered_set<std::uint64_t> edge_pairs;
        edge_pairs.reserve(base_edges_.size() * 2);
        for (const auto& [v, w] : base_edges_)
            edge_pairs.insert(pair_key(v, w, num_nodes_));
        for (ArcIndex a = 0; a < arcs_.size(); ++a)
            if (edge_pairs.count(pair_key(arcs_[a].tail, arcs_[a].head, num_nodes_)))
                arc_is_base_[a] = 1;
    }

    std::size_t num_nodes_;
    std::size_t num_labels_;
    std::vector<std::pair<Node, Node>> base_edges_;
    std::vector<Arc> arcs_;
    std::vector<double> node_costs_;
    std::vector<double> join_costs_;
    std::vector<double> cut_costs_;

    // derived adjacency, CSR layout
    std::vector<std::size_t> base_offsets_;
    std::vector<Node> base_adjacency_;
    std::vector<std::size_t> incidence_offsets_;
    std::vector<ArcIncidence> incidences_;
    std::vector<char> arc_is_base_;
};

}  // namespace nllmp
