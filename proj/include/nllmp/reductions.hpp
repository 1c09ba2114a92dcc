#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/labeling.hpp"

namespace nllmp {

/// A cost large enough that no optimal solution ever pays it: twice the sum
/// of the magnitudes of all finite costs, plus two. Twice, because swapping
/// one solution for another can change the finite part of the objective by
/// up to two times that sum.
inline double dominating_cost(const Instance& instance) {
    return 2.0 * instance.cost_magnitude_sum() + 2.0;
}

/// Node labeling problem with a quadratic objective: pair costs are paid
/// regardless of any partition.
struct UiqpSpec {
    std::size_t num_nodes = 0;
    std::size_t num_labels = 0;
    std::vector<Arc> arcs;
    std::vector<double> node_costs;  // num_nodes x num_labels
    std::vector<double> pair_costs;  // |arcs| x num_labels^2, tail label major
};

/// Builds the equivalent instance: the connectivity graph equals the cost
/// graph, join and cut costs both equal the pair costs, so the objective of
/// any labeling is independent of the partition. A disconnected cost graph
/// is made connected with zero-cost arcs chaining the components.
inline Instance from_uiqp(const UiqpSpec& spec) {
    if (spec.num_nodes == 0 || spec.num_labels == 0)
        throw std::invalid_argument("uiqp spec requires nodes and labels");
    const std::size_t matrix = spec.num_labels * spec.num_labels;
    if (spec.node_costs.size() != spec.num_nodes * spec.num_labels)
        throw std::invalid_argument("uiqp node cost table has wrong size");
    if (spec.pair_costs.size() != spec.arcs.size() * matrix)
        throw std::invalid_argument("uiqp pair cost table has wrong size");

    std::vector<Arc> arcs = spec.arcs;
    std::vector<double> pair_costs = spec.pair_costs;

    // chain the components of the cost graph with zero-cost arcs
    std::vector<std::size_t> comp(spec.num_nodes, spec.num_nodes);
    std::vector<Node> reps;
    std::vector<std::vector<Node>> adj(spec.num_nodes);
    for (const Arc& a : arcs) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    for (Node seed = 0; seed < spec.num_nodes; ++seed) {
        if (comp[seed] != spec.num_nodes) continue;
        reps.push_back(seed);
        std::vector<Node> stack{seed};
        comp[seed] = reps.size() - 1;
        while (!stack.empty()) {
            const Node u = stack.back();
            stack.pop_back();
            for (Node w : adj[u])
                if (comp[w] == spec.num_nodes) {
                    comp[w] = reps.size() - 1;
                    stack.push_back(w);
                }
        }
    }
    for (std::size_t i = 1; i < reps.size(); ++i) {
        arcs.push_back({std::min(reps[i - 1], reps[i]), std::max(reps[i - 1], reps[i])});
        pair_costs.insert(pair_costs.end(), matrix, 0.0);
    }

    std::vector<std::pair<Node, Node>> base_edges;
    base_edges.reserve(arcs.size());
    for (const Arc& a : arcs) base_edges.emplace_back(a.tail, a.head);

    std::vector<double> cut_costs = pair_costs;
    return Instance(spec.num_nodes, spec.num_labels, std::move(base_edges), std::move(arcs),
                    spec.node_costs, std::move(pair_costs), std::move(cut_costs));
}

/// Pure decomposition problem: one edge cost per connectivity or lifted
/// edge, paid when the endpoints are in distinct components.
struct LmpSpec {
    std::size_t num_nodes = 0;
    std::vector<std::pair<Node, Node>> base_edges;
    std::vector<double> base_costs;
    std::vector<std::pair<Node, Node>> lifted_edges;
    std::vector<double> lifted_costs;
};

/// Builds the equivalent single-label instance: zero node and join costs,
/// cut costs carrying the edge costs.
inline Instance from_lmp(const LmpSpec& spec) {
    if (spec.base_costs.size() != spec.base_edges.size() ||
        spec.lifted_costs.size() != spec.lifted_edges.size())
        throw std::invalid_argument("lmp cost list does not match its edge list");
    std::vector<Arc> arcs;
    std::vector<double> cut_costs;
    auto add = [&](const std::pair<Node, Node>& e, double cost) {
        arcs.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
        cut_costs.push_back(cost);
    };
    for (std::size_t i = 0; i < spec.base_edges.size(); ++i)
        add(spec.base_edges[i], spec.base_costs[i]);
    for (std::size_t i = 0; i < spec.lifted_edges.size(); ++i)
        add(spec.lifted_edges[i], spec.lifted_costs[i]);
    const std::size_t num_arcs = arcs.size();
    return Instance(spec.num_nodes, 1, spec.base_edges, std::move(arcs),
                    std::vector<double>(spec.num_nodes, 0.0),
                    std::vector<double>(num_arcs, 0.0), std::move(cut_costs));
}

/// Turns one label into a suppression marker: joining an epsilon node with a
/// non-epsilon node costs c_star on every arc, cutting them is free, and
/// joining two epsilon nodes costs c_dagger. With c_star dominating, no
/// optimal solution mixes suppressed and live nodes in one component; with
/// c_dagger dominating too, suppressed nodes end up isolated.
inline Instance apply_subgraph_selection(const Instance& instance, Label epsilon,
                                         double c_star, double c_dagger,
                                         std::vector<std::string>* warnings = nullptr) {
    if (epsilon >= instance.num_labels())
        throw std::invalid_argument("epsilon label out of range");
    if (warnings && !(c_star > dominating_cost(instance)))
        warnings->push_back("c_star does not strictly dominate the objective spread");
    const std::size_t k = instance.num_labels();
    std::vector<double> join = instance.join_costs();
    std::vector<double> cut = instance.cut_costs();
    for (ArcIndex a = 0; a < instance.num_arcs(); ++a)
        for (Label l = 0; l < k; ++l)
            for (Label l2 = 0; l2 < k; ++l2) {
                const std::size_t at = (a * k + l) * k + l2;
                if ((l == epsilon) != (l2 == epsilon)) {
                    join[at] = c_star;
                    cut[at] = 0.0;
                } else if (l == epsilon && l2 == epsilon) {
                    join[at] = c_dagger;
                }
            }
    return Instance(instance.num_nodes(), k, instance.base_edges(), instance.arcs(),
                    instance.node_costs(), std::move(join), std::move(cut));
}

namespace detail {

inline Instance with_pair_penalty(const Instance& instance, Node v, Node w, Label l, Label l2,
                                  double c_star, bool penalize_cut) {
    if (v == w) throw std::invalid_argument("constraint requires two distinct nodes");
    if (v >= instance.num_nodes() || w >= instance.num_nodes())
        throw std::invalid_argument("node out of range");
    if (l >= instance.num_labels() || l2 >= instance.num_labels())
        throw std::invalid_argument("label out of range");

    const std::size_t k = instance.num_labels();
    std::vector<Arc> arcs = instance.arcs();
    std::vector<double> join = instance.join_costs();
    std::vector<double> cut = instance.cut_costs();

    ArcIndex target = arcs.size();
    for (ArcIndex a = 0; a < arcs.size(); ++a) {
        const Arc arc = arcs[a];
        if ((arc.tail == v && arc.head == w) || (arc.tail == w && arc.head == v)) {
            target = a;
            break;
        }
    }
    if (target == arcs.size()) {
        arcs.push_back({std::min(v, w), std::max(v, w)});
        join.insert(join.end(), k * k, 0.0);
        cut.insert(cut.end(), k * k, 0.0);
    }
    // the (l, l2) entry with l on node v, in the arc's own orientation
    const bool v_is_tail = arcs[target].tail == v;
    auto at = [&](Label lv, Label lw) {
        return v_is_tail ? (target * k + lv) * k + lw : (target * k + lw) * k + lv;
    };
    std::vector<double>& tensor = penalize_cut ? cut : join;
    tensor[at(l, l2)] = c_star;
    tensor[at(l2, l)] = c_star;
    return Instance(instance.num_nodes(), k, instance.base_edges(), std::move(arcs),
                    instance.node_costs(), std::move(join), std::move(cut));
}

}  // namespace detail

/// Penalizes cutting v from w when they carry labels (l, l2) or (l2, l);
/// with a dominating c_star this forces them into one component.
inline Instance add_must_link(const Instance& instance, Node v, Node w, Label l, Label l2,
                              double c_star) {
    return detail::with_pair_penalty(instance, v, w, l, l2, c_star, true);
}

/// Penalizes joining v and w when they carry labels (l, l2) or (l2, l);
/// with a dominating c_star this forces them into distinct components.
inline Instance add_cannot_link(const Instance& instance, Node v, Node w, Label l, Label l2,
                                double c_star) {
    return detail::with_pair_penalty(instance, v, w, l, l2, c_star, false);
}

/// Body part detections to assemble into people: unaries per detection and
/// class, pairwise costs per unordered detection pair and class pair, paid
/// on a join. Unlisted pairs cost zero.
struct PoseSpec {
    std::size_t num_detections = 0;
    std::size_t num_classes = 0;
    std::vector<double> unaries;  // num_detections x num_classes
    std::map<std::pair<Node, Node>, std::vector<double>> pair_costs;  // (d, d'), d < d'
};

/// Builds the instance on complete graphs over the detections, with one
/// extra suppression label after the classes. Joining two suppressed
/// detections carries a dominating cost, so suppressed detections are
/// isolated in optima. The source convention pays pair costs on joins, which
/// maps to join costs here (the cut indicator is inverted on the way in).
inline Instance from_pose(const PoseSpec& spec) {
    const std::size_t d = spec.num_detections;
    const std::size_t c = spec.num_classes;
    if (d == 0 || c == 0) throw std::invalid_argument("pose spec requires detections and classes");
    if (spec.unaries.size() != d * c)
        throw std::invalid_argument("pose unary table has wrong size");
    double magnitude = 0.0;
    for (double x : spec.unaries) magnitude += std::abs(x);
    for (const auto& [pair, costs] : spec.pair_costs) {
        if (pair.first >= pair.second || pair.second >= d)
            throw std::invalid_argument("pose pair out of range or unordered");
        if (costs.size() != c * c)
            throw std::invalid_argument("pose pair cost block has wrong size");
        for (double x : costs) magnitude += std::abs(x);
    }
    const double isolation = 2.0 * magnitude + 2.0;

    const std::size_t k = c + 1;  // classes plus the suppression label
    const Label epsilon = c;
    std::vector<std::pair<Node, Node>> base_edges;
    std::vector<Arc> arcs;
    for (Node v = 0; v < d; ++v)
        for (Node w = v + 1; w < d; ++w) {
            base_edges.emplace_back(v, w);
            arcs.push_back({v, w});
        }

    std::vector<double> node_costs(d * k, 0.0);
    for (Node v = 0; v < d; ++v)
        for (Label l = 0; l < c; ++l) node_costs[v * k + l] = spec.unaries[v * c + l];

    std::vector<double> join(arcs.size() * k * k, 0.0);
    std::vector<double> cut(arcs.size() * k * k, 0.0);
    for (ArcIndex a = 0; a < arcs.size(); ++a) {
        const auto key = std::make_pair(arcs[a].tail, arcs[a].head);
        const auto it = spec.pair_costs.find(key);
        for (Label l = 0; l < c; ++l)
            for (Label l2 = 0; l2 < c; ++l2)
                if (it != spec.pair_costs.end())
                    join[(a * k + l) * k + l2] = it->second[l * c + l2];
        join[(a * k + epsilon) * k + epsilon] = isolation;
    }
    return Instance(d, k, std::move(base_edges), std::move(arcs), std::move(node_costs),
                    std::move(join), std::move(cut));
}

/// Detections to link into tracks: one activation cost per detection,
/// one pairwise cost per edge, paid when two active detections are joined.
struct TrackingSpec {
    std::size_t num_detections = 0;
    std::vector<std::pair<Node, Node>> edges;
    std::vector<double> unaries;     // per detection
    std::vector<double> pair_costs;  // per edge
};

/// Builds the two-label instance: label 0 suppresses a detection at zero
/// cost, label 1 activates it at its unary cost. Pair costs are paid when
/// two active detections are joined; joining suppressed detections carries a
/// dominating cost. Same join-to-cut inversion as from_pose.
inline Instance from_tracking(const TrackingSpec& spec) {
    if (spec.num_detections == 0)
        throw std::invalid_argument("tracking spec requires detections");
    if (spec.unaries.size() != spec.num_detections)
        throw std::invalid_argument("tracking unary table has wrong size");
    if (spec.pair_costs.size() != spec.edges.size())
        throw std::invalid_argument("tracking pair cost list does not match its edge list");
    double magnitude = 0.0;
    for (double x : spec.unaries) magnitude += std::abs(x);
    for (double x : spec.pair_costs) magnitude += std::abs(x);
    const double isolation = 2.0 * magnitude + 2.0;

    constexpr Label epsilon = 0;
    constexpr Label active = 1;
    constexpr std::size_t k = 2;
    std::vector<Arc> arcs;
    arcs.reserve(spec.edges.size());
    for (const auto& [v, w] : spec.edges) arcs.push_back({std::min(v, w), std::max(v, w)});

    std::vector<double> node_costs(spec.num_detections * k, 0.0);
    for (Node v = 0; v < spec.num_detections; ++v)
        node_costs[v * k + active] = spec.unaries[v];

    std::vector<double> join(arcs.size() * k * k, 0.0);
    std::vector<double> cut(arcs.size() * k * k, 0.0);
    for (ArcIndex a = 0; a < arcs.size(); ++a) {
        join[(a * k + active) * k + active] = spec.pair_costs[a];
        join[(a * k + epsilon) * k + epsilon] = isolation;
    }
    return Instance(spec.num_detections, k, spec.edges, std::move(arcs),
                    std::move(node_costs), std::move(join), std::move(cut));
}

}  // namespace nllmp
