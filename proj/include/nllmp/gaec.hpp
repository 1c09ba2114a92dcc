#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/labeling.hpp"

namespace nllmp {

/// Picks the cheapest label for every node independently, smallest label
/// index on ties.
inline NodeLabeling fix_labels_independently(const Instance& instance) {
    NodeLabeling labeling(instance.num_nodes(), 0);
    for (Node v = 0; v < instance.num_nodes(); ++v) {
        Label best = 0;
        for (Label l = 1; l < instance.num_labels(); ++l)
            if (instance.node_cost(v, l) < instance.node_cost(v, best)) best = l;
        labeling[v] = best;
    }
    return labeling;
}

/// Working state of greedy agglomerative edge contraction: a disjoint-set
/// forest, per component pair the aggregated reward of merging them (the
/// fixed-label cut costs minus join costs over all arcs straddling the
/// pair), and a max-priority queue of contraction candidates. Only pairs
/// linked by a base edge may contract, so the result stays feasible.
class ContractionPool {
public:
    ContractionPool(const Instance& instance, const NodeLabeling& labeling)
        : parent_(instance.num_nodes()), rank_(instance.num_nodes(), 0),
          pairs_(instance.num_nodes()) {
        for (Node v = 0; v < instance.num_nodes(); ++v) parent_[v] = v;
        for (ArcIndex a = 0; a < instance.num_arcs(); ++a) {
            const Arc arc = instance.arc(a);
            const double reward = instance.cut_cost(a, labeling[arc.tail], labeling[arc.head]) -
                                  instance.join_cost(a, labeling[arc.tail], labeling[arc.head]);
            Entry& entry = pairs_[arc.tail][arc.head];
            entry.reward += reward;
            entry.base = entry.base || instance.arc_is_base(a);
            pairs_[arc.head][arc.tail] = entry;
        }
        for (Node v = 0; v < instance.num_nodes(); ++v)
            for (const auto& [w, entry] : pairs_[v])
                if (entry.base && v < w) push(v, w, entry.reward);
    }

    Node find(Node v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    /// Aggregated reward between two live components; zero when no arc
    /// straddles them.
    double pair_reward(Node rep_a, Node rep_b) {
        const auto it = pairs_[rep_a].find(rep_b);
        return it == pairs_[rep_a].end() ? 0.0 : it->second.reward;
    }

    /// Contracts the best strictly improving base-adjacent pair, if any, and
    /// returns it (as representatives before the merge).
    std::optional<std::pair<Node, Node>> contract_best() {
        while (!queue_.empty()) {
            const Candidate top = queue_.top();
            if (!(top.reward > 0)) return std::nullopt;
            queue_.pop();
            if (find(top.a) != top.a || find(top.b) != top.b) continue;
            const auto it = pairs_[top.a].find(top.b);
            if (it == pairs_[top.a].end() || !it->second.base ||
                it->second.reward != top.reward)
                continue;
            contract(top.a, top.b);
            return std::make_pair(top.a, top.b);
        }
        return std::nullopt;
    }

private:
    struct Entry {
        double reward = 0.0;
        bool base = false;
    };

    struct Candidate {
        double reward;
        Node a;  // a < b
        Node b;

        bool operator<(const Candidate& other) const {
            if (reward != other.reward) return reward < other.reward;
            if (a != other.a) return a > other.a;
            return b > other.b;
        }
    };

    void push(Node a, Node b, double reward) {
        queue_.push({reward, std::min(a, b), std::max(a, b)});
    }

    void contract(Node a, Node b) {
        // union by rank; the loser's pair map merges into the winner's
        Node winner = a, loser = b;
        if (rank_[winner] < rank_[loser]) std::swap(winner, loser);
        if (rank_[winner] == rank_[loser]) ++rank_[winner];
        parent_[loser] = winner;
        pairs_[winner].erase(loser);
        pairs_[loser].erase(winner);
        for (const auto& [other, entry] : pairs_[loser]) {
            Entry& merged = pairs_[winner][other];
            merged.reward += entry.reward;
            merged.base = merged.base || entry.base;
            pairs_[other].erase(loser);
            pairs_[other][winner] = merged;
            if (merged.base) push(winner, other, merged.reward);
        }
        pairs_[loser].clear();
    }

    std::vector<Node> parent_;
    std::vector<unsigned> rank_;
    std::vector<std::unordered_map<Node, Entry>> pairs_;
    std::priority_queue<Candidate> queue_;
};

/// Greedy agglomerative edge contraction at fixed labels: starting from
/// singletons, repeatedly merges the base-adjacent component pair with the
/// largest positive aggregated reward, until no merge strictly decreases
/// the objective. Component indices are renumbered by first occurrence.
inline ComponentLabeling gaec(const Instance& instance, const NodeLabeling& labeling) {
    if (labeling.size() != instance.num_nodes())
        throw std::invalid_argument("labeling size does not match the instance");
    ContractionPool pool(instance, labeling);
    while (pool.contract_best()) {
    }
    ComponentLabeling roots(instance.num_nodes());
    for (Node v = 0; v < instance.num_nodes(); ++v) roots[v] = pool.find(v);
    return canonical_components(roots);
}

/// Initial feasible solution: independent label choice, then greedy
/// agglomerative edge contraction on the induced fixed-label problem.
inline Solution initial_solution(const Instance& instance) {
    NodeLabeling labeling = fix_labels_independently(instance);
    ComponentLabeling partition = gaec(instance, labeling);
    return make_solution(instance, std::move(labeling), std::move(partition));
}

/// Every node its own component, labels chosen independently.
inline Solution all_singletons_solution(const Instance& instance) {
    ComponentLabeling partition(instance.num_nodes());
    for (Node v = 0; v < instance.num_nodes(); ++v) partition[v] = v;
    return make_solution(instance, fix_labels_independently(instance), std::move(partition));
}

/// All nodes in one component, labels chosen independently.
inline Solution all_joined_solution(const Instance& instance) {
    return make_solution(instance, fix_labels_independently(instance),
                         ComponentLabeling(instance.num_nodes(), 0));
}

}  // namespace nllmp
