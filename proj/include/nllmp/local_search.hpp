#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/labeling.hpp"

namespace nllmp {

struct SearchCounters {
    std::uint64_t relabels = 0;
    std::uint64_t moves = 0;
    std::uint64_t joins = 0;
    std::uint64_t repairs = 0;
    std::uint64_t sweeps = 0;
    std::uint64_t alternations = 0;
};

struct TracePoint {
    double elapsed_seconds = 0.0;
    double objective = 0.0;
};

struct SearchTrace {
    std::vector<TracePoint> checkpoints;
    SearchCounters counters;
    bool truncated = false;
};

struct SearchLimits {
    std::optional<double> max_seconds;
    std::optional<std::uint64_t> max_alternations;
};

/// Called at every driver checkpoint with the current state and the
/// incrementally maintained objective value.
using CheckpointObserver =
    std::function<void(const NodeLabeling&, const ComponentLabeling&, double)>;

/// Cost differences of single-node relabels at a fixed partition,
/// maintained incrementally. delta(v, l) always equals the objective change
/// of relabeling v to l at the current labeling; per-node stamps mark rows
/// whose priority-queue entries have gone stale.
class RelabelDeltaCache {
public:
    RelabelDeltaCache(const Instance& instance, const NodeLabeling& labeling,
                      const ComponentLabeling& partition)
        : instance_(instance),
          partition_(partition),
          deltas_(instance.num_nodes() * instance.num_labels(), 0.0),
          stamps_(instance.num_nodes(), 0) {
        const std::size_t k = instance.num_labels();
        for (Node v = 0; v < instance.num_nodes(); ++v) {
            const double current = instance.node_cost(v, labeling[v]);
            for (Label l = 0; l < k; ++l)
                deltas_[v * k + l] = instance.node_cost(v, l) - current;
        }
        for (ArcIndex a = 0; a < instance.num_arcs(); ++a) {
            const Arc arc = instance.arc(a);
            const bool cut = partition[arc.tail] != partition[arc.head];
            const Label lt = labeling[arc.tail];
            const Label lh = labeling[arc.head];
            const double current =
                cut ? instance.cut_cost(a, lt, lh) : instance.join_cost(a, lt, lh);
            for (Label l = 0; l < k; ++l) {
                deltas_[arc.tail * k + l] +=
                    (cut ? instance.cut_cost(a, l, lh) : instance.join_cost(a, l, lh)) -
                    current;
                deltas_[arc.head * k + l] +=
                    (cut ? instance.cut_cost(a, lt, l) : instance.join_cost(a, lt, l)) -
                    current;
            }
        }
    }

    double delta(Node v, Label l) const {
        return deltas_[v * instance_.num_labels() + l];
    }

    std::uint64_t stamp(Node v) const { return stamps_[v]; }

    /// Best relabel of v, smallest label index on ties.
    std::pair<Label, double> best_for(Node v) const {
        const std::size_t k = instance_.num_labels();
        Label best_label = 0;
        double best = deltas_[v * k];
        for (Label l = 1; l < k; ++l)
            if (deltas_[v * k + l] < best) {
                best = deltas_[v * k + l];
                best_label = l;
            }
        return {best_label, best};
    }

    /// Relabels v_hat in `labeling` and refreshes the affected rows; the
    /// nodes whose rows changed (v_hat and its cost-graph neighbors) are
    /// appended to `touched` with their stamps bumped.
    void apply(Node v_hat, Label l_new, NodeLabeling& labeling, std::vector<Node>& touched) {
        const std::size_t k = instance_.num_labels();
        const Label l_old = labeling[v_hat];
        const double chosen = delta(v_hat, l_new);
        for (Label l = 0; l < k; ++l) deltas_[v_hat * k + l] -= chosen;
        ++stamps_[v_hat];
        touched.push_back(v_hat);

        for (const ArcIncidence& in : instance_.incident_arcs(v_hat)) {
            const Node w = in.neighbor;
            const Label lw = labeling[w];
            const bool cut = partition_[v_hat] != partition_[w];
            // cost of the arc with v_hat carrying x and w carrying y
            auto pair_cost = [&](Label x, Label y) {
                return cut ? instance_.cut_cost_from(in, x, y)
                           : instance_.join_cost_from(in, x, y);
            };
            const double new_base = pair_cost(l_new, lw);
            const double old_base = pair_cost(l_old, lw);
            for (Label l = 0; l < k; ++l)
                deltas_[w * k + l] += (pair_cost(l_new, l) - new_base) -
                                      (pair_cost(l_old, l) - old_base);
            ++stamps_[w];
            touched.push_back(w);
        }
        labeling[v_hat] = l_new;
    }

private:
    const Instance& instance_;
    const ComponentLabeling& partition_;
    std::vector<double> deltas_;
    std::vector<std::uint64_t> stamps_;
};

struct LabelingUpdate {
    double delta = 0.0;
    NodeLabeling labeling;
};

namespace detail {

struct RelabelEntry {
    double delta;
    Node node;
    Label label;
    std::uint64_t stamp;
};

struct RelabelEntryWorse {
    bool operator()(const RelabelEntry& a, const RelabelEntry& b) const {
        if (a.delta != b.delta) return a.delta > b.delta;
        if (a.node != b.node) return a.node > b.node;
        return a.label > b.label;
    }
};

}  // namespace detail

/// Greedily applies the single best relabel while it strictly decreases the
/// objective, for a fixed partition. Returns the total change (<= 0) and the
/// final labeling. Candidates are ranked through a priority queue over
/// per-node best entries; entries invalidated by a neighbor update are
/// discarded on pop, a fresh entry having been pushed at update time.
inline LabelingUpdate update_labeling(const Instance& instance,
                                      const ComponentLabeling& partition,
                                      NodeLabeling labeling,
                                      SearchCounters* counters = nullptr) {
    detail::check_state_sizes(instance, labeling.size(), partition.size());
    SearchCounters scratch;
    if (!counters) counters = &scratch;

    RelabelDeltaCache cache(instance, labeling, partition);
    std::priority_queue<detail::RelabelEntry, std::vector<detail::RelabelEntry>,
                        detail::RelabelEntryWorse>
        queue;
    auto push_best = [&](Node v) {
        const auto [label, delta] = cache.best_for(v);
        queue.push({delta, v, label, cache.stamp(v)});
    };
    for (Node v = 0; v < instance.num_nodes(); ++v) push_best(v);

    double total = 0.0;
    std::vector<Node> touched;
    while (!queue.empty()) {
        const detail::RelabelEntry top = queue.top();
        queue.pop();
        if (top.stamp != cache.stamp(top.node)) continue;  // stale
        if (!(top.delta < 0)) break;
        touched.clear();
        cache.apply(top.node, top.label, labeling, touched);
        total += top.delta;
        ++counters->relabels;
        for (Node w : touched) push_best(w);
    }
    return {total, std::move(labeling)};
}

/// Cost differences of moving a boundary node to the opposite one of two
/// components, optionally with a simultaneous relabel. Nodes outside the two
/// components never change sides, so only their arc costs toward the moved
/// node enter the sums.
class TwoCutGains {
public:
    TwoCutGains(const Instance& instance, const NodeLabeling& labeling,
                const ComponentLabeling& partition, std::size_t comp_a, std::size_t comp_b,
                bool joint)
        : instance_(instance),
          comp_a_(comp_a),
          comp_b_(comp_b),
          joint_(joint),
          side_(instance.num_nodes(), 0),
          deltas_(instance.num_nodes() * instance.num_labels(), 0.0) {
        for (Node v = 0; v < instance.num_nodes(); ++v) {
            if (partition[v] == comp_a)
                side_[v] = 1;
            else if (partition[v] == comp_b)
                side_[v] = 2;
            if (side_[v] != 0) members_.push_back(v);
        }
        for (Node v : members_) init_row(v, labeling);
    }

    int side(Node v) const { return side_[v]; }
    const std::vector<Node>& members() const { return members_; }

    /// Objective change of moving v to the opposite side and labeling it l.
    double delta(Node v, Label l) const {
        return deltas_[v * instance_.num_labels() + l];
    }

    /// Executes the move on the working state and refreshes the rows of all
    /// member neighbors. The moved node's own row goes stale; callers mark
    /// it inactive.
    void apply_move(Node v_hat, Label l_new, NodeLabeling& labeling,
                    ComponentLabeling& partition) {
        const int s_old = side_[v_hat];
        const int s_new = 3 - s_old;
        const Label l_old = labeling[v_hat];

        for (const ArcIncidence& in : instance_.incident_arcs(v_hat)) {
            const Node w = in.neighbor;
            if (side_[w] == 0) continue;
            const Label lw = labeling[w];
            // v_hat's term inside delta(w, l): w moves, v_hat stays put
            auto contribution = [&](int v_side, Label lv) {
                const bool together = v_side == side_[w];
                return [this, &in, lw, together, lv](Label l) {
                    return together ? instance_.cut_cost_from(in, lv, l) -
                                          instance_.join_cost_from(in, lv, lw)
                                    : instance_.join_cost_from(in, lv, l) -
                                          instance_.cut_cost_from(in, lv, lw);
                };
            };
            const auto before = contribution(s_old, l_old);
            const auto after = contribution(s_new, l_new);
            const std::size_t k = instance_.num_labels();
            if (joint_) {
                for (Label l = 0; l < k; ++l)
                    deltas_[w * k + l] += after(l) - before(l);
            } else {
                deltas_[w * k + lw] += after(lw) - before(lw);
            }
        }
        side_[v_hat] = s_new;
        partition[v_hat] = s_new == 1 ? comp_a_ : comp_b_;
        labeling[v_hat] = l_new;
    }

private:
    void init_row(Node v, const NodeLabeling& labeling) {
        const std::size_t k = instance_.num_labels();
        const Label lv = labeling[v];
        const int sv = side_[v];
        auto row = [&](Label l) -> double& { return deltas_[v * k + l]; };

        if (joint_) {
            const double current = instance_.node_cost(v, lv);
            for (Label l = 0; l < k; ++l) row(l) = instance_.node_cost(v, l) - current;
        }
        for (const ArcIncidence& in : instance_.incident_arcs(v)) {
            const Node w = in.neighbor;
            const Label lw = labeling[w];
            const int sw = side_[w];
            // term(l): this arc's cost change when v moves and takes label l
            auto accumulate = [&](auto&& term) {
                if (joint_)
                    for (Label l = 0; l < k; ++l) row(l) += term(l);
                else
                    row(lv) += term(lv);
            };
            if (sw == sv) {
                accumulate([&](Label l) {
                    return instance_.cut_cost_from(in, l, lw) -
                           instance_.join_cost_from(in, lv, lw);
                });
            } else if (sw != 0) {
                accumulate([&](Label l) {
                    return instance_.join_cost_from(in, l, lw) -
                           instance_.cut_cost_from(in, lv, lw);
                });
            } else if (joint_) {
                // stays cut, only the label changes
                for (Label l = 0; l < k; ++l)
                    row(l) += instance_.cut_cost_from(in, l, lw) -
                              instance_.cut_cost_from(in, lv, lw);
            }
        }
    }

    const Instance& instance_;
    std::size_t comp_a_;
    std::size_t comp_b_;
    bool joint_;
    std::vector<int> side_;
    std::vector<Node> members_;
    std::vector<double> deltas_;
};

struct TwoCutUpdate {
    double delta = 0.0;
    ComponentLabeling partition;
    NodeLabeling labeling;
};

/// Kernighan-Lin pass over the two components comp_a and comp_b: greedily
/// builds a sequence of single-node moves between them (with simultaneous
/// relabels when `joint` is set), then keeps the cheapest prefix, unless
/// joining comp_a into comp_b is cheaper still. Returns the input state with
/// delta 0 when neither improves. Intermediate and returned partitions may
/// be infeasible; the sweep loop repairs them.
inline TwoCutUpdate update_two_cut(const Instance& instance, ComponentLabeling partition,
                                   NodeLabeling labeling, std::size_t comp_a,
                                   std::size_t comp_b, bool joint,
                                   SearchCounters* counters = nullptr) {
    detail::check_state_sizes(instance, labeling.size(), partition.size());
    SearchCounters scratch;
    if (!counters) counters = &scratch;
    if (comp_a == comp_b) return {0.0, std::move(partition), std::move(labeling)};

    const ComponentLabeling partition0 = partition;
    const NodeLabeling labeling0 = labeling;
    const std::size_t k = instance.num_labels();

    TwoCutGains gains(instance, labeling, partition, comp_a, comp_b, joint);
    std::vector<Node> side_a0, side_b0;
    for (Node v : gains.members())
        (gains.side(v) == 1 ? side_a0 : side_b0).push_back(v);

    std::vector<char> active(instance.num_nodes(), 1);
    // count of base neighbors in the opposite component, members only
    std::vector<std::size_t> opposite_count(instance.num_nodes(), 0);
    for (Node v : gains.members())
        for (Node w : instance.base_neighbors(v))
            if (gains.side(w) != 0 && gains.side(w) != gains.side(v)) ++opposite_count[v];

    auto candidate = [&](Node v, int wanted_side) {
        return gains.side(v) == wanted_side && active[v] && opposite_count[v] > 0;
    };

    struct Move {
        Node node;
        Label label;
        std::size_t target;
    };
    std::vector<Move> sequence;
    double cumulative = 0.0;
    double best_cumulative = 0.0;
    std::size_t best_length = 0;

    bool first_round = true;
    for (;;) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        double delta_v = inf, delta_w = inf;
        Node pick_v = 0, pick_w = 0;
        Label label_v = 0, label_w = 0;

        auto scan = [&](Node v, double& best, Node& pick, Label& pick_label) {
            if (joint) {
                for (Label l = 0; l < k; ++l)
                    if (gains.delta(v, l) < best) {
                        best = gains.delta(v, l);
                        pick = v;
                        pick_label = l;
                    }
            } else {
                const Label l = labeling[v];
                if (gains.delta(v, l) < best) {
                    best = gains.delta(v, l);
                    pick = v;
                    pick_label = l;
                }
            }
        };
        if (first_round) {
            // full component when the opposite side starts empty
            for (Node v : side_a0)
                if (side_b0.empty() ? active[v] : candidate(v, 1)) scan(v, delta_v, pick_v, label_v);
            for (Node w : side_b0)
                if (side_a0.empty() ? active[w] : candidate(w, 2)) scan(w, delta_w, pick_w, label_w);
        } else {
            for (Node v : gains.members())
                if (candidate(v, 1)) scan(v, delta_v, pick_v, label_v);
            for (Node w : gains.members())
                if (candidate(w, 2)) scan(w, delta_w, pick_w, label_w);
        }
        if (delta_v == inf && delta_w == inf) break;

        Node mover;
        Label mover_label;
        std::size_t target;
        double step;
        if (delta_v <= delta_w) {
            mover = pick_v;
            mover_label = label_v;
            target = comp_b;
            step = delta_v;
        } else {
            mover = pick_w;
            mover_label = label_w;
            target = comp_a;
            step = delta_w;
        }
        gains.apply_move(mover, mover_label, labeling, partition);
        active[mover] = 0;
        for (Node u : instance.base_neighbors(mover)) {
            if (gains.side(u) == 0) continue;
            if (gains.side(u) == gains.side(mover))
                --opposite_count[u];  // the mover now sits beside u
            else
                ++opposite_count[u];  // u stayed behind on the old side
        }
        sequence.push_back({mover, mover_label, target});
        cumulative += step;
        if (cumulative < best_cumulative) {
            best_cumulative = cumulative;
            best_length = sequence.size();
        }
        first_round = false;
    }

    const double delta_prefix = best_cumulative;

    // joining comp_a into comp_b, evaluated at the original state
    double delta_join = 0.0;
    for (Node v : side_a0)
        for (const ArcIncidence& in : instance.incident_arcs(v))
            if (partition0[in.neighbor] == comp_b)
                delta_join += instance.join_cost_from(in, labeling0[v], labeling0[in.neighbor]) -
                              instance.cut_cost_from(in, labeling0[v], labeling0[in.neighbor]);

    if (!(delta_prefix < 0) && !(delta_join < 0))
        return {0.0, partition0, labeling0};

    if (delta_prefix < delta_join) {
        partition = partition0;
        labeling = labeling0;
        for (std::size_t i = 0; i < best_length; ++i) {
            partition[sequence[i].node] = sequence[i].target;
            labeling[sequence[i].node] = sequence[i].label;
        }
        counters->moves += best_length;
        return {delta_prefix, std::move(partition), std::move(labeling)};
    }

    partition = partition0;
    for (Node v : side_a0) partition[v] = comp_b;
    ++counters->joins;
    return {delta_join, std::move(partition), labeling0};
}

struct MulticutUpdate {
    double delta = 0.0;
    ComponentLabeling partition;
    NodeLabeling labeling;
};

namespace detail {

// Activity flags keyed by component index; indices beyond the stored range
// carry the fallback value.
struct ActivityFlags {
    std::vector<char> flags;
    bool fallback = false;

    bool get(std::size_t m) const {
        return m < flags.size() ? flags[m] != 0 : fallback;
    }
    void set(std::size_t m) {
        if (m >= flags.size()) flags.resize(m + 1, fallback ? 1 : 0);
        flags[m] = 1;
    }
};

inline std::vector<std::size_t> sorted_component_indices(const ComponentLabeling& partition) {
    std::vector<std::size_t> out(partition.values());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Sweeps all unordered component pairs, and every component against a fresh
/// index, through update_two_cut; pairs untouched in the previous sweep are
/// skipped. With `joint` set, the labeling is updated once before the first
/// sweep and once after each sweep. If a sweep leaves the partition
/// infeasible it is repaired and the sweep's delta recomputed against the
/// sweep start; a sweep that ends up worse than its start is rolled back.
/// Sweeps repeat while they strictly improve. The returned partition is
/// feasible and the total delta is <= 0.
inline MulticutUpdate update_lifted_multicut(const Instance& instance,
                                             ComponentLabeling partition,
                                             NodeLabeling labeling, bool joint,
                                             SearchCounters* counters = nullptr) {
    detail::check_state_sizes(instance, labeling.size(), partition.size());
    SearchCounters scratch;
    if (!counters) counters = &scratch;

    double total = 0.0;
    if (joint) {
        auto r = update_labeling(instance, partition, std::move(labeling), counters);
        total += r.delta;
        labeling = std::move(r.labeling);
    }

    detail::ActivityFlags alpha{{}, true};
    for (;;) {
        const double objective_start = objective_of(instance, labeling, partition);
        const ComponentLabeling partition_start = partition;
        const NodeLabeling labeling_start = labeling;
        double sweep_delta = 0.0;
        detail::ActivityFlags alpha_next{{}, false};

        const auto components = detail::sorted_component_indices(partition);
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j) {
                const std::size_t m = components[i];
                const std::size_t m2 = components[j];
                if (!alpha.get(m) && !alpha.get(m2)) continue;
                auto r = update_two_cut(instance, std::move(partition), std::move(labeling),
                                        m, m2, joint, counters);
                partition = std::move(r.partition);
                labeling = std::move(r.labeling);
                if (r.delta < 0) {
                    alpha_next.set(m);
                    alpha_next.set(m2);
                    sweep_delta += r.delta;
                }
            }
        for (const std::size_t m : components) {
            if (!alpha.get(m)) continue;
            const std::size_t fresh =
                1 + *std::max_element(partition.values().begin(), partition.values().end());
            auto r = update_two_cut(instance, std::move(partition), std::move(labeling), m,
                                    fresh, joint, counters);
            partition = std::move(r.partition);
            labeling = std::move(r.labeling);
            if (r.delta < 0) {
                alpha_next.set(m);
                alpha_next.set(fresh);
                sweep_delta += r.delta;
            }
        }
        if (joint) {
            auto r = update_labeling(instance, partition, std::move(labeling), counters);
            sweep_delta += r.delta;
            labeling = std::move(r.labeling);
        }

        if (!is_feasible(instance, partition)) {
            ++counters->repairs;
            const ComponentLabeling repaired = repair(instance, partition);
            detail::ActivityFlags remapped{{}, false};
            for (Node v = 0; v < instance.num_nodes(); ++v)
                if (alpha_next.get(partition[v])) remapped.set(repaired[v]);
            alpha_next = std::move(remapped);
            partition = repaired;
            sweep_delta = objective_of(instance, labeling, partition) - objective_start;
            if (sweep_delta > 0) {
                // the repaired sweep made things worse; discard it
                partition = partition_start;
                labeling = labeling_start;
                ++counters->sweeps;
                break;
            }
        }

        ++counters->sweeps;
        total += sweep_delta;
        alpha = std::move(alpha_next);
        if (!(sweep_delta < 0)) break;
    }
    return {total, std::move(partition), std::move(labeling)};
}

namespace detail {

inline std::pair<Solution, SearchTrace> run_alternating(const Instance& instance,
                                                        const Solution& initial,
                                                        const SearchLimits& limits, bool joint,
                                                        const CheckpointObserver& observer) {
    check_state_sizes(instance, initial.labeling.size(), initial.partition.size());
    if (!is_feasible(instance, initial.partition))
        throw std::invalid_argument("initial solution must be feasible");

    NodeLabeling labeling = initial.labeling;
    ComponentLabeling partition = initial.partition;
    double objective = objective_of(instance, labeling, partition);

    SearchTrace trace;
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto checkpoint = [&] {
        trace.checkpoints.push_back({elapsed(), objective});
        if (observer) observer(labeling, partition, objective);
    };
    checkpoint();

    for (;;) {
        if (limits.max_alternations &&
            trace.counters.alternations >= *limits.max_alternations) {
            trace.truncated = true;
            break;
        }
        if (limits.max_seconds && elapsed() >= *limits.max_seconds) {
            trace.truncated = true;
            break;
        }
        auto relabeled = update_labeling(instance, partition, std::move(labeling),
                                         &trace.counters);
        labeling = std::move(relabeled.labeling);
        auto reshaped = update_lifted_multicut(instance, std::move(partition),
                                               std::move(labeling), joint, &trace.counters);
        partition = std::move(reshaped.partition);
        labeling = std::move(reshaped.labeling);
        objective += relabeled.delta + reshaped.delta;
        ++trace.counters.alternations;
        checkpoint();
        if (!(relabeled.delta < 0) && !(reshaped.delta < 0)) break;
    }

    Solution out{std::move(labeling), std::move(partition), 0.0, false};
    out.objective = objective_of(instance, out.labeling, out.partition);
    out.feasible = is_feasible(instance, out.partition);
    return {std::move(out), std::move(trace)};
}

}  // namespace detail

/// Alternating search: relabeling sweeps at a fixed partition alternate with
/// Kernighan-Lin partition sweeps (moves and joins) at a fixed labeling,
/// while either yields a strict improvement.
inline std::pair<Solution, SearchTrace> solve_kljr(const Instance& instance,
                                                   const Solution& initial,
                                                   const SearchLimits& limits = {},
                                                   const CheckpointObserver& observer = {}) {
    return detail::run_alternating(instance, initial, limits, false, observer);
}

/// Joint search: like solve_kljr, but the partition sweeps move a node and
/// relabel it simultaneously, a strictly larger local neighborhood.
inline std::pair<Solution, SearchTrace> solve_klj_star_r(
    const Instance& instance, const Solution& initial, const SearchLimits& limits = {},
    const CheckpointObserver& observer = {}) {
    return detail::run_alternating(instance, initial, limits, true, observer);
}

/// Relabeling sweeps only; the partition never changes.
inline std::pair<Solution, SearchTrace> solve_icm(const Instance& instance,
                                                  const Solution& initial,
                                                  const SearchLimits& limits = {},
                                                  const CheckpointObserver& observer = {}) {
    detail::check_state_sizes(instance, initial.labeling.size(), initial.partition.size());
    if (!is_feasible(instance, initial.partition))
        throw std::invalid_argument("initial solution must be feasible");
    (void)limits;
    SearchTrace trace;
    const auto start = std::chrono::steady_clock::now();
    double objective = objective_of(instance, initial.labeling, initial.partition);
    trace.checkpoints.push_back({0.0, objective});
    if (observer) observer(initial.labeling, initial.partition, objective);
    auto r = update_labeling(instance, initial.partition, initial.labeling, &trace.counters);
    objective += r.delta;
    ++trace.counters.alternations;
    const double took =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    trace.checkpoints.push_back({took, objective});
    if (observer) observer(r.labeling, initial.partition, objective);
    Solution out{std::move(r.labeling), initial.partition, 0.0, false};
    out.objective = objective_of(instance, out.labeling, out.partition);
    out.feasible = is_feasible(instance, out.partition);
    return {std::move(out), std::move(trace)};
}

}  // namespace nllmp
