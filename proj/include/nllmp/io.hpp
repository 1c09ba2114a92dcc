#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nllmp/instance.hpp"
#include "nllmp/labeling.hpp"
#include "nllmp/reductions.hpp"

namespace nllmp {

/// Everything the parsers can reject, each attributable to a line.
enum class ParseErrorCode {
    syntax,                // unexpected token, missing keyword, trailing input
    bad_number,            // token is not a number of the expected kind
    invalid_value,         // number out of its allowed range (zero nodes, bad flag, ...)
    truncated,             // input ended early
    node_out_of_range,
    self_loop,
    duplicate_edge,        // base edge or arc pair listed twice in one orientation
    orientation_conflict,  // arc pair listed in both orientations
    missing_base_arc,      // base edge absent from the arc list
    disconnected_graph,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          code_(code),
          line_(line),
          column_(column) {}

    ParseErrorCode code() const { return code_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorCode code_;
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

// Whitespace-separated tokens; '#' comments run to the end of the line.
class Tokenizer {
public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    struct Token {
        std::string_view text;
        std::size_t line;
        std::size_t column;
    };

    bool at_end() {
        skip();
        return pos_ == text_.size();
    }

    Token next(const char* expected_kind) {
        skip();
        if (pos_ == text_.size())
            throw ParseError(ParseErrorCode::truncated, line_, column_,
                             std::string("expected ") + expected_kind +
                                 ", but the input ended");
        const std::size_t start = pos_;
        const std::size_t start_line = line_;
        const std::size_t start_column = column_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '#')
            advance();
        return {text_.substr(start, pos_ - start), start_line, start_column};
    }

    void expect_keyword(std::string_view keyword) {
        const Token token = next(("keyword '" + std::string(keyword) + "'").c_str());
        if (token.text != keyword)
            throw ParseError(ParseErrorCode::syntax, token.line, token.column,
                             "expected keyword '" + std::string(keyword) + "', found '" +
                                 std::string(token.text) + "'");
    }

    std::size_t read_size(const char* what) {
        const Token token = next(what);
        std::size_t value = 0;
        const auto [end, err] =
            std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
        if (err != std::errc{} || end != token.text.data() + token.text.size())
            throw ParseError(ParseErrorCode::bad_number, token.line, token.column,
                             std::string("expected a nonnegative integer for ") + what +
                                 ", found '" + std::string(token.text) + "'");
        last_line_ = token.line;
        last_column_ = token.column;
        return value;
    }

    double read_double(const char* what) {
        const Token token = next(what);
        double value = 0.0;
        const auto [end, err] =
            std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
        if (err != std::errc{} || end != token.text.data() + token.text.size())
            throw ParseError(ParseErrorCode::bad_number, token.line, token.column,
                             std::string("expected a number for ") + what + ", found '" +
                                 std::string(token.text) + "'");
        last_line_ = token.line;
        last_column_ = token.column;
        return value;
    }

    std::size_t last_line() const { return last_line_; }
    std::size_t last_column() const { return last_column_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    void expect_end() {
        if (!at_end()) {
            const Token extra = next("end of input");
            throw ParseError(ParseErrorCode::syntax, extra.line, extra.column,
                             "trailing input after the document: '" + std::string(extra.text) +
                                 "'");
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    std::size_t last_line_ = 1;
    std::size_t last_column_ = 1;
};

inline std::string format_number(double value) {
    char buffer[64];
    const auto [end, err] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (err != std::errc{}) return "0";
    return std::string(buffer, end);
}

inline Node read_node(Tokenizer& tok, std::size_t num_nodes, const char* what) {
    const std::size_t value = tok.read_size(what);
    if (value >= num_nodes)
        throw ParseError(ParseErrorCode::node_out_of_range, tok.last_line(), tok.last_column(),
                         std::string(what) + " " + std::to_string(value) +
                             " is out of range for " + std::to_string(num_nodes) + " nodes");
    return value;
}

}  // namespace detail

/// Parses the canonical instance format. Diagnostics carry line and column.
inline Instance parse_instance(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("nllmp-instance");

    tok.expect_keyword("nodes");
    const std::size_t num_nodes = tok.read_size("the node count");
    if (num_nodes == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "an instance needs at least one node");
    tok.expect_keyword("labels");
    const std::size_t num_labels = tok.read_size("the label count");
    if (num_labels == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "an instance needs at least one label");

    tok.expect_keyword("node-costs");
    std::vector<double> node_costs(num_nodes * num_labels);
    for (double& c : node_costs) c = tok.read_double("a node cost");

    tok.expect_keyword("base-edges");
    const std::size_t num_edges = tok.read_size("the base edge count");
    std::vector<std::pair<Node, Node>> base_edges;
    std::vector<std::pair<std::size_t, std::size_t>> edge_positions;
    base_edges.reserve(num_edges);
    std::unordered_map<std::uint64_t, char> seen_pairs;
    auto pair_key = [num_nodes](Node v, Node w) {
        return static_cast<std::uint64_t>(std::min(v, w)) * num_nodes + std::max(v, w);
    };
    for (std::size_t i = 0; i < num_edges; ++i) {
        const Node v = detail::read_node(tok, num_nodes, "base edge endpoint");
        const Node w = detail::read_node(tok, num_nodes, "base edge endpoint");
        if (v == w)
            throw ParseError(ParseErrorCode::self_loop, tok.last_line(), tok.last_column(),
                             "base edge endpoints coincide");
        if (!seen_pairs.emplace(pair_key(v, w), 1).second)
            throw ParseError(ParseErrorCode::duplicate_edge, tok.last_line(), tok.last_column(),
                             "base edge {" + std::to_string(v) + "," + std::to_string(w) +
                                 "} listed twice");
        base_edges.emplace_back(v, w);
        edge_positions.emplace_back(tok.last_line(), tok.last_column());
    }

    tok.expect_keyword("lifted-arcs");
    const std::size_t num_arcs = tok.read_size("the arc count");
    std::vector<Arc> arcs;
    arcs.reserve(num_arcs);
    std::vector<double> join_costs, cut_costs;
    join_costs.reserve(num_arcs * num_labels * num_labels);
    cut_costs.reserve(num_arcs * num_labels * num_labels);
    std::unordered_map<std::uint64_t, Arc> seen_arcs;
    for (std::size_t i = 0; i < num_arcs; ++i) {
        tok.expect_keyword("arc");
        const Node tail = detail::read_node(tok, num_nodes, "arc endpoint");
        const Node head = detail::read_node(tok, num_nodes, "arc endpoint");
        if (tail == head)
            throw ParseError(ParseErrorCode::self_loop, tok.last_line(), tok.last_column(),
                             "arc endpoints coincide");
        const auto [it, inserted] = seen_arcs.emplace(pair_key(tail, head), Arc{tail, head});
        if (!inserted) {
            const bool same_orientation = it->second.tail == tail;
            throw ParseError(same_orientation ? ParseErrorCode::duplicate_edge
                                              : ParseErrorCode::orientation_conflict,
                             tok.last_line(), tok.last_column(),
                             same_orientation
                                 ? "arc (" + std::to_string(tail) + "," + std::to_string(head) +
                                       ") listed twice"
                                 : "node pair {" + std::to_string(tail) + "," +
                                       std::to_string(head) + "} appears in both orientations");
        }
        arcs.push_back({tail, head});
        tok.expect_keyword("join");
        for (std::size_t c = 0; c < num_labels * num_labels; ++c)
            join_costs.push_back(tok.read_double("a join cost"));
        tok.expect_keyword("cut");
        for (std::size_t c = 0; c < num_labels * num_labels; ++c)
            cut_costs.push_back(tok.read_double("a cut cost"));
    }
    tok.expect_keyword("end");
    tok.expect_end();

    for (std::size_t i = 0; i < base_edges.size(); ++i)
        if (seen_arcs.find(pair_key(base_edges[i].first, base_edges[i].second)) ==
            seen_arcs.end())
            throw ParseError(ParseErrorCode::missing_base_arc, edge_positions[i].first,
                             edge_positions[i].second,
                             "base edge {" + std::to_string(base_edges[i].first) + "," +
                                 std::to_string(base_edges[i].second) +
                                 "} has no arc in the lifted-arcs section");

    // connectivity, reported against the document rather than the library
    {
        std::vector<std::vector<Node>> adj(num_nodes);
        for (const auto& [v, w] : base_edges) {
            adj[v].push_back(w);
            adj[w].push_back(v);
        }
        std::vector<char> seen(num_nodes, 0);
        std::vector<Node> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Node u = stack.back();
            stack.pop_back();
            for (Node w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != num_nodes)
            throw ParseError(ParseErrorCode::disconnected_graph, 1, 1,
                             "the base edges do not connect all " + std::to_string(num_nodes) +
                                 " nodes");
    }

    return Instance(num_nodes, num_labels, std::move(base_edges), std::move(arcs),
                    std::move(node_costs), std::move(join_costs), std::move(cut_costs));
}

/// Canonical text form: base edges sorted by (min, max), arcs likewise, cost
/// matrices row-major with the tail label major. Numbers use the shortest
/// decimal that round-trips, so integer costs reproduce bit-exactly.
inline std::string serialize_instance(const Instance& instance) {
    const std::size_t k = instance.num_labels();
    std::string out = "nllmp-instance\n";
    out += "nodes " + std::to_string(instance.num_nodes()) + "\n";
    out += "labels " + std::to_string(k) + "\n";
    out += "node-costs\n";
    for (Node v = 0; v < instance.num_nodes(); ++v) {
        for (Label l = 0; l < k; ++l) {
            if (l > 0) out += ' ';
            out += detail::format_number(instance.node_cost(v, l));
        }
        out += '\n';
    }

    std::vector<std::pair<Node, Node>> edges = instance.base_edges();
    for (auto& [v, w] : edges)
        if (v > w) std::swap(v, w);
    std::sort(edges.begin(), edges.end());
    out += "base-edges " + std::to_string(edges.size()) + "\n";
    for (const auto& [v, w] : edges)
        out += std::to_string(v) + " " + std::to_string(w) + "\n";

    std::vector<ArcIndex> order(instance.num_arcs());
    for (ArcIndex a = 0; a < order.size(); ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](ArcIndex a, ArcIndex b) {
        const Arc x = instance.arc(a);
        const Arc y = instance.arc(b);
        const auto kx = std::minmax(x.tail, x.head);
        const auto ky = std::minmax(y.tail, y.head);
        return kx < ky;
    });
    out += "lifted-arcs " + std::to_string(order.size()) + "\n";
    for (ArcIndex a : order) {
        const Arc arc = instance.arc(a);
        out += "arc " + std::to_string(arc.tail) + " " + std::to_string(arc.head) + "\n";
        out += "join\n";
        for (Label l = 0; l < k; ++l) {
            for (Label l2 = 0; l2 < k; ++l2) {
                if (l2 > 0) out += ' ';
                out += detail::format_number(instance.join_cost(a, l, l2));
            }
            out += '\n';
        }
        out += "cut\n";
        for (Label l = 0; l < k; ++l) {
            for (Label l2 = 0; l2 < k; ++l2) {
                if (l2 > 0) out += ' ';
                out += detail::format_number(instance.cut_cost(a, l, l2));
            }
            out += '\n';
        }
    }
    out += "end\n";
    return out;
}

/// A solution as stored on disk: the per-node states plus solver metadata.
struct SolutionRecord {
    NodeLabeling labeling;
    ComponentLabeling partition;
    double objective = 0.0;
    bool feasible = false;
    std::string algorithm = "unknown";
    std::uint64_t iterations = 0;
    double wall_time_seconds = 0.0;
};

inline SolutionRecord parse_solution(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("nllmp-solution");
    tok.expect_keyword("nodes");
    const std::size_t num_nodes = tok.read_size("the node count");
    if (num_nodes == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "a solution needs at least one node");
    SolutionRecord record;
    tok.expect_keyword("objective");
    record.objective = tok.read_double("the objective value");
    tok.expect_keyword("feasible");
    const std::size_t flag = tok.read_size("the feasibility flag");
    if (flag > 1)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "the feasibility flag must be 0 or 1");
    record.feasible = flag == 1;
    tok.expect_keyword("algorithm");
    record.algorithm = std::string(tok.next("the algorithm name").text);
    tok.expect_keyword("iterations");
    record.iterations = tok.read_size("the iteration count");
    tok.expect_keyword("wall-time-seconds");
    record.wall_time_seconds = tok.read_double("the wall time");
    tok.expect_keyword("assignments");
    std::vector<Label> labels(num_nodes);
    std::vector<std::size_t> components(num_nodes);
    for (std::size_t v = 0; v < num_nodes; ++v) {
        labels[v] = tok.read_size("a node label");
        components[v] = tok.read_size("a component index");
    }
    tok.expect_keyword("end");
    tok.expect_end();
    record.labeling = NodeLabeling(std::move(labels));
    record.partition = ComponentLabeling(std::move(components));
    return record;
}

inline std::string serialize_solution(const SolutionRecord& record) {
    std::string out = "nllmp-solution\n";
    out += "nodes " + std::to_string(record.labeling.size()) + "\n";
    out += "objective " + detail::format_number(record.objective) + "\n";
    out += "feasible " + std::string(record.feasible ? "1" : "0") + "\n";
    out += "algorithm " + record.algorithm + "\n";
    out += "iterations " + std::to_string(record.iterations) + "\n";
    out += "wall-time-seconds " + detail::format_number(record.wall_time_seconds) + "\n";
    out += "assignments\n";
    for (Node v = 0; v < record.labeling.size(); ++v)
        out += std::to_string(record.labeling[v]) + " " + std::to_string(record.partition[v]) +
               "\n";
    out += "end\n";
    return out;
}

// ---------------------------------------------------------------------------
// Reduction spec files, one keyword-led document per spec kind.

inline UiqpSpec parse_uiqp_spec(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("uiqp-spec");
    tok.expect_keyword("nodes");
    UiqpSpec spec;
    spec.num_nodes = tok.read_size("the node count");
    tok.expect_keyword("labels");
    spec.num_labels = tok.read_size("the label count");
    if (spec.num_nodes == 0 || spec.num_labels == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "a uiqp spec needs nodes and labels");
    tok.expect_keyword("node-costs");
    spec.node_costs.resize(spec.num_nodes * spec.num_labels);
    for (double& c : spec.node_costs) c = tok.read_double("a node cost");
    tok.expect_keyword("arcs");
    const std::size_t num_arcs = tok.read_size("the arc count");
    for (std::size_t i = 0; i < num_arcs; ++i) {
        tok.expect_keyword("arc");
        const Node tail = detail::read_node(tok, spec.num_nodes, "arc endpoint");
        const Node head = detail::read_node(tok, spec.num_nodes, "arc endpoint");
        if (tail == head)
            throw ParseError(ParseErrorCode::self_loop, tok.last_line(), tok.last_column(),
                             "arc endpoints coincide");
        spec.arcs.push_back({tail, head});
        tok.expect_keyword("costs");
        for (std::size_t c = 0; c < spec.num_labels * spec.num_labels; ++c)
            spec.pair_costs.push_back(tok.read_double("a pair cost"));
    }
    tok.expect_keyword("end");
    tok.expect_end();
    return spec;
}

inline LmpSpec parse_lmp_spec(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("lmp-spec");
    tok.expect_keyword("nodes");
    LmpSpec spec;
    spec.num_nodes = tok.read_size("the node count");
    if (spec.num_nodes == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "an lmp spec needs nodes");
    tok.expect_keyword("base-edges");
    const std::size_t num_base = tok.read_size("the base edge count");
    for (std::size_t i = 0; i < num_base; ++i) {
        const Node v = detail::read_node(tok, spec.num_nodes, "edge endpoint");
        const Node w = detail::read_node(tok, spec.num_nodes, "edge endpoint");
        spec.base_edges.emplace_back(v, w);
        spec.base_costs.push_back(tok.read_double("an edge cost"));
    }
    tok.expect_keyword("lifted-edges");
    const std::size_t num_lifted = tok.read_size("the lifted edge count");
    for (std::size_t i = 0; i < num_lifted; ++i) {
        const Node v = detail::read_node(tok, spec.num_nodes, "edge endpoint");
        const Node w = detail::read_node(tok, spec.num_nodes, "edge endpoint");
        spec.lifted_edges.emplace_back(v, w);
        spec.lifted_costs.push_back(tok.read_double("an edge cost"));
    }
    tok.expect_keyword("end");
    tok.expect_end();
    return spec;
}

inline PoseSpec parse_pose_spec(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("pose-spec");
    tok.expect_keyword("detections");
    PoseSpec spec;
    spec.num_detections = tok.read_size("the detection count");
    tok.expect_keyword("classes");
    spec.num_classes = tok.read_size("the class count");
    if (spec.num_detections == 0 || spec.num_classes == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "a pose spec needs detections and classes");
    tok.expect_keyword("unaries");
    spec.unaries.resize(spec.num_detections * spec.num_classes);
    for (double& c : spec.unaries) c = tok.read_double("a unary cost");
    tok.expect_keyword("pairs");
    const std::size_t num_pairs = tok.read_size("the pair count");
    for (std::size_t i = 0; i < num_pairs; ++i) {
        tok.expect_keyword("pair");
        Node v = detail::read_node(tok, spec.num_detections, "detection");
        Node w = detail::read_node(tok, spec.num_detections, "detection");
        if (v == w)
            throw ParseError(ParseErrorCode::self_loop, tok.last_line(), tok.last_column(),
                             "pair endpoints coincide");
        if (v > w) std::swap(v, w);
        auto& block = spec.pair_costs[{v, w}];
        if (!block.empty())
            throw ParseError(ParseErrorCode::duplicate_edge, tok.last_line(), tok.last_column(),
                             "detection pair listed twice");
        tok.expect_keyword("beta");
        block.resize(spec.num_classes * spec.num_classes);
        for (double& c : block) c = tok.read_double("a pair cost");
    }
    tok.expect_keyword("end");
    tok.expect_end();
    return spec;
}

inline TrackingSpec parse_tracking_spec(std::string_view text) {
    detail::Tokenizer tok(text);
    tok.expect_keyword("tracking-spec");
    tok.expect_keyword("detections");
    TrackingSpec spec;
    spec.num_detections = tok.read_size("the detection count");
    if (spec.num_detections == 0)
        throw ParseError(ParseErrorCode::invalid_value, tok.last_line(), tok.last_column(),
                         "a tracking spec needs detections");
    tok.expect_keyword("unaries");
    spec.unaries.resize(spec.num_detections);
    for (double& c : spec.unaries) c = tok.read_double("a unary cost");
    tok.expect_keyword("edges");
    const std::size_t num_edges = tok.read_size("the edge count");
    for (std::size_t i = 0; i < num_edges; ++i) {
        const Node v = detail::read_node(tok, spec.num_detections, "edge endpoint");
        const Node w = detail::read_node(tok, spec.num_detections, "edge endpoint");
        spec.edges.emplace_back(v, w);
        spec.pair_costs.push_back(tok.read_double("an edge cost"));
    }
    tok.expect_keyword("end");
    tok.expect_end();
    return spec;
}

// ---------------------------------------------------------------------------
// Random instances for tests and benchmarks.

struct RandomInstanceOptions {
    std::size_t num_nodes = 8;
    std::size_t num_labels = 2;
    double edge_density = 0.3;   // chance of a base edge beyond the spanning tree
    double lift_density = 0.2;   // chance of a lifted arc on the remaining pairs
    int cost_min = -10;          // integer costs, inclusive bounds
    int cost_max = 10;
};

/// Deterministic for a fixed seed: a random spanning tree keeps the graph
/// connected, remaining node pairs become base edges or lifted arcs by the
/// density parameters, and all costs are integers drawn uniformly.
inline Instance generate_random(std::uint64_t seed, const RandomInstanceOptions& options) {
    if (options.num_nodes == 0) throw std::invalid_argument("need at least one node");
    if (options.num_labels == 0) throw std::invalid_argument("need at least one label");
    if (options.edge_density < 0.0 || options.edge_density > 1.0 ||
        options.lift_density < 0.0 || options.lift_density > 1.0)
        throw std::invalid_argument("densities must lie in [0, 1]");
    if (options.cost_min > options.cost_max)
        throw std::invalid_argument("empty cost range");

    std::mt19937_64 rng(seed);
    // modulo draws keep the stream identical across standard libraries
    auto draw_below = [&rng](std::uint64_t bound) { return rng() % bound; };
    auto draw_cost = [&]() {
        const auto span = static_cast<std::uint64_t>(static_cast<long long>(options.cost_max) -
                                                     options.cost_min) +
                          1;
        return static_cast<double>(options.cost_min + static_cast<long long>(draw_below(span)));
    };
    auto draw_unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    const std::size_t n = options.num_nodes;
    std::vector<std::pair<Node, Node>> base_edges;
    std::vector<std::pair<Node, Node>> lifted_pairs;
    std::vector<std::vector<char>> in_tree(n);
    for (auto& row : in_tree) row.assign(n, 0);
    for (Node v = 1; v < n; ++v) {
        const Node u = static_cast<Node>(draw_below(v));
        base_edges.emplace_back(u, v);
        in_tree[u][v] = 1;
    }
    for (Node v = 0; v < n; ++v)
        for (Node w = v + 1; w < n; ++w) {
            if (in_tree[v][w]) continue;
            if (draw_unit() < options.edge_density)
                base_edges.emplace_back(v, w);
            else if (draw_unit() < options.lift_density)
                lifted_pairs.emplace_back(v, w);
        }
    std::sort(base_edges.begin(), base_edges.end());

    std::vector<std::pair<Node, Node>> all_pairs = base_edges;
    all_pairs.insert(all_pairs.end(), lifted_pairs.begin(), lifted_pairs.end());
    std::sort(all_pairs.begin(), all_pairs.end());
    std::vector<Arc> arcs;
    arcs.reserve(all_pairs.size());
    for (const auto& [v, w] : all_pairs) arcs.push_back({v, w});

    const std::size_t k = options.num_labels;
    std::vector<double> node_costs(n * k);
    for (double& c : node_costs) c = draw_cost();
    std::vector<double> join_costs(arcs.size() * k * k);
    std::vector<double> cut_costs(arcs.size() * k * k);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        for (std::size_t c = 0; c < k * k; ++c) join_costs[a * k * k + c] = draw_cost();
        for (std::size_t c = 0; c < k * k; ++c) cut_costs[a * k * k + c] = draw_cost();
    }
    return Instance(n, k, std::move(base_edges), std::move(arcs), std::move(node_costs),
                    std::move(join_costs), std::move(cut_costs));
}

}  // namespace nllmp
