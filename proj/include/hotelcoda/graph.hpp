#ifndef HOTELCODA_GRAPH_HPP
#define HOTELCODA_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coda.hpp"
#include "errors.hpp"
#include "part_names.hpp"

/**
 * @file graph.hpp
 * @brief Log-ratio graphs: parts as nodes, pairwise log-ratios as edges.
 *
 * An edge points from its denominator (tail) to its numerator (head). A set
 * of log-ratios is linearly independent and complete exactly when the
 * undirected skeleton is a spanning tree, which is what `validate_graph()`
 * checks. Orientation only matters when composing ratios along paths.
 */

namespace hotelcoda {

/**
 * @brief Immutable graph over part names.
 *
 * Construction rejects structural nonsense (self-loops, two edges on the
 * same unordered pair, repeated edge names). Being a tree is a separate
 * question answered by `validate_graph()`.
 */
class LogRatioGraph {
public:
    struct Incidence {
        std::size_t edge;
        std::size_t other;
        int sign; // +1 when walking tail -> head
    };

    explicit LogRatioGraph(std::vector<LogRatioSpec> edges, std::vector<std::string> extra_nodes = {})
        : edges_(std::move(edges)) {
        std::set<std::string> names(extra_nodes.begin(), extra_nodes.end());
        for (const auto& e : edges_) {
            names.insert(e.numerator());
            names.insert(e.denominator());
        }
        nodes_.assign(names.begin(), names.end());

        adjacency_.resize(nodes_.size());
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        std::set<std::string> edge_names;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if (!edge_names.insert(e.name()).second) {
                throw std::invalid_argument("duplicate edge name '" + e.name() + "'");
            }
            std::size_t head = *index_of(e.numerator());
            std::size_t tail = *index_of(e.denominator());
            if (!pairs.insert(std::minmax(head, tail)).second) {
                throw std::invalid_argument("edge '" + e.name() + "' duplicates an existing edge between '" +
                                            e.denominator() + "' and '" + e.numerator() + "'");
            }
            adjacency_[tail].push_back({i, head, +1});
            adjacency_[head].push_back({i, tail, -1});
        }
    }

    /// Sorted node names.
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<LogRatioSpec>& edges() const { return edges_; }
    const std::vector<Incidence>& incident(std::size_t node) const { return adjacency_.at(node); }

    std::optional<std::size_t> index_of(const std::string& node) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
        if (it == nodes_.end() || *it != node) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - nodes_.begin());
    }

    std::optional<std::size_t> find_edge(const std::string& name) const {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].name() == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    /// New graph with one more edge; this graph is left untouched.
    LogRatioGraph with_edge(LogRatioSpec edge) const {
        auto edges = edges_;
        edges.push_back(std::move(edge));
        return LogRatioGraph(std::move(edges), nodes_);
    }

private:
    std::vector<LogRatioSpec> edges_;
    std::vector<std::string> nodes_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// P1..P4 over the five canonical hotel parts.
inline LogRatioGraph default_hotel_graph() {
    using namespace parts;
    return LogRatioGraph({
        LogRatioSpec("P1", occupied_room_nights, available_room_nights),
        LogRatioSpec("P2", revenue, occupied_room_nights),
        LogRatioSpec("P3", revenue, expenses),
        LogRatioSpec("P4", revenue, assets),
    });
}

struct ValidationReport {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    bool connected = false;
    bool acyclic = false;
    bool unique_paths = false;
    bool valid = false;

    /// Closed walk of node names (first == last) when a cycle exists.
    std::vector<std::string> cycle;
    /// Nodes not reachable from the first node.
    std::vector<std::string> unreachable;
};

namespace detail {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }

    std::vector<std::size_t> parent;
};

// BFS over the edges allowed by `use_edge`; returns, per node, the incidence used to reach it.
template <typename EdgeFilter>
std::vector<std::optional<LogRatioGraph::Incidence>> bfs_tree(const LogRatioGraph& g, std::size_t start,
                                                             std::vector<bool>& seen, EdgeFilter use_edge) {
    std::vector<std::optional<LogRatioGraph::Incidence>> via(g.nodes().size());
    std::queue<std::size_t> pending;
    seen.assign(g.nodes().size(), false);
    seen[start] = true;
    pending.push(start);
    while (!pending.empty()) {
        std::size_t at = pending.front();
        pending.pop();
        for (const auto& inc : g.incident(at)) {
            if (!use_edge(inc.edge) || seen[inc.other]) {
                continue;
            }
            seen[inc.other] = true;
            // Stored from the perspective of the node being reached.
            via[inc.other] = LogRatioGraph::Incidence{inc.edge, at, inc.sign};
            pending.push(inc.other);
        }
    }
    return via;
}

} // namespace detail

inline ValidationReport validate_graph(const LogRatioGraph& g) {
    ValidationReport report;
    const auto& nodes = g.nodes();
    const auto& edges = g.edges();
    report.node_count = nodes.size();
    report.edge_count = edges.size();
    if (nodes.empty()) {
        return report;
    }

    std::vector<bool> seen;
    detail::bfs_tree(g, 0, seen, [](std::size_t) { return true; });
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!seen[i]) {
            report.unreachable.push_back(nodes[i]);
        }
    }
    report.connected = report.unreachable.empty();

    // The first edge joining two already-connected nodes closes a cycle.
    detail::DisjointSets sets(nodes.size());
    std::vector<bool> accepted(edges.size(), false);
    report.acyclic = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t head = *g.index_of(edges[i].numerator());
        std::size_t tail = *g.index_of(edges[i].denominator());
        if (sets.unite(head, tail)) {
            accepted[i] = true;
            continue;
        }
        report.acyclic = false;
        auto via = detail::bfs_tree(g, tail, seen, [&](std::size_t e) { return accepted[e]; });
        for (std::size_t at = head;; at = via[at]->other) {
            report.cycle.push_back(nodes[at]);
            if (at == tail) {
                break;
            }
        }
        report.cycle.push_back(nodes[head]);
        break;
    }

    report.unique_paths = report.connected && report.edge_count + 1 == report.node_count;
    report.valid = report.connected && report.acyclic && report.unique_paths;
    return report;
}

struct PathStep {
    std::size_t edge;
    int sign;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// The unique route between two parts of a valid graph.
struct PathRatio {
    std::string source;
    std::string target;
    std::vector<PathStep> steps;
};

inline PathRatio derive_path_ratio(const LogRatioGraph& g, const std::string& source, const std::string& target) {
    auto report = validate_graph(g);
    if (!report.valid) {
        throw InvalidGraph("cannot derive a path ratio on a graph that is not a tree");
    }
    auto from = g.index_of(source);
    if (!from) {
        throw UnknownPart(source);
    }
    auto to = g.index_of(target);
    if (!to) {
        throw UnknownPart(target);
    }
    if (*from == *to) {
        throw std::invalid_argument("path ratio needs two distinct parts");
    }

    std::vector<bool> seen;
    auto via = detail::bfs_tree(g, *from, seen, [](std::size_t) { return true; });

    PathRatio path{source, target, {}};
    for (std::size_t at = *to; at != *from; at = via[at]->other) {
        path.steps.push_back({via[at]->edge, via[at]->sign});
    }
    std::reverse(path.steps.begin(), path.steps.end());
    return path;
}

/// Sum of signed edge log-ratios along `p`; telescopes to ln(v[target] / v[source]).
inline double evaluate_path_ratio(const PartVector& v, const LogRatioGraph& g, const PathRatio& p) {
    double total = 0.0;
    for (const auto& step : p.steps) {
        total += step.sign * pairwise_logratio(v, g.edges().at(step.edge));
    }
    return total;
}

} // namespace hotelcoda

#endif
