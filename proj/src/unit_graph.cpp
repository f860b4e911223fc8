#include "unitcode/unit_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

namespace unitcode {

UnitGraph::UnitGraph(ResidueRing ring) : ring_(std::move(ring)) {
    const auto n = static_cast<std::size_t>(ring_.modulus());
    adjacency_.resize(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (ring_.is_unit((u + v) % n)) {
                edges_.push_back({u, v});
                adjacency_[u].push_back(v);
                adjacency_[v].push_back(u);
            }
        }
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

UnitGraph build_unit_graph(const ResidueRing& ring) { return UnitGraph(ring); }

std::vector<std::size_t> degree_profile(const UnitGraph& g) {
    std::vector<std::size_t> deg(g.order());
    for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    return deg;
}

RegularityVerdict check_regularity(const UnitGraph& g) {
    const auto& ring = g.ring();
    const auto n = ring.modulus();
    const auto phi = static_cast<std::size_t>(ring.phi());

    RegularityVerdict verdict;
    verdict.two_is_unit = ring.is_unit(2 % n);
    verdict.actual = degree_profile(g);
    verdict.expected.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        verdict.expected[v] = (verdict.two_is_unit && ring.is_unit(v)) ? phi - 1 : phi;
        if (verdict.expected[v] != verdict.actual[v]) verdict.offending.push_back(v);
    }
    verdict.pass = verdict.offending.empty();
    return verdict;
}

Components connected_components(const UnitGraph& g) {
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    Components result;
    result.label.assign(g.order(), unseen);
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (result.label[root] != unseen) continue;
        result.label[root] = result.count;
        frontier.push(root);
        while (!frontier.empty()) {
            const auto x = frontier.front();
            frontier.pop();
            for (auto y : g.neighbors(x)) {
                if (result.label[y] == unseen) {
                    result.label[y] = result.count;
                    frontier.push(y);
                }
            }
        }
        ++result.count;
    }
    return result;
}

std::optional<std::vector<std::uint8_t>> bipartition(const UnitGraph& g) {
    constexpr std::uint8_t uncoloured = 2;
    std::vector<std::uint8_t> colour(g.order(), uncoloured);
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (colour[root] != uncoloured) continue;
        colour[root] = 0;
        frontier.push(root);
        while (!frontier.empty()) {
            const auto x = frontier.front();
            frontier.pop();
            for (auto y : g.neighbors(x)) {
                if (colour[y] == uncoloured) {
                    colour[y] = static_cast<std::uint8_t>(1 - colour[x]);
                    frontier.push(y);
                } else if (colour[y] == colour[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

std::size_t crossing_edges(const UnitGraph& g, std::span<const Vertex> side) {
    std::vector<bool> in_side(g.order(), false);
    for (auto v : side) in_side.at(v) = true;
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return in_side[e.u] != in_side[e.v];
    }));
}

namespace {

// Residual network for unit-capacity flow on an undirected graph. Edge i owns
// arcs 2i (u -> v) and 2i + 1 (v -> u), both starting at capacity 1.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(const UnitGraph& g) : graph_(g), out_arcs_(g.order()) {
        const auto edges = g.edges();
        head_.resize(2 * edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            head_[2 * i] = edges[i].v;
            head_[2 * i + 1] = edges[i].u;
            out_arcs_[edges[i].u].push_back(2 * i);
            out_arcs_[edges[i].v].push_back(2 * i + 1);
        }
    }

    // Max flow from source to sink, stopping early once `limit` units flow.
    std::size_t max_flow(Vertex source, Vertex sink, std::size_t limit) {
        capacity_.assign(head_.size(), 1);
        std::size_t flow = 0;
        while (flow < limit && augment(source, sink)) ++flow;
        return flow;
    }

    // Vertices reachable from source in the current residual network.
    std::vector<bool> reachable(Vertex source) const {
        std::vector<bool> seen(graph_.order(), false);
        std::queue<Vertex> frontier;
        seen[source] = true;
        frontier.push(source);
        while (!frontier.empty()) {
            const auto x = frontier.front();
            frontier.pop();
            for (auto arc : out_arcs_[x]) {
                const auto y = head_[arc];
                if (capacity_[arc] > 0 && !seen[y]) {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        return seen;
    }

private:
    bool augment(Vertex source, Vertex sink) {
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> via(graph_.order(), none);
        std::vector<bool> seen(graph_.order(), false);
        std::queue<Vertex> frontier;
        seen[source] = true;
        frontier.push(source);
        while (!frontier.empty() && !seen[sink]) {
            const auto x = frontier.front();
            frontier.pop();
            for (auto arc : out_arcs_[x]) {
                const auto y = head_[arc];
                if (capacity_[arc] > 0 && !seen[y]) {
                    seen[y] = true;
                    via[y] = arc;
                    frontier.push(y);
                }
            }
        }
        if (!seen[sink]) return false;
        for (auto v = sink; v != source;) {
            const auto arc = via[v];
            --capacity_[arc];
            ++capacity_[arc ^ 1];
            v = head_[arc ^ 1];
        }
        return true;
    }

    const UnitGraph& graph_;
    std::vector<std::vector<std::size_t>> out_arcs_;
    std::vector<Vertex> head_;
    std::vector<int> capacity_;
};

std::vector<Vertex> smaller_side(const std::vector<bool>& membership) {
    std::vector<Vertex> inside;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < membership.size(); ++v) (membership[v] ? inside : outside).push_back(v);
    const bool keep_inside = membership[0] ? inside.size() <= outside.size() : inside.size() < outside.size();
    return keep_inside ? inside : outside;
}

}  // namespace

CutResult edge_connectivity(const UnitGraph& g) {
    const auto comps = connected_components(g);
    if (comps.count > 1) {
        std::vector<bool> in_first(g.order());
        for (Vertex v = 0; v < g.order(); ++v) in_first[v] = comps.label[v] == comps.label[0];
        return {0, smaller_side(in_first)};
    }

    UnitFlowNetwork network(g);
    const Vertex source = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<bool> best_side;
    for (Vertex sink = 1; sink < g.order(); ++sink) {
        // A sink can only improve on `best` with a strictly smaller flow.
        const auto flow = network.max_flow(source, sink, best);
        if (flow < best) {
            best = flow;
            best_side = network.reachable(source);
        }
    }
    return {best, smaller_side(best_side)};
}

std::optional<std::uint64_t> twice_odd_prime(std::uint64_t n) {
    if (n % 2 != 0) return std::nullopt;
    const auto p = n / 2;
    if (p > 2 && is_prime(p)) return p;
    return std::nullopt;
}

std::optional<std::uint64_t> predicted_edge_count(std::uint64_t n) {
    if (n > 2 && is_prime(n)) return (n - 1) * (n - 1) / 2;
    if (const auto p = twice_odd_prime(n)) return *p * (*p - 1);
    return std::nullopt;
}

std::string to_dot(const UnitGraph& g) {
    std::ostringstream out;
    out << "graph unit_graph_Z" << g.ring().modulus() << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace unitcode
