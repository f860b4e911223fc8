#pragma once

#include "unitcode/modring.hpp"

#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unitcode {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// The unit graph G(Z_n): distinct x, y are adjacent iff x + y is a unit.
///
/// Edges are kept in lexicographic (u, v) order; that order fixes the column
/// order of every incidence matrix built from the graph.
class UnitGraph {
public:
    explicit UnitGraph(ResidueRing ring);

    const ResidueRing& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

private:
    ResidueRing ring_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

UnitGraph build_unit_graph(const ResidueRing& ring);

/// Degree of every vertex, indexed by vertex.
std::vector<std::size_t> degree_profile(const UnitGraph& g);

struct RegularityVerdict {
    bool two_is_unit = false;
    bool pass = false;
    std::vector<std::size_t> expected;  // predicted degree per vertex
    std::vector<std::size_t> actual;
    std::vector<Vertex> offending;      // vertices where expected != actual
};

/// Degree dichotomy: phi-regular when 2 is not a unit; otherwise units have
/// degree phi - 1 and non-units degree phi.
RegularityVerdict check_regularity(const UnitGraph& g);

struct Components {
    std::size_t count = 0;
    std::vector<std::size_t> label;  // component index per vertex, in BFS discovery order
};

Components connected_components(const UnitGraph& g);

/// Two-colouring with vertex 0 coloured 0, or nullopt if an odd cycle exists.
std::optional<std::vector<std::uint8_t>> bipartition(const UnitGraph& g);

struct CutResult {
    std::size_t lambda = 0;
    std::vector<Vertex> witness_side;  // sorted, nonempty, proper
};

/// Number of edges with exactly one endpoint in `side`.
std::size_t crossing_edges(const UnitGraph& g, std::span<const Vertex> side);

/// Exact global minimum edge cut.
///
/// Unit-capacity max-flow from vertex 0 to every other vertex; the witness is
/// the residual-reachable set of the minimizing sink, reported as whichever
/// side of the cut is smaller (the side holding vertex 0 on ties). A
/// disconnected graph yields lambda = 0 with the component of vertex 0.
CutResult edge_connectivity(const UnitGraph& g);

/// Closed-form |E|: (p-1)^2/2 for an odd prime p, p(p-1) for 2p, nullopt otherwise.
std::optional<std::uint64_t> predicted_edge_count(std::uint64_t n);

/// If n = 2p with p an odd prime, returns p.
std::optional<std::uint64_t> twice_odd_prime(std::uint64_t n);

/// Graphviz rendering: nodes 0..n-1, then edges in canonical order.
std::string to_dot(const UnitGraph& g);

}  // namespace unitcode
