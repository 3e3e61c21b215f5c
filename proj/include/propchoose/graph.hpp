#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace propchoose {

/// Simple undirected graph on vertices 1..n.  No self-loops, no parallel
/// edges, n >= 1.  Immutable after construction; safe to share across
/// threads.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v, sorted ascending.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const;

    // Bit-packed adjacency, available when n <= 64.  Bit (u-1) of
    // neighbor_mask(v) is set iff u and v are adjacent.
    bool has_masks() const { return !mask_.empty(); }
    std::uint64_t neighbor_mask(int v) const { return mask_[v]; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;    // adj_[0] unused
    std::vector<std::uint64_t> mask_;      // empty when n > 64
};

// Named builders.  Vertex numbering follows the usual written order: paths
// are 1-2-...-n, cycles close with the edge {n,1}, complete bipartite
// graphs put the first part on 1..a.
Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);
Graph build_complete_bipartite(int a, int b);
Graph build_star(int leaves);   // K_{1,leaves}; center is vertex 1

// Disjoint union; vertices of g2 are relabeled with offset g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct ComponentInfo {
    std::vector<int> vertices;   // ascending
    int order = 0;
    int edge_count = 0;
    bool is_path = false;        // connected, acyclic, max degree <= 2
    bool is_cycle = false;       // connected, every degree exactly 2
};

struct StructureReport {
    std::vector<ComponentInfo> components;   // ordered by smallest vertex
    int max_degree = 0;
    bool connected = false;
    bool has_cycle = false;
    bool is_linear_forest = false;   // every component is a path
    bool is_bipartite = false;
    // When bipartite: side[v] in {0,1}; the smallest vertex of each
    // component is on side 0.  side[0] unused.
    std::vector<std::int8_t> side;
    // When not bipartite: the vertices of an odd cycle, in cyclic order.
    std::vector<int> odd_cycle;

    int component_count() const { return static_cast<int>(components.size()); }
    int largest_component_order() const;
};

StructureReport analyze(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" with
// 1 <= u < v <= n.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace propchoose
