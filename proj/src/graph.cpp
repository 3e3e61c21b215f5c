#include "propchoose/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace propchoose {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    for (auto& [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges_ = std::move(edge_list);

    adj_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    if (n_ <= 64) {
        mask_.assign(n_ + 1, 0);
        for (auto [u, v] : edges_) {
            mask_[u] |= std::uint64_t{1} << (v - 1);
            mask_[v] |= std::uint64_t{1} << (u - 1);
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    if (has_masks()) return (mask_[u] >> (v - 1)) & 1;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("both part sizes must be positive");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
    return Graph(a + b, std::move(edges));
}

Graph build_star(int leaves) { return build_complete_bipartite(1, leaves); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int offset = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
    return Graph(offset + g2.vertex_count(), std::move(edges));
}

int StructureReport::largest_component_order() const {
    int best = 0;
    for (const auto& c : components) best = std::max(best, c.order);
    return best;
}

namespace {

// Walks parent pointers from the endpoints of a same-side edge up to their
// lowest common ancestor in the BFS forest; the two branches plus the edge
// form an odd cycle.
std::vector<int> extract_odd_cycle(const std::vector<int>& parent, int u, int v) {
    std::vector<int> up, vp;
    for (int x = u; x != 0; x = parent[x]) up.push_back(x);
    for (int x = v; x != 0; x = parent[x]) vp.push_back(x);
    // Trim the common tail down to the LCA.
    while (up.size() >= 2 && vp.size() >= 2 && up[up.size() - 2] == vp[vp.size() - 2]) {
        up.pop_back();
        vp.pop_back();
    }
    std::vector<int> cycle(up.begin(), up.end());
    cycle.insert(cycle.end(), vp.rbegin() + 1, vp.rend());
    return cycle;
}

}  // namespace

StructureReport analyze(const Graph& g) {
    const int n = g.vertex_count();
    StructureReport r;
    r.side.assign(n + 1, -1);
    std::vector<int> comp_of(n + 1, -1);
    std::vector<int> parent(n + 1, 0);
    r.is_bipartite = true;

    for (int s = 1; s <= n; ++s) {
        if (comp_of[s] != -1) continue;
        const int cid = r.component_count();
        ComponentInfo info;
        std::deque<int> queue{s};
        comp_of[s] = cid;
        r.side[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            info.vertices.push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp_of[w] == -1) {
                    comp_of[w] = cid;
                    r.side[w] = static_cast<std::int8_t>(1 - r.side[u]);
                    parent[w] = u;
                    queue.push_back(w);
                } else if (r.side[w] == r.side[u] && r.is_bipartite) {
                    r.is_bipartite = false;
                    r.odd_cycle = extract_odd_cycle(parent, u, w);
                }
            }
        }
        std::sort(info.vertices.begin(), info.vertices.end());
        info.order = static_cast<int>(info.vertices.size());
        r.components.push_back(std::move(info));
    }

    for (auto [u, v] : g.edges()) {
        (void)v;
        r.components[comp_of[u]].edge_count += 1;
    }
    for (int v = 1; v <= n; ++v) r.max_degree = std::max(r.max_degree, g.degree(v));

    for (auto& c : r.components) {
        bool deg_ok = true;
        for (int v : c.vertices) deg_ok = deg_ok && g.degree(v) <= 2;
        c.is_path = deg_ok && c.edge_count == c.order - 1;
        c.is_cycle = c.edge_count == c.order && deg_ok && c.order >= 3;
        r.has_cycle = r.has_cycle || c.edge_count >= c.order;
    }
    r.is_linear_forest =
        std::all_of(r.components.begin(), r.components.end(),
                    [](const ComponentInfo& c) { return c.is_path; });
    r.connected = r.component_count() == 1;
    if (!r.is_bipartite) r.side.clear();
    return r;
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (!(1 <= u && u < v && v <= n)) {
            throw std::invalid_argument("edge list: expected 1 <= u < v <= n on line " +
                                        std::to_string(i + 2));
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace propchoose
