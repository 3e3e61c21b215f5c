#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propchoose/assignment.hpp"
#include "propchoose/graph.hpp"

namespace propchoose {

enum class VertexOrder {
    // Connected elimination order: BFS per component from its smallest
    // vertex, so every non-root vertex has an already-colored neighbor.
    smart,
    // Plain index order 1..n.
    appendix,
};

struct SolveOptions {
    VertexOrder order = VertexOrder::smart;
    // Reject a color as soon as its class would exceed the upper quota.
    bool upper_bound_prune = true;
    // Abandon a branch when some color can no longer reach its lower quota
    // with the uncolored vertices that still list it.
    bool lower_bound_cut = true;
};

struct ProportionalColoring {
    std::vector<int> color_of;     // 1..n, index 0 unused
    std::vector<int> class_size;   // by color, size ell+1
};

enum class SolveStatus { found, none };

struct SolveOutcome {
    SolveStatus status = SolveStatus::none;
    std::optional<ProportionalColoring> coloring;
    // Complete candidate colorings examined; at most k^n.
    std::uint64_t nodes_explored = 0;

    bool found() const { return status == SolveStatus::found; }
};

/// Backtracking search for a proportional L-coloring.  One instance binds a
/// graph and search options; solve() may be called repeatedly with different
/// assignments.  Instances are not thread-safe; use one per thread.
class ProportionalSolver {
public:
    explicit ProportionalSolver(const Graph& g, SolveOptions opts = {});

    SolveOutcome solve(const ListAssignment& L);
    // Hot-loop entry: per-vertex subset ids into `table` (digit i belongs to
    // vertex i+1).  The table must stay alive for the duration of the call.
    SolveOutcome solve_digits(const SubsetTable& table,
                              std::span<const std::uint16_t> digits);

    const std::vector<int>& vertex_order() const { return order_; }

private:
    bool descend(int pos);

    const Graph* g_;
    SolveOptions opts_;
    int n_;
    std::vector<int> order_;                      // position -> vertex
    std::vector<std::vector<int>> prev_positions_;  // earlier adjacent positions
    std::vector<std::uint64_t> prev_mask_;        // same, bit-packed (n <= 64)
    bool use_masks_;

    // Per-solve state.
    std::vector<const std::vector<int>*> list_at_;   // position -> color list
    std::vector<int> lo_, hi_, class_size_, remaining_;
    std::vector<int> color_at_;                      // position -> chosen color
    std::vector<std::uint64_t> color_mask_;          // color -> position bits
    std::vector<int> palette_;
    std::uint64_t leaves_ = 0;
    bool found_ = false;
};

SolveOutcome find_proportional_coloring(const Graph& g, const ListAssignment& L,
                                        SolveOptions opts = {});

struct ValidationReport {
    enum class Violation { none, incomplete, properness, list_containment, quota };

    bool ok = false;
    Violation kind = Violation::none;
    int vertex = 0;        // offending vertex (incomplete/properness/list)
    int other_vertex = 0;  // second endpoint for properness
    int color = 0;         // offending color (quota)
    std::string message;
};

/// Independent check of the three defining clauses, reported in the order
/// properness, list containment, quota.  check_quota=false restricts the
/// check to proper-L-coloring validity.
ValidationReport validate(const Graph& g, const ListAssignment& L,
                          const std::vector<int>& color_of, bool check_quota = true);

}  // namespace propchoose
