#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace propchoose {

class Graph;

/// Thrown when a full enumeration would exceed the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// All k-element subsets of [ell], in lexicographic order of their sorted
/// element sequences: for (2,4) that is {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
struct SubsetTable {
    int k = 0;
    int ell = 0;
    std::vector<std::vector<int>> subsets;

    SubsetTable() = default;
    SubsetTable(int k, int ell);

    int count() const { return static_cast<int>(subsets.size()); }
    // Index of a sorted k-subset, -1 when absent.
    int index_of(const std::vector<int>& sorted_subset) const;
};

/// A (k,ell)-assignment: every vertex gets a k-element list drawn from [ell].
/// Lists are stored as indices into the subset table, in vertex order.
class ListAssignment {
public:
    ListAssignment(int k, int ell, const std::vector<std::vector<int>>& lists);
    ListAssignment(int k, int ell, std::vector<std::uint16_t> list_ids);

    int k() const { return table_.k; }
    int ell() const { return table_.ell; }
    int size() const { return static_cast<int>(ids_.size()); }   // vertex count

    // List of vertex v (1-indexed), colors ascending.
    const std::vector<int>& list(int v) const { return table_.subsets[ids_[v - 1]]; }
    bool list_contains(int v, int color) const;

    std::span<const std::uint16_t> ids() const { return ids_; }
    const SubsetTable& table() const { return table_; }

    bool operator==(const ListAssignment& other) const {
        return table_.k == other.table_.k && table_.ell == other.table_.ell &&
               ids_ == other.ids_;
    }

private:
    SubsetTable table_;
    std::vector<std::uint16_t> ids_;
};

/// eta[c] = number of vertices whose list contains color c.  Colors absent
/// from every list are not part of the palette.
struct MultiplicityTable {
    std::vector<int> eta;        // size ell+1, index 0 unused
    std::vector<int> palette;    // ascending colors with eta > 0
};

MultiplicityTable multiplicities(const ListAssignment& L);

/// Per-color class-size bounds: lo = floor(eta/k), hi = ceil(eta/k).
struct QuotaTable {
    std::vector<int> lo;   // size ell+1
    std::vector<int> hi;
    std::vector<int> palette;
};

QuotaTable quotas(const MultiplicityTable& m, int k);

enum class EnumerationMode { full, canonical };

/// The index space of all (k,ell)-assignments for an n-vertex graph.
/// Assignment index <-> big-endian base-C(ell,k) digit string (vertex 1 is
/// the most significant digit), so full enumeration order is lexicographic
/// in the per-vertex list indices.
class AssignmentSpace {
public:
    AssignmentSpace(int n, int k, int ell);

    int n() const { return n_; }
    int k() const { return table_.k; }
    int ell() const { return table_.ell; }
    const SubsetTable& table() const { return table_; }

    bool total_overflows() const { return overflow_; }
    std::uint64_t total() const;   // throws std::overflow_error when it overflows

    void decode(std::uint64_t index, std::vector<std::uint16_t>& digits) const;
    std::uint64_t encode(std::span<const std::uint16_t> digits) const;
    // Lexicographic successor in place; false when the last assignment wraps.
    bool advance(std::vector<std::uint16_t>& digits) const;

    // Palette-permutation symmetry: sigma in Sym([ell]) acts colorwise on
    // every list.  An assignment is canonical when no sigma maps it to a
    // lexicographically smaller digit string.
    bool is_canonical(std::span<const std::uint16_t> digits) const;
    // Minimal orbit member; when perm_out is given it receives a permutation
    // realizing it (perm_out[c] = image of color c, index 0 unused).
    std::vector<std::uint16_t> canonicalize(std::span<const std::uint16_t> digits,
                                            std::vector<int>* perm_out = nullptr) const;

    ListAssignment make_assignment(std::span<const std::uint16_t> digits) const;

private:
    int n_ = 0;
    SubsetTable table_;
    bool overflow_ = false;
    std::uint64_t total_ = 0;
    // One digit relabeling per palette permutation; the identity is first.
    std::vector<std::vector<std::uint16_t>> perm_digit_maps_;
    std::vector<std::vector<int>> perms_;
};

/// Streaming enumeration over [begin, end) of the index space, optionally
/// restricted to canonical representatives.  O(1) memory.
class AssignmentEnumerator {
public:
    AssignmentEnumerator(const AssignmentSpace& space, EnumerationMode mode);
    AssignmentEnumerator(const AssignmentSpace& space, EnumerationMode mode,
                         std::uint64_t begin, std::uint64_t end);

    // Advances to the next assignment; false when the range is exhausted.
    bool next();

    std::uint64_t index() const { return index_; }
    std::span<const std::uint16_t> digits() const { return digits_; }
    ListAssignment current() const { return space_->make_assignment(digits_); }

private:
    const AssignmentSpace* space_;
    EnumerationMode mode_;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
    bool started_ = false;
    std::vector<std::uint16_t> digits_;
};

/// Guard for full scans: throws CapExceeded when the space is larger than
/// the cap and force is not set.
void check_enumeration_cap(const AssignmentSpace& space, std::uint64_t cap, bool force);

std::uint64_t binomial(int n, int r);

}  // namespace propchoose
