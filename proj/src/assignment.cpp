#include "propchoose/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "propchoose/graph.hpp"

namespace propchoose {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
    }
    return result;
}

SubsetTable::SubsetTable(int k_in, int ell_in) : k(k_in), ell(ell_in) {
    if (k < 1 || k > ell) throw std::invalid_argument("need 1 <= k <= ell");
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        subsets.push_back(cur);
        // Next k-subset of [ell] in lexicographic order.
        int i = k - 1;
        while (i >= 0 && cur[i] == ell - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

int SubsetTable::index_of(const std::vector<int>& sorted_subset) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), sorted_subset);
    if (it == subsets.end() || *it != sorted_subset) return -1;
    return static_cast<int>(it - subsets.begin());
}

ListAssignment::ListAssignment(int k, int ell, const std::vector<std::vector<int>>& lists)
    : table_(k, ell) {
    ids_.reserve(lists.size());
    for (const auto& raw : lists) {
        std::vector<int> sorted = raw;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        int id = static_cast<int>(sorted.size()) == k ? table_.index_of(sorted) : -1;
        if (id < 0) {
            throw std::invalid_argument(
                "each list must be a k-subset of [ell]");
        }
        ids_.push_back(static_cast<std::uint16_t>(id));
    }
}

ListAssignment::ListAssignment(int k, int ell, std::vector<std::uint16_t> list_ids)
    : table_(k, ell), ids_(std::move(list_ids)) {
    for (auto id : ids_) {
        if (id >= table_.count()) throw std::invalid_argument("list id out of range");
    }
}

bool ListAssignment::list_contains(int v, int color) const {
    const auto& lst = list(v);
    return std::binary_search(lst.begin(), lst.end(), color);
}

MultiplicityTable multiplicities(const ListAssignment& L) {
    MultiplicityTable m;
    m.eta.assign(L.ell() + 1, 0);
    for (int v = 1; v <= L.size(); ++v) {
        for (int c : L.list(v)) m.eta[c] += 1;
    }
    for (int c = 1; c <= L.ell(); ++c) {
        if (m.eta[c] > 0) m.palette.push_back(c);
    }
    return m;
}

QuotaTable quotas(const MultiplicityTable& m, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    QuotaTable q;
    const int size = static_cast<int>(m.eta.size());
    q.lo.assign(size, 0);
    q.hi.assign(size, 0);
    q.palette = m.palette;
    for (int c : m.palette) {
        q.lo[c] = m.eta[c] / k;
        q.hi[c] = (m.eta[c] + k - 1) / k;
    }
    return q;
}

AssignmentSpace::AssignmentSpace(int n, int k, int ell) : n_(n), table_(k, ell) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    const std::uint64_t base = table_.count();
    total_ = 1;
    for (int i = 0; i < n_; ++i) {
        if (total_ > std::numeric_limits<std::uint64_t>::max() / base) {
            overflow_ = true;
            total_ = 0;
            break;
        }
        total_ *= base;
    }

    // Digit relabelings for every palette permutation, identity first.
    std::vector<int> perm(ell + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> image(k);
    do {
        std::vector<std::uint16_t> map(table_.count());
        for (int id = 0; id < table_.count(); ++id) {
            const auto& subset = table_.subsets[id];
            for (int i = 0; i < k; ++i) image[i] = perm[subset[i]];
            std::sort(image.begin(), image.end());
            map[id] = static_cast<std::uint16_t>(table_.index_of(image));
        }
        perm_digit_maps_.push_back(std::move(map));
        perms_.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

std::uint64_t AssignmentSpace::total() const {
    if (overflow_) throw std::overflow_error("assignment count exceeds 64 bits");
    return total_;
}

void AssignmentSpace::decode(std::uint64_t index, std::vector<std::uint16_t>& digits) const {
    const std::uint64_t base = table_.count();
    digits.assign(n_, 0);
    for (int pos = n_ - 1; pos >= 0; --pos) {
        digits[pos] = static_cast<std::uint16_t>(index % base);
        index /= base;
    }
    if (index != 0) throw std::out_of_range("assignment index out of range");
}

std::uint64_t AssignmentSpace::encode(std::span<const std::uint16_t> digits) const {
    const std::uint64_t base = table_.count();
    std::uint64_t index = 0;
    for (auto d : digits) index = index * base + d;
    return index;
}

bool AssignmentSpace::advance(std::vector<std::uint16_t>& digits) const {
    const std::uint16_t top = static_cast<std::uint16_t>(table_.count() - 1);
    for (int pos = n_ - 1; pos >= 0; --pos) {
        if (digits[pos] < top) {
            digits[pos] += 1;
            return true;
        }
        digits[pos] = 0;
    }
    return false;
}

bool AssignmentSpace::is_canonical(std::span<const std::uint16_t> digits) const {
    for (std::size_t p = 1; p < perm_digit_maps_.size(); ++p) {
        const auto& map = perm_digit_maps_[p];
        for (int i = 0; i < n_; ++i) {
            const std::uint16_t mapped = map[digits[i]];
            if (mapped < digits[i]) return false;
            if (mapped > digits[i]) break;
        }
    }
    return true;
}

std::vector<std::uint16_t> AssignmentSpace::canonicalize(
    std::span<const std::uint16_t> digits, std::vector<int>* perm_out) const {
    std::vector<std::uint16_t> best(digits.begin(), digits.end());
    std::size_t best_perm = 0;
    std::vector<std::uint16_t> candidate(n_);
    for (std::size_t p = 1; p < perm_digit_maps_.size(); ++p) {
        const auto& map = perm_digit_maps_[p];
        for (int i = 0; i < n_; ++i) candidate[i] = map[digits[i]];
        if (candidate < best) {
            best = candidate;
            best_perm = p;
        }
    }
    if (perm_out) *perm_out = perms_[best_perm];
    return best;
}

ListAssignment AssignmentSpace::make_assignment(std::span<const std::uint16_t> digits) const {
    return ListAssignment(k(), ell(),
                          std::vector<std::uint16_t>(digits.begin(), digits.end()));
}

AssignmentEnumerator::AssignmentEnumerator(const AssignmentSpace& space, EnumerationMode mode)
    : AssignmentEnumerator(space, mode, 0, space.total()) {}

AssignmentEnumerator::AssignmentEnumerator(const AssignmentSpace& space, EnumerationMode mode,
                                           std::uint64_t begin, std::uint64_t end)
    : space_(&space), mode_(mode), index_(begin), end_(end) {
    if (!space.total_overflows() && end_ > space.total()) end_ = space.total();
}

bool AssignmentEnumerator::next() {
    while (true) {
        if (!started_) {
            if (index_ >= end_) return false;
            space_->decode(index_, digits_);
            started_ = true;
        } else {
            if (index_ + 1 >= end_) return false;
            index_ += 1;
            space_->advance(digits_);
        }
        if (mode_ == EnumerationMode::full || space_->is_canonical(digits_)) return true;
    }
}

void check_enumeration_cap(const AssignmentSpace& space, std::uint64_t cap, bool force) {
    if (force) return;
    if (space.total_overflows() || space.total() > cap) {
        throw CapExceeded("enumeration of " +
                          (space.total_overflows() ? std::string(">2^64")
                                                   : std::to_string(space.total())) +
                          " assignments exceeds cap " + std::to_string(cap) +
                          " (use force to override)");
    }
}

}  // namespace propchoose
