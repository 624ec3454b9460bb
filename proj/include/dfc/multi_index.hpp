#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dfc/errors.hpp"

namespace dfc {

// Everything is desk-scale by construction: C(10,5)^2 coefficient blocks are
// the largest objects we ever materialize.
inline constexpr int kMaxDimension = 10;

/// Strictly increasing tuple of 1-based indices in [1, n], naming a basis
/// element of the exterior power. Immutable after construction.
class MultiIndex {
public:
    /// Empty index (degree 0).
    explicit MultiIndex(int n);

    /// Validates: entries strictly increasing, all in [1, n].
    MultiIndex(int n, std::vector<int> indices);

    /// Rebuild from a bitmask whose bit (i-1) marks membership of index i.
    static MultiIndex from_mask(int n, std::uint16_t mask);

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(indices_.size()); }
    bool empty() const noexcept { return indices_.empty(); }

    /// 0-based position, 1-based value.
    int operator[](int pos) const { return indices_[static_cast<size_t>(pos)]; }

    const std::vector<int>& indices() const noexcept { return indices_; }
    std::uint16_t mask() const noexcept { return mask_; }

    bool contains(int index) const noexcept {
        return index >= 1 && index <= n_ && (mask_ >> (index - 1)) & 1u;
    }

    bool operator==(const MultiIndex& o) const noexcept {
        return n_ == o.n_ && mask_ == o.mask_;
    }

private:
    int n_;
    std::uint16_t mask_ = 0;
    std::vector<int> indices_;
};

/// One way of splitting an index tuple into a left part and its remainder,
/// with the sign of the permutation that restores the original order.
struct Shuffle {
    MultiIndex left;
    MultiIndex right;
    int sign; // +1 or -1
};

/// Increasing complement I^c of I in {1,...,n} together with the sign of the
/// permutation (I, I^c) relative to (1,...,n).
std::pair<MultiIndex, int> complement(const MultiIndex& index);

/// All C(|I|, k) splits of I into an increasing k-part and its increasing
/// remainder, ordered lexicographically in the left part.
std::vector<Shuffle> shuffles(const MultiIndex& index, int k);

// --- mask-level combinatorics used by the dense kernels ---------------------

/// Sign of the permutation sorting the concatenation (A, B) of two disjoint
/// increasing sets given as bitmasks: (-1)^{#{(a,b) in AxB : a > b}}.
int merge_sign(std::uint16_t a, std::uint16_t b) noexcept;

/// Sign of inserting single index `value` (1-based) in front of the increasing
/// set `mask` and re-sorting: (-1)^{#{m in mask : m < value}}.
int insert_sign(int value, std::uint16_t mask) noexcept;

/// Fixed enumeration of all degree-p multi-indices over dimension n
/// (lexicographic in the index tuple), plus the inverse rank lookup.
struct IndexBasis {
    int n = 0;
    int p = 0;
    std::vector<std::uint16_t> masks;   // masks[rank] = bitmask of that basis index
    std::vector<std::int32_t> rank;     // rank[mask] or -1; size 1 << n

    int count() const noexcept { return static_cast<int>(masks.size()); }
    int rank_of(std::uint16_t mask) const { return rank[mask]; }
};

/// Shared table for (n, p); p > n yields an empty basis. Throws
/// DimensionExceeded above kMaxDimension.
const IndexBasis& index_basis(int n, int p);

std::int64_t binomial(int n, int k) noexcept;
double factorial(int k) noexcept;

} // namespace dfc
