#include "dfc/multi_index.hpp"

#include <array>
#include <bit>
#include <memory>
#include <string>

namespace dfc {

namespace {

void check_dimension(int n) {
    if (n < 0) throw InvalidIndex("dimension must be nonnegative, got " + std::to_string(n));
    if (n > kMaxDimension)
        throw DimensionExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDimension));
}

} // namespace

MultiIndex::MultiIndex(int n) : n_(n) { check_dimension(n); }

MultiIndex::MultiIndex(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
    check_dimension(n);
    int prev = 0;
    for (int v : indices_) {
        if (v < 1 || v > n_)
            throw InvalidIndex("index " + std::to_string(v) + " outside [1, " +
                               std::to_string(n_) + "]");
        if (v <= prev) throw InvalidIndex("indices must be strictly increasing");
        prev = v;
        mask_ |= static_cast<std::uint16_t>(1u << (v - 1));
    }
}

MultiIndex MultiIndex::from_mask(int n, std::uint16_t mask) {
    check_dimension(n);
    if (mask >> n) throw InvalidIndex("mask has bits outside [1, n]");
    MultiIndex out(n);
    out.mask_ = mask;
    for (int i = 1; i <= n; ++i)
        if ((mask >> (i - 1)) & 1u) out.indices_.push_back(i);
    return out;
}

int merge_sign(std::uint16_t a, std::uint16_t b) noexcept {
    int inversions = 0;
    std::uint16_t rest = a;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= static_cast<std::uint16_t>(rest - 1);
        inversions += std::popcount(static_cast<unsigned>(b & ((1u << bit) - 1u)));
    }
    return (inversions & 1) ? -1 : 1;
}

int insert_sign(int value, std::uint16_t mask) noexcept {
    int below = std::popcount(static_cast<unsigned>(mask & ((1u << (value - 1)) - 1u)));
    return (below & 1) ? -1 : 1;
}

std::pair<MultiIndex, int> complement(const MultiIndex& index) {
    std::uint16_t full = static_cast<std::uint16_t>((1u << index.n()) - 1u);
    std::uint16_t comp = static_cast<std::uint16_t>(full & ~index.mask());
    return {MultiIndex::from_mask(index.n(), comp), merge_sign(index.mask(), comp)};
}

std::vector<Shuffle> shuffles(const MultiIndex& index, int k) {
    int m = index.size();
    if (k < 0 || k > m)
        throw InvalidSplit("split size " + std::to_string(k) + " outside [0, " +
                           std::to_string(m) + "]");

    std::vector<Shuffle> out;
    out.reserve(static_cast<size_t>(binomial(m, k)));

    // Enumerate k-subsets of positions in lexicographic order; since the tuple
    // is increasing this is lexicographic in the left part.
    std::vector<int> pos(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint16_t left = 0;
        for (int i = 0; i < k; ++i)
            left |= static_cast<std::uint16_t>(1u << (index[pos[static_cast<size_t>(i)]] - 1));
        std::uint16_t right = static_cast<std::uint16_t>(index.mask() & ~left);
        out.push_back({MultiIndex::from_mask(index.n(), left),
                       MultiIndex::from_mask(index.n(), right), merge_sign(left, right)});
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pos[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

struct BasisTable {
    // index_basis is hot; build every (n, p) combination once up front.
    std::array<std::array<IndexBasis, kMaxDimension + 2>, kMaxDimension + 1> entries{};

    BasisTable() {
        for (int n = 0; n <= kMaxDimension; ++n) {
            for (int p = 0; p <= kMaxDimension + 1; ++p) {
                IndexBasis& b = entries[static_cast<size_t>(n)][static_cast<size_t>(p)];
                b.n = n;
                b.p = p;
                b.rank.assign(size_t{1} << n, -1);
                if (p > n) continue;
                // Lexicographic in the index tuple: (1,2) < (1,3) < (1,4) < (2,3) ...
                std::vector<int> tuple(static_cast<size_t>(p));
                for (int i = 0; i < p; ++i) tuple[static_cast<size_t>(i)] = i + 1;
                while (true) {
                    std::uint16_t mask = 0;
                    for (int v : tuple) mask |= static_cast<std::uint16_t>(1u << (v - 1));
                    b.rank[mask] = static_cast<std::int32_t>(b.masks.size());
                    b.masks.push_back(mask);
                    if (p == 0) break;
                    int i = p - 1;
                    while (i >= 0 && tuple[static_cast<size_t>(i)] == n - p + i + 1) --i;
                    if (i < 0) break;
                    ++tuple[static_cast<size_t>(i)];
                    for (int j = i + 1; j < p; ++j)
                        tuple[static_cast<size_t>(j)] = tuple[static_cast<size_t>(j - 1)] + 1;
                }
            }
        }
    }
};

} // namespace

const IndexBasis& index_basis(int n, int p) {
    check_dimension(n);
    static const BasisTable table;
    int pc = p < 0 || p > kMaxDimension + 1 ? kMaxDimension + 1 : p;
    return table.entries[static_cast<size_t>(n)][static_cast<size_t>(pc)];
}

std::int64_t binomial(int n, int k) noexcept {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double factorial(int k) noexcept {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace dfc
