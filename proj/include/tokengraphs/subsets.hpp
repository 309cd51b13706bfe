#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tokengraphs {

/// A subset of a base vertex set of at most 64 vertices.
using SubsetMask = std::uint64_t;

constexpr int kMaxBaseOrder = 64;

/// C(n, k) for 0 <= n <= 66; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

inline int subset_size(SubsetMask s) { return std::popcount(s); }

SubsetMask mask_of(std::span<const int> elements);
std::vector<int> members(SubsetMask s);

/// "{1,3,4}": members printed 1-based.
std::string subset_label(SubsetMask s);

/// Next mask with the same popcount in increasing numeric order (Gosper).
/// Increasing numeric order of masks is colexicographic order of subsets.
inline SubsetMask next_same_size(SubsetMask s)
{
    const SubsetMask lowest = s & (~s + 1);
    const SubsetMask ripple = s + lowest;
    return ripple | (((s ^ ripple) >> 2) / lowest);
}

/// Combinadic codec between the k-subsets of {0..n-1} and 0..C(n,k)-1 in
/// colexicographic order: rank(S) = sum_i C(s_i, i+1) with s_0 < s_1 < ...
class SubsetCodec {
public:
    SubsetCodec(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t rank(SubsetMask s) const;
    std::uint64_t rank(std::span<const int> elements) const;
    SubsetMask unrank(std::uint64_t r) const;

    SubsetMask first() const { return k_ == 0 ? 0 : (~SubsetMask{0} >> (64 - k_)); }

private:
    int n_;
    int k_;
    std::uint64_t size_;
};

} // namespace tokengraphs
