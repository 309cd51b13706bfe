#include "tokengraphs/subsets.hpp"

#include "tokengraphs/error.hpp"

#include <array>

namespace tokengraphs {

namespace {

constexpr int kTableSize = 67;

using BinomialTable = std::array<std::array<std::uint64_t, kTableSize>, kTableSize>;

constexpr BinomialTable make_table()
{
    BinomialTable t{};
    for (int n = 0; n < kTableSize; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
}

constexpr BinomialTable kBinomials = make_table();

} // namespace

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || n >= kTableSize)
        throw InputError("binomial: n = " + std::to_string(n) + " outside the supported range");
    if (k < 0 || k > n)
        return 0;
    return kBinomials[n][k];
}

SubsetMask mask_of(std::span<const int> elements)
{
    SubsetMask s = 0;
    for (int e : elements) {
        if (e < 0 || e >= kMaxBaseOrder)
            throw InputError("subset element out of range");
        s |= SubsetMask{1} << e;
    }
    return s;
}

std::vector<int> members(SubsetMask s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

std::string subset_label(SubsetMask s)
{
    std::string out = "{";
    bool first = true;
    for (int e : members(s)) {
        if (!first)
            out += ',';
        out += std::to_string(e + 1);
        first = false;
    }
    out += '}';
    return out;
}

SubsetCodec::SubsetCodec(int n, int k)
    : n_(n), k_(k)
{
    if (n < 0 || n > kMaxBaseOrder)
        throw InputError("subset codec: base order must be in [0, 64]");
    if (k < 0 || k > n)
        throw InputError("subset codec: subset size must be in [0, n]");
    size_ = binomial(n, k);
}

std::uint64_t SubsetCodec::rank(SubsetMask s) const
{
    if (std::popcount(s) != k_)
        throw InputError("rank: subset " + subset_label(s) + " does not have " + std::to_string(k_) + " elements");
    if (n_ < 64 && (s >> n_) != 0)
        throw InputError("rank: subset " + subset_label(s) + " has an element >= n");
    std::uint64_t r = 0;
    int i = 1;
    while (s) {
        r += binomial(std::countr_zero(s), i++);
        s &= s - 1;
    }
    return r;
}

std::uint64_t SubsetCodec::rank(std::span<const int> elements) const
{
    const SubsetMask s = mask_of(elements);
    if (std::popcount(s) != static_cast<int>(elements.size()))
        throw InputError("rank: repeated element");
    return rank(s);
}

SubsetMask SubsetCodec::unrank(std::uint64_t r) const
{
    if (r >= size_)
        throw InputError("unrank: rank " + std::to_string(r) + " out of range");
    SubsetMask s = 0;
    int c = n_ - 1;
    for (int i = k_; i >= 1; --i) {
        while (binomial(c, i) > r)
            --c;
        s |= SubsetMask{1} << c;
        r -= binomial(c, i);
        --c;
    }
    return s;
}

} // namespace tokengraphs
