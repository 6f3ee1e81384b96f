#ifndef HESSKIT_DIMENSION_PAIRS_HPP
#define HESSKIT_DIMENSION_PAIRS_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "filling.hpp"
#include "hessenberg.hpp"
#include "monomial.hpp"
#include "shape.hpp"

namespace hesskit {

struct DimensionPair {
    int a = 0; ///< the smaller value
    int b = 0; ///< the larger value

    friend bool operator==(const DimensionPair&, const DimensionPair&) = default;
    friend auto operator<=>(const DimensionPair&, const DimensionPair&) = default;
};

/// The set D(h,T), kept sorted by (a, b).
class DimensionPairSet {
public:
    DimensionPairSet() = default;
    explicit DimensionPairSet(std::vector<DimensionPair> pairs) : pairs_(std::move(pairs))
    {
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    }

    const std::vector<DimensionPair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }

    /// D_y = {(x, y)}.
    std::vector<DimensionPair> with_larger(int y) const
    {
        std::vector<DimensionPair> out;
        std::copy_if(pairs_.begin(), pairs_.end(), std::back_inserter(out),
                     [y](const DimensionPair& p) { return p.b == y; });
        return out;
    }

    std::size_t count_with_larger(int y) const
    {
        return static_cast<std::size_t>(
            std::count_if(pairs_.begin(), pairs_.end(), [y](const DimensionPair& p) { return p.b == y; }));
    }

    friend bool operator==(const DimensionPairSet&, const DimensionPairSet&) = default;

private:
    std::vector<DimensionPair> pairs_;
};

/// Every horizontal adjacency "k immediately left of j" has k <= h(j).
inline bool is_permissible(const HessenbergFunction& h, const Filling& t)
{
    if (t.n() != h.n())
        throw InvalidInput("filling size does not match the Hessenberg function");
    for (const auto& r : t.rows())
        for (std::size_t c = 1; c < r.size(); ++c)
            if (r[c - 1] > h(r[c]))
                return false;
    return true;
}

/**
 * Dimension pairs of a diagram whose boxes may be missing (a subfilling).
 * Columns are compared by their literal index. The right-neighbor test
 * looks at the box immediately right of a; if there is none, it holds.
 * h may be larger than the values present.
 */
inline DimensionPairSet dimension_pairs(const HessenbergFunction& h, const Subfilling& s)
{
    struct Placed {
        int value;
        Box box;
    };
    std::vector<Placed> placed;
    for (int r = 0; r < static_cast<int>(s.cells.size()); ++r)
        for (int c = 0; c < static_cast<int>(s.cells[r].size()); ++c)
            if (const auto v = s.cells[r][c]) {
                if (*v < 1 || *v > h.n())
                    throw InvalidInput("subfilling value outside 1..n");
                placed.push_back({*v, {r, c}});
            }

    std::vector<DimensionPair> pairs;
    for (const Placed& a : placed) {
        const auto right = s.at({a.box.row, a.box.col + 1});
        for (const Placed& b : placed) {
            if (b.value <= a.value)
                continue;
            const bool below_same_col = b.box.col == a.box.col && b.box.row > a.box.row;
            const bool strictly_left = b.box.col < a.box.col;
            if (!below_same_col && !strictly_left)
                continue;
            if (right && b.value > h(*right))
                continue;
            pairs.push_back({a.value, b.value});
        }
    }
    return DimensionPairSet(std::move(pairs));
}

inline DimensionPairSet dimension_pairs(const HessenbergFunction& h, const Filling& t)
{
    if (!is_permissible(h, t))
        throw NotPermissible("filling is not an (h,mu)-filling");
    return dimension_pairs(h, Subfilling::of(t));
}

/// x_j raised to |D_j| for each j.
inline Monomial monomial_of(const DimensionPairSet& d, int n)
{
    Monomial m(n);
    for (const auto& p : d.pairs())
        m.set_exponent(p.b, m.exponent(p.b) + 1);
    return m;
}

inline Monomial phi(const HessenbergFunction& h, const Filling& t)
{
    return monomial_of(dimension_pairs(h, t), h.n());
}

/**
 * Every permissible filling of the shape, found by testing all n!
 * placements. Ordered lexicographically by row-reading word.
 */
inline std::vector<Filling> enumerate_fillings(const HessenbergFunction& h, const Shape& shape,
                                               int max_n = default_max_n)
{
    const int n = shape.size();
    if (n != h.n())
        throw InvalidInput("shape size does not match the Hessenberg function");
    check_size(n, max_n);

    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);

    // Row index of every word position, and whether a right neighbor
    // exists in the same row.
    std::vector<bool> has_left(word.size(), false);
    {
        std::size_t k = 0;
        for (int len : shape.rows())
            for (int c = 0; c < len; ++c, ++k)
                has_left[k] = c > 0;
    }

    std::vector<Filling> out;
    do {
        bool ok = true;
        for (std::size_t k = 1; k < word.size() && ok; ++k)
            if (has_left[k] && word[k - 1] > h(word[k]))
                ok = false;
        if (ok)
            out.push_back(Filling::from_word(shape, word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

/// b_{2k} for k = 0, 1, ...: the number of permissible fillings with k
/// dimension pairs. Trailing zeros are dropped.
inline std::vector<std::uint64_t> betti_numbers(const HessenbergFunction& h, const Shape& shape,
                                                int max_n = default_max_n)
{
    std::vector<std::uint64_t> b;
    for (const Filling& t : enumerate_fillings(h, shape, max_n)) {
        const std::size_t k = dimension_pairs(h, t).size();
        if (b.size() <= k)
            b.resize(k + 1, 0);
        ++b[k];
    }
    return b;
}

} // namespace hesskit

#endif
