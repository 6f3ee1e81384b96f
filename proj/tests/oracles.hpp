// Independent reference computations for the tests. Everything here works
// straight from the definitions on plain vectors and avoids the library's
// algorithms.
#ifndef HESSKIT_TESTS_ORACLES_HPP
#define HESSKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;
using Pairs = std::set<std::pair<int, int>>;

inline std::uint64_t binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

inline std::uint64_t catalan(int n) { return binom(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

/// Row-strict fillings of mu counted as a product of binomials.
inline std::uint64_t row_strict_count(const std::vector<int>& mu)
{
    int left = std::accumulate(mu.begin(), mu.end(), 0);
    std::uint64_t c = 1;
    for (int r : mu) {
        c *= binom(left, r);
        left -= r;
    }
    return c;
}

/// Every n-tuple over 1..n that is nondecreasing with h_i >= i.
inline std::vector<std::vector<int>> hessenberg_functions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 1);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = t[i] >= i + 1 && (i == 0 || t[i - 1] <= t[i]);
        if (ok)
            out.push_back(t);
        int k = n - 1;
        while (k >= 0 && t[k] == n)
            t[k--] = 1;
        if (k < 0)
            return out;
        ++t[k];
    }
}

/// beta_i counted directly: boxes (i, k) with k <= i <= h_k.
inline std::vector<int> beta(const std::vector<int>& h)
{
    const int n = static_cast<int>(h.size());
    std::vector<int> b;
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int k = 1; k <= i; ++k)
            if (h[k - 1] >= i)
                ++c;
        b.push_back(c);
    }
    return b;
}

inline Rows split(const std::vector<int>& shape, const std::vector<int>& word)
{
    Rows rows;
    std::size_t k = 0;
    for (int len : shape) {
        rows.emplace_back(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k + len));
        k += static_cast<std::size_t>(len);
    }
    return rows;
}

inline bool permissible(const std::vector<int>& h, const Rows& rows)
{
    for (const auto& r : rows)
        for (std::size_t c = 0; c + 1 < r.size(); ++c)
            if (r[c] > h[r[c + 1] - 1])
                return false;
    return true;
}

inline bool row_strict(const Rows& rows)
{
    for (const auto& r : rows)
        if (!std::is_sorted(r.begin(), r.end()) || std::adjacent_find(r.begin(), r.end()) != r.end())
            return false;
    return true;
}

/// Dimension pairs straight from the definition, looking up coordinates of
/// each value in the rows.
inline Pairs pairs(const std::vector<int>& h, const Rows& rows)
{
    std::map<int, std::pair<int, int>> where;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
            where[rows[r][c]] = {r, c};
    Pairs out;
    for (const auto& [a, pa] : where)
        for (const auto& [b, pb] : where) {
            if (b <= a)
                continue;
            const auto [ra, ca] = pa;
            const auto [rb, cb] = pb;
            if (!((cb == ca && rb > ra) || cb < ca))
                continue;
            const auto& row = rows[static_cast<std::size_t>(ra)];
            if (ca + 1 < static_cast<int>(row.size()) && b > h[row[ca + 1] - 1])
                continue;
            out.insert({a, b});
        }
    return out;
}

inline std::vector<int> exponents(const Pairs& d, int n)
{
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (const auto& p : d)
        ++e[p.second - 1];
    return e;
}

/// All permissible fillings as row lists, every permutation tried.
inline std::vector<Rows> fillings(const std::vector<int>& h, const std::vector<int>& shape)
{
    const int n = static_cast<int>(h.size());
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Rows> out;
    do {
        Rows r = split(shape, w);
        if (permissible(h, r))
            out.push_back(std::move(r));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// The staircase { alpha : 0 <= alpha_i < beta_i } as exponent vectors.
inline std::set<std::vector<int>> staircase(const std::vector<int>& b)
{
    std::set<std::vector<int>> out;
    std::vector<int> a(b.size(), 0);
    for (;;) {
        out.insert(a);
        std::size_t k = 0;
        while (k < a.size() && a[k] + 1 >= b[k])
            a[k++] = 0;
        if (k == a.size())
            return out;
        ++a[k];
    }
}

/// Partitions of n: every composition with weakly decreasing parts.
inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int len = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(len);
                len = 1;
            } else {
                ++len;
            }
        }
        parts.push_back(len);
        if (std::is_sorted(parts.rbegin(), parts.rend()))
            out.push_back(parts);
    }
    return out;
}

} // namespace oracle

#endif
