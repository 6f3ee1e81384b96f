#ifndef HESSKIT_HESSENBERG_HPP
#define HESSKIT_HESSENBERG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace hesskit {

/**
 * A Hessenberg function h : {1..n} -> {1..n}, stored as (h_1, ..., h_n).
 *
 * Invariants: i <= h_i <= n, and h_i <= h_{i+1}. Instances can only be
 * obtained through make(), so every live object satisfies both.
 */
class HessenbergFunction {
public:
    /// Checks (b) before (a) at each index, so a drop below the previous
    /// value is reported as a monotonicity failure.
    static HessenbergFunction make(std::vector<int> values)
    {
        if (values.empty())
            throw InvalidInput("Hessenberg function must have at least one value");
        const int n = static_cast<int>(values.size());
        for (int i = 1; i <= n; ++i) {
            const int hi = values[i - 1];
            if (i > 1 && values[i - 2] > hi)
                throw ConstraintViolation(
                    ConstraintViolation::Constraint::monotone, i,
                    "constraint (b) fails at i = " + std::to_string(i) + ": h_"
                        + std::to_string(i - 1) + " = " + std::to_string(values[i - 2])
                        + " > h_" + std::to_string(i) + " = " + std::to_string(hi));
            if (hi < i || hi > n)
                throw ConstraintViolation(
                    ConstraintViolation::Constraint::bounds, i,
                    "constraint (a) fails at i = " + std::to_string(i) + ": need "
                        + std::to_string(i) + " <= h_i <= " + std::to_string(n) + ", got "
                        + std::to_string(hi));
        }
        return HessenbergFunction(std::move(values));
    }

    /// h = (1, 2, ..., n); the Springer case.
    static HessenbergFunction minimal(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return make(std::move(v));
    }

    /// h = (n, ..., n); the full flag variety.
    static HessenbergFunction maximal(int n)
    {
        return make(std::vector<int>(static_cast<std::size_t>(n), n));
    }

    int n() const noexcept { return static_cast<int>(values_.size()); }

    /// h(i) for 1-based i.
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

    std::span<const int> values() const noexcept { return values_; }

    bool is_minimal() const noexcept
    {
        for (int i = 1; i <= n(); ++i)
            if (values_[i - 1] != i)
                return false;
        return true;
    }

    friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
    explicit HessenbergFunction(std::vector<int> v) : values_(std::move(v)) {}

    std::vector<int> values_;
};

inline HessenbergFunction make_hessenberg(std::vector<int> values)
{
    return HessenbergFunction::make(std::move(values));
}

/// beta_i = i - #{k : h_k < i}. Stored by index i (beta(1) first); the
/// conventional display order is (beta_n, ..., beta_1).
class DegreeTuple {
public:
    explicit DegreeTuple(const HessenbergFunction& h)
    {
        const int n = h.n();
        betas_.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            int below = 0;
            for (int k = 1; k <= n; ++k)
                if (h(k) < i)
                    ++below;
            betas_.push_back(i - below);
        }
    }

    int n() const noexcept { return static_cast<int>(betas_.size()); }
    int operator()(int i) const { return betas_.at(static_cast<std::size_t>(i - 1)); }

    /// (beta_1, ..., beta_n).
    std::span<const int> by_index() const noexcept { return betas_; }

    /// (beta_n, ..., beta_1).
    std::vector<int> display() const { return {betas_.rbegin(), betas_.rend()}; }

    std::uint64_t product() const
    {
        std::uint64_t p = 1;
        for (int b : betas_)
            p *= static_cast<std::uint64_t>(b);
        return p;
    }

private:
    std::vector<int> betas_;
};

inline DegreeTuple degree_tuple(const HessenbergFunction& h) { return DegreeTuple(h); }

/// nu_i = h_i - i + 1, for i = 1..n.
inline std::vector<int> nu_tuple(const HessenbergFunction& h)
{
    std::vector<int> nu;
    nu.reserve(static_cast<std::size_t>(h.n()));
    for (int i = 1; i <= h.n(); ++i)
        nu.push_back(h(i) - i + 1);
    return nu;
}

/// Shaded region of the n x n grid on or below the diagonal: the top h_i
/// boxes of column i, with the strictly upper triangle removed.
struct HessenbergDiagram {
    int n = 0;
    /// shaded[row][col], 0-based.
    std::vector<std::vector<bool>> shaded;
    /// Shaded boxes per column, left to right.
    std::vector<int> column_lengths;
    /// Shaded boxes per row, top to bottom.
    std::vector<int> row_lengths;
};

inline HessenbergDiagram hessenberg_diagram(const HessenbergFunction& h)
{
    HessenbergDiagram d;
    d.n = h.n();
    const auto n = static_cast<std::size_t>(d.n);
    d.shaded.assign(n, std::vector<bool>(n, false));
    for (int col = 0; col < d.n; ++col)
        for (int row = col; row < h(col + 1); ++row)
            d.shaded[row][col] = true;

    d.column_lengths.assign(n, 0);
    d.row_lengths.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (d.shaded[r][c]) {
                ++d.row_lengths[r];
                ++d.column_lengths[c];
            }
    return d;
}

/// Every Hessenberg function of size n, in lexicographic order. Built as
/// lattice paths: h_i ranges over max(i, h_{i-1}) .. n.
inline std::vector<HessenbergFunction> all_hessenberg_functions(int n)
{
    std::vector<HessenbergFunction> out;
    if (n <= 0)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(HessenbergFunction::make(cur));
            return;
        }
        const int lo = std::max(i, i > 1 ? cur[i - 2] : 1);
        for (int v = lo; v <= n; ++v) {
            cur[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace hesskit

#endif
