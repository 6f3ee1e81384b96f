#ifndef HESSKIT_SHAPE_HPP
#define HESSKIT_SHAPE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "error.hpp"

namespace hesskit {

/// A box position, 0-based: row 0 is the top row, column 0 the leftmost.
/// Rows are flush left.
struct Box {
    int row = 0;
    int col = 0;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

enum class ShapeKind { partition, composition };

/**
 * Row lengths of a diagram, top row first. A composition may have rows of
 * any nonnegative length in any order (zero rows are kept); a partition is
 * weakly decreasing with all rows positive.
 */
class Shape {
public:
    Shape() = default;

    static Shape partition(std::vector<int> rows)
    {
        if (rows.empty())
            throw InvalidInput("a partition needs at least one row");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] <= 0)
                throw InvalidInput("partition rows must be positive");
            if (i > 0 && rows[i] > rows[i - 1])
                throw InvalidInput("partition rows must be weakly decreasing");
        }
        return Shape(std::move(rows), ShapeKind::partition);
    }

    static Shape composition(std::vector<int> rows)
    {
        for (int r : rows)
            if (r < 0)
                throw InvalidInput("composition rows must be nonnegative");
        return Shape(std::move(rows), ShapeKind::composition);
    }

    /// The one-row shape (n).
    static Shape row(int n) { return partition({n}); }

    std::span<const int> rows() const noexcept { return rows_; }
    ShapeKind kind() const noexcept { return kind_; }
    bool is_partition() const noexcept { return kind_ == ShapeKind::partition; }

    int row_count() const noexcept { return static_cast<int>(rows_.size()); }
    int row_length(int r) const { return rows_.at(static_cast<std::size_t>(r)); }

    /// Total number of boxes.
    int size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

    int nonzero_rows() const noexcept
    {
        return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
    }

    bool contains(Box b) const noexcept
    {
        return b.row >= 0 && b.row < row_count() && b.col >= 0 && b.col < rows_[b.row];
    }

    /// Equality ignores the kind flag: a weakly decreasing composition with
    /// positive rows denotes the same diagram as the partition.
    friend bool operator==(const Shape& a, const Shape& b) { return a.rows_ == b.rows_; }

private:
    Shape(std::vector<int> rows, ShapeKind kind) : rows_(std::move(rows)), kind_(kind) {}

    std::vector<int> rows_;
    ShapeKind kind_ = ShapeKind::composition;
};

/**
 * Dimension-ordering of the far-right boxes of a composition.
 *
 * One box per nonzero row, ordered by column from rightmost to leftmost;
 * far-right boxes sharing a column are taken top to bottom.
 */
inline std::vector<Box> dimension_ordering(std::span<const int> rows)
{
    std::vector<Box> boxes;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (rows[r] > 0)
            boxes.push_back({r, rows[r] - 1});
    std::stable_sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        if (a.col != b.col)
            return a.col > b.col;
        return a.row < b.row;
    });
    return boxes;
}

inline std::vector<Box> dimension_ordering(const Shape& rho) { return dimension_ordering(rho.rows()); }

/// All partitions of n, each weakly decreasing, in reverse lexicographic
/// order ((n) first, (1,...,1) last).
inline std::vector<Shape> partitions_of(int n)
{
    std::vector<Shape> out;
    if (n <= 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Shape::partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All compositions of n with positive parts (2^{n-1} of them).
inline std::vector<Shape> compositions_of(int n)
{
    std::vector<Shape> out;
    if (n <= 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Shape::composition(cur));
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// n! / (rho_1! ... rho_s!) for the shape's row lengths.
inline std::uint64_t multinomial(const Shape& rho)
{
    std::uint64_t m = factorial(rho.size());
    for (int r : rho.rows())
        m /= factorial(r);
    return m;
}

} // namespace hesskit

#endif
