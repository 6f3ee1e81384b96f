#ifndef HESSKIT_FILLING_HPP
#define HESSKIT_FILLING_HPP

#include <optional>
#include <string>
#include <span>
#include <vector>

#include "error.hpp"
#include "shape.hpp"

namespace hesskit {

/**
 * An injective placement of 1..n into the boxes of a shape with n boxes.
 *
 * Serialized as the row-reading word (left to right within a row, top row
 * first) together with the row lengths.
 */
class Filling {
public:
    Filling() = default;

    Filling(Shape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows))
    {
        if (static_cast<int>(rows_.size()) != shape_.row_count())
            throw InvalidInput("filling row count does not match its shape");
        for (int r = 0; r < shape_.row_count(); ++r)
            if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
                throw InvalidInput("filling row length does not match its shape");
        index_positions();
    }

    /// Rows of the filling determine the shape (kept as a composition).
    static Filling from_rows(std::vector<std::vector<int>> rows)
    {
        std::vector<int> lengths;
        for (const auto& r : rows)
            lengths.push_back(static_cast<int>(r.size()));
        return Filling(Shape::composition(std::move(lengths)), std::move(rows));
    }

    static Filling from_word(const Shape& shape, std::span<const int> word)
    {
        if (static_cast<int>(word.size()) != shape.size())
            throw InvalidInput("word length does not match the shape size");
        std::vector<std::vector<int>> rows;
        std::size_t k = 0;
        for (int len : shape.rows()) {
            rows.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(k),
                              word.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(len)));
            k += static_cast<std::size_t>(len);
        }
        return Filling(shape, std::move(rows));
    }

    /// One-row filling.
    static Filling from_word(std::span<const int> word)
    {
        return from_word(Shape::row(static_cast<int>(word.size())), word);
    }

    const Shape& shape() const noexcept { return shape_; }
    int n() const noexcept { return static_cast<int>(positions_.size()); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    int at(Box b) const { return rows_.at(static_cast<std::size_t>(b.row)).at(static_cast<std::size_t>(b.col)); }

    /// Box holding value v (1-based).
    Box position_of(int v) const { return positions_.at(static_cast<std::size_t>(v - 1)); }

    std::vector<int> word() const
    {
        std::vector<int> w;
        for (const auto& r : rows_)
            w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    friend bool operator==(const Filling& a, const Filling& b) { return a.rows_ == b.rows_; }

private:
    void index_positions()
    {
        const int n = shape_.size();
        positions_.assign(static_cast<std::size_t>(n), Box{-1, -1});
        for (int r = 0; r < shape_.row_count(); ++r)
            for (int c = 0; c < shape_.row_length(r); ++c) {
                const int v = rows_[r][c];
                if (v < 1 || v > n)
                    throw InvalidInput("filling entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
                if (positions_[v - 1].row != -1)
                    throw InvalidInput("filling entry " + std::to_string(v) + " appears twice");
                positions_[v - 1] = {r, c};
            }
    }

    Shape shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Box> positions_;
};

/**
 * A diagram in which boxes may be missing, as produced by deleting values
 * from a filling. cells[r][c] is empty where no box sits; positions keep
 * their original columns, so gaps are visible.
 */
struct Subfilling {
    std::vector<std::vector<std::optional<int>>> cells;

    /// Remaining boxes per row.
    std::vector<int> row_counts() const
    {
        std::vector<int> counts;
        for (const auto& r : cells) {
            int c = 0;
            for (const auto& v : r)
                if (v)
                    ++c;
            counts.push_back(c);
        }
        return counts;
    }

    /// True when every row's remaining boxes are flush left (no gaps).
    bool is_composition() const
    {
        for (const auto& r : cells) {
            bool seen_gap = false;
            for (const auto& v : r) {
                if (!v)
                    seen_gap = true;
                else if (seen_gap)
                    return false;
            }
        }
        return true;
    }

    std::optional<int> at(Box b) const
    {
        if (b.row < 0 || b.row >= static_cast<int>(cells.size()))
            return std::nullopt;
        const auto& r = cells[static_cast<std::size_t>(b.row)];
        if (b.col < 0 || b.col >= static_cast<int>(r.size()))
            return std::nullopt;
        return r[static_cast<std::size_t>(b.col)];
    }

    static Subfilling of(const Filling& t)
    {
        Subfilling s;
        for (const auto& r : t.rows())
            s.cells.emplace_back(r.begin(), r.end());
        return s;
    }
};

/// T^(i): the boxes holding i+1..n are removed; the remaining boxes stay
/// where they were.
inline Subfilling subfilling(const Filling& t, int i)
{
    if (i < 1 || i > t.n())
        throw InvalidInput("subfilling index outside 1..n");
    Subfilling s = Subfilling::of(t);
    for (auto& r : s.cells)
        for (auto& v : r)
            if (v && *v > i)
                v.reset();
    return s;
}

inline bool is_row_strict(const Filling& t)
{
    for (const auto& r : t.rows())
        for (std::size_t c = 1; c < r.size(); ++c)
            if (r[c - 1] >= r[c])
                return false;
    return true;
}

/// For each i, the value i sits in the rightmost remaining box of its row
/// in T^(i).
inline bool has_subfilling_property(const Filling& t)
{
    for (int i = 1; i <= t.n(); ++i) {
        const Subfilling s = subfilling(t, i);
        const Box b = t.position_of(i);
        const auto& row = s.cells[static_cast<std::size_t>(b.row)];
        for (std::size_t c = static_cast<std::size_t>(b.col) + 1; c < row.size(); ++c)
            if (row[c])
                return false;
    }
    return true;
}

} // namespace hesskit

#endif
