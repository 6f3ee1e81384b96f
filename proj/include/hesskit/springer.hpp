#ifndef HESSKIT_SPRINGER_HPP
#define HESSKIT_SPRINGER_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "dimension_pairs.hpp"
#include "error.hpp"
#include "filling.hpp"
#include "monomial.hpp"
#include "shape.hpp"
#include "tree.hpp"

// Springer setting, h = (1, 2, ..., n): Garsia-Procesi trees, the basis
// B(mu), and the inverse map psi.
namespace hesskit::springer {

/**
 * A partition mu with some boxes already holding values. Empty boxes are
 * stored as 0. Values are placed in descending order into far-right empty
 * boxes, so the empty boxes of every row stay flush left.
 */
class PartialTableau {
public:
    PartialTableau() = default;

    explicit PartialTableau(const Shape& mu) : shape_(mu)
    {
        for (int len : mu.rows())
            cells_.emplace_back(static_cast<std::size_t>(len), 0);
    }

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }

    /// Empty boxes per row: the composition still to be filled.
    std::vector<int> unfilled_rows() const
    {
        std::vector<int> rows;
        for (const auto& r : cells_)
            rows.push_back(static_cast<int>(std::count(r.begin(), r.end(), 0)));
        return rows;
    }

    void place(Box b, int value) { cells_.at(static_cast<std::size_t>(b.row)).at(static_cast<std::size_t>(b.col)) = value; }

    bool complete() const
    {
        for (const auto& r : cells_)
            if (std::count(r.begin(), r.end(), 0) > 0)
                return false;
        return true;
    }

    Filling to_filling() const
    {
        if (!complete())
            throw InvalidInput("partial tableau still has empty boxes");
        return Filling(shape_, cells_);
    }

    friend bool operator==(const PartialTableau& a, const PartialTableau& b) { return a.cells_ == b.cells_; }

private:
    Shape shape_;
    std::vector<std::vector<int>> cells_;
};

inline void require_partition(const Shape& mu)
{
    if (!mu.is_partition())
        throw InvalidInput("springer operations need a partition");
}

/**
 * The GP-tree child of a partition along edge x_i^j: remove the box with
 * dimension-order j+1, then push every column up (rows are re-formed from
 * the column lengths of the remaining boxes).
 */
inline Shape gp_child(const Shape& mu, int j)
{
    const auto order = dimension_ordering(mu);
    if (j < 0 || j >= static_cast<int>(order.size()))
        throw InvalidInput("no box with that dimension-order");
    std::vector<int> rows(mu.rows().begin(), mu.rows().end());
    --rows[static_cast<std::size_t>(order[static_cast<std::size_t>(j)].row)];

    const int width = rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end());
    std::vector<int> col_len(static_cast<std::size_t>(width), 0);
    for (int len : rows)
        for (int c = 0; c < len; ++c)
            ++col_len[static_cast<std::size_t>(c)];

    std::vector<int> pushed;
    for (int r = 0;; ++r) {
        const int len = static_cast<int>(std::count_if(col_len.begin(), col_len.end(), [r](int h) { return h > r; }));
        if (len == 0)
            break;
        pushed.push_back(len);
    }
    return Shape::partition(std::move(pushed));
}

/// GP-tree: levels n down to 1. Level-1 vertices carry no diagram; their
/// label is the leaf monomial. Edges under a vertex are x_i^0 .. x_i^{r-1}
/// left to right.
inline LabeledTree<Shape> build_gp_tree(const Shape& mu, int max_n = default_max_n)
{
    require_partition(mu);
    const int n = mu.size();
    check_size(n, max_n);

    LabeledTree<Shape> tree(n);
    const std::size_t root = tree.add_root(std::to_string(n), n == 1 ? std::nullopt : std::optional<Shape>(mu));
    auto grow = [&](auto&& self, std::size_t at, const Shape& shape, int i) -> void {
        if (i < 2)
            return;
        const int r = shape.nonzero_rows();
        for (int j = 0; j < r; ++j) {
            Shape child = gp_child(shape, j);
            const bool leaf = i - 1 == 1;
            const std::size_t c = tree.add_child(at, std::to_string(i - 1), {i, j},
                                                 leaf ? std::nullopt : std::optional<Shape>(child));
            self(self, c, child, i - 1);
        }
    };
    grow(grow, root, mu, n);
    return tree;
}

/// Modified GP-tree: levels n, ..., 1, 0, B. Along edge x_i^j the value i
/// goes into the box with dimension-order j+1 of the still-empty boxes;
/// boxes never move. Level 0 holds total fillings; Level B holds the leaf
/// monomials.
inline LabeledTree<PartialTableau> build_modified_gp_tree(const Shape& mu, int max_n = default_max_n)
{
    require_partition(mu);
    const int n = mu.size();
    check_size(n, max_n);

    LabeledTree<PartialTableau> tree(n);
    const std::size_t root = tree.add_root(std::to_string(n), PartialTableau(mu));
    auto grow = [&](auto&& self, std::size_t at, const PartialTableau& p, int i) -> void {
        if (i == 0) {
            tree.add_child(at, "B", {0, 0}, std::nullopt);
            return;
        }
        const auto order = dimension_ordering(p.unfilled_rows());
        for (int j = 0; j < static_cast<int>(order.size()); ++j) {
            PartialTableau next = p;
            next.place(order[static_cast<std::size_t>(j)], i);
            const std::size_t c = tree.add_child(at, std::to_string(i - 1), {i, j}, next);
            self(self, c, next, i - 1);
        }
    };
    grow(grow, root, PartialTableau(mu), n);
    return tree;
}

/// Visits every modified-GP-tree path without building the tree, passing
/// the Level-B monomial and the Level-0 filling. Paths are visited left to
/// right.
inline void for_each_gp_path(const Shape& mu, const std::function<void(const Monomial&, const Filling&)>& visit)
{
    require_partition(mu);
    const int n = mu.size();
    Monomial m(n);
    auto walk = [&](auto&& self, PartialTableau& p, int i) -> void {
        if (i == 0) {
            visit(m, p.to_filling());
            return;
        }
        const auto order = dimension_ordering(p.unfilled_rows());
        for (int j = 0; j < static_cast<int>(order.size()); ++j) {
            const Box b = order[static_cast<std::size_t>(j)];
            p.place(b, i);
            m.set_exponent(i, j);
            self(self, p, i - 1);
            p.place(b, 0);
        }
        m.set_exponent(i, 0);
    };
    PartialTableau start(mu);
    walk(walk, start, n);
}

inline std::uint64_t count_gp_paths(const Shape& mu)
{
    std::uint64_t count = 0;
    for_each_gp_path(mu, [&](const Monomial&, const Filling&) { ++count; });
    return count;
}

/// B(mu): the GP-tree leaf monomials, in display order (degree, then
/// descending lex). Walks the GP-tree on shapes without materializing it.
inline std::vector<Monomial> garsia_procesi_basis(const Shape& mu, int max_n = default_max_n)
{
    require_partition(mu);
    const int n = mu.size();
    check_size(n, max_n);

    std::vector<Monomial> out;
    Monomial m(n);
    auto walk = [&](auto&& self, const Shape& shape, int i) -> void {
        if (i < 2) {
            out.push_back(m);
            return;
        }
        const int r = shape.nonzero_rows();
        for (int j = 0; j < r; ++j) {
            m.set_exponent(i, j);
            self(self, gp_child(shape, j), i - 1);
        }
        m.set_exponent(i, 0);
    };
    walk(walk, mu, n);
    sort_for_display(out);
    return out;
}

/**
 * Psi: rebuild the row-strict filling of mu whose image under phi is m.
 *
 * For i = n down to 1 the value i goes into the box with dimension-order
 * alpha_i + 1 among the still-empty boxes. Throws NotInBasis when that box
 * does not exist, which happens exactly for monomials outside B(mu).
 */
inline Filling psi(const Shape& mu, const Monomial& m)
{
    require_partition(mu);
    const int n = mu.size();
    if (m.nvars() != n)
        throw InvalidInput("monomial has " + std::to_string(m.nvars()) + " variables, shape has "
                           + std::to_string(n) + " boxes");
    PartialTableau p(mu);
    for (int i = n; i >= 1; --i) {
        const auto order = dimension_ordering(p.unfilled_rows());
        const int alpha = m.exponent(i);
        if (alpha >= static_cast<int>(order.size()))
            throw NotInBasis("exponent " + std::to_string(alpha) + " of x" + std::to_string(i)
                             + " needs dimension-order " + std::to_string(alpha + 1) + " but only "
                             + std::to_string(order.size()) + " far-right boxes remain");
        p.place(order[static_cast<std::size_t>(alpha)], i);
    }
    return p.to_filling();
}

/**
 * All row-strict fillings of mu, built by choosing the set of values for
 * each row in turn. Ordered lexicographically by row-reading word.
 */
inline std::vector<Filling> enumerate_row_strict(const Shape& mu, int max_n = default_max_n)
{
    require_partition(mu);
    const int n = mu.size();
    check_size(n, max_n);

    std::vector<Filling> out;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(mu.row_count()));

    auto fill_row = [&](auto&& self, int row, int min_value) -> void {
        if (row == mu.row_count()) {
            out.emplace_back(mu, rows);
            return;
        }
        auto& cur = rows[static_cast<std::size_t>(row)];
        if (static_cast<int>(cur.size()) == mu.row_length(row)) {
            self(self, row + 1, 1);
            return;
        }
        for (int v = min_value; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(v)] = true;
            cur.push_back(v);
            self(self, row, v + 1);
            cur.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    fill_row(fill_row, 0, 1);
    return out;
}

} // namespace hesskit::springer

#endif
