#ifndef HESSKIT_REGNILP_HPP
#define HESSKIT_REGNILP_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dimension_pairs.hpp"
#include "error.hpp"
#include "filling.hpp"
#include "hessenberg.hpp"
#include "monomial.hpp"
#include "shape.hpp"
#include "tree.hpp"

// Regular nilpotent setting, mu = (n): h-trees, h-tableau-trees, psi_h and
// the staircase basis B_h.
namespace hesskit::regnilp {

/// A one-row word holding 1..i-1 for some i <= n, without the row frame.
struct BarlessTableau {
    std::vector<int> word;

    friend bool operator==(const BarlessTableau&, const BarlessTableau&) = default;
};

/**
 * Insertion slots for the value i = |w| + 1 that keep w h-permissible.
 *
 * A slot is an index p into the word (insert before word[p]); p == |w| is
 * the far-right end. Slot p < |w| is available iff i <= h(word[p]).
 * Returned right to left, so element 0 is bullet 1 (the far-right end).
 */
inline std::vector<int> h_permissible_positions(const HessenbergFunction& h, const BarlessTableau& w)
{
    const int len = static_cast<int>(w.word.size());
    const int i = len + 1;
    if (i > h.n())
        throw InvalidInput("barless tableau is already full");
    std::vector<int> slots{len};
    for (int p = len - 1; p >= 0; --p)
        if (i <= h(w.word[static_cast<std::size_t>(p)]))
            slots.push_back(p);
    return slots;
}

/// Insert i at the (j+1)-th bullet counting from the right.
inline BarlessTableau insert_at_bullet(const HessenbergFunction& h, const BarlessTableau& w, int j)
{
    const auto slots = h_permissible_positions(h, w);
    if (j < 0 || j >= static_cast<int>(slots.size()))
        throw NotInBasis("bullet " + std::to_string(j + 1) + " does not exist; only "
                         + std::to_string(slots.size()) + " permissible positions");
    BarlessTableau next = w;
    const int i = static_cast<int>(w.word.size()) + 1;
    next.word.insert(next.word.begin() + slots[static_cast<std::size_t>(j)], i);
    return next;
}

/// The h-tree: levels 1..n+1, beta_i edges below each Level i-1 vertex
/// labelled x_i^{beta_i - 1} .. x_i^0 left to right, then a constant edge
/// from Level n to its leaf. Vertices carry no payload.
inline LabeledTree<std::monostate> build_h_tree(const HessenbergFunction& h, int max_n = default_max_n)
{
    const int n = h.n();
    check_size(n, max_n);
    const DegreeTuple beta(h);

    LabeledTree<std::monostate> tree(n);
    const std::size_t root = tree.add_root("1", std::nullopt);
    auto grow = [&](auto&& self, std::size_t at, int level) -> void {
        if (level == n) {
            tree.add_child(at, std::to_string(n + 1), {0, 0}, std::nullopt);
            return;
        }
        const int i = level + 1;
        for (int j = beta(i) - 1; j >= 0; --j) {
            const std::size_t c = tree.add_child(at, std::to_string(i), {i, j}, std::nullopt);
            self(self, c, i);
        }
    };
    grow(grow, root, 1);
    return tree;
}

/**
 * The h-tableau-tree: the h-tree with barless tableaux on Levels 1..n.
 * Level 1 holds "1"; edge x_i^j puts i at the (j+1)-th bullet from the
 * right. Level-n words are checked to be pairwise distinct.
 */
inline LabeledTree<BarlessTableau> build_h_tableau_tree(const HessenbergFunction& h, int max_n = default_max_n)
{
    const int n = h.n();
    check_size(n, max_n);
    const DegreeTuple beta(h);

    LabeledTree<BarlessTableau> tree(n);
    const std::size_t root = tree.add_root("1", BarlessTableau{{1}});
    auto grow = [&](auto&& self, std::size_t at, const BarlessTableau& w, int level) -> void {
        if (level == n) {
            tree.add_child(at, std::to_string(n + 1), {0, 0}, std::nullopt);
            return;
        }
        const int i = level + 1;
        for (int j = beta(i) - 1; j >= 0; --j) {
            BarlessTableau next = insert_at_bullet(h, w, j);
            const std::size_t c = tree.add_child(at, std::to_string(i), {i, j}, next);
            self(self, c, next, i);
        }
    };
    grow(grow, root, BarlessTableau{{1}}, 1);

    std::set<std::vector<int>> seen;
    for (std::size_t v : tree.level(std::to_string(n)))
        if (!seen.insert(tree.vertex(v).payload->word).second)
            throw std::logic_error("h-tableau-tree produced a repeated Level-n filling");
    return tree;
}

/// B_h = { x^alpha : 0 <= alpha_i <= beta_i - 1 }, in display order.
inline std::vector<Monomial> b_h_basis(const HessenbergFunction& h)
{
    const int n = h.n();
    const DegreeTuple beta(h);
    std::vector<Monomial> out;
    Monomial m(n);
    auto rec = [&](auto&& self, int var) -> void {
        if (var > n) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e < beta(var); ++e) {
            m.set_exponent(var, e);
            self(self, var + 1);
        }
        m.set_exponent(var, 0);
    };
    rec(rec, 1);
    sort_for_display(out);
    return out;
}

inline bool in_b_h(const HessenbergFunction& h, const Monomial& m)
{
    if (m.nvars() != h.n())
        return false;
    const DegreeTuple beta(h);
    for (int i = 1; i <= h.n(); ++i)
        if (m.exponent(i) >= beta(i))
            return false;
    return true;
}

/// psi_h: the one-row filling sitting above m in the h-tableau-tree,
/// found by walking the single root-to-leaf path.
inline Filling psi_h(const HessenbergFunction& h, const Monomial& m)
{
    const int n = h.n();
    if (m.nvars() != n)
        throw InvalidInput("monomial has " + std::to_string(m.nvars()) + " variables, h has n = "
                           + std::to_string(n));
    if (m.exponent(1) != 0)
        throw NotInBasis("x1 never occurs in a basis monomial");
    const DegreeTuple beta(h);
    BarlessTableau w{{1}};
    for (int i = 2; i <= n; ++i) {
        if (m.exponent(i) >= beta(i))
            throw NotInBasis("exponent " + std::to_string(m.exponent(i)) + " of x" + std::to_string(i)
                             + " needs bullet " + std::to_string(m.exponent(i) + 1) + " but beta_"
                             + std::to_string(i) + " = " + std::to_string(beta(i)));
        w = insert_at_bullet(h, w, m.exponent(i));
    }
    return Filling::from_word(w.word);
}

struct CountReport {
    std::uint64_t fillings = 0;
    std::uint64_t leaves = 0;
    std::uint64_t prod_nu = 0;
    std::uint64_t prod_beta = 0;
    bool a_equals_b = false;

    bool consistent() const
    {
        return a_equals_b && fillings == leaves && leaves == prod_nu && prod_nu == prod_beta;
    }
};

/**
 * Cross-checks the counting identities for h: brute-force filling count,
 * h-tableau-tree leaf count, prod nu_i, prod beta_i, and phi(fillings) ==
 * B_h as sets.
 */
inline CountReport verify_counts(const HessenbergFunction& h, int max_n = default_max_n)
{
    const int n = h.n();
    check_size(n, max_n);
    CountReport rep;

    const auto fillings = enumerate_fillings(h, Shape::row(n), max_n);
    rep.fillings = fillings.size();
    rep.leaves = build_h_tableau_tree(h, max_n).path_count();

    rep.prod_nu = 1;
    for (int v : nu_tuple(h))
        rep.prod_nu *= static_cast<std::uint64_t>(v);
    rep.prod_beta = DegreeTuple(h).product();

    std::set<Monomial> image;
    for (const Filling& t : fillings)
        image.insert(phi(h, t));
    const auto basis = b_h_basis(h);
    rep.a_equals_b = image == std::set<Monomial>(basis.begin(), basis.end());
    return rep;
}

} // namespace hesskit::regnilp

#endif
