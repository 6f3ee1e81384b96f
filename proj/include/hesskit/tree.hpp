#ifndef HESSKIT_TREE_HPP
#define HESSKIT_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace hesskit {

/// x_var^exponent on a tree edge. var == 0 marks the constant edge "1"
/// into a leaf level.
struct EdgeLabel {
    int var = 0;
    int exponent = 0;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/**
 * A rooted tree with payload-carrying vertices and monomial-labelled edges.
 *
 * Vertices are stored in depth-first pre-order, so vertices of one level
 * appear in left-to-right order. Each vertex records the product of the
 * edge labels on its root path. Vertex ids are the root path's edge
 * exponents ("r", "r_1", "r_1_0", ...).
 */
template <class Payload>
class LabeledTree {
public:
    struct Vertex {
        std::string id;
        std::string level;
        int depth = 0;
        std::optional<Payload> payload;
        std::optional<std::size_t> parent;
        EdgeLabel edge;
        Monomial monomial;
        std::vector<std::size_t> children;

        bool is_leaf() const noexcept { return children.empty(); }
    };

    LabeledTree() = default;
    explicit LabeledTree(int nvars) : nvars_(nvars) {}

    int nvars() const noexcept { return nvars_; }

    std::size_t add_root(std::string level, std::optional<Payload> payload)
    {
        vertices_.clear();
        Vertex v;
        v.id = "r";
        v.level = std::move(level);
        v.payload = std::move(payload);
        v.monomial = Monomial(nvars_);
        vertices_.push_back(std::move(v));
        return 0;
    }

    std::size_t add_child(std::size_t parent, std::string level, EdgeLabel edge, std::optional<Payload> payload)
    {
        Vertex v;
        v.id = vertices_.at(parent).id + "_" + std::to_string(edge.exponent);
        v.level = std::move(level);
        v.depth = vertices_[parent].depth + 1;
        v.payload = std::move(payload);
        v.parent = parent;
        v.edge = edge;
        v.monomial = vertices_[parent].monomial;
        if (edge.var > 0)
            v.monomial.set_exponent(edge.var, v.monomial.exponent(edge.var) + edge.exponent);
        vertices_.push_back(std::move(v));
        const std::size_t idx = vertices_.size() - 1;
        vertices_[parent].children.push_back(idx);
        return idx;
    }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const Vertex& root() const { return vertices_.at(0); }
    std::size_t size() const noexcept { return vertices_.size(); }

    /// Indices of the vertices on a level, left to right.
    std::vector<std::size_t> level(const std::string& name) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].level == name)
                out.push_back(i);
        return out;
    }

    std::vector<std::size_t> leaves() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].is_leaf())
                out.push_back(i);
        return out;
    }

    /// Leaf labels left to right (with multiplicity).
    std::vector<Monomial> leaf_monomials() const
    {
        std::vector<Monomial> out;
        for (std::size_t i : leaves())
            out.push_back(vertices_[i].monomial);
        return out;
    }

    std::size_t path_count() const { return leaves().size(); }

private:
    int nvars_ = 0;
    std::vector<Vertex> vertices_;
};

} // namespace hesskit

#endif
