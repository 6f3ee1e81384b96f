#ifndef HESSKIT_MONOMIAL_HPP
#define HESSKIT_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <vector>

#include "error.hpp"

namespace hesskit {

/**
 * x_1^{a_1} ... x_n^{a_n} over a fixed number of variables.
 *
 * The natural ordering (operator<=>) is lex with x_1 > x_2 > ... > x_n:
 * exponent vectors compared lexicographically. Monomials over different
 * variable counts are never mixed.
 */
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in n variables.
    explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}

    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps))
    {
        for (int e : exps_)
            if (e < 0)
                throw InvalidInput("negative exponent in monomial");
    }

    /// x_var^exp in nvars variables (1-based var).
    static Monomial power(int nvars, int var, int exp)
    {
        Monomial m(nvars);
        m.set_exponent(var, exp);
        return m;
    }

    int nvars() const noexcept { return static_cast<int>(exps_.size()); }

    /// Exponent of x_var, 1-based.
    int exponent(int var) const { return exps_.at(static_cast<std::size_t>(var - 1)); }
    void set_exponent(int var, int exp)
    {
        if (exp < 0)
            throw InvalidInput("negative exponent in monomial");
        exps_.at(static_cast<std::size_t>(var - 1)) = exp;
    }

    std::span<const int> exponents() const noexcept { return exps_; }

    int degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_one() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& other) const
    {
        check_same(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i])
                return false;
        return true;
    }

    Monomial& operator*=(const Monomial& other)
    {
        check_same(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] += other.exps_[i];
        return *this;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        if (!b.divides(a))
            throw InvalidInput("monomial division is not exact");
        Monomial q = a;
        for (std::size_t i = 0; i < q.exps_.size(); ++i)
            q.exps_[i] -= b.exps_[i];
        return q;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        a.check_same(b);
        Monomial l = a;
        for (std::size_t i = 0; i < l.exps_.size(); ++i)
            l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return l;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    void check_same(const Monomial& other) const
    {
        if (other.exps_.size() != exps_.size())
            throw InvalidInput("monomials over different variable counts");
    }

    std::vector<int> exps_;
};

/// Presentation order for monomial sets: ascending degree, ties in
/// descending lex (so x2 before x3, x2*x3 before x3^2).
struct BasisOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a > b;
    }
};

inline void sort_for_display(std::vector<Monomial>& ms) { std::sort(ms.begin(), ms.end(), BasisOrder{}); }

} // namespace hesskit

#endif
