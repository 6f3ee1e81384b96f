#ifndef HESSKIT_GROEBNER_HPP
#define HESSKIT_GROEBNER_HPP

#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "error.hpp"
#include "hessenberg.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace hesskit::poly {

/// Generators of J_h, in the order e_{beta_n}(x_n), e_{beta_{n-1}}(x_{n-1}, x_n),
/// ..., e_{beta_1}(x_1, ..., x_n).
inline std::vector<Polynomial> jh_generators(const HessenbergFunction& h)
{
    const int n = h.n();
    const DegreeTuple beta(h);
    std::vector<Polynomial> gens;
    for (int i = n; i >= 1; --i) {
        std::vector<int> vars(static_cast<std::size_t>(n - i + 1));
        std::iota(vars.begin(), vars.end(), i);
        gens.push_back(modified_complete_symmetric(beta(i), vars, n));
    }
    return gens;
}

namespace detail {

inline void check_divisors(const std::vector<Polynomial>& g)
{
    if (g.empty())
        throw InvalidInput("divisor list is empty");
    for (const auto& p : g)
        if (p.is_zero())
            throw ZeroPolynomial("divisor list contains the zero polynomial");
}

} // namespace detail

/**
 * Normal form of p modulo g. Repeatedly picks the largest term of the
 * remainder that some LT(g_k) divides (with lc(g_k) dividing the
 * coefficient), trying divisors in list order, and cancels it. The result
 * has no term divisible by any leading term whose coefficient divides it.
 */
inline Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g,
                         MonomialOrder ord = MonomialOrder::lex)
{
    detail::check_divisors(g);
    std::vector<Term> leads;
    for (const auto& q : g) {
        if (q.nvars() != p.nvars())
            throw InvalidInput("divisor has the wrong number of variables");
        leads.push_back(leading_term(q, ord));
    }

    Polynomial r = p;
    for (;;) {
        bool reduced = false;
        for (const auto& [m, c] : r.terms()) {
            for (std::size_t k = 0; k < g.size(); ++k) {
                const Term& lt = leads[k];
                if (!lt.monomial.divides(m) || c % lt.coef != 0)
                    continue;
                const Integer factor = c / lt.coef;
                r -= g[k].scaled(factor, m / lt.monomial);
                reduced = true;
                break;
            }
            if (reduced)
                break;
        }
        if (!reduced)
            return r;
    }
}

/// A pair whose S-polynomial did not reduce to zero.
struct SPairFailure {
    std::size_t first = 0;
    std::size_t second = 0;
    Polynomial remainder;
};

/// Buchberger's criterion over every pair. Returns the first failing pair,
/// or nothing when g is a Groebner basis.
inline std::optional<SPairFailure> groebner_failure(const std::vector<Polynomial>& g,
                                                    MonomialOrder ord = MonomialOrder::lex)
{
    detail::check_divisors(g);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            Polynomial r = reduce(s_polynomial(g[a], g[b], ord), g, ord);
            if (!r.is_zero())
                return SPairFailure{a, b, std::move(r)};
        }
    return std::nullopt;
}

inline bool is_groebner(const std::vector<Polynomial>& g, MonomialOrder ord = MonomialOrder::lex)
{
    return !groebner_failure(g, ord).has_value();
}

inline std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& g,
                                               MonomialOrder ord = MonomialOrder::lex)
{
    std::vector<Monomial> out;
    for (const auto& p : g)
        out.push_back(leading_term(p, ord).monomial);
    return out;
}

/**
 * Monomials outside the leading-term ideal of g, in display order. Needs a
 * pure power of every variable among the leading monomials; throws
 * InfiniteStaircase otherwise.
 */
inline std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& g,
                                                MonomialOrder ord = MonomialOrder::lex)
{
    detail::check_divisors(g);
    const int n = g.front().nvars();
    const auto leads = leading_monomials(g, ord);

    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const auto& m : leads) {
        int var = 0;
        int support = 0;
        for (int i = 1; i <= n; ++i)
            if (m.exponent(i) > 0) {
                var = i;
                ++support;
            }
        if (support == 0)
            return {}; // a unit generates everything
        if (support == 1) {
            int& b = bound[static_cast<std::size_t>(var - 1)];
            if (b < 0 || m.exponent(var) < b)
                b = m.exponent(var);
        }
    }
    for (int i = 1; i <= n; ++i)
        if (bound[static_cast<std::size_t>(i - 1)] < 0)
            throw InfiniteStaircase("no leading term is a pure power of x" + std::to_string(i));

    std::vector<Monomial> out;
    Monomial m(n);
    auto rec = [&](auto&& self, int var) -> void {
        if (var > n) {
            for (const auto& lt : leads)
                if (lt.divides(m))
                    return;
            out.push_back(m);
            return;
        }
        for (int e = 0; e < bound[static_cast<std::size_t>(var - 1)]; ++e) {
            m.set_exponent(var, e);
            self(self, var + 1);
        }
        m.set_exponent(var, 0);
    };
    rec(rec, 1);
    sort_for_display(out);
    return out;
}

} // namespace hesskit::poly

#endif
