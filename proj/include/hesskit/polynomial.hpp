#ifndef HESSKIT_POLYNOMIAL_HPP
#define HESSKIT_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "monomial.hpp"

namespace hesskit::poly {

using Integer = boost::multiprecision::cpp_int;

/// Lex with x_1 > x_2 > ... > x_n; the only order shipped.
enum class MonomialOrder { lex };

struct Term {
    Monomial monomial;
    Integer coef;
};

/**
 * A polynomial in Z[x_1..x_n]. Terms are kept in descending lex order with
 * no zero coefficients, so the first term is the leading term.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, std::greater<>>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Integer c)
    {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars), std::move(c));
        return p;
    }

    static Polynomial variable(int nvars, int var)
    {
        Polynomial p(nvars);
        p.add_term(Monomial::power(nvars, var, 1), 1);
        return p;
    }

    static Polynomial term(const Monomial& m, Integer c = 1)
    {
        Polynomial p(m.nvars());
        p.add_term(m, std::move(c));
        return p;
    }

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Integer coefficient(const Monomial& m) const
    {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Integer& c)
    {
        if (m.nvars() != nvars_)
            throw InvalidInput("term has the wrong number of variables");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q)
    {
        check_same(q);
        for (const auto& [m, c] : q.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& q)
    {
        check_same(q);
        for (const auto& [m, c] : q.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

    friend Polynomial operator-(const Polynomial& p)
    {
        Polynomial r(p.nvars_);
        for (const auto& [m, c] : p.terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
    {
        p.check_same(q);
        Polynomial r(p.nvars_);
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_)
                r.add_term(mp * mq, cp * cq);
        return r;
    }

    /// c * m * p.
    Polynomial scaled(const Integer& c, const Monomial& m) const
    {
        Polynomial r(nvars_);
        if (c == 0)
            return r;
        for (const auto& [mp, cp] : terms_)
            r.terms_.emplace(mp * m, cp * c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const Polynomial& q) const
    {
        if (q.nvars_ != nvars_)
            throw InvalidInput("polynomials over different variable counts");
    }

    int nvars_ = 0;
    TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Term leading_term(const Polynomial& p, MonomialOrder = MonomialOrder::lex)
{
    if (p.is_zero())
        throw ZeroPolynomial("the zero polynomial has no leading term");
    const auto& [m, c] = *p.terms().begin();
    return {m, c};
}

/// (L/LT(p)) * lc(q) * p - (L/LT(q)) * lc(p) * q with L = lcm(LT(p), LT(q)).
/// Content is not removed.
inline Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, MonomialOrder ord = MonomialOrder::lex)
{
    const Term lp = leading_term(p, ord);
    const Term lq = leading_term(q, ord);
    const Monomial l = lcm(lp.monomial, lq.monomial);
    return p.scaled(lq.coef, l / lp.monomial) - q.scaled(lp.coef, l / lq.monomial);
}

/// The sum of all degree-r monomials in the variables `vars` (1-based),
/// each with coefficient 1; the complete homogeneous symmetric polynomial.
inline Polynomial modified_complete_symmetric(int r, const std::vector<int>& vars, int nvars)
{
    if (r < 0)
        throw InvalidInput("degree must be nonnegative");
    if (vars.empty())
        throw InvalidInput("variable set must be nonempty");
    for (int v : vars)
        if (v < 1 || v > nvars)
            throw InvalidInput("variable index outside 1..n");
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b)
            if (vars[a] == vars[b])
                throw InvalidInput("variable set has a repeated index");

    Polynomial p(nvars);
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k + 1 == vars.size()) {
            m.set_exponent(vars[k], left);
            p.add_term(m, 1);
            m.set_exponent(vars[k], 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set_exponent(vars[k], e);
            self(self, k + 1, left - e);
        }
        m.set_exponent(vars[k], 0);
    };
    rec(rec, 0, r);
    return p;
}

} // namespace hesskit::poly

#endif
