#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hesskit/hesskit.hpp"
#include "oracles.hpp"

using namespace hesskit;
using poly::Integer;
using poly::Polynomial;

namespace {

HessenbergFunction H(std::vector<int> v) { return HessenbergFunction::make(std::move(v)); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

Polynomial P(int n, std::vector<std::pair<std::vector<int>, long long>> terms)
{
    Polynomial p(n);
    for (auto& [e, c] : terms)
        p.add_term(Monomial(e), Integer(c));
    return p;
}

Polynomial random_poly(std::mt19937& rng, int n, int terms, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> c(-9, 9);
    Polynomial p(n);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> exps(static_cast<std::size_t>(n));
        for (auto& x : exps)
            x = e(rng);
        p.add_term(Monomial(exps), c(rng));
    }
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic", "[polyalg][arith]")
{
    const auto x4 = poly::modified_complete_symmetric(1, {4}, 4);
    CHECK(poly::add(x4, -x4).is_zero());

    const auto a = P(4, {{{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}});
    const auto b = P(4, {{{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, -1}});
    CHECK(poly::mul(a, b) == P(4, {{{0, 0, 2, 0}, 1}, {{0, 0, 0, 2}, -1}}));

    const auto c = Polynomial::constant(3, 5);
    CHECK(poly::leading_term(c).monomial.is_one());
    CHECK(poly::leading_term(c).coef == 5);
    CHECK_THROWS_AS(poly::leading_term(Polynomial(3)), ZeroPolynomial);

    // terms iterate in descending lex
    const auto p = P(3, {{{0, 0, 3}, 1}, {{1, 0, 0}, 2}, {{0, 2, 0}, -1}});
    std::vector<Monomial> order;
    for (const auto& [m, coef] : p.terms())
        order.push_back(m);
    CHECK(order == std::vector<Monomial>{mono({1, 0, 0}), mono({0, 2, 0}), mono({0, 0, 3})});
    CHECK(p.coefficient(mono({0, 2, 0})) == -1);
    CHECK(p.coefficient(mono({0, 1, 0})) == 0);

    CHECK_THROWS_AS(Polynomial(3) + Polynomial(4), InvalidInput);
}

TEST_CASE("exact big coefficients", "[polyalg][arith]")
{
    Integer big = 1;
    for (int i = 0; i < 100; ++i)
        big *= 3;
    auto p = Polynomial::term(mono({0, 1}), big);
    auto q = p * p;
    CHECK(q.coefficient(mono({0, 2})) == big * big);
    q -= Polynomial::term(mono({0, 2}), big * big);
    CHECK(q.is_zero());
}

TEST_CASE("S-polynomials cross-multiply leading coefficients", "[polyalg][arith]")
{
    // S(x1^2 + x2, 2 x1 x2 + 1) = 2 x2 (x1^2 + x2) - x1 (2 x1 x2 + 1) = 2 x2^2 - x1
    const auto f = P(2, {{{2, 0}, 1}, {{0, 1}, 1}});
    const auto g = P(2, {{{1, 1}, 2}, {{0, 0}, 1}});
    CHECK(poly::s_polynomial(f, g) == P(2, {{{0, 2}, 2}, {{1, 0}, -1}}));

    const auto gens = poly::jh_generators(H({3, 3, 3, 4}));
    CHECK(poly::reduce(poly::s_polynomial(gens[1], gens[2]), gens).is_zero());
}

TEST_CASE("modified complete symmetric polynomials", "[polyalg][esym]")
{
    CHECK(poly::modified_complete_symmetric(2, {3, 4}, 4) == P(4, {{{0, 0, 2, 0}, 1}, {{0, 0, 1, 1}, 1}, {{0, 0, 0, 2}, 1}}));
    CHECK(poly::modified_complete_symmetric(0, {2, 3}, 4) == Polynomial::constant(4, 1));
    CHECK(poly::modified_complete_symmetric(3, {3, 4}, 4)
          == P(4, {{{0, 0, 3, 0}, 1}, {{0, 0, 2, 1}, 1}, {{0, 0, 1, 2}, 1}, {{0, 0, 0, 3}, 1}}));
    for (int k = 1; k <= 5; ++k)
        for (int r = 0; r <= 5; ++r) {
            std::vector<int> vars(static_cast<std::size_t>(k));
            std::iota(vars.begin(), vars.end(), 1);
            const auto e = poly::modified_complete_symmetric(r, vars, 5);
            CHECK(e.term_count() == oracle::binom(r + k - 1, r));
            for (const auto& [m, c] : e.terms()) {
                CHECK(c == 1);
                CHECK(m.degree() == r);
            }
        }
    CHECK_THROWS_AS(poly::modified_complete_symmetric(-1, {1}, 2), InvalidInput);
    CHECK_THROWS_AS(poly::modified_complete_symmetric(1, {}, 2), InvalidInput);
    CHECK_THROWS_AS(poly::modified_complete_symmetric(1, {3}, 2), InvalidInput);
    CHECK_THROWS_AS(poly::modified_complete_symmetric(1, {1, 1}, 2), InvalidInput);
}

TEST_CASE("generators of J_h", "[polyalg][jh]")
{
    const auto g = poly::jh_generators(H({3, 3, 3, 4}));
    REQUIRE(g.size() == 4);
    CHECK(g[0] == P(4, {{{0, 0, 0, 1}, 1}}));
    CHECK(g[1] == P(4, {{{0, 0, 3, 0}, 1}, {{0, 0, 2, 1}, 1}, {{0, 0, 1, 2}, 1}, {{0, 0, 0, 3}, 1}}));
    CHECK(g[2]
          == P(4, {{{0, 2, 0, 0}, 1}, {{0, 1, 1, 0}, 1}, {{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, 1}, {{0, 0, 1, 1}, 1},
                   {{0, 0, 0, 2}, 1}}));
    CHECK(g[3] == P(4, {{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}}));
    CHECK(poly::leading_monomials(g)
          == std::vector<Monomial>{mono({0, 0, 0, 1}), mono({0, 0, 3, 0}), mono({0, 2, 0, 0}), mono({1, 0, 0, 0})});

    const auto m = poly::jh_generators(HessenbergFunction::minimal(4));
    for (int k = 0; k < 4; ++k) {
        Polynomial expected(4);
        for (int v = 4 - k; v <= 4; ++v)
            expected.add_term(Monomial::power(4, v, 1), 1);
        CHECK(m[static_cast<std::size_t>(k)] == expected);
    }

    const auto g233 = poly::jh_generators(H({2, 3, 3}));
    std::vector<int> degrees;
    std::vector<int> support;
    for (const auto& p : g233) {
        degrees.push_back(poly::leading_term(p).monomial.degree());
        std::set<int> vars;
        for (const auto& [mm, c] : p.terms())
            for (int i = 1; i <= 3; ++i)
                if (mm.exponent(i) > 0)
                    vars.insert(i);
        support.push_back(static_cast<int>(vars.size()));
    }
    CHECK(degrees == std::vector<int>{2, 2, 1});
    CHECK(support == std::vector<int>{1, 2, 3});
}

TEST_CASE("leading terms of J_h generators are pure powers", "[polyalg][jh]")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& h : all_hessenberg_functions(n)) {
            const auto g = poly::jh_generators(h);
            const DegreeTuple beta(h);
            REQUIRE(g.size() == static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                const auto lt = poly::leading_term(g[static_cast<std::size_t>(n - i)]);
                CHECK(lt.monomial == Monomial::power(n, i, beta(i)));
                CHECK(lt.coef == 1);
            }
            const auto sm = poly::standard_monomials(g);
            CHECK(sm.size() == beta.product());
            std::set<std::vector<int>> got;
            for (const auto& mm : sm)
                got.insert(vec(mm.exponents()));
            CHECK(got == oracle::staircase(vec(beta.by_index())));
            CHECK(sm == regnilp::b_h_basis(h));
        }
}

TEST_CASE("reduction", "[polyalg][reduce]")
{
    const auto g = poly::jh_generators(H({3, 3, 3, 4}));
    CHECK(poly::reduce(P(4, {{{0, 0, 0, 1}, 1}}), g).is_zero());
    CHECK(poly::reduce(P(4, {{{0, 1, 3, 0}, 1}}), g).is_zero());
    CHECK(poly::reduce(P(4, {{{0, 1, 2, 0}, 1}}), g) == P(4, {{{0, 1, 2, 0}, 1}}));
    // x1 = -(x2 + x3 + x4), and x2^2 = -(x2 x3 + x3^2) modulo x4
    CHECK(poly::reduce(P(4, {{{1, 0, 0, 0}, 1}}), g) == P(4, {{{0, 1, 0, 0}, -1}, {{0, 0, 1, 0}, -1}}));
    CHECK(poly::reduce(P(4, {{{0, 2, 0, 0}, 1}}), g) == P(4, {{{0, 1, 1, 0}, -1}, {{0, 0, 2, 0}, -1}}));

    CHECK_THROWS_AS(poly::reduce(P(4, {{{0, 0, 0, 1}, 1}}), {}), InvalidInput);
    CHECK_THROWS_AS(poly::reduce(P(4, {{{0, 0, 0, 1}, 1}}), {Polynomial(4)}), ZeroPolynomial);

    std::mt19937 rng(20240611);
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : all_hessenberg_functions(n)) {
            const auto gens = poly::jh_generators(h);
            const auto leads = poly::leading_monomials(gens);
            for (const auto& m : poly::standard_monomials(gens))
                CHECK(poly::reduce(Polynomial::term(m), gens) == Polynomial::term(m));
            for (const auto& p : gens)
                CHECK(poly::reduce(p, gens).is_zero());
            for (int trial = 0; trial < 5; ++trial) {
                const auto p = random_poly(rng, n, 6, 4);
                const auto r = poly::reduce(p, gens);
                CHECK(poly::reduce(r, gens) == r);
                for (const auto& [m, c] : r.terms())
                    for (const auto& lt : leads)
                        CHECK_FALSE(lt.divides(m));
                // p - r lies in the ideal: it reduces to zero by a Groebner basis
                CHECK(poly::reduce(p - r, gens).is_zero());
                // multiples of generators reduce to zero
                const auto q = random_poly(rng, n, 3, 2);
                CHECK(poly::reduce(q * gens[static_cast<std::size_t>(trial % n)], gens).is_zero());
            }
        }
}

TEST_CASE("Groebner checks", "[polyalg][groebner]")
{
    CHECK(poly::is_groebner(poly::jh_generators(H({3, 3, 3, 4}))));
    CHECK(poly::is_groebner({P(2, {{{1, 0}, 1}})}));

    // S(x1 + x2, x1) = x2, which nothing reduces
    const std::vector<Polynomial> bad{P(2, {{{1, 0}, 1}, {{0, 1}, 1}}), P(2, {{{1, 0}, 1}})};
    CHECK_FALSE(poly::is_groebner(bad));
    const auto f = poly::groebner_failure(bad);
    REQUIRE(f.has_value());
    CHECK(f->first == 0);
    CHECK(f->second == 1);
    CHECK(f->remainder == P(2, {{{0, 1}, 1}}));

    // the ideal of x1 x2 - x2 and x2^2 - x1 holds x2^3 - x2, whose leading term
    // neither x1 x2 nor x1 divides
    const std::vector<Polynomial> bad2{P(2, {{{1, 1}, 1}, {{0, 1}, -1}}), P(2, {{{0, 2}, 1}, {{1, 0}, -1}})};
    CHECK_FALSE(poly::is_groebner(bad2));

    for (int n = 1; n <= 5; ++n)
        for (const auto& h : all_hessenberg_functions(n))
            CHECK(poly::is_groebner(poly::jh_generators(h)));
}

TEST_CASE("standard monomials", "[polyalg][standard]")
{
    CHECK(poly::standard_monomials(poly::jh_generators(H({3, 3, 3, 4})))
          == std::vector<Monomial>{mono({0, 0, 0, 0}), mono({0, 1, 0, 0}), mono({0, 0, 1, 0}), mono({0, 1, 1, 0}),
                                   mono({0, 0, 2, 0}), mono({0, 1, 2, 0})});
    std::vector<Polynomial> vars;
    for (int i = 1; i <= 4; ++i)
        vars.push_back(Polynomial::variable(4, i));
    CHECK(poly::standard_monomials(vars) == std::vector<Monomial>{Monomial(4)});
    CHECK(poly::standard_monomials(poly::jh_generators(H({2, 3, 3})))
          == std::vector<Monomial>{mono({0, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1}), mono({0, 1, 1})});

    CHECK_THROWS_AS(poly::standard_monomials({P(2, {{{1, 1}, 1}})}), InfiniteStaircase);
    CHECK_THROWS_AS(poly::standard_monomials({P(2, {{{1, 0}, 1}})}), InfiniteStaircase);
    CHECK(poly::standard_monomials({Polynomial::constant(2, 3)}).empty());
    // mixed leading terms cut corners out of the box
    CHECK(poly::standard_monomials({P(2, {{{2, 0}, 1}}), P(2, {{{0, 2}, 1}}), P(2, {{{1, 1}, 1}})})
          == std::vector<Monomial>{mono({0, 0}), mono({1, 0}), mono({0, 1})});
}
