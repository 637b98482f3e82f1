#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace kocalc;
using namespace kocalc::testutil;

namespace {

Monomial exps(std::initializer_list<int> e) { return Monomial(e); }

Element random_element(std::mt19937& rng, const Presentation& p, int degree)
{
    Element e = p.zero_element(degree);
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (rng() & 1u)
            e.coords.set(i);
    return e;
}

} // namespace

TEST_CASE("monomials_of_degree")
{
    CHECK(Presentation::monomials_of_degree({2}, 6) ==
          std::vector<Monomial>{exps({3})});
    /* graded-lex: a1^4 > a1^2 a2 > a2^2 */
    CHECK(Presentation::monomials_of_degree({2, 4}, 8) ==
          std::vector<Monomial>{exps({4, 0}), exps({2, 1}), exps({0, 2})});
    CHECK(Presentation::monomials_of_degree({2, 4}, 3).empty());
    CHECK(Presentation::monomials_of_degree({}, 0) ==
          std::vector<Monomial>{Monomial{}});
}

TEST_CASE("cp2 bases and normal forms")
{
    SpaceData cp2 = projective_space(2);
    const Presentation& p = *cp2.presentation;

    CHECK(p.basis_of_degree(4) == std::vector<Monomial>{exps({2})});
    CHECK(p.basis_of_degree(6).empty());  /* x^3 = 0 */

    CHECK(el(cp2, "x^3", 6).is_zero());
    CHECK_THROWS_AS(p.normal_form(parse_polynomial("x + x^2", p.generators())),
                    std::invalid_argument);
}

TEST_CASE("grassmannian relations from the b-recursion")
{
    /* hand expansion: b_1 = a1, b_2 = a1^2 + a2, b_3 = a1^3 (m = 2),
     * b_4 = a1^4 + a1^2 a2 + a2^2 */
    SpaceData gr22 = grassmannian(2, 2);
    const std::vector<Polynomial>& rels = gr22.presentation->relations();
    REQUIRE(rels.size() == 2);
    CHECK(rels[0] == Polynomial(exps({3, 0})));
    CHECK(rels[1] == Polynomial(std::vector<Monomial>{exps({4, 0}), exps({2, 1}),
                                                      exps({0, 2})}));

    /* degree-6 slice: single relation b_3 pivots on a1^3, basis is a1*a2 */
    CHECK(gr22.presentation->basis_of_degree(6) == std::vector<Monomial>{exps({1, 1})});
    CHECK(el(gr22, "a1^3", 6).is_zero());
}

TEST_CASE("poincare dims")
{
    SpaceData cp3 = projective_space(3);
    std::vector<std::pair<int, std::size_t>> expected{{0, 1}, {2, 1}, {4, 1}, {6, 1}};
    CHECK(cp3.presentation->poincare_dims() == expected);

    SpaceData gr22 = grassmannian(2, 2);
    std::vector<std::pair<int, std::size_t>> gr_expected{{0, 1}, {2, 1}, {4, 2},
                                                         {6, 1}, {8, 1}};
    CHECK(gr22.presentation->poincare_dims() == gr_expected);
    CHECK(gr22.presentation->total_dimension() == 6);  /* C(4,2) */

    SpaceData s3 = spinor(3);
    std::vector<std::pair<int, std::size_t>> s3_expected{{0, 1}, {2, 1}, {4, 1}, {6, 1}};
    CHECK(s3.presentation->poincare_dims() == s3_expected);
}

TEST_CASE("gr22 degree-6 slice echelon pivots on a1^3")
{
    /* the only relation hitting degree 6 is b_3 = a1^3; in the monomial basis
     * (a1^3, a1 a2) its echelon has a single pivot on column 0 */
    SpaceData gr22 = grassmannian(2, 2);
    const Presentation& p = *gr22.presentation;
    std::vector<Monomial> monos = Presentation::monomials_of_degree({2, 4}, 6);
    REQUIRE(monos == std::vector<Monomial>{Monomial{3, 0}, Monomial{1, 1}});

    F2Matrix slice(1, monos.size());
    for (const Monomial& t : p.relations()[0].terms())
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (monos[c] == t)
                slice.set(0, c);
    EchelonForm e = row_echelon(slice);
    CHECK(e.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("quadric betti numbers")
{
    for (int n = 3; n <= 10; ++n) {
        SpaceData q = quadric(n);
        /* one class in every even degree, two in the middle for even n */
        std::map<int, long long> expected;
        for (int d = 0; d <= 2 * n; d += 2)
            expected[d] = 1;
        if (n % 2 == 0)
            expected[n] = 2;
        CHECK(betti_map(*q.presentation) == expected);
        CHECK(q.presentation->total_dimension() ==
              std::size_t(n % 2 == 0 ? n + 2 : n + 1));
    }
}

TEST_CASE("quadric bases")
{
    SpaceData q4 = quadric(4);
    /* two middle classes; x^2 reduces to a + b */
    CHECK(q4.presentation->dim_of_degree(4) == 2);
    CHECK(el(q4, "x^2") == el(q4, "a + b"));
    CHECK(el(q4, "a") != el(q4, "b"));
}

TEST_CASE("multiply")
{
    SpaceData q6 = quadric(6);
    CHECK(q6.presentation->multiply(q6.presentation->one(), el(q6, "b")) ==
          el(q6, "b"));
    /* ab = a x^3 on Q^6 */
    CHECK(q6.presentation->multiply(el(q6, "a"), el(q6, "b")) ==
          el(q6, "a*x^3"));

    SpaceData cp3 = projective_space(3);
    Element x2 = el(cp3, "x^2");
    CHECK(cp3.presentation->multiply(x2, x2).is_zero());  /* beyond top degree */
}

TEST_CASE("betti numbers against the gaussian binomial")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 3}, {2, 5}, {4, 4}}) {
        SpaceData gr = grassmannian(m, n);
        CHECK(betti_map(*gr.presentation) ==
              betti_from_series(gaussian_binomial(std::size_t(m + n), std::size_t(m))));
    }
}

TEST_CASE("betti numbers of exterior-type algebras")
{
    for (int n = 1; n <= 6; ++n) {
        SpaceData lg = symplectic_grassmannian(n);
        std::vector<int> degrees;
        for (int i = 1; i <= n; ++i)
            degrees.push_back(2 * i);
        CHECK(betti_map(*lg.presentation) ==
              betti_from_series(exterior_series(degrees)));
    }
    /* spinor varieties: additively spanned by squarefree monomials */
    for (int n = 2; n <= 7; ++n) {
        SpaceData s = spinor(n);
        std::vector<int> degrees;
        for (int i = 1; i <= n - 1; ++i)
            degrees.push_back(2 * i);
        CHECK(betti_map(*s.presentation) ==
              betti_from_series(exterior_series(degrees)));
    }
}

TEST_CASE("betti numbers of the exceptional spaces")
{
    SpaceData eiii = exceptional(ExceptionalSpace::EIII);
    std::map<int, long long> expected;
    for (int d = 0; d <= 6; d += 2)
        expected[d] = 1;
    for (int d = 8; d <= 24; d += 2)
        expected[d] = 2;
    expected[16] = 3;
    for (int d = 26; d <= 32; d += 2)
        expected[d] = 1;
    CHECK(betti_map(*eiii.presentation) == expected);
    CHECK(eiii.presentation->total_dimension() == 27);

    SpaceData evii = exceptional(ExceptionalSpace::EVII);
    QPoly truncated(14, 1); /* 1 + q + ... + q^13 in half-degrees */
    QPoly series = qpoly_mul(truncated, exterior_series({10, 18}));
    CHECK(betti_map(*evii.presentation) == betti_from_series(series));
    CHECK(evii.presentation->total_dimension() == 56);
}

TEST_CASE("poincare duality for catalog spaces")
{
    for (const SpaceSpec& spec :
         {parse_space_spec("cp:5"), parse_space_spec("gr:2,3"), parse_space_spec("lg:4"),
          parse_space_spec("quadric:7"), parse_space_spec("spinor:5"),
          parse_space_spec("eiii"), parse_space_spec("evii")}) {
        SpaceData space = realize_catalog(spec);
        const Presentation& p = *space.presentation;
        for (int d = 0; d <= p.top_degree(); d += 2)
            CHECK(p.dim_of_degree(d) == p.dim_of_degree(p.top_degree() - d));
    }
}

TEST_CASE("normal form is idempotent on representatives")
{
    SpaceData q6 = quadric(6);
    const Presentation& p = *q6.presentation;
    for (int d = 0; d <= p.top_degree(); d += 2) {
        for (std::size_t k = 0; k < p.dim_of_degree(d); ++k) {
            Element e = p.zero_element(d);
            e.coords.set(k);
            CHECK(p.normal_form(p.representative(e), d) == e);
        }
    }
}

TEST_CASE("multiply agrees with factor-by-factor reduction")
{
    /* reduce-late (one big polynomial product) vs reduce-early (multiply one
     * generator at a time through the quotient) */
    std::mt19937 rng(2718);
    SpaceData q6 = quadric(6);
    const Presentation& p = *q6.presentation;
    for (int trial = 0; trial < 30; ++trial) {
        int du = 2 * int(rng() % 5 + 1);
        int dv = 2 * int(rng() % 5 + 1);
        Element u = random_element(rng, p, du);
        Element v = random_element(rng, p, dv);

        Element via_factors = p.zero_element(du + dv);
        const std::vector<Monomial>& basis = p.basis_of_degree(dv);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!v.coords.get(k))
                continue;
            Element acc = u;
            for (std::size_t g = 0; g < basis[k].size(); ++g)
                for (int e = 0; e < basis[k][g]; ++e)
                    acc = p.multiply(acc, p.generator_element(g));
            via_factors = via_factors + acc;
        }
        CHECK(p.multiply(u, v) == via_factors);
    }
}

TEST_CASE("ring axioms on random elements")
{
    std::mt19937 rng(65537);
    SpaceData gr23 = grassmannian(2, 3);
    const Presentation& p = *gr23.presentation;
    for (int trial = 0; trial < 40; ++trial) {
        int du = 2 * int(rng() % 4 + 1);
        int dv = 2 * int(rng() % 4 + 1);
        Element u = random_element(rng, p, du);
        Element v = random_element(rng, p, dv);
        Element w = random_element(rng, p, dv);

        CHECK(p.multiply(u, v) == p.multiply(v, u));
        CHECK(p.multiply(u, v + w) == p.multiply(u, v) + p.multiply(u, w));

        Element t = random_element(rng, p, 2);
        CHECK(p.multiply(p.multiply(u, v), t) == p.multiply(u, p.multiply(v, t)));
    }
}

TEST_CASE("construction rejects bad input")
{
    /* infinite quotient: no truncating relation */
    CHECK_THROWS_AS(Presentation({{"x", 2}}, {}, 4), std::invalid_argument);
    /* odd generator degree */
    CHECK_THROWS_AS(Presentation({{"y", 3}}, {}, 6), std::invalid_argument);
    /* duplicate names */
    CHECK_THROWS_AS(Presentation({{"x", 2}, {"x", 4}},
                                 {Polynomial(exps({3, 0})), Polynomial(exps({0, 2}))},
                                 8),
                    std::invalid_argument);
    /* non-homogeneous relation */
    CHECK_THROWS_AS(
        Presentation({{"x", 2}},
                     {Polynomial(std::vector<Monomial>{exps({1}), exps({2})})}, 4),
        std::invalid_argument);
    /* zero relation */
    CHECK_THROWS_AS(Presentation({{"x", 2}}, {Polynomial()}, 4), std::invalid_argument);
}
