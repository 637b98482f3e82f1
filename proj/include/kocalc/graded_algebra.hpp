#pragma once

#include <kocalc/f2linalg.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kocalc {

struct Generator {
    std::string name;
    int degree = 0;  /* even, positive */
};

/* Exponent vector over the declared generators. */
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m, const std::vector<int>& gen_degrees);

/* Term order: lexicographic on exponent vectors with the first declared
 * generator most significant.  Within a fixed degree this is the graded-lex
 * order used everywhere (bases, pivots, printing). */
bool monomial_lex_greater(const Monomial& a, const Monomial& b);

/* Polynomial over GF(2): the set of monomials with coefficient 1, kept sorted
 * with the leading (lex-greatest) term first.  Addition is symmetric
 * difference. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Monomial m) : terms_{std::move(m)} {}
    explicit Polynomial(std::vector<Monomial> terms);

    static Polynomial one(std::size_t num_generators)
    {
        return Polynomial(Monomial(num_generators, 0));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b)
    {
        a += b;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /* Common degree of all terms; throws if the terms are of mixed degree.
     * The zero polynomial reports degree -1. */
    int homogeneous_degree(const std::vector<int>& gen_degrees) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Monomial> terms_;
};

/* A class in the quotient algebra: coordinates in the canonical monomial
 * basis of its degree. */
struct Element {
    int degree = 0;
    F2Vector coords;

    bool is_zero() const { return coords.is_zero(); }
    friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(Element a, const Element& b);

/* Finitely presented graded-commutative algebra over GF(2) with generators in
 * even positive degrees, truncated above top_degree.  Construction echelonizes
 * the degreewise slices of the relation ideal once; everything afterwards is a
 * lookup.  Construction fails if the quotient has any basis element above
 * top_degree (checked on the window (top, top + max generator degree], which
 * is sufficient). */
class Presentation {
public:
    Presentation(std::vector<Generator> generators, std::vector<Polynomial> relations,
                 int top_degree);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    int top_degree() const { return top_degree_; }

    std::vector<int> generator_degrees() const;
    int generator_index(std::string_view name) const;  /* -1 if absent */

    /* All monomials of weighted degree d, leading term first; empty for odd d. */
    static std::vector<Monomial> monomials_of_degree(const std::vector<int>& gen_degrees,
                                                     int d);

    /* The standard (non-pivot) monomials of degree d; empty above top_degree. */
    const std::vector<Monomial>& basis_of_degree(int d) const;
    std::size_t dim_of_degree(int d) const { return basis_of_degree(d).size(); }

    Element zero_element(int degree) const;
    Element one() const;
    Element generator_element(std::size_t i) const;

    /* Coordinates of the class of a homogeneous polynomial.  Terms above
     * top_degree reduce to zero.  Throws on non-homogeneous input. */
    Element normal_form(const Polynomial& poly) const;
    Element normal_form(const Polynomial& poly, int degree) const;

    /* Canonical polynomial representative (sum of basis monomials). */
    Polynomial representative(const Element& e) const;

    Element multiply(const Element& u, const Element& v) const;

    std::vector<std::pair<int, std::size_t>> poincare_dims() const;
    std::size_t total_dimension() const;

private:
    struct DegreeSlice {
        std::vector<Monomial> monomials;         /* all monomials, lex-greatest first */
        std::map<Monomial, std::size_t> index;   /* monomial -> column */
        EchelonBasis ideal;                      /* reduced echelon of the ideal slice */
        std::vector<std::size_t> basis_cols;     /* non-pivot columns, ascending */
        std::vector<Monomial> basis_monomials;

        DegreeSlice() : ideal(0) {}
    };

    DegreeSlice build_slice(int d) const;
    const DegreeSlice& slice(int d) const { return slices_[std::size_t(d / 2)]; }

    std::vector<Generator> generators_;
    std::vector<Polynomial> relations_;
    std::vector<int> relation_degrees_;
    int top_degree_ = 0;
    std::vector<DegreeSlice> slices_;  /* even degrees 0..top_degree, index d/2 */
};

} // namespace kocalc
