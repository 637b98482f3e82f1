#pragma once

#include <kocalc/graded_algebra.hpp>

#include <memory>
#include <string>
#include <vector>

namespace kocalc {

/* Sq^2 on a presented algebra, determined by its values on the generators and
 * extended as a derivation (Sq^1 vanishes on even-cell complexes, so the
 * Cartan formula collapses to the Leibniz rule).
 *
 * Construction validates the data: Sq^2(g) = g^2 for every degree-2 generator,
 * Sq^2 of every relation reduces to zero (so the derivation descends to the
 * quotient), and the induced map squares to zero on every basis element. */
class SqAction {
public:
    SqAction(std::shared_ptr<const Presentation> presentation,
             std::vector<Polynomial> generator_values);

    const Presentation& presentation() const { return *presentation_; }
    std::shared_ptr<const Presentation> presentation_ptr() const { return presentation_; }

    const Element& generator_value(std::size_t i) const { return values_[i]; }

    /* The derivation extension applied to a class. */
    Element sq2(const Element& u) const;

    /* The derivation applied to a free polynomial, reduced to the quotient. */
    Element sq2_polynomial(const Polynomial& p) const;

private:
    Element sq2_monomial(const Monomial& m) const;

    std::shared_ptr<const Presentation> presentation_;
    std::vector<Element> values_;
};

/* Standard Sq^2 of the i-th Chern class (1-based) of a rank-num_generators
 * bundle: c_1 c_i + (i-1) c_{i+1} mod 2, with c_{i+1} read as zero when out of
 * range. */
Polynomial chern_sq2(std::size_t num_generators, std::size_t i);

struct D2Report {
    bool ok = true;
    int degree = -1;          /* first offending source degree */
    std::size_t basis_index = 0;
    std::string message;
};

/* The differential d' = Sq^2 + c for a degree-2 twist class c (c = 0 gives the
 * plain Sq^2 differential).  Construction checks d' composed with itself
 * vanishes on every basis element and throws otherwise. */
class Differential {
public:
    Differential(SqAction action, Element twist);

    static Differential untwisted(SqAction action);

    const SqAction& action() const { return action_; }
    const Element& twist() const { return twist_; }
    const Presentation& presentation() const { return action_.presentation(); }

    Element apply(const Element& u) const;

    /* Matrix of d' from basis_of_degree(degree) to basis_of_degree(degree+2);
     * columns indexed by the source basis. */
    const F2Matrix& matrix(int degree) const;

private:
    SqAction action_;
    Element twist_;
    std::vector<F2Matrix> matrices_;  /* even degrees 0..top, index degree/2 */

    friend D2Report verify_d_squared_zero(const Differential& d);
};

/* Composes consecutive differential matrices across all degrees and reports
 * the first nonzero composite, if any. */
D2Report verify_d_squared_zero(const Differential& d);

} // namespace kocalc
