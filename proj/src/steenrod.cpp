#include <kocalc/steenrod.hpp>

#include <stdexcept>

namespace kocalc {

SqAction::SqAction(std::shared_ptr<const Presentation> presentation,
                   std::vector<Polynomial> generator_values)
    : presentation_(std::move(presentation))
{
    const Presentation& p = *presentation_;
    if (generator_values.size() != p.generators().size())
        throw std::invalid_argument("need one Sq^2 value per generator");

    for (std::size_t i = 0; i < generator_values.size(); ++i) {
        int target = p.generators()[i].degree + 2;
        values_.push_back(p.normal_form(generator_values[i], target));
    }

    /* unstable axiom: on a degree-2 generator, Sq^2 is the squaring map */
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
        if (p.generators()[i].degree != 2)
            continue;
        Monomial sq(p.generators().size(), 0);
        sq[i] = 2;
        if (values_[i] != p.normal_form(Polynomial(std::move(sq)), 4))
            throw std::invalid_argument("Sq^2(" + p.generators()[i].name +
                                        ") must equal " + p.generators()[i].name +
                                        "^2 on a degree-2 generator");
    }

    /* the derivation must map the relation ideal into itself */
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
        if (!sq2_polynomial(p.relations()[r]).is_zero())
            throw std::invalid_argument("Sq^2 does not preserve the relation ideal "
                                        "(relation #" + std::to_string(r + 1) + ")");
    }

    /* Sq^2 Sq^2 = 0 on every basis element */
    for (int d = 0; d <= p.top_degree(); d += 2) {
        const std::vector<Monomial>& basis = p.basis_of_degree(d);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Element e = p.zero_element(d);
            e.coords.set(k);
            if (!sq2(sq2(e)).is_zero())
                throw std::invalid_argument("Sq^2 Sq^2 is nonzero on a basis element "
                                            "of degree " + std::to_string(d));
        }
    }
}

Element SqAction::sq2_monomial(const Monomial& m) const
{
    const Presentation& p = *presentation_;
    std::vector<int> degs = p.generator_degrees();
    int d = monomial_degree(m, degs);
    Element out = p.zero_element(d + 2);
    /* Leibniz: only odd exponents survive mod 2 */
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] % 2 == 0)
            continue;
        Monomial rest = m;
        rest[i] -= 1;
        Element rest_class = p.normal_form(Polynomial(std::move(rest)), d - degs[i]);
        out = out + p.multiply(rest_class, values_[i]);
    }
    return out;
}

Element SqAction::sq2_polynomial(const Polynomial& poly) const
{
    const Presentation& p = *presentation_;
    if (poly.is_zero())
        return p.zero_element(2);
    int d = poly.homogeneous_degree(p.generator_degrees());
    Element out = p.zero_element(d + 2);
    for (const Monomial& t : poly.terms())
        out = out + sq2_monomial(t);
    return out;
}

Element SqAction::sq2(const Element& u) const
{
    const Presentation& p = *presentation_;
    Element out = p.zero_element(u.degree + 2);
    const std::vector<Monomial>& basis = p.basis_of_degree(u.degree);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (u.coords.get(k))
            out = out + sq2_monomial(basis[k]);
    return out;
}

Polynomial chern_sq2(std::size_t num_generators, std::size_t i)
{
    if (i < 1 || i > num_generators)
        throw std::invalid_argument("Chern class index out of range");
    std::vector<Monomial> terms;
    Monomial c1ci(num_generators, 0);
    c1ci[0] += 1;
    c1ci[i - 1] += 1;
    terms.push_back(std::move(c1ci));
    if ((i - 1) % 2 == 1 && i + 1 <= num_generators) {
        Monomial next(num_generators, 0);
        next[i] = 1;
        terms.push_back(std::move(next));
    }
    return Polynomial(std::move(terms));
}

Differential::Differential(SqAction action, Element twist)
    : action_(std::move(action)), twist_(std::move(twist))
{
    const Presentation& p = action_.presentation();
    if (twist_.degree != 2)
        throw std::invalid_argument("twist class must have degree 2");
    if (twist_.coords.size() != p.dim_of_degree(2))
        throw std::invalid_argument("twist coordinates do not match the degree-2 basis");

    matrices_.reserve(std::size_t(p.top_degree() / 2 + 1));
    for (int d = 0; d <= p.top_degree(); d += 2) {
        std::size_t src = p.dim_of_degree(d);
        std::size_t dst = p.dim_of_degree(d + 2);
        F2Matrix m(dst, src);
        for (std::size_t j = 0; j < src; ++j) {
            Element e = p.zero_element(d);
            e.coords.set(j);
            Element image = apply(e);
            for (std::size_t r = 0; r < dst; ++r)
                if (image.coords.get(r))
                    m.set(r, j);
        }
        matrices_.push_back(std::move(m));
    }

    D2Report report = verify_d_squared_zero(*this);
    if (!report.ok)
        throw std::invalid_argument(report.message);
}

Differential Differential::untwisted(SqAction action)
{
    Element zero = action.presentation().zero_element(2);
    return Differential(std::move(action), std::move(zero));
}

Element Differential::apply(const Element& u) const
{
    const Presentation& p = action_.presentation();
    return action_.sq2(u) + p.multiply(twist_, u);
}

const F2Matrix& Differential::matrix(int degree) const
{
    if (degree < 0 || degree % 2 || degree > presentation().top_degree())
        throw std::out_of_range("differential matrix degree out of range");
    return matrices_[std::size_t(degree / 2)];
}

D2Report verify_d_squared_zero(const Differential& d)
{
    const Presentation& p = d.presentation();
    for (int deg = 0; deg + 2 <= p.top_degree(); deg += 2) {
        F2Matrix composite = d.matrices_[std::size_t(deg / 2 + 1)] *
                             d.matrices_[std::size_t(deg / 2)];
        for (std::size_t j = 0; j < composite.cols(); ++j) {
            for (std::size_t r = 0; r < composite.rows(); ++r) {
                if (composite.get(r, j)) {
                    D2Report report;
                    report.ok = false;
                    report.degree = deg;
                    report.basis_index = j;
                    report.message = "d'd' is nonzero on basis element #" +
                                     std::to_string(j) + " of degree " +
                                     std::to_string(deg);
                    return report;
                }
            }
        }
    }
    return D2Report{};
}

} // namespace kocalc
