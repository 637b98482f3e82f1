#include <kocalc/graded_algebra.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kocalc {

int monomial_degree(const Monomial& m, const std::vector<int>& gen_degrees)
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * gen_degrees[i];
    return d;
}

bool monomial_lex_greater(const Monomial& a, const Monomial& b)
{
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), monomial_lex_greater);
    /* cancel duplicate pairs mod 2 */
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2)
            terms_.push_back(terms[i]);
        i = j;
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size())
            merged.push_back(terms_[i++]);
        else if (i == terms_.size())
            merged.push_back(other.terms_[j++]);
        else if (terms_[i] == other.terms_[j]) {
            ++i;  /* cancels */
            ++j;
        } else if (monomial_lex_greater(terms_[i], other.terms_[j]))
            merged.push_back(terms_[i++]);
        else
            merged.push_back(other.terms_[j++]);
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::vector<Monomial> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const Monomial& s : a.terms_) {
        for (const Monomial& t : b.terms_) {
            Monomial m = s;
            for (std::size_t k = 0; k < m.size(); ++k)
                m[k] += t[k];
            products.push_back(std::move(m));
        }
    }
    return Polynomial(std::move(products));
}

int Polynomial::homogeneous_degree(const std::vector<int>& gen_degrees) const
{
    if (terms_.empty())
        return -1;
    int d = monomial_degree(terms_[0], gen_degrees);
    for (const Monomial& t : terms_)
        if (monomial_degree(t, gen_degrees) != d)
            throw std::invalid_argument("polynomial is not homogeneous");
    return d;
}

Element operator+(Element a, const Element& b)
{
    if (a.degree != b.degree)
        throw std::invalid_argument("cannot add elements of different degrees");
    a.coords ^= b.coords;
    return a;
}

static void enumerate_monomials(const std::vector<int>& gen_degrees, std::size_t from,
                                int remaining, Monomial& current,
                                std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        /* pad the tail with zeros */
        out.back().resize(gen_degrees.size(), 0);
        return;
    }
    if (from == gen_degrees.size())
        return;
    for (int e = remaining / gen_degrees[from]; e >= 0; --e) {
        current[from] = e;
        enumerate_monomials(gen_degrees, from + 1, remaining - e * gen_degrees[from],
                            current, out);
    }
    current[from] = 0;
}

std::vector<Monomial> Presentation::monomials_of_degree(const std::vector<int>& gen_degrees,
                                                        int d)
{
    std::vector<Monomial> out;
    if (d < 0 || d % 2)
        return out;
    Monomial current(gen_degrees.size(), 0);
    enumerate_monomials(gen_degrees, 0, d, current, out);
    return out;
}

Presentation::Presentation(std::vector<Generator> generators,
                           std::vector<Polynomial> relations, int top_degree)
    : generators_(std::move(generators)), relations_(std::move(relations)),
      top_degree_(top_degree)
{
    if (top_degree_ < 0 || top_degree_ % 2)
        throw std::invalid_argument("top degree must be even and non-negative");

    std::set<std::string> names;
    int max_gen_degree = 0;
    for (const Generator& g : generators_) {
        if (g.name.empty())
            throw std::invalid_argument("generator with empty name");
        if (!names.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
        if (g.degree <= 0 || g.degree % 2)
            throw std::invalid_argument("generator '" + g.name +
                                        "' must have even positive degree");
        max_gen_degree = std::max(max_gen_degree, g.degree);
    }

    std::vector<int> degs = generator_degrees();
    for (const Polynomial& r : relations_) {
        if (r.is_zero())
            throw std::invalid_argument("zero relation");
        for (const Monomial& t : r.terms())
            if (t.size() != generators_.size())
                throw std::invalid_argument("relation term over wrong generator count");
        int d = r.homogeneous_degree(degs);
        if (d == 0)
            throw std::invalid_argument("constant relation would collapse the algebra");
        if (d > top_degree_ + max_gen_degree)
            throw std::invalid_argument("relation degree exceeds top degree + max "
                                        "generator degree");
        relation_degrees_.push_back(d);
    }

    slices_.reserve(std::size_t(top_degree_ / 2 + 1));
    for (int d = 0; d <= top_degree_; d += 2)
        slices_.push_back(build_slice(d));

    /* Finite-dimensionality: if the quotient vanishes on the window
     * (top, top + max gen degree], it vanishes in all higher degrees, because
     * every higher monomial factors through the window. */
    for (int d = top_degree_ + 2; d <= top_degree_ + max_gen_degree; d += 2) {
        DegreeSlice s = build_slice(d);
        if (!s.basis_monomials.empty())
            throw std::invalid_argument(
                "quotient is nonzero in degree " + std::to_string(d) +
                " above the declared top degree " + std::to_string(top_degree_));
    }
}

std::vector<int> Presentation::generator_degrees() const
{
    std::vector<int> degs;
    degs.reserve(generators_.size());
    for (const Generator& g : generators_)
        degs.push_back(g.degree);
    return degs;
}

int Presentation::generator_index(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return int(i);
    return -1;
}

Presentation::DegreeSlice Presentation::build_slice(int d) const
{
    DegreeSlice s;
    std::vector<int> degs = generator_degrees();
    s.monomials = monomials_of_degree(degs, d);
    for (std::size_t c = 0; c < s.monomials.size(); ++c)
        s.index.emplace(s.monomials[c], c);
    s.ideal = EchelonBasis(s.monomials.size());

    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        int rd = relation_degrees_[ri];
        if (rd > d)
            continue;
        for (const Monomial& mu : monomials_of_degree(degs, d - rd)) {
            F2Vector row(s.monomials.size());
            for (const Monomial& t : relations_[ri].terms()) {
                Monomial prod = mu;
                for (std::size_t k = 0; k < prod.size(); ++k)
                    prod[k] += t[k];
                row.flip(s.index.at(prod));
            }
            s.ideal.insert(std::move(row));
        }
    }

    for (std::size_t c = 0; c < s.monomials.size(); ++c) {
        if (!s.ideal.is_pivot(c)) {
            s.basis_cols.push_back(c);
            s.basis_monomials.push_back(s.monomials[c]);
        }
    }
    return s;
}

static const std::vector<Monomial> kEmptyBasis;

const std::vector<Monomial>& Presentation::basis_of_degree(int d) const
{
    if (d < 0 || d % 2 || d > top_degree_)
        return kEmptyBasis;
    return slice(d).basis_monomials;
}

Element Presentation::zero_element(int degree) const
{
    return Element{degree, F2Vector(dim_of_degree(degree))};
}

Element Presentation::one() const
{
    return normal_form(Polynomial::one(generators_.size()), 0);
}

Element Presentation::generator_element(std::size_t i) const
{
    Monomial m(generators_.size(), 0);
    m[i] = 1;
    return normal_form(Polynomial(std::move(m)), generators_[i].degree);
}

Element Presentation::normal_form(const Polynomial& poly) const
{
    int d = poly.homogeneous_degree(generator_degrees());
    if (d < 0)
        throw std::invalid_argument("normal_form of the zero polynomial needs an "
                                    "explicit degree");
    return normal_form(poly, d);
}

Element Presentation::normal_form(const Polynomial& poly, int degree) const
{
    std::vector<int> degs = generator_degrees();
    for (const Monomial& t : poly.terms())
        if (monomial_degree(t, degs) != degree)
            throw std::invalid_argument("polynomial is not homogeneous of the stated "
                                        "degree");
    if (degree > top_degree_ || degree % 2 || degree < 0)
        return zero_element(degree);

    const DegreeSlice& s = slice(degree);
    F2Vector v(s.monomials.size());
    for (const Monomial& t : poly.terms())
        v.flip(s.index.at(t));
    v = s.ideal.reduce(std::move(v));

    Element out = zero_element(degree);
    for (std::size_t k = 0; k < s.basis_cols.size(); ++k)
        if (v.get(s.basis_cols[k]))
            out.coords.set(k);
    return out;
}

Polynomial Presentation::representative(const Element& e) const
{
    std::vector<Monomial> terms;
    const std::vector<Monomial>& basis = basis_of_degree(e.degree);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (e.coords.get(k))
            terms.push_back(basis[k]);
    return Polynomial(std::move(terms));
}

Element Presentation::multiply(const Element& u, const Element& v) const
{
    int d = u.degree + v.degree;
    if (d > top_degree_)
        return zero_element(d);
    return normal_form(representative(u) * representative(v), d);
}

std::vector<std::pair<int, std::size_t>> Presentation::poincare_dims() const
{
    std::vector<std::pair<int, std::size_t>> out;
    for (int d = 0; d <= top_degree_; d += 2)
        out.emplace_back(d, dim_of_degree(d));
    return out;
}

std::size_t Presentation::total_dimension() const
{
    std::size_t n = 0;
    for (int d = 0; d <= top_degree_; d += 2)
        n += dim_of_degree(d);
    return n;
}

} // namespace kocalc
