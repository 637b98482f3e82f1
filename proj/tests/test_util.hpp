#pragma once

#include <kocalc/catalog.hpp>
#include <kocalc/presentation_file.hpp>

#include <map>
#include <string>
#include <vector>

namespace kocalc::testutil {

/* Coefficient list of a polynomial in q, index = exponent. */
using QPoly = std::vector<long long>;

inline QPoly qpoly_add(const QPoly& a, const QPoly& b)
{
    QPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

inline QPoly qpoly_shift(QPoly a, std::size_t k)
{
    a.insert(a.begin(), k, 0);
    return a;
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b)
{
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/* Gaussian binomial [n choose k]_q via the q-Pascal recursion
 * [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.  Coefficient of q^j is the Betti
 * number of Gr_{k,n-k} in cohomological degree 2j (Schubert cells =
 * partitions inside a k x (n-k) box). */
inline QPoly gaussian_binomial(std::size_t n, std::size_t k)
{
    if (k == 0 || k == n)
        return {1};
    return qpoly_add(gaussian_binomial(n - 1, k - 1),
                     qpoly_shift(gaussian_binomial(n - 1, k), k));
}

/* Poincare series of an exterior algebra on generators of the given even
 * cohomological degrees: product of (1 + q^{d/2}), indexed by half-degree. */
inline QPoly exterior_series(const std::vector<int>& degrees)
{
    QPoly out{1};
    for (int d : degrees) {
        QPoly factor(std::size_t(d / 2) + 1, 0);
        factor[0] = 1;
        factor[std::size_t(d / 2)] = 1;
        out = qpoly_mul(out, factor);
    }
    return out;
}

/* Betti numbers by cohomological degree from a half-degree series. */
inline std::map<int, long long> betti_from_series(const QPoly& series)
{
    std::map<int, long long> out;
    for (std::size_t j = 0; j < series.size(); ++j)
        if (series[j])
            out[int(2 * j)] = series[j];
    return out;
}

inline std::map<int, long long> betti_map(const Presentation& p)
{
    std::map<int, long long> out;
    for (auto [d, dim] : p.poincare_dims())
        if (dim)
            out[d] = (long long)dim;
    return out;
}

/* Class of a polynomial given in the presentation-file syntax. */
inline Element el(const SpaceData& s, const std::string& poly_text)
{
    const Presentation& p = *s.presentation;
    return p.normal_form(parse_polynomial(poly_text, p.generators()));
}

inline Element el(const SpaceData& s, const std::string& poly_text, int degree)
{
    const Presentation& p = *s.presentation;
    return p.normal_form(parse_polynomial(poly_text, p.generators()), degree);
}

/* The acceptance-sized catalog: every space the table criteria run over. */
inline std::vector<SpaceSpec> acceptance_specs()
{
    std::vector<SpaceSpec> specs;
    specs.push_back(parse_space_spec("point"));
    for (int n = 1; n <= 16; ++n)
        specs.push_back(parse_space_spec("cp:" + std::to_string(n)));
    for (int m = 1; m <= 9; ++m)
        for (int n = m; m + n <= 10; ++n)
            specs.push_back(parse_space_spec("gr:" + std::to_string(m) + "," +
                                             std::to_string(n)));
    for (int n = 1; n <= 8; ++n)
        specs.push_back(parse_space_spec("lg:" + std::to_string(n)));
    for (int n = 3; n <= 12; ++n)
        specs.push_back(parse_space_spec("quadric:" + std::to_string(n)));
    for (int n = 2; n <= 9; ++n)
        specs.push_back(parse_space_spec("spinor:" + std::to_string(n)));
    specs.push_back(parse_space_spec("eiii"));
    specs.push_back(parse_space_spec("evii"));
    return specs;
}

} // namespace kocalc::testutil
