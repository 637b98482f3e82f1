#include <kocalc/catalog.hpp>

#include <stdexcept>

namespace kocalc {

namespace {

Monomial mono(std::size_t num_gens, std::initializer_list<std::pair<std::size_t, int>> exps)
{
    Monomial m(num_gens, 0);
    for (auto [i, e] : exps)
        m[i] += e;
    return m;
}

Polynomial power_poly(std::size_t num_gens, std::size_t gen, int exp)
{
    return Polynomial(mono(num_gens, {{gen, exp}}));
}

Element nonzero_twist(const Presentation& p, const Polynomial& poly)
{
    Element e = p.normal_form(poly, 2);
    if (e.is_zero())
        throw std::logic_error("twist class vanishes");
    return e;
}

SpaceData make_space(std::string name, std::shared_ptr<const Presentation> pres,
                     std::vector<Polynomial> sq_values,
                     std::vector<std::pair<std::string, Polynomial>> named_twists,
                     int complex_dimension, std::string note)
{
    SqAction action(pres, std::move(sq_values));
    std::vector<std::pair<std::string, Element>> twists;
    twists.emplace_back("O", pres->zero_element(2));
    for (auto& [twist_name, poly] : named_twists)
        twists.emplace_back(twist_name, nonzero_twist(*pres, poly));
    return SpaceData{std::move(name), pres,         std::move(action), std::move(twists),
                     complex_dimension, true, std::move(note)};
}

} // namespace

SpaceData projective_space(int n)
{
    if (n < 1)
        throw std::invalid_argument("projective space needs n >= 1");
    std::vector<Generator> gens{{"x", 2}};
    std::vector<Polynomial> rels{power_poly(1, 0, n + 1)};
    auto pres = std::make_shared<const Presentation>(gens, rels, 2 * n);
    return make_space("cp:" + std::to_string(n), pres, {power_poly(1, 0, 2)},
                      {{"O1", power_poly(1, 0, 1)}}, n,
                      "collapses at E3: Thom(O(1)) over CP^n is CP^{n+1} "
                      "(Fujii 1967)");
}

SpaceData grassmannian(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("grassmannian needs m, n >= 1");
    std::size_t k = std::size_t(m);
    std::vector<Generator> gens;
    for (int i = 1; i <= m; ++i)
        gens.push_back({"a" + std::to_string(i), 2 * i});

    /* b_j from a.b = 1: b_0 = 1, b_j = sum_{i<=min(m,j)} a_i b_{j-i};
     * relations are b_{n+1}..b_{n+m} as polynomials in the a_i */
    std::vector<Polynomial> b(std::size_t(n + m + 1));
    b[0] = Polynomial::one(k);
    for (int j = 1; j <= n + m; ++j) {
        Polynomial acc;
        for (int i = 1; i <= std::min(m, j); ++i)
            acc += power_poly(k, std::size_t(i - 1), 1) * b[std::size_t(j - i)];
        b[std::size_t(j)] = std::move(acc);
    }
    std::vector<Polynomial> rels(b.begin() + n + 1, b.end());

    auto pres = std::make_shared<const Presentation>(gens, rels, 2 * m * n);
    std::vector<Polynomial> sq;
    for (std::size_t i = 1; i <= k; ++i)
        sq.push_back(chern_sq2(k, i));
    return make_space("gr:" + std::to_string(m) + "," + std::to_string(n), pres,
                      std::move(sq), {{"O1", power_poly(k, 0, 1)}}, m * n,
                      "collapses at E3: Kono-Hara 1991, Prop. 4; the twisted "
                      "Thom-space sequence collapses by comparison");
}

SpaceData symplectic_grassmannian(int n)
{
    if (n < 1)
        throw std::invalid_argument("symplectic grassmannian needs n >= 1");
    std::size_t k = std::size_t(n);
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"c" + std::to_string(i), 2 * i});
    std::vector<Polynomial> rels;
    for (std::size_t i = 0; i < k; ++i)
        rels.push_back(power_poly(k, i, 2));

    auto pres = std::make_shared<const Presentation>(gens, rels, n * (n + 1));
    std::vector<Polynomial> sq;
    for (std::size_t i = 1; i <= k; ++i)
        sq.push_back(chern_sq2(k, i));
    return make_space("lg:" + std::to_string(n), pres, std::move(sq),
                      {{"O1", power_poly(k, 0, 1)}}, n * (n + 1) / 2,
                      "collapses at E3: Kono-Hara 1992, Thm 2.1; the twisted "
                      "Thom-space cohomology injects into the untwisted one");
}

SpaceData quadric(int n)
{
    if (n < 3)
        throw std::invalid_argument("quadric needs n >= 3 (rank-1 Picard group)");
    int m = n / 2;
    std::string name = "quadric:" + std::to_string(n);
    std::string note = "higher differentials vanish: Kono-Hara 1991/1992 "
                       "(untwisted); cone-in-Q^{n+2} argument for the twist";

    if (n % 2 == 0) {
        /* x, a, b with x^m = a+b, x^{m+1} = 0, and the ab / a^2 / b^2 products
         * depending on n mod 4 */
        std::vector<Generator> gens{{"x", 2}, {"a", n}, {"b", n}};
        Polynomial ax_m = Polynomial(mono(3, {{1, 1}, {0, m}}));
        std::vector<Polynomial> rels;
        rels.push_back(power_poly(3, 0, m) + power_poly(3, 1, 1) + power_poly(3, 2, 1));
        rels.push_back(power_poly(3, 0, m + 1));
        {
            Polynomial ab(mono(3, {{1, 1}, {2, 1}}));
            if (n % 4 == 2)
                ab += ax_m;
            rels.push_back(std::move(ab));
        }
        for (std::size_t g : {std::size_t(1), std::size_t(2)}) {
            Polynomial sq = power_poly(3, g, 2);
            if (n % 4 == 0)
                sq += ax_m;
            rels.push_back(std::move(sq));
        }
        auto pres = std::make_shared<const Presentation>(gens, rels, 2 * n);

        Polynomial sq_a = (n % 4 == 0) ? Polynomial(mono(3, {{1, 1}, {0, 1}}))
                                       : Polynomial();
        std::vector<Polynomial> sq{power_poly(3, 0, 2), sq_a, sq_a};
        return make_space(name, pres, std::move(sq), {{"O1", power_poly(3, 0, 1)}}, n,
                          note);
    }

    /* odd n = 2m+1: x, a with x^{m+1} = 0, a^2 = 0 */
    std::vector<Generator> gens{{"x", 2}, {"a", n + 1}};
    std::vector<Polynomial> rels{power_poly(2, 0, m + 1), power_poly(2, 1, 2)};
    auto pres = std::make_shared<const Presentation>(gens, rels, 2 * n);

    Polynomial sq_a = (n % 4 == 3) ? Polynomial(mono(2, {{1, 1}, {0, 1}}))
                                   : Polynomial();
    std::vector<Polynomial> sq{power_poly(2, 0, 2), sq_a};
    return make_space(name, pres, std::move(sq), {{"O1", power_poly(2, 0, 1)}}, n, note);
}

SpaceData spinor(int n)
{
    if (n < 2)
        throw std::invalid_argument("spinor variety needs n >= 2");
    std::size_t k = std::size_t(n - 1);  /* generators e_2, e_4, .., e_{2n-2} */
    std::vector<Generator> gens;
    for (std::size_t i = 1; i <= k; ++i)
        gens.push_back({"e" + std::to_string(2 * i), int(2 * i)});

    /* e_{2i}^2 = e_{4i}, with e_{2j} = 0 for j >= n */
    std::vector<Polynomial> rels;
    for (std::size_t i = 1; i <= k; ++i) {
        Polynomial r = power_poly(k, i - 1, 2);
        if (2 * i <= k)
            r += power_poly(k, 2 * i - 1, 1);
        rels.push_back(std::move(r));
    }
    auto pres = std::make_shared<const Presentation>(gens, rels, n * (n - 1));

    /* Sq^2(e_{2i}) = i e_{2i+2} */
    std::vector<Polynomial> sq;
    for (std::size_t i = 1; i <= k; ++i) {
        if (i % 2 == 1 && i + 1 <= k)
            sq.push_back(power_poly(k, i, 1));
        else
            sq.push_back(Polynomial());
    }
    return make_space("spinor:" + std::to_string(n), pres, std::move(sq),
                      {{"S", power_poly(k, 0, 1)}}, n * (n - 1) / 2,
                      "collapses at E3: Kono-Hara 1992 (untwisted); the twisted "
                      "Sq^2 cohomology vanishes identically");
}

SpaceData exceptional(ExceptionalSpace which)
{
    if (which == ExceptionalSpace::EIII) {
        std::vector<Generator> gens{{"t", 2}, {"u", 8}};
        std::vector<Polynomial> rels{
            Polynomial(mono(2, {{1, 2}, {0, 1}})),                  /* u^2 t */
            power_poly(2, 1, 3) + power_poly(2, 0, 12),             /* u^3 + t^12 */
        };
        auto pres = std::make_shared<const Presentation>(gens, rels, 32);
        std::vector<Polynomial> sq{power_poly(2, 0, 2),
                                   Polynomial(mono(2, {{1, 1}, {0, 1}}))}; /* ut */
        return make_space("eiii", pres, std::move(sq), {{"O1", power_poly(2, 0, 1)}},
                          16,
                          "collapses at E3: first possible higher differential "
                          "sits on page r = 2 mod 8 and has no room");
    }

    std::vector<Generator> gens{{"t", 2}, {"v", 10}, {"w", 18}};
    std::vector<Polynomial> rels{power_poly(3, 0, 14), power_poly(3, 1, 2),
                                 power_poly(3, 2, 2)};
    auto pres = std::make_shared<const Presentation>(gens, rels, 54);
    std::vector<Polynomial> sq{power_poly(3, 0, 2), Polynomial(), Polynomial()};
    return make_space("evii", pres, std::move(sq), {{"O1", power_poly(3, 0, 1)}}, 27,
                      "collapses at E3: Kono-Hara 1992 (untwisted); the twisted "
                      "Sq^2 cohomology vanishes identically");
}

SpaceData point_space()
{
    auto pres = std::make_shared<const Presentation>(std::vector<Generator>{},
                                                     std::vector<Polynomial>{}, 0);
    SqAction action(pres, {});
    std::vector<std::pair<std::string, Element>> twists;
    twists.emplace_back("O", pres->zero_element(2));
    return SpaceData{"point", pres,  std::move(action), std::move(twists), 0, false,
                     "no differentials possible"};
}

SpaceData realize_catalog(const SpaceSpec& spec)
{
    switch (spec.family) {
    case Family::cp:
        return projective_space(spec.n);
    case Family::gr:
        return grassmannian(spec.m, spec.n);
    case Family::lg:
        return symplectic_grassmannian(spec.n);
    case Family::quadric:
        return quadric(spec.n);
    case Family::spinor:
        return spinor(spec.n);
    case Family::eiii:
        return exceptional(ExceptionalSpace::EIII);
    case Family::evii:
        return exceptional(ExceptionalSpace::EVII);
    case Family::point:
        return point_space();
    case Family::file:
        throw std::invalid_argument("file specs are realized by the presentation-file "
                                    "reader");
    }
    throw std::invalid_argument("unhandled space family");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

std::uint64_t rho(std::uint64_t n, long long i)
{
    std::uint64_t r = std::uint64_t(((i % 4) + 4) % 4);
    std::uint64_t total = 0;
    for (std::uint64_t d = r; d <= n; d += 4)
        total += binomial(n, d);
    return total;
}

namespace {

bool twist_is_trivial(const SpaceSpec& spec, const std::string& twist_name)
{
    if (twist_name == "O")
        return true;
    std::string nontrivial = (spec.family == Family::spinor) ? "S" : "O1";
    if (twist_name == nontrivial && spec.family != Family::point)
        return false;
    throw std::invalid_argument("no tabulated column for twist '" + twist_name +
                                "' of " + spec.str());
}

KOTable finish(const SpaceSpec& spec, std::size_t t0, std::size_t t1,
               std::array<std::size_t, 4> s, const std::string& twist_name)
{
    KOTable t;
    t.t0 = t0;
    t.t1 = t1;
    t.s = s;
    t.twist = twist_name;
    t.degeneration_assumed = spec.family != Family::point;
    return t;
}

} // namespace

KOTable expected_table(const SpaceSpec& spec, const std::string& twist_name)
{
    bool trivial = twist_is_trivial(spec, twist_name);
    std::size_t t0 = 0, t1 = 0;
    std::array<std::size_t, 4> s{0, 0, 0, 0};

    switch (spec.family) {
    case Family::point:
        t0 = 1;
        t1 = 0;
        s = {1, 0, 0, 0};
        break;

    case Family::cp: {
        std::size_t n = std::size_t(spec.n);
        if (n % 2 == 0) {
            t0 = n / 2 + 1;
            t1 = n / 2;
        } else {
            t0 = t1 = (n + 1) / 2;
        }
        switch (n % 4) {
        case 0: s = trivial ? std::array<std::size_t, 4>{1, 0, 0, 0}
                            : std::array<std::size_t, 4>{1, 0, 0, 0}; break;
        case 1: s = trivial ? std::array<std::size_t, 4>{1, 1, 0, 0}
                            : std::array<std::size_t, 4>{0, 0, 0, 0}; break;
        case 2: s = trivial ? std::array<std::size_t, 4>{1, 0, 0, 0}
                            : std::array<std::size_t, 4>{0, 0, 1, 0}; break;
        case 3: s = trivial ? std::array<std::size_t, 4>{1, 0, 0, 1}
                            : std::array<std::size_t, 4>{0, 0, 0, 0}; break;
        }
        break;
    }

    case Family::gr: {
        std::uint64_t m = std::uint64_t(spec.m), n = std::uint64_t(spec.n);
        std::uint64_t k = m / 2, l = n / 2;
        std::uint64_t a = binomial(m + n, m);
        std::uint64_t b = binomial(k + l, k);
        bool m_odd = m % 2, n_odd = n % 2;
        if (m_odd && n_odd) {
            t0 = t1 = a / 2;
            if (trivial)
                s = (m % 4 == n % 4) ? std::array<std::size_t, 4>{b, b, 0, 0}
                                     : std::array<std::size_t, 4>{b, 0, 0, b};
        } else {
            t0 = (a + b) / 2;
            t1 = (a - b) / 2;
            if (trivial) {
                s = {b, 0, 0, 0};
            } else if (m % 4 == 0 && n % 4 == 2) {
                std::uint64_t b1 = binomial(k + l - 1, k);
                std::uint64_t b2 = binomial(k + l - 1, k - 1);
                s = {b1, 0, b2, 0};
            } else if (m % 4 == 2 && n % 4 == 0) {
                std::uint64_t b1 = binomial(k + l - 1, k);
                std::uint64_t b2 = binomial(k + l - 1, k - 1);
                s = {b2, 0, b1, 0};
            } else if (m % 4 == 2 || (m_odd && n % 4 == 2)) {
                s = {0, 0, b, 0};
            } else {
                /* m = 0 mod 4 with n = 0 mod 4 or odd; or m odd with n = 0 mod 4 */
                s = {b, 0, 0, 0};
            }
        }
        break;
    }

    case Family::lg: {
        std::uint64_t n = std::uint64_t(spec.n);
        t0 = t1 = std::uint64_t(1) << (n - 1);
        for (long long i = 0; i < 4; ++i) {
            if (trivial)
                s[std::size_t(i)] = (n % 2 == 0) ? rho(n / 2, i) : rho((n + 1) / 2, i);
            else
                s[std::size_t(i)] = (n % 2 == 0) ? rho(n / 2, i - (long long)n) : 0;
        }
        break;
    }

    case Family::quadric: {
        std::size_t n = std::size_t(spec.n);
        if (n % 4 == 0) {
            t0 = n / 2 + 2;
            t1 = n / 2;
        } else if (n % 4 == 2) {
            t0 = t1 = n / 2 + 1;
        } else {
            t0 = t1 = (n + 1) / 2;
        }
        static const std::array<std::size_t, 4> table[8][2] = {
            {{2, 0, 0, 0}, {2, 0, 0, 0}}, /* n = 0 mod 8 */
            {{1, 1, 0, 0}, {1, 1, 0, 0}},
            {{1, 2, 1, 0}, {0, 0, 0, 0}},
            {{1, 1, 0, 0}, {0, 0, 1, 1}},
            {{2, 0, 0, 0}, {0, 0, 2, 0}},
            {{1, 0, 0, 1}, {0, 1, 1, 0}},
            {{1, 0, 1, 2}, {0, 0, 0, 0}},
            {{1, 0, 0, 1}, {1, 0, 0, 1}},
        };
        s = table[n % 8][trivial ? 0 : 1];
        break;
    }

    case Family::spinor: {
        std::uint64_t n = std::uint64_t(spec.n);
        t0 = t1 = std::uint64_t(1) << (n - 2);
        if (trivial) {
            for (long long i = 0; i < 4; ++i)
                s[std::size_t(i)] = (n % 4 == 2) ? rho(n / 2, 1 - i) : rho(n / 2, -i);
        }
        break;
    }

    case Family::eiii:
        t0 = 15;
        t1 = 12;
        s = {3, 0, 0, 0};
        break;

    case Family::evii:
        t0 = 28;
        t1 = 28;
        s = trivial ? std::array<std::size_t, 4>{1, 3, 3, 1}
                    : std::array<std::size_t, 4>{0, 0, 0, 0};
        break;

    case Family::file:
        throw std::invalid_argument("no tabulated expectations for file-based spaces");
    }

    return finish(spec, t0, t1, s, twist_name);
}

} // namespace kocalc
