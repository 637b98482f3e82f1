#include <kocalc/catalog.hpp>
#include <kocalc/presentation_file.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kocalc {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool valid_name(std::string_view s)
{
    if (s.empty() || (!std::isalpha((unsigned char)s[0]) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_')
            return false;
    return true;
}

int to_int(std::string_view s, const std::string& what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "' in " +
                                    what);
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<Generator>& gens)
{
    std::string squeezed;
    for (char c : text)
        if (c != ' ' && c != '\t')
            squeezed += c;
    if (squeezed.empty())
        throw std::invalid_argument("empty polynomial");
    if (squeezed == "0")
        return Polynomial();

    std::vector<Monomial> terms;
    for (std::string_view term : split(squeezed, '+')) {
        if (term.empty())
            throw std::invalid_argument("empty term in polynomial '" +
                                        std::string(text) + "'");
        Monomial m(gens.size(), 0);
        if (term != "1") {
            for (std::string_view factor : split(term, '*')) {
                std::string_view base = factor;
                int exp = 1;
                if (std::size_t caret = factor.find('^');
                    caret != std::string_view::npos) {
                    base = factor.substr(0, caret);
                    exp = to_int(factor.substr(caret + 1), "exponent");
                    if (exp < 0)
                        throw std::invalid_argument("negative exponent in '" +
                                                    std::string(factor) + "'");
                }
                bool found = false;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    if (gens[i].name == base) {
                        m[std::size_t(i)] += exp;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::invalid_argument("unknown generator '" +
                                                std::string(base) + "'");
            }
        }
        terms.push_back(std::move(m));
    }
    return Polynomial(std::move(terms));
}

std::string polynomial_to_string(const Polynomial& p, const std::vector<Generator>& gens)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const Monomial& t : p.terms()) {
        if (!out.empty())
            out += " + ";
        std::string term;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0)
                continue;
            if (!term.empty())
                term += "*";
            term += gens[i].name;
            if (t[i] > 1)
                term += "^" + std::to_string(t[i]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

std::string element_to_string(const Element& e, const Presentation& p)
{
    return polynomial_to_string(p.representative(e), p.generators());
}

namespace {

struct Line {
    int number;
    std::string keyword;
    std::string rest;
};

[[noreturn]] void fail(const std::string& source, int line, const std::string& message)
{
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + message);
}

} // namespace

SpaceData parse_presentation_file(std::istream& in, const std::string& source_name)
{
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string_view s = raw;
        if (std::size_t hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        std::size_t space = s.find_first_of(" \t");
        std::string keyword(space == std::string_view::npos ? s : s.substr(0, space));
        std::string rest(space == std::string_view::npos ? std::string_view{}
                                                         : trim(s.substr(space + 1)));
        lines.push_back({number, std::move(keyword), std::move(rest)});
    }

    /* first pass: header and generators */
    std::string name;
    int dimc = -1;
    std::vector<Generator> gens;

    auto header_line = [&](const Line& line) {
        if (line.keyword == "space") {
            if (!name.empty())
                fail(source_name, line.number, "duplicate space line");
            if (line.rest.empty())
                fail(source_name, line.number, "space line needs a name");
            name = line.rest;
        } else if (line.keyword == "dimc") {
            if (dimc >= 0)
                fail(source_name, line.number, "duplicate dimc line");
            dimc = to_int(line.rest, "dimc");
            if (dimc < 0)
                fail(source_name, line.number, "dimc must be non-negative");
        } else if (line.keyword == "gen") {
            std::size_t space = line.rest.find_first_of(" \t");
            if (space == std::string::npos)
                fail(source_name, line.number, "gen line needs NAME DEGREE");
            std::string gname(trim(line.rest.substr(0, space)));
            int degree = to_int(trim(line.rest.substr(space + 1)), "generator degree");
            if (!valid_name(gname))
                fail(source_name, line.number, "invalid generator name '" + gname + "'");
            if (degree <= 0 || degree % 2)
                fail(source_name, line.number,
                     "generator '" + gname + "': even degrees only");
            gens.push_back({std::move(gname), degree});
        } else if (line.keyword != "rel" && line.keyword != "sq2" &&
                   line.keyword != "twist") {
            fail(source_name, line.number, "unknown keyword '" + line.keyword + "'");
        }
    };
    for (const Line& line : lines) {
        try {
            header_line(line);
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (what.rfind(source_name + ":", 0) == 0)
                throw;
            fail(source_name, line.number, what);
        }
    }
    if (name.empty())
        fail(source_name, 1, "missing space line");
    if (dimc < 0)
        fail(source_name, 1, "missing dimc line");

    /* second pass: relations, Sq^2 data, twists */
    std::vector<Polynomial> rels;
    std::vector<Polynomial> sq_values(gens.size());
    std::vector<bool> sq_seen(gens.size(), false);
    std::vector<std::tuple<std::string, Polynomial, int>> twist_polys;

    auto parse_assignment = [&](const Line& line) -> std::pair<std::string, Polynomial> {
        std::size_t eq = line.rest.find('=');
        if (eq == std::string::npos)
            fail(source_name, line.number, line.keyword + " line needs NAME = POLY");
        std::string lhs(trim(std::string_view(line.rest).substr(0, eq)));
        std::string rhs(trim(std::string_view(line.rest).substr(eq + 1)));
        try {
            return {lhs, parse_polynomial(rhs, gens)};
        } catch (const std::invalid_argument& e) {
            fail(source_name, line.number, e.what());
        }
    };

    for (const Line& line : lines) {
        if (line.keyword == "rel") {
            try {
                Polynomial r = parse_polynomial(line.rest, gens);
                if (r.is_zero())
                    fail(source_name, line.number, "zero relation");
                rels.push_back(std::move(r));
            } catch (const std::invalid_argument& e) {
                std::string what = e.what();
                if (what.rfind(source_name, 0) == 0)
                    throw;
                fail(source_name, line.number, what);
            }
        } else if (line.keyword == "sq2") {
            auto [gname, poly] = parse_assignment(line);
            int idx = -1;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].name == gname)
                    idx = int(i);
            if (idx < 0)
                fail(source_name, line.number, "sq2 line for unknown generator '" +
                                                   gname + "'");
            if (sq_seen[std::size_t(idx)])
                fail(source_name, line.number, "duplicate sq2 line for '" + gname + "'");
            sq_seen[std::size_t(idx)] = true;
            sq_values[std::size_t(idx)] = std::move(poly);
        } else if (line.keyword == "twist") {
            auto [tname, poly] = parse_assignment(line);
            if (!valid_name(tname) || tname == "O")
                fail(source_name, line.number, "invalid twist name '" + tname + "'");
            for (const auto& [existing, p, ln] : twist_polys)
                if (existing == tname)
                    fail(source_name, line.number, "duplicate twist '" + tname + "'");
            twist_polys.emplace_back(tname, std::move(poly), line.number);
        }
    }

    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!sq_seen[i])
            fail(source_name, 1, "missing sq2 line for generator '" + gens[i].name + "'");

    std::shared_ptr<const Presentation> pres;
    try {
        pres = std::make_shared<const Presentation>(gens, rels, 2 * dimc);
    } catch (const std::invalid_argument& e) {
        fail(source_name, 1, e.what());
    }

    std::shared_ptr<const Presentation> shared = pres;
    SqAction action = [&] {
        try {
            return SqAction(shared, sq_values);
        } catch (const std::invalid_argument& e) {
            fail(source_name, 1, e.what());
        }
    }();

    std::vector<std::pair<std::string, Element>> twists;
    twists.emplace_back("O", pres->zero_element(2));
    for (const auto& [tname, poly, line_number] : twist_polys) {
        try {
            twists.emplace_back(tname, pres->normal_form(poly, 2));
        } catch (const std::invalid_argument& e) {
            fail(source_name, line_number,
                 "twist '" + tname + "' must have degree 2 (" + e.what() + ")");
        }
    }

    SpaceData space{std::move(name), pres,   std::move(action), std::move(twists),
                    dimc,            true,   "conditional on E3-degeneration "
                                             "(user-supplied presentation)"};

    /* every declared twist must give a valid differential */
    for (const auto& [tname, twist] : space.twists) {
        try {
            (void)Differential(space.sq2, twist);
        } catch (const std::invalid_argument& e) {
            fail(source_name, 1, std::string("twist '") + tname + "': " + e.what());
        }
    }
    return space;
}

SpaceData parse_presentation_text(const std::string& text, const std::string& source_name)
{
    std::istringstream in(text);
    return parse_presentation_file(in, source_name);
}

SpaceData load_presentation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open presentation file '" + path + "'");
    return parse_presentation_file(in, path);
}

std::string write_presentation_file(const SpaceData& space)
{
    const Presentation& p = *space.presentation;
    const std::vector<Generator>& gens = p.generators();
    std::ostringstream out;
    out << "space " << space.name << "\n";
    out << "dimc " << space.complex_dimension << "\n";
    for (const Generator& g : gens)
        out << "gen " << g.name << " " << g.degree << "\n";
    for (const Polynomial& r : p.relations())
        out << "rel " << polynomial_to_string(r, gens) << "\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        out << "sq2 " << gens[i].name << " = "
            << element_to_string(space.sq2.generator_value(i), p) << "\n";
    for (const auto& [tname, twist] : space.twists) {
        if (tname == "O")
            continue;
        out << "twist " << tname << " = " << element_to_string(twist, p) << "\n";
    }
    return out.str();
}

SpaceData realize(const SpaceSpec& spec)
{
    if (spec.family == Family::file)
        return load_presentation_file(spec.path);
    return realize_catalog(spec);
}

} // namespace kocalc
