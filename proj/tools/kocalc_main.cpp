#include <kocalc/catalog.hpp>
#include <kocalc/dga_cohomology.hpp>
#include <kocalc/emit.hpp>
#include <kocalc/presentation_file.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace kocalc;

struct RangeBounds {
    int lo = 0;
    int hi = 0;
};

RangeBounds parse_range(const std::string& text)
{
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--range expects LO..HI");
    RangeBounds r;
    try {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range expects integers LO..HI");
    }
    if (r.lo > r.hi)
        throw CLI::ValidationError("--range bounds out of order");
    return r;
}

/* --range expansion: for one-parameter families the bound is the parameter;
 * for gr it bounds m+n (all pairs 1 <= m <= n). */
std::vector<SpaceSpec> expand_range(const std::string& space_text, RangeBounds r)
{
    std::vector<SpaceSpec> specs;
    std::string tag = space_text.substr(0, space_text.find(':'));
    Family family = parse_family(tag);

    if (family == Family::gr) {
        if (space_text.find(':') != std::string::npos) {
            /* gr:M with ranged n */
            SpaceSpec partial;
            partial.family = Family::gr;
            std::string params = space_text.substr(space_text.find(':') + 1);
            if (params.find(',') != std::string::npos)
                throw CLI::ValidationError("--range conflicts with full gr:m,n spec");
            partial.m = std::stoi(params);
            for (int n = r.lo; n <= r.hi; ++n)
                specs.push_back(parse_space_spec("gr:" + std::to_string(partial.m) +
                                                 "," + std::to_string(n)));
        } else {
            for (int total = r.lo; total <= r.hi; ++total)
                for (int m = 1; 2 * m <= total; ++m)
                    specs.push_back(parse_space_spec(
                        "gr:" + std::to_string(m) + "," + std::to_string(total - m)));
        }
        return specs;
    }

    if (family_arity(family) != 1)
        throw CLI::ValidationError("--range needs a parametrized family (cp, gr, lg, "
                                   "quadric, spinor)");
    if (space_text.find(':') != std::string::npos)
        throw CLI::ValidationError("--range conflicts with an explicit parameter");
    for (int n = r.lo; n <= r.hi; ++n)
        specs.push_back(parse_space_spec(tag + ":" + std::to_string(n)));
    return specs;
}

std::string resolve_twist(const SpaceData& space, const std::string& requested)
{
    if (requested == "trivial")
        return "O";
    if (!space.find_twist(requested))
        throw std::invalid_argument("unknown twist '" + requested + "' for " +
                                    space.name + " (have: " +
                                    [&] {
                                        std::string names;
                                        for (const std::string& n : space.twist_names())
                                            names += (names.empty() ? "" : ", ") + n;
                                        return names;
                                    }() +
                                    ")");
    return requested;
}

int run(const std::vector<SpaceSpec>& specs, const std::string& twist_arg,
        OutputFormat format, bool check, bool betti, bool representatives)
{
    std::vector<ResultRow> rows;
    std::ostringstream extra;
    int mismatches = 0;

    for (const SpaceSpec& spec : specs) {
        SpaceData space = realize(spec);

        if (betti) {
            if (format == OutputFormat::csv) {
                extra << "space,degree,dim\n";
                for (auto [d, dim] : space.presentation->poincare_dims())
                    extra << space.name << "," << d << "," << dim << "\n";
            } else {
                extra << space.name << " betti:";
                for (auto [d, dim] : space.presentation->poincare_dims())
                    extra << " " << dim;
                extra << "\n";
            }
            continue;
        }

        std::string twist_name = resolve_twist(space, twist_arg);
        KOTable table = ko_table(space, twist_name);
        rows.push_back({space.name, table});

        if (representatives) {
            Differential diff(space.sq2, *space.find_twist(twist_name));
            extra << space.name << "; twist " << twist_name
                  << "; H^d representatives:\n";
            for (int d = 0; d <= space.presentation->top_degree(); d += 2) {
                std::vector<Element> reps = cohomology_representatives(diff, d);
                if (reps.empty())
                    continue;
                extra << "  d=" << d << ":";
                for (const Element& e : reps)
                    extra << "  " << element_to_string(e, *space.presentation);
                extra << "\n";
            }
        }

        if (check) {
            if (spec.family == Family::file) {
                std::cerr << space.name << ": --check needs a tabulated catalog space\n";
                ++mismatches;
                continue;
            }
            KOTable expected = expected_table(spec, twist_name);
            auto complain = [&](const char* cell, std::size_t got, std::size_t want) {
                if (got != want) {
                    std::cerr << space.name << " twist " << twist_name << ": " << cell
                              << " = " << got << ", expected " << want << "\n";
                    ++mismatches;
                }
            };
            complain("t0", table.t0, expected.t0);
            complain("t1", table.t1, expected.t1);
            for (std::size_t j = 0; j < 4; ++j)
                complain(("s" + std::to_string(j)).c_str(), table.s[j], expected.s[j]);
        }
    }

    if (!rows.empty())
        std::cout << emit(rows, format);
    std::cout << extra.str();

    if (check) {
        if (mismatches) {
            std::cerr << mismatches << " cell(s) differ from the tabulated values\n";
            return 1;
        }
        std::cerr << "all computed cells match the tabulated values\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"KO / Grothendieck-Witt / Witt group calculator for even-cell "
                 "complexes presented by their mod-2 cohomology"};

    std::string space_text;
    std::string twist = "trivial";
    std::string format_text = "text";
    std::string range_text;
    bool check = false, betti = false, representatives = false;

    app.add_option("--space", space_text,
                   "space spec: cp:n | gr:m,n | lg:n | quadric:n | spinor:n | eiii | "
                   "evii | point | file:PATH")
        ->required();
    app.add_option("--twist", twist, "twist name (trivial, O1, S, or a file twist)")
        ->capture_default_str();
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--range", range_text,
                   "LO..HI batch range (cp/lg/quadric/spinor: the parameter; gr: m+n)");
    app.add_flag("--check", check, "compare against the tabulated closed forms");
    app.add_flag("--betti", betti, "print Poincare dimensions only");
    app.add_flag("--representatives", representatives,
                 "print representatives of the twisted Sq^2 cohomology");

    CLI11_PARSE(app, argc, argv);

    OutputFormat format = format_text == "csv"    ? OutputFormat::csv
                          : format_text == "json" ? OutputFormat::json
                                                  : OutputFormat::text;

    try {
        std::vector<SpaceSpec> specs;
        if (!range_text.empty())
            specs = expand_range(space_text, parse_range(range_text));
        else
            specs.push_back(kocalc::parse_space_spec(space_text));
        return run(specs, twist, format, check, betti, representatives);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
