#include <kocalc/ko_table.hpp>

#include <stdexcept>

namespace kocalc {

std::pair<std::size_t, std::size_t> betti_mod4_split(const Presentation& p)
{
    std::size_t t0 = 0, t1 = 0;
    for (int d = 0; d <= p.top_degree(); d += 2) {
        if (d % 4 == 0)
            t0 += p.dim_of_degree(d);
        else
            t1 += p.dim_of_degree(d);
    }
    return {t0, t1};
}

std::array<std::size_t, 4> s_values(const CohomologyDims& dims)
{
    std::array<std::size_t, 4> s{0, 0, 0, 0};
    for (int d = 0; d <= dims.top_degree; d += 2)
        s[std::size_t((d % 8) / 2)] += dims.dim(d);
    return s;
}

KOTable ko_table(const SpaceData& space, const std::string& twist_name)
{
    const Element* twist = space.find_twist(twist_name);
    if (!twist)
        throw std::invalid_argument("unknown twist '" + twist_name + "' for space " +
                                    space.name);

    Differential diff(space.sq2, *twist);

    KOTable table;
    auto [t0, t1] = betti_mod4_split(*space.presentation);
    table.t0 = t0;
    table.t1 = t1;
    table.s = s_values(cohomology_dims(diff));
    table.twist = twist_name;
    table.degeneration_assumed = space.degeneration_assumed;
    table.degeneration_note = space.degeneration_note;
    return table;
}

std::string group_string(std::size_t free_rank, std::size_t torsion_rank)
{
    std::string out;
    if (free_rank == 1)
        out = "Z";
    else if (free_rank > 1)
        out = "Z^" + std::to_string(free_rank);
    if (torsion_rank > 0) {
        if (!out.empty())
            out += " ⊕ ";
        if (torsion_rank == 1)
            out += "Z/2";
        else
            out += "(Z/2)^" + std::to_string(torsion_rank);
    }
    if (out.empty())
        out = "0";
    return out;
}

std::vector<LabeledGroup> render(const KOTable& t, GroupConvention convention)
{
    const std::array<std::size_t, 8> free_ranks{t.t0, 0, t.t1, 0, t.t0, 0, t.t1, 0};
    const std::array<std::size_t, 8> torsion{t.s[1], t.s[1], t.s[2], t.s[2],
                                             t.s[3], t.s[3], t.s[0], t.s[0]};
    std::vector<LabeledGroup> out;
    if (convention == GroupConvention::KO) {
        for (int i = 0; i < 8; ++i)
            out.push_back({"KO^" + std::to_string(i),
                           group_string(free_ranks[std::size_t(i)],
                                        torsion[std::size_t(i)])});
    } else {
        for (int q = 0; q < 4; ++q)
            out.push_back({"GW^" + std::to_string(q),
                           group_string(free_ranks[std::size_t(2 * q)],
                                        torsion[std::size_t(2 * q)])});
        /* W^q = KO^{2q-1}; W^0 sits at KO^7 */
        for (int q = 0; q < 4; ++q) {
            int ko = (2 * q - 1 + 8) % 8;
            out.push_back({"W^" + std::to_string(q),
                           group_string(0, torsion[std::size_t(ko)])});
        }
    }
    return out;
}

} // namespace kocalc
