#pragma once

#include <kocalc/dga_cohomology.hpp>
#include <kocalc/space_data.hpp>

#include <array>
#include <string>
#include <vector>

namespace kocalc {

/* The additive answer for one space and twist.  t0 and t1 are the free ranks
 * (cells of dimension 0 resp. 2 mod 4); s_j collects the twisted Sq^2
 * cohomology in degrees 2j mod 8 and gives the 2-torsion exponents of the
 * eight KO-groups:
 *
 *   KO^0 = Z^t0 + (Z/2)^s1 = GW^0      KO^1 = (Z/2)^s1 = W^1
 *   KO^2 = Z^t1 + (Z/2)^s2 = GW^1      KO^3 = (Z/2)^s2 = W^2
 *   KO^4 = Z^t0 + (Z/2)^s3 = GW^2      KO^5 = (Z/2)^s3 = W^3
 *   KO^6 = Z^t1 + (Z/2)^s0 = GW^3      KO^7 = (Z/2)^s0 = W^0
 *
 * Only the s_j depend on the twist. */
struct KOTable {
    std::size_t t0 = 0;
    std::size_t t1 = 0;
    std::array<std::size_t, 4> s{0, 0, 0, 0};
    std::string twist;
    bool degeneration_assumed = true;
    std::string degeneration_note;

    friend bool operator==(const KOTable&, const KOTable&) = default;

    /* numeric content only: t0, t1, s */
    bool same_groups(const KOTable& o) const { return t0 == o.t0 && t1 == o.t1 && s == o.s; }
};

/* Counts of even-degree basis dimensions split by degree mod 4. */
std::pair<std::size_t, std::size_t> betti_mod4_split(const Presentation& p);

/* s_j = sum of dims in degrees congruent to 2j mod 8. */
std::array<std::size_t, 4> s_values(const CohomologyDims& dims);

KOTable ko_table(const SpaceData& space, const std::string& twist_name);

enum class GroupConvention { KO, GW_W };

struct LabeledGroup {
    std::string label;
    std::string group;
};

/* "Z^a ⊕ (Z/2)^b" with the obvious simplifications. */
std::string group_string(std::size_t free_rank, std::size_t torsion_rank);

/* The eight KO-groups, or GW^0..3 followed by W^0..3. */
std::vector<LabeledGroup> render(const KOTable& table, GroupConvention convention);

} // namespace kocalc
