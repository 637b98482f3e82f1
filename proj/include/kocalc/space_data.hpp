#pragma once

#include <kocalc/steenrod.hpp>

#include <string>
#include <utility>
#include <vector>

namespace kocalc {

/* Everything needed to compute the KO/GW/W groups of one space: a cohomology
 * presentation, the Sq^2 data, and the named degree-2 twist classes.  The
 * twist list always starts with the trivial twist "O". */
struct SpaceData {
    std::string name;
    std::shared_ptr<const Presentation> presentation;
    SqAction sq2;
    std::vector<std::pair<std::string, Element>> twists;
    int complex_dimension = 0;
    bool degeneration_assumed = true;
    std::string degeneration_note;

    const Element* find_twist(const std::string& twist_name) const
    {
        for (const auto& [n, e] : twists)
            if (n == twist_name)
                return &e;
        return nullptr;
    }

    std::vector<std::string> twist_names() const
    {
        std::vector<std::string> names;
        for (const auto& [n, e] : twists)
            names.push_back(n);
        return names;
    }
};

} // namespace kocalc
