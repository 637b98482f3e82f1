#include <kocalc/emit.hpp>

#include <json.hpp>

#include <algorithm>

#include <iomanip>
#include <sstream>

namespace kocalc {

const char* const kCsvHeader = "space,twist,t0,t1,s0,s1,s2,s3,degeneration_assumed";

namespace {

std::string emit_text(const std::vector<ResultRow>& rows)
{
    std::size_t name_width = 5;
    for (const ResultRow& r : rows)
        name_width = std::max(name_width, r.space.size());
    std::size_t twist_width = 5;
    for (const ResultRow& r : rows)
        twist_width = std::max(twist_width, r.table.twist.size());

    std::ostringstream out;
    out << std::left << std::setw(int(name_width + 2)) << "space"
        << std::setw(int(twist_width + 2)) << "twist" << std::right;
    for (const char* h : {"t0", "t1", "s0", "s1", "s2", "s3"})
        out << std::setw(5) << h;
    out << "  E3-degeneration\n";

    for (const ResultRow& r : rows) {
        out << std::left << std::setw(int(name_width + 2)) << r.space
            << std::setw(int(twist_width + 2)) << r.table.twist << std::right;
        out << std::setw(5) << r.table.t0 << std::setw(5) << r.table.t1;
        for (std::size_t j = 0; j < 4; ++j)
            out << std::setw(5) << r.table.s[j];
        out << "  " << (r.table.degeneration_assumed ? "assumed" : "automatic") << "\n";
    }

    for (const ResultRow& r : rows) {
        out << "\n" << r.space << "; twist " << r.table.twist;
        if (!r.table.degeneration_note.empty())
            out << "  [" << r.table.degeneration_note << "]";
        out << "\n";
        std::vector<LabeledGroup> ko = render(r.table, GroupConvention::KO);
        std::vector<LabeledGroup> gw = render(r.table, GroupConvention::GW_W);
        /* GW^q = KO^{2q}, W^q = KO^{2q-1}: interleave so each line reads
         * KO^i = GW/W = group */
        const std::size_t gw_of_ko[8] = {0, 5, 1, 6, 2, 7, 3, 4};
        for (std::size_t i = 0; i < 8; ++i) {
            const LabeledGroup& hermitian = gw[gw_of_ko[i]];
            out << "  " << std::left << std::setw(5) << ko[i].label << "= "
                << std::setw(5) << hermitian.label << "= " << ko[i].group << "\n";
        }
    }
    return out.str();
}

std::string emit_csv(const std::vector<ResultRow>& rows)
{
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const ResultRow& r : rows) {
        out << r.space << "," << r.table.twist << "," << r.table.t0 << "," << r.table.t1;
        for (std::size_t j = 0; j < 4; ++j)
            out << "," << r.table.s[j];
        out << "," << (r.table.degeneration_assumed ? "true" : "false") << "\n";
    }
    return out.str();
}

nlohmann::json row_json(const ResultRow& r)
{
    nlohmann::json groups;
    for (const LabeledGroup& g : render(r.table, GroupConvention::KO))
        groups["KO" + g.label.substr(3)] = g.group;
    for (const LabeledGroup& g : render(r.table, GroupConvention::GW_W)) {
        std::string key = (g.label[0] == 'G' ? "GW" : "W") + g.label.substr(g.label.find('^') + 1);
        groups[key] = g.group;
    }
    return nlohmann::json{{"space", r.space},
                          {"twist", r.table.twist},
                          {"t0", r.table.t0},
                          {"t1", r.table.t1},
                          {"s", r.table.s},
                          {"groups", groups},
                          {"degeneration_assumed", r.table.degeneration_assumed},
                          {"citation", r.table.degeneration_note}};
}

std::string emit_json(const std::vector<ResultRow>& rows)
{
    if (rows.size() == 1)
        return row_json(rows[0]).dump(2) + "\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& r : rows)
        arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
}

} // namespace

std::string emit(const std::vector<ResultRow>& rows, OutputFormat format)
{
    switch (format) {
    case OutputFormat::text:
        return emit_text(rows);
    case OutputFormat::csv:
        return emit_csv(rows);
    case OutputFormat::json:
        return emit_json(rows);
    }
    return "";
}

} // namespace kocalc
