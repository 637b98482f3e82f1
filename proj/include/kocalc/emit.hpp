#pragma once

#include <kocalc/ko_table.hpp>

#include <string>
#include <vector>

namespace kocalc {

enum class OutputFormat { text, csv, json };

struct ResultRow {
    std::string space;
    KOTable table;
};

extern const char* const kCsvHeader;  /* space,twist,t0,t1,s0,s1,s2,s3,degeneration_assumed */

/* Text mirrors the tabular layout (t0, t1, s0..s3 columns per twist row) and
 * appends the eight KO-groups with their GW/W names.  CSV is one row per
 * (space, twist).  JSON is an object per row (an array when there are
 * several), carrying t0, t1, s, the rendered groups, the twist, and the
 * degeneration provenance. */
std::string emit(const std::vector<ResultRow>& rows, OutputFormat format);

} // namespace kocalc
