#include "rosette/presets.hpp"

#include <algorithm>

#include "rosette/error.hpp"

namespace rosette {

namespace {

struct Row {
    const char* name;
    Mode mode;
    int n;
    double alpha;
    std::vector<double> printed_radii;
    double spr;
    int printed_s;
    std::optional<int> special;
    const char* provenance;
};

Preset make_preset(const Row& row) {
    Preset p;
    p.name = row.name;
    p.provenance = row.provenance;
    p.printed_radii = row.printed_radii;
    p.printed_s = row.printed_s;

    // First-S-radii rule; if fewer radii were printed than S, S shrinks.
    const int s = std::min<int>(row.printed_s, static_cast<int>(row.printed_radii.size()));
    if (static_cast<int>(row.printed_radii.size()) > row.printed_s) {
        p.notes = "printed " + std::to_string(row.printed_radii.size()) + " radii with S=" +
                  std::to_string(row.printed_s) + "; using the first " + std::to_string(s);
    } else if (s < row.printed_s) {
        p.notes = "printed S=" + std::to_string(row.printed_s) + " with only " +
                  std::to_string(row.printed_radii.size()) + " radii; using S=" + std::to_string(s);
    }

    ConfigDoc& c = p.config;
    c.mode = row.mode;
    c.pattern.n = row.n;
    c.pattern.s = s;
    c.pattern.radii.assign(row.printed_radii.begin(), row.printed_radii.begin() + s);
    c.pattern.alpha = row.alpha;
    c.pattern.spr = row.spr;
    c.pattern.special = row.special;
    if (row.mode == Mode::tiling) {
        TilingFields t;
        t.gap_n = row.n;
        c.tiling = t;
    }
    return p;
}

std::vector<Preset> build_library() {
    // Columns: N, alpha, r1..r4 as printed, spr, S, special circle.
    const std::vector<Row> rows{
        {"table1-part1", Mode::star, 8, 0, {51, 70, 172}, 0, 3, std::nullopt,
         "Table 1, part 1 (stars of Figure 7)"},
        {"table1-part2", Mode::star, 9, 48, {93, 225, 180}, -68, 2, 2,
         "Table 1, part 2 (stars of Figure 7); r4=180 printed, r3 blank"},
        {"table2-left", Mode::star, 9, 34, {191, 189, 226}, 89, 3, 3, "Table 2, left result (Figure 11)"},
        {"table2-right", Mode::star, 10, 62, {172, 109, 133, 125}, -100, 4, 2,
         "Table 2, right result (Figure 11)"},
        {"table3-1", Mode::tiling, 12, 53, {171, 23, 214}, -50, 2, 2, "Table 3, result 1 (Figure 12)"},
        {"table3-2", Mode::tiling, 6, 10, {143, 145, 179}, -70, 4, 2, "Table 3, result 2 (Figure 13)"},
        {"table3-3", Mode::tiling, 12, 23, {123, 85, 178}, -7, 3, 2, "Table 3, result 3 (Figure 14)"},
    };
    std::vector<Preset> out;
    out.reserve(rows.size());
    for (const Row& r : rows) out.push_back(make_preset(r));
    return out;
}

}  // namespace

const std::vector<Preset>& list_presets() {
    static const std::vector<Preset> library = build_library();
    return library;
}

const Preset& find_preset(std::string_view name) {
    for (const Preset& p : list_presets())
        if (p.name == name) return p;
    throw InvalidParameter("preset", "unknown preset '" + std::string(name) + "'");
}

}  // namespace rosette
