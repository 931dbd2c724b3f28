#include "knotmarket/table_gen.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "knotmarket/invariants.hpp"
#include "knotmarket/link.hpp"

namespace knotmarket {

namespace {

// Ascending coefficients one full power of t apart, exponent range centered
// on zero — the shape of every canonical Alexander polynomial below.
LaurentPoly centered(const std::vector<long>& coeffs) {
    int offset = -2 * static_cast<int>(coeffs.size() - 1);
    LaurentPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        p += LaurentPoly::term(coeffs[i], offset + 4 * static_cast<int>(i));
    return p;
}

BraidWord word(int strands, std::vector<int> letters) {
    return BraidWord{strands, std::move(letters)};
}

}  // namespace

const std::vector<ClassicalRow>& classical_rows() {
    static const std::vector<ClassicalRow> rows = [] {
        std::vector<ClassicalRow> r;
        auto knot = [&r](const char* name, int crossings, bool alternating,
                         const std::vector<long>& alex,
                         std::vector<BraidWord> candidates, const char* note = "") {
            r.push_back(ClassicalRow{name, 1, crossings, alternating, centered(alex),
                                     std::move(candidates), note});
        };
        auto link = [&r](const char* name, int components, int crossings,
                         bool alternating, LaurentPoly alex,
                         std::vector<BraidWord> candidates, const char* note = "") {
            r.push_back(ClassicalRow{name, components, crossings, alternating,
                                     std::move(alex), std::move(candidates), note});
        };

        knot("0_1", 0, false, {1}, {word(1, {})});
        knot("3_1", 3, true, {1, -1, 1}, {word(2, {1, 1, 1})});
        knot("4_1", 4, true, {1, -3, 1}, {word(3, {1, -2, 1, -2})}, "amphichiral");
        knot("5_1", 5, true, {1, -1, 1, -1, 1}, {word(2, {1, 1, 1, 1, 1})});
        knot("5_2", 5, true, {2, -3, 2}, {word(3, {1, 1, 1, 2, -1, 2})});
        knot("6_1", 6, true, {2, -5, 2}, {word(4, {1, 1, 2, -1, -3, 2, -3})});
        knot("6_2", 6, true, {1, -3, 3, -3, 1}, {word(3, {1, 1, 1, -2, 1, -2})});
        knot("6_3", 6, true, {1, -3, 5, -3, 1}, {word(3, {1, 1, -2, 1, -2, -2})},
             "amphichiral");
        knot("7_1", 7, true, {1, -1, 1, -1, 1, -1, 1},
             {word(2, {1, 1, 1, 1, 1, 1, 1})});
        knot("7_2", 7, true, {3, -5, 3}, {word(4, {1, 1, 1, 2, -1, 2, 3, -2, 3})});
        knot("7_3", 7, true, {2, -3, 3, -3, 2}, {word(3, {1, 1, 1, 1, 1, 2, -1, 2})});
        knot("7_4", 7, true, {4, -7, 4}, {word(4, {1, 1, 2, -1, 2, 2, 3, -2, 3})});
        knot("7_5", 7, true, {2, -4, 5, -4, 2}, {word(3, {1, 1, 1, 1, 2, -1, 2, 2})});
        knot("7_6", 7, true, {1, -5, 7, -5, 1},
             {word(4, {1, 1, -2, 1, 3, -2, 3}), word(4, {1, 1, -2, 1, -2, 3, -2, 3})});
        knot("7_7", 7, true, {1, -5, 9, -5, 1}, {word(4, {1, -2, 1, -2, 3, -2, 3})});
        knot("8_1", 8, true, {3, -7, 3},
             {word(5, {-3, 1, 4, 2, -1, -1, -3, -2, -2, 4, -1, 2})});
        knot("8_2", 8, true, {1, -3, 3, -3, 3, -3, 1},
             {word(3, {1, 1, 1, 1, 1, -2, 1, -2})});
        knot("8_3", 8, true, {4, -9, 4},
             {word(5, {-1, -2, 1, -4, 3, 4, -2, 4, -1, 3})}, "amphichiral");
        knot("8_4", 8, true, {2, -5, 5, -5, 2},
             {word(4, {2, 3, 3, -2, -1, 2, 3, -1, -2, -3, 2})});
        knot("8_5", 8, true, {1, -3, 4, -5, 4, -3, 1},
             {word(3, {1, 1, 1, -2, 1, 1, 1, -2})});
        knot("8_6", 8, true, {2, -6, 7, -6, 2},
             {word(4, {1, 1, 1, 1, 2, -1, -3, 2, -3})});
        knot("8_7", 8, true, {1, -3, 5, -5, 5, -3, 1},
             {word(3, {1, 1, 1, 1, -2, 1, -2, -2})});
        knot("8_8", 8, true, {2, -6, 9, -6, 2},
             {word(4, {2, 2, -3, 1, -3, 1, 2, -3, -1})});
        knot("8_9", 8, true, {1, -3, 5, -7, 5, -3, 1},
             {word(3, {1, 1, 1, -2, 1, -2, -2, -2})}, "amphichiral");
        knot("8_10", 8, true, {1, -3, 6, -7, 6, -3, 1},
             {word(3, {1, 1, 1, -2, 1, 1, -2, -2})});
        knot("8_11", 8, true, {2, -7, 9, -7, 2},
             {word(4, {1, 1, 2, -1, 2, 2, -3, 2, -3})});
        knot("8_12", 8, true, {1, -7, 13, -7, 1},
             {word(5, {-4, -2, 3, 1, -4, -2, 3, 1})}, "amphichiral");
        knot("8_13", 8, true, {2, -7, 11, -7, 2},
             {word(4, {2, -1, 2, 3, -1, -1, -2, 3, 2})});
        knot("8_14", 8, true, {2, -8, 11, -8, 2},
             {word(4, {1, 1, 1, 2, -1, 2, -3, 2, -3})});
        knot("8_15", 8, true, {3, -8, 11, -8, 3},
             {word(4, {-1, -1, -2, -2, -3, -1, 2, -3, -3})});
        knot("8_16", 8, true, {1, -4, 8, -9, 8, -4, 1},
             {word(3, {1, 1, -2, 1, 1, -2, 1, -2})});
        knot("8_17", 8, true, {1, -4, 8, -11, 8, -4, 1},
             {word(3, {1, 1, -2, 1, -2, 1, -2, -2})}, "amphichiral");
        knot("8_18", 8, true, {1, -5, 10, -13, 10, -5, 1},
             {word(3, {1, -2, 1, -2, 1, -2, 1, -2})}, "amphichiral");
        knot("8_19", 8, false, {1, -1, 0, 1, 0, -1, 1},
             {word(3, {1, 2, 1, 2, 1, 2, 1, 2})});
        knot("8_20", 8, false, {1, -2, 3, -2, 1},
             {word(3, {1, 1, 1, -2, -1, -1, -1, -2})});
        knot("8_21", 8, false, {1, -4, 5, -4, 1},
             {word(3, {1, 1, 1, 2, -1, -1, 2, 2}),
              word(3, {1, 1, 1, -2, -1, -1, -2, -2})});

        link("L2a1 / positive Hopf link", 2, 2, true, centered({-1, 1}),
             {word(2, {1, 1})});
        link("L4a1", 2, 4, true, centered({-1, 1, -1, 1}), {word(2, {1, 1, 1, 1})});
        link("unlink-2", 2, 0, false, LaurentPoly{}, {word(2, {})});
        link("unlink-3", 3, 0, false, LaurentPoly{}, {word(3, {})});
        link("unlink-4", 4, 0, false, LaurentPoly{}, {word(4, {})});
        return r;
    }();
    return rows;
}

GenerationResult generate_knot_table() {
    const auto& rows = classical_rows();

    // The lookup key is (components, alexander); a collision between rows
    // would make the classical data itself ambiguous.
    std::set<std::pair<int, std::vector<std::pair<int, mpz_class>>>> keys;
    for (const auto& row : rows)
        if (!keys.insert({row.components, row.alexander.term_list()}).second)
            throw std::logic_error("table data: duplicate (components, alexander) for " +
                                   row.name);

    GenerationResult result;
    std::vector<KnotTableEntry> entries;
    for (const auto& row : rows) {
        std::optional<LaurentPoly> verified_jones;
        for (const auto& candidate : row.candidates) {
            validate(candidate);
            LinkDiagram diagram = close_braid(cyclic_reduce(candidate));
            if (diagram.component_count != row.components) continue;
            LaurentPoly alex, v;
            try {
                alex = alexander(diagram);
                v = jones(diagram);
            } catch (const RefusalError&) {
                continue;
            }
            if (alex != row.alexander) continue;
            if (row.alternating) {
                int span = v.is_zero() ? 0 : v.max_exponent() - v.min_exponent();
                if (span != 4 * row.crossing_number) continue;
            }
            verified_jones = v;
            break;
        }
        if (!verified_jones) {
            result.dropped.push_back(row.name);
            continue;
        }
        KnotTableEntry entry;
        entry.name = row.name;
        entry.components = row.components;
        entry.crossing_number = row.crossing_number;
        entry.alexander = row.alexander;
        entry.has_jones = true;
        entry.jones = *verified_jones;
        entry.note = row.note;
        entries.push_back(std::move(entry));
    }

    result.text = serialize_table(
        entries,
        {"knotmarket knot table v1",
         "name|components|crossings|alexander|jones|note",
         "polynomials: q<lowest quarter-exponent>:<coefficients ascending, one "
         "full power of t apart>; 0 = zero polynomial",
         "alexander is canonical (unit-normal); jones is for the handedness of "
         "the braid representative that generated the row",
         "generated by gen_knot_table from verified braid representatives; do "
         "not edit by hand"});
    return result;
}

}  // namespace knotmarket
