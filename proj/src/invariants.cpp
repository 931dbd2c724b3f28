#include "knotmarket/invariants.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace knotmarket {

namespace {

void require_source_word(const LinkDiagram& diagram) {
    if (diagram.crossings.size() != diagram.source_word.letters.size())
        throw std::invalid_argument("diagram does not carry its source braid word");
}

LaurentPoly loop_factor() {
    return LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);  // -A^2 - A^-2
}

// One (letter, side) visit along the closure traversal; a crossing whose
// first visit is on the under side breaks the descending pattern.
struct Visit {
    int letter;
    bool over;
};

std::vector<Visit> closure_traversal(const BraidWord& word) {
    const int n = word.strands;
    std::vector<std::vector<Visit>> strand_route(n);
    std::vector<int> at_position(n);
    std::iota(at_position.begin(), at_position.end(), 0);
    for (std::size_t j = 0; j < word.letters.size(); ++j) {
        int k = word.letters[j];
        int i = std::abs(k) - 1;
        int left = at_position[i], right = at_position[i + 1];
        strand_route[left].push_back({static_cast<int>(j), k > 0});
        strand_route[right].push_back({static_cast<int>(j), k < 0});
        std::swap(at_position[i], at_position[i + 1]);
    }
    auto perm = underlying_permutation(word);
    std::vector<Visit> order;
    std::vector<bool> strand_done(n, false);
    for (int base = 0; base < n; ++base) {
        for (int s = base; !strand_done[s]; s = perm[s]) {
            strand_done[s] = true;
            order.insert(order.end(), strand_route[s].begin(), strand_route[s].end());
        }
    }
    return order;
}

// Index of the first crossing first met on its under side, or -1 for a
// descending diagram.
int first_bad_crossing(const BraidWord& word) {
    std::vector<bool> visited(word.letters.size(), false);
    for (const Visit& v : closure_traversal(word)) {
        if (visited[v.letter]) continue;
        visited[v.letter] = true;
        if (!v.over) return v.letter;
    }
    return -1;
}

// Resolves the first bad crossing until only descending unlinks remain.
// The recursion itself is invariant-agnostic: an instance carries the
// switch/smooth factors of one skein relation plus the loop value whose
// (components - 1)-th power is the descending-unlink base case. The zero
// loop value reproduces the Conway base (1 for a knot, 0 otherwise).
struct SkeinEngine {
    long budget = 0;
    LaurentPoly plus_switch, plus_smooth;    // L+ = ps * switched + pm * smoothed
    LaurentPoly minus_switch, minus_smooth;  // L- = ms * switched + mm * smoothed
    LaurentPoly unlink_delta;
    long expansions = 0;
    std::map<std::pair<int, std::vector<int>>, LaurentPoly> memo;

    LaurentPoly run(const BraidWord& word) {
        auto key = std::make_pair(word.strands, word.letters);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++expansions > budget)
            throw RefusalError("skein recursion exceeded its budget of " +
                               std::to_string(budget) + " expansions");
        LaurentPoly result;
        int bad = first_bad_crossing(word);
        if (bad < 0) {
            int components = cycle_count(underlying_permutation(word));
            result = LaurentPoly::constant(1);
            for (int i = 1; i < components; ++i) result = result * unlink_delta;
        } else {
            BraidWord switched = word;
            switched.letters[bad] = -switched.letters[bad];
            BraidWord smoothed = word;
            smoothed.letters.erase(smoothed.letters.begin() + bad);
            if (word.letters[bad] > 0)
                result = plus_switch * run(switched) + plus_smooth * run(smoothed);
            else
                result = minus_switch * run(switched) + minus_smooth * run(smoothed);
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& diagram, int max_crossings) {
    require_source_word(diagram);
    const BraidWord& word = diagram.source_word;
    const int c = static_cast<int>(word.letters.size());
    const int n = word.strands;
    const int effective_max = std::min(max_crossings, 62);
    if (c > effective_max)
        throw RefusalError("state sum over " + std::to_string(c) +
                           " crossings exceeds the budget of " +
                           std::to_string(effective_max) +
                           " (set a higher limit to proceed)");

    // Per state only a bucket counter moves; exact polynomial assembly
    // happens once per (a-b, loops) class at the end.
    const int loop_stride = n + c + 1;
    std::vector<std::uint64_t> buckets(static_cast<std::size_t>(2 * c + 1) * loop_stride, 0);
    std::vector<int> parent(n + c);
    std::vector<int> current(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        std::iota(current.begin(), current.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            return a;
        };
        int fresh = n;
        int merges = 0;
        for (int j = 0; j < c; ++j) {
            int k = word.letters[j];
            bool b_smoothing = (mask >> j) & 1;
            if (b_smoothing == (k > 0)) {  // cap-cup; the other smoothing is identity
                int i = std::abs(k) - 1;
                int a = find(current[i]), b = find(current[i + 1]);
                if (a != b) {
                    parent[a] = b;
                    ++merges;
                }
                current[i] = current[i + 1] = fresh++;
            }
        }
        for (int p = 0; p < n; ++p) {
            int a = find(current[p]), b = find(p);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        int loops = fresh - merges;
        int ab = c - 2 * std::popcount(mask);
        ++buckets[static_cast<std::size_t>(ab + c) * loop_stride + loops];
    }

    std::vector<LaurentPoly> delta_powers{LaurentPoly::constant(1)};
    LaurentPoly delta = loop_factor();
    LaurentPoly sum;
    for (int ab = -c; ab <= c; ++ab) {
        for (int loops = 1; loops < loop_stride; ++loops) {
            std::uint64_t count =
                buckets[static_cast<std::size_t>(ab + c) * loop_stride + loops];
            if (count == 0) continue;
            while (static_cast<int>(delta_powers.size()) < loops)
                delta_powers.push_back(delta_powers.back() * delta);
            // A^ab = t^(-ab/4)
            sum += LaurentPoly::term(mpz_class(static_cast<unsigned long>(count)), -ab) *
                   delta_powers[loops - 1];
        }
    }
    return sum;
}

LaurentPoly jones(const LinkDiagram& diagram, int max_crossings) {
    LaurentPoly bracket = kauffman_bracket(diagram, max_crossings);
    int w = writhe(diagram.source_word);
    // (-A)^(-3w) = (-1)^w A^(-3w), and A^(-3w) shifts quarter powers by +3w.
    LaurentPoly v = bracket.shifted(3 * w);
    if (w % 2 != 0) v = -v;
    if (!v.exponents_multiple_of(2))
        throw std::logic_error("quarter powers of t survived Jones normalization");
    return v;
}

LaurentPoly conway(const LinkDiagram& diagram, long max_expansions) {
    require_source_word(diagram);
    validate(diagram.source_word);
    SkeinEngine engine;
    engine.budget = max_expansions;
    engine.plus_switch = LaurentPoly::constant(1);
    engine.plus_smooth = LaurentPoly::term(1, 4);  // +z
    engine.minus_switch = LaurentPoly::constant(1);
    engine.minus_smooth = LaurentPoly::term(-1, 4);  // -z
    return engine.run(diagram.source_word);
}

LaurentPoly jones_by_skein(const LinkDiagram& diagram, long max_expansions) {
    require_source_word(diagram);
    validate(diagram.source_word);
    SkeinEngine engine;
    engine.budget = max_expansions;
    engine.plus_switch = LaurentPoly::term(1, 8);  // t^2
    engine.plus_smooth = LaurentPoly::term(1, 6) + LaurentPoly::term(-1, 2);
    engine.minus_switch = LaurentPoly::term(1, -8);  // t^-2
    engine.minus_smooth = LaurentPoly::term(1, -6) + LaurentPoly::term(-1, -2);
    engine.unlink_delta = LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
    return engine.run(diagram.source_word);
}

LaurentPoly alexander(const LinkDiagram& diagram, long max_expansions) {
    LaurentPoly nabla = conway(diagram, max_expansions);
    if (nabla.is_zero()) return nabla;
    return alexander_normalize(conway_to_alexander(nabla));
}

SkeinTriple skein_decompose(const LinkDiagram& diagram, int crossing_index) {
    require_source_word(diagram);
    const BraidWord& word = diagram.source_word;
    if (crossing_index < 0 ||
        crossing_index >= static_cast<int>(word.letters.size()))
        throw std::invalid_argument("crossing index " + std::to_string(crossing_index) +
                                    " out of range");
    BraidWord plus = word, minus = word, zero = word;
    plus.letters[crossing_index] = std::abs(word.letters[crossing_index]);
    minus.letters[crossing_index] = -std::abs(word.letters[crossing_index]);
    zero.letters.erase(zero.letters.begin() + crossing_index);
    return {close_braid(plus), close_braid(minus), close_braid(zero)};
}

}  // namespace knotmarket
