#include "knotmarket/link.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "knotmarket/union_find.hpp"

namespace knotmarket {

LinkDiagram close_braid(const BraidWord& word) {
    validate(word);
    const int n = word.strands;
    LinkDiagram diagram;
    diagram.source_word = word;

    // Provisional arc ids: 0..n-1 enter at the top, each crossing spawns
    // two fresh ids for its outgoing segments.
    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 0);
    int next_arc = n;
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(word.letters.size());
    for (int k : word.letters) {
        int i = std::abs(k) - 1;
        int x = current[i], y = current[i + 1];
        int u = next_arc++, v = next_arc++;
        // Left incoming continues bottom-right, right incoming bottom-left.
        if (k > 0)
            tuples.push_back({y, x, u, v});
        else
            tuples.push_back({x, u, v, y});
        current[i] = u;
        current[i + 1] = v;
    }

    // Closure merges each bottom segment with the top segment at the same
    // position into a single arc.
    UnionFind arcs(next_arc);
    for (int p = 0; p < n; ++p) arcs.unite(current[p], p);

    UnionFind components = arcs;
    for (const auto& t : tuples) {
        components.unite(t[0], t[2]);
        components.unite(t[1], t[3]);
    }
    diagram.component_count = components.classes();

    std::map<int, int> label;
    for (const auto& t : tuples)
        for (int provisional : t)
            label.emplace(arcs.find(provisional), static_cast<int>(label.size()) + 1);
    diagram.arc_count = arcs.classes();
    diagram.free_loops = diagram.arc_count - static_cast<int>(label.size());

    for (std::size_t c = 0; c < tuples.size(); ++c) {
        Crossing crossing;
        crossing.sign = word.letters[c] > 0 ? 1 : -1;
        for (int slot = 0; slot < 4; ++slot)
            crossing.arcs[slot] = label.at(arcs.find(tuples[c][slot]));
        diagram.crossings.push_back(crossing);
    }
    return diagram;
}

int trace_components(const LinkDiagram& diagram) {
    UnionFind uf(diagram.arc_count + 1);
    std::vector<bool> in_crossing(diagram.arc_count + 1, false);
    for (const auto& c : diagram.crossings) {
        uf.unite(c.arcs[0], c.arcs[2]);
        uf.unite(c.arcs[1], c.arcs[3]);
        for (int a : c.arcs) in_crossing[a] = true;
    }
    std::vector<bool> seen(diagram.arc_count + 1, false);
    int loops = 0;
    for (int a = 1; a <= diagram.arc_count; ++a) {
        if (!in_crossing[a]) continue;
        int root = uf.find(a);
        if (!seen[root]) {
            seen[root] = true;
            ++loops;
        }
    }
    return loops + diagram.free_loops;
}

std::string pd_code(const LinkDiagram& diagram) {
    std::ostringstream out;
    for (std::size_t c = 0; c < diagram.crossings.size(); ++c) {
        if (c) out << ' ';
        const auto& arcs = diagram.crossings[c].arcs;
        out << "X[" << arcs[0] << ',' << arcs[1] << ',' << arcs[2] << ',' << arcs[3] << ']';
    }
    return out.str();
}

}  // namespace knotmarket
