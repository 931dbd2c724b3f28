#pragma once

#include <stdexcept>

#include "knotmarket/laurent.hpp"
#include "knotmarket/link.hpp"

namespace knotmarket {

// Thrown when a computation declines to run (budget exceeded) rather than
// return a wrong or truncated answer. Distinct from std::invalid_argument
// so callers can map refusals to their own exit path.
class RefusalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxCrossings = 24;
inline constexpr long kDefaultMaxExpansions = 1L << 20;

// Exact state sum over all 2^c smoothings of the closed braid,
// sum_s A^(a(s)-b(s)) * (-A^2 - A^-2)^(loops(s)-1), expressed in t via
// A = t^(-1/4) (so the A-exponent e lands on quarter power -e). Refuses
// diagrams with more than max_crossings crossings.
LaurentPoly kauffman_bracket(const LinkDiagram& diagram,
                             int max_crossings = kDefaultMaxCrossings);

// V = (-A)^(-3w) * <diagram> with w the writhe of the source word. The
// result always collapses onto integer and half-integer powers of t;
// surviving quarter powers would mean a convention bug and throw.
LaurentPoly jones(const LinkDiagram& diagram, int max_crossings = kDefaultMaxCrossings);

// Conway polynomial in z by skein recursion. Termination: walk the
// components (base point = smallest strand per permutation cycle, smallest
// base first; each strand top to bottom, continuing at the position where
// the previous strand ended); the first crossing met on its under-strand
// first is switched and smoothed per the skein relation of its sign. A
// diagram with no such crossing is a descending unlink: 1 for one
// component, 0 for several. Refuses after max_expansions subdiagrams.
LaurentPoly conway(const LinkDiagram& diagram, long max_expansions = kDefaultMaxExpansions);

// The Jones polynomial again, but by skein recursion alone — same traversal
// and termination as conway, with V(L+) = t^2 V(switched) +
// (t^(3/2) - t^(1/2)) V(smoothed), V(L-) = t^-2 V(switched) +
// (t^(-3/2) - t^(-1/2)) V(smoothed), and a descending unlink of c
// components valued (-t^(1/2) - t^(-1/2))^(c-1). An independent route to
// the same value as jones(); it shares none of the state-sum code.
LaurentPoly jones_by_skein(const LinkDiagram& diagram,
                           long max_expansions = kDefaultMaxExpansions);

// Normalized Alexander polynomial: conway(diagram) with z = t^(1/2) - t^(-1/2),
// brought to the canonical unit representative. Split links give 0.
LaurentPoly alexander(const LinkDiagram& diagram,
                      long max_expansions = kDefaultMaxExpansions);

// The three diagrams of the skein relation at one crossing of a braid
// closure: plus/minus force the letter's sign, zero deletes the letter.
struct SkeinTriple {
    LinkDiagram plus;
    LinkDiagram minus;
    LinkDiagram zero;
};

// crossing_index is 0-based into the source word (= diagram crossing order).
SkeinTriple skein_decompose(const LinkDiagram& diagram, int crossing_index);

}  // namespace knotmarket
