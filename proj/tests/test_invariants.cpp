#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotmarket/invariants.hpp"

using namespace knotmarket;

namespace {

BraidWord w(int strands, std::vector<int> letters) { return {strands, std::move(letters)}; }

LinkDiagram close(int strands, std::vector<int> letters) {
    return close_braid(w(strands, std::move(letters)));
}

LaurentPoly tp(long coeff, int quarter_exp) {
    return LaurentPoly::term(coeff, quarter_exp);
}

BraidWord random_word(std::mt19937& rng, int max_strands, int max_len, int min_len = 0) {
    BraidWord word;
    word.strands = 2 + static_cast<int>(rng() % (max_strands - 1));
    int len = min_len + static_cast<int>(rng() % (max_len - min_len + 1));
    for (int i = 0; i < len; ++i) {
        int index = 1 + static_cast<int>(rng() % (word.strands - 1));
        word.letters.push_back(rng() % 2 ? index : -index);
    }
    return word;
}

const LaurentPoly z_poly = tp(1, 4);
const LaurentPoly half_diff = tp(1, 2) + tp(-1, -2);  // t^(1/2) - t^(-1/2)

}  // namespace

TEST_CASE("bracket of crossingless closures is a power of the loop factor") {
    CHECK(kauffman_bracket(close(1, {})) == LaurentPoly::constant(1));
    CHECK(kauffman_bracket(close(2, {})) == tp(-1, 2) + tp(-1, -2));
    CHECK(kauffman_bracket(close(3, {})) == tp(1, 4) + tp(2, 0) + tp(1, -4));
}

TEST_CASE("bracket of one positive kink is a single term") {
    CHECK(kauffman_bracket(close(2, {1})) == tp(-1, -3));
    CHECK(kauffman_bracket(close(2, {-1})) == tp(-1, 3));
}

TEST_CASE("bracket of the two-crossing closure") {
    CHECK(kauffman_bracket(close(2, {1, 1})) == tp(-1, 4) + tp(-1, -4));
}

TEST_CASE("bracket refuses oversized state sums instead of truncating") {
    CHECK_THROWS_AS(kauffman_bracket(close(2, {1, 1, 1, 1}), 3), RefusalError);
    std::vector<int> long_word(25, 1);
    CHECK_THROWS_AS(kauffman_bracket(close(2, long_word)), RefusalError);
    CHECK_NOTHROW(kauffman_bracket(close(2, {1, 1, 1, 1}), 4));
}

TEST_CASE("jones of unknot closures is 1") {
    CHECK(jones(close(1, {})) == LaurentPoly::constant(1));
    CHECK(jones(close(2, {1})) == LaurentPoly::constant(1));
    CHECK(jones(close(2, {-1})) == LaurentPoly::constant(1));
}

TEST_CASE("jones of unlinks") {
    CHECK(jones(close(2, {})).to_string() == "-t^(1/2) - t^(-1/2)");
    CHECK(jones(close(3, {})).to_string() == "t + 2 + t^-1");
}

TEST_CASE("jones of the positive and negative Hopf links") {
    CHECK(jones(close(2, {1, 1})).to_string() == "-t^(5/2) - t^(1/2)");
    CHECK(jones(close(2, {-1, -1})).to_string() == "-t^(-1/2) - t^(-5/2)");
}

TEST_CASE("jones of both trefoils") {
    CHECK(jones(close(2, {1, 1, 1})).to_string() == "-t^4 + t^3 + t");
    CHECK(jones(close(2, {-1, -1, -1})).to_string() == "t^-1 + t^-3 - t^-4");
}

TEST_CASE("jones of the figure-eight knot is mirror symmetric") {
    LaurentPoly v = jones(close(3, {1, -2, 1, -2}));
    CHECK(v.to_string() == "t^2 - t + 1 - t^-1 + t^-2");
    CHECK(v.mirrored() == v);
}

TEST_CASE("jones of the four-crossing torus link") {
    CHECK(jones(close(2, {1, 1, 1, 1})).to_string() ==
          "-t^(11/2) + t^(9/2) - t^(7/2) - t^(3/2)");
}

TEST_CASE("conway of unknots and unlinks") {
    CHECK(conway(close(1, {})) == LaurentPoly::constant(1));
    CHECK(conway(close(2, {1})) == LaurentPoly::constant(1));
    CHECK(conway(close(2, {})).is_zero());
    CHECK(conway(close(3, {})).is_zero());
    CHECK(conway(close(3, {1})).is_zero());
}

TEST_CASE("conway of small torus closures") {
    CHECK(conway(close(2, {1, 1})).to_string("z") == "z");
    CHECK(conway(close(2, {-1, -1})).to_string("z") == "-z");
    CHECK(conway(close(2, {1, 1, 1})).to_string("z") == "z^2 + 1");
    CHECK(conway(close(2, {-1, -1, -1})).to_string("z") == "z^2 + 1");
    CHECK(conway(close(2, {1, 1, 1, 1})).to_string("z") == "z^3 + 2*z");
    CHECK(conway(close(2, {1, 1, 1, 1, 1})).to_string("z") == "z^4 + 3*z^2 + 1");
}

TEST_CASE("conway of the figure-eight knot") {
    CHECK(conway(close(3, {1, -2, 1, -2})).to_string("z") == "-z^2 + 1");
}

TEST_CASE("alexander of the small zoo") {
    CHECK(alexander(close(1, {})).to_string() == "1");
    CHECK(alexander(close(2, {})).to_string() == "0");
    CHECK(alexander(close(3, {})).to_string() == "0");
    CHECK(alexander(close(2, {1, 1})).to_string() == "t^(1/2) - t^(-1/2)");
    CHECK(alexander(close(2, {-1, -1})).to_string() == "t^(1/2) - t^(-1/2)");
    CHECK(alexander(close(2, {1, 1, 1})).to_string() == "t - 1 + t^-1");
    CHECK(alexander(close(3, {1, -2, 1, -2})).to_string() == "t - 3 + t^-1");
    CHECK(alexander(close(2, {1, 1, 1, 1})).to_string() ==
          "t^(3/2) - t^(1/2) + t^(-1/2) - t^(-3/2)");
}

TEST_CASE("skein decomposition at a crossing of the trefoil word") {
    LinkDiagram trefoil = close(2, {1, 1, 1});
    SkeinTriple triple = skein_decompose(trefoil, 2);
    CHECK(triple.plus.source_word == w(2, {1, 1, 1}));
    CHECK(triple.minus.source_word == w(2, {1, 1, -1}));
    CHECK(triple.zero.source_word == w(2, {1, 1}));
    CHECK(triple.zero.crossings.size() == trefoil.crossings.size() - 1);
    CHECK(jones(triple.minus) == LaurentPoly::constant(1));

    SkeinTriple single = skein_decompose(close(2, {1}), 0);
    CHECK(single.minus.source_word == w(2, {-1}));
    CHECK(single.zero.source_word == w(2, {}));
    CHECK_THROWS_AS(skein_decompose(trefoil, 3), std::invalid_argument);
    CHECK_THROWS_AS(skein_decompose(trefoil, -1), std::invalid_argument);
}

TEST_CASE("jones satisfies its skein relation at every crossing of random words") {
    std::mt19937 rng(121);
    for (int iter = 0; iter < 200; ++iter) {
        BraidWord word = random_word(rng, 4, 6, 1);
        LinkDiagram d = close_braid(word);
        for (int i = 0; i < static_cast<int>(word.letters.size()); ++i) {
            SkeinTriple triple = skein_decompose(d, i);
            LaurentPoly vp = jones(triple.plus);
            LaurentPoly vm = jones(triple.minus);
            LaurentPoly v0 = jones(triple.zero);
            CHECK(vp.shifted(-4) - vm.shifted(4) == half_diff * v0);
        }
    }
}

TEST_CASE("conway satisfies its skein relation at every crossing of random words") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        BraidWord word = random_word(rng, 4, 6, 1);
        LinkDiagram d = close_braid(word);
        for (int i = 0; i < static_cast<int>(word.letters.size()); ++i) {
            SkeinTriple triple = skein_decompose(d, i);
            CHECK(conway(triple.plus) ==
                  conway(triple.minus) + z_poly * conway(triple.zero));
        }
    }
}

TEST_CASE("conjugating the word never changes jones or conway") {
    std::mt19937 rng(142);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord word = random_word(rng, 4, 8, 1);
        LaurentPoly v = jones(close_braid(word));
        LaurentPoly c = conway(close_braid(word));
        std::size_t r = rng() % word.letters.size();
        BraidWord rotated = word;
        std::rotate(rotated.letters.begin(), rotated.letters.begin() + r,
                    rotated.letters.end());
        CHECK(jones(close_braid(rotated)) == v);
        CHECK(conway(close_braid(rotated)) == c);
    }
}

TEST_CASE("adding a strand with one crossing never changes jones or conway") {
    std::mt19937 rng(143);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord word = random_word(rng, 4, 7);
        BraidWord stabilized = word;
        ++stabilized.strands;
        stabilized.letters.push_back(word.strands);
        CHECK(jones(close_braid(stabilized)) == jones(close_braid(word)));
        CHECK(conway(close_braid(stabilized)) == conway(close_braid(word)));
        stabilized.letters.back() = -word.strands;
        CHECK(conway(close_braid(stabilized)) == conway(close_braid(word)));
    }
}

TEST_CASE("the braid relation leaves both invariants unchanged") {
    std::mt19937 rng(144);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord word = random_word(rng, 4, 5);
        word.strands = std::max(word.strands, 3);
        int i = 1 + static_cast<int>(rng() % (word.strands - 2));
        std::size_t at = word.letters.empty() ? 0 : rng() % (word.letters.size() + 1);
        BraidWord left = word, right = word;
        left.letters.insert(left.letters.begin() + at, {i, i + 1, i});
        right.letters.insert(right.letters.begin() + at, {i + 1, i, i + 1});
        CHECK(jones(close_braid(left)) == jones(close_braid(right)));
        CHECK(conway(close_braid(left)) == conway(close_braid(right)));
    }
}

TEST_CASE("mirroring the word inverts t in jones") {
    std::mt19937 rng(145);
    for (int iter = 0; iter < 80; ++iter) {
        BraidWord word = random_word(rng, 4, 7);
        BraidWord mirror = word;
        for (int& k : mirror.letters) k = -k;
        CHECK(jones(close_braid(mirror)) == jones(close_braid(word)).mirrored());
    }
}

TEST_CASE("word reductions preserve both invariants") {
    std::mt19937 rng(146);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord word = random_word(rng, 4, 8);
        LaurentPoly v = jones(close_braid(word));
        LaurentPoly c = conway(close_braid(word));
        CHECK(jones(close_braid(free_reduce(word))) == v);
        CHECK(conway(close_braid(free_reduce(word))) == c);
        CHECK(jones(close_braid(cyclic_reduce(word))) == v);
        CHECK(conway(close_braid(cyclic_reduce(word))) == c);
    }
}

TEST_CASE("jones exponents land on the lattice fixed by component parity") {
    std::mt19937 rng(147);
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord word = random_word(rng, 5, 8);
        LinkDiagram d = close_braid(word);
        LaurentPoly v = jones(d);
        REQUIRE(!v.is_zero());
        int expected = d.component_count % 2 == 1 ? 0 : 2;
        for (const auto& [exp, coeff] : v.terms())
            CHECK(((exp % 4) + 4) % 4 == expected);
    }
}

TEST_CASE("conway degrees respect component parity") {
    std::mt19937 rng(148);
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord word = random_word(rng, 5, 8);
        LinkDiagram d = close_braid(word);
        LaurentPoly c = conway(d);
        for (const auto& [exp, coeff] : c.terms()) {
            REQUIRE(exp % 4 == 0);
            int degree = exp / 4;
            CHECK(degree >= d.component_count - 1);
            CHECK(degree % 2 == (d.component_count - 1) % 2);
        }
    }
}

TEST_CASE("for knots, alexander at 1 is a unit and both determinants agree") {
    std::mt19937 rng(149);
    int knots = 0;
    for (int iter = 0; iter < 200 && knots < 80; ++iter) {
        BraidWord word = random_word(rng, 4, 8);
        LinkDiagram d = close_braid(word);
        if (d.component_count != 1) continue;
        ++knots;
        LaurentPoly a = alexander(d);
        mpz_class at_one = a.evaluate_at_one();
        CHECK((at_one == 1 || at_one == -1));
        mpz_class det_alexander = abs(a.evaluate_at_minus_one());
        mpz_class det_jones = abs(jones(d).evaluate_at_minus_one());
        CHECK(det_alexander == det_jones);
    }
    CHECK(knots >= 40);
}

TEST_CASE("a starved recursion refuses rather than guessing") {
    CHECK_THROWS_AS(conway(close(2, {1, 1, 1}), 2), RefusalError);
    CHECK_THROWS_AS(alexander(close(2, {1, 1, 1}), 2), RefusalError);
    CHECK_NOTHROW(conway(close(2, {1, 1, 1})));
    CHECK_THROWS_AS(jones_by_skein(close(2, {1, 1, 1}), 2), RefusalError);
}

TEST_CASE("jones by skein recursion equals jones by state sum") {
    CHECK(jones_by_skein(close(1, {})) == LaurentPoly::constant(1));
    CHECK(jones_by_skein(close(3, {})) == jones(close(3, {})));
    CHECK(jones_by_skein(close(2, {1, 1})).to_string() == "-t^(5/2) - t^(1/2)");
    CHECK(jones_by_skein(close(2, {-1, -1, -1})).to_string() ==
          "t^-1 + t^-3 - t^-4");
    CHECK(jones_by_skein(close(3, {1, -2, 1, -2})) == jones(close(3, {1, -2, 1, -2})));
    std::mt19937 rng(311);
    for (int iter = 0; iter < 150; ++iter) {
        BraidWord word = random_word(rng, 4, 9);
        LinkDiagram d = close_braid(word);
        CHECK(jones_by_skein(d) == jones(d));
    }
}

TEST_CASE("the bundled market word closes into the positive Hopf link") {
    BraidWord word = w(4, {2, 3, 3, -3, -1, -3, -1, -2, 2, 3, 1, 2});
    LinkDiagram d = close_braid(word);
    CHECK(jones(d).to_string() == "-t^(5/2) - t^(1/2)");
    CHECK(conway(d).to_string("z") == "z");
    CHECK(alexander(d).to_string() == "t^(1/2) - t^(-1/2)");
}
