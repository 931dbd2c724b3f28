#include "knotmarket/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

namespace {

std::string superscript(int exponent) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    if (exponent < 0) {
        out += "⁻";
        exponent = -exponent;
    }
    std::string body;
    do {
        body = digits[exponent % 10] + body;
        exponent /= 10;
    } while (exponent > 0);
    return out + body;
}

}  // namespace

void validate(const BraidWord& word) {
    if (word.strands < 1) throw std::invalid_argument("strand count must be at least 1");
    for (int k : word.letters)
        if (k == 0 || std::abs(k) >= word.strands)
            throw std::invalid_argument("letter " + std::to_string(k) +
                                        " is not a generator of a braid on " +
                                        std::to_string(word.strands) + " strands");
}

BraidWord word_from_crossings(const std::vector<CrossingEvent>& events, int strands) {
    BraidWord word;
    word.strands = strands;
    word.letters.reserve(events.size());
    for (const CrossingEvent& e : events)
        word.letters.push_back(e.sign == CrossSign::over ? e.position : -e.position);
    validate(word);
    return word;
}

BraidWord concatenate(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("cannot concatenate words on " +
                                    std::to_string(a.strands) + " and " +
                                    std::to_string(b.strands) + " strands");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& word) {
    BraidWord out;
    out.strands = word.strands;
    out.letters.reserve(word.letters.size());
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

BraidWord free_reduce(const BraidWord& word) {
    BraidWord out;
    out.strands = word.strands;
    for (int k : word.letters) {
        if (!out.letters.empty() && out.letters.back() == -k)
            out.letters.pop_back();
        else
            out.letters.push_back(k);
    }
    return out;
}

BraidWord cyclic_reduce(const BraidWord& word) {
    BraidWord out = free_reduce(word);
    while (out.letters.size() >= 2 && out.letters.front() == -out.letters.back()) {
        out.letters.erase(out.letters.begin());
        out.letters.pop_back();
        out = free_reduce(out);
    }
    return out;
}

int writhe(const BraidWord& word) {
    int sum = 0;
    for (int k : word.letters) sum += k > 0 ? 1 : -1;
    return sum;
}

std::vector<int> underlying_permutation(const BraidWord& word) {
    validate(word);
    std::vector<int> at_position(word.strands);
    std::iota(at_position.begin(), at_position.end(), 0);
    for (int k : word.letters) {
        int i = std::abs(k) - 1;
        std::swap(at_position[i], at_position[i + 1]);
    }
    std::vector<int> perm(word.strands);
    for (int p = 0; p < word.strands; ++p) perm[at_position[p]] = p;
    return perm;
}

int cycle_count(const std::vector<int>& permutation) {
    std::vector<bool> seen(permutation.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < permutation.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = permutation[t]) seen[t] = true;
    }
    return cycles;
}

std::vector<StrandReading> interpret_word(const BraidWord& word,
                                          const std::vector<std::string>& tickers) {
    validate(word);
    if (static_cast<int>(tickers.size()) != word.strands)
        throw std::invalid_argument("got " + std::to_string(tickers.size()) +
                                    " tickers for " + std::to_string(word.strands) +
                                    " strands");
    std::vector<StrandReading> readings(tickers.size());
    std::vector<int> at_position(word.strands);
    std::iota(at_position.begin(), at_position.end(), 0);
    for (int s = 0; s < word.strands; ++s) {
        readings[s].ticker = tickers[s];
        readings[s].start_position = s + 1;
    }
    for (int k : word.letters) {
        int i = std::abs(k) - 1;
        int left = at_position[i];
        int right = at_position[i + 1];
        int winner = k > 0 ? left : right;
        int loser = k > 0 ? right : left;
        ++readings[winner].overcrossings;
        ++readings[loser].undercrossings;
        std::swap(at_position[i], at_position[i + 1]);
    }
    for (int p = 0; p < word.strands; ++p) readings[at_position[p]].end_position = p + 1;
    for (auto& r : readings) {
        int displacement = r.end_position - r.start_position;
        r.trend = displacement > 0 ? "bullish" : displacement < 0 ? "bearish" : "flat";
    }
    return readings;
}

std::string render_ascii(const BraidWord& word) {
    if (word.letters.empty()) return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out << ' ';
        int k = word.letters[i];
        out << 's' << std::abs(k);
        if (k < 0) out << '\'';
    }
    return out.str();
}

std::string render_pretty(const BraidWord& word) {
    if (word.letters.empty()) return "e";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < word.letters.size()) {
        std::size_t run = i;
        while (run < word.letters.size() && word.letters[run] == word.letters[i]) ++run;
        int k = word.letters[i];
        int exponent = static_cast<int>(run - i) * (k > 0 ? 1 : -1);
        if (!first) out << "·";
        out << "σ" << std::abs(k);
        if (exponent != 1) out << superscript(exponent);
        first = false;
        i = run;
    }
    return out.str();
}

BraidWord parse_ascii(const std::string& text, int strands) {
    BraidWord word;
    word.strands = strands;
    std::istringstream in(text);
    std::string token;
    std::vector<std::string> tokens;
    while (in >> token) tokens.push_back(token);
    if (tokens.size() == 1 && tokens[0] == "e") {
        validate(word);
        return word;
    }
    for (const std::string& t : tokens) {
        std::size_t i = 0;
        if (i >= t.size() || t[i] != 's')
            throw std::invalid_argument("bad braid letter: '" + t + "'");
        ++i;
        int index = 0;
        std::size_t digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            index = index * 10 + (t[i] - '0');
            ++digits;
            ++i;
        }
        bool inverse_mark = i < t.size() && t[i] == '\'';
        if (inverse_mark) ++i;
        if (digits == 0 || i != t.size())
            throw std::invalid_argument("bad braid letter: '" + t + "'");
        word.letters.push_back(inverse_mark ? -index : index);
    }
    validate(word);
    return word;
}

}  // namespace knotmarket
