#include "knotmarket/classify.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        int value = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("knot table: bad " + what + " '" + text + "'");
    }
}

LaurentPoly parse_poly(const std::string& text) {
    if (text == "0") return LaurentPoly{};
    if (text.empty() || text[0] != 'q')
        throw std::invalid_argument("knot table: bad polynomial '" + text + "'");
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("knot table: bad polynomial '" + text + "'");
    int offset = parse_int(text.substr(1, colon - 1), "polynomial offset");
    LaurentPoly poly;
    std::string body = text.substr(colon + 1);
    std::stringstream ss(body);
    std::string piece;
    int index = 0;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty())
            throw std::invalid_argument("knot table: bad polynomial '" + text + "'");
        for (size_t i = 0; i < piece.size(); ++i) {
            bool ok = std::isdigit(static_cast<unsigned char>(piece[i])) ||
                      (i == 0 && piece[i] == '-' && piece.size() > 1);
            if (!ok)
                throw std::invalid_argument("knot table: bad polynomial '" + text + "'");
        }
        poly = poly + LaurentPoly::term(mpz_class(piece), offset + 4 * index);
        ++index;
    }
    if (index == 0)
        throw std::invalid_argument("knot table: bad polynomial '" + text + "'");
    return poly;
}

std::string serialize_poly(const LaurentPoly& poly) {
    if (poly.is_zero()) return "0";
    int lo = poly.min_exponent();
    int hi = poly.max_exponent();
    if ((hi - lo) % 4 != 0)
        throw std::invalid_argument("knot table: polynomial span not a whole power of t");
    std::string out = "q" + std::to_string(lo) + ":";
    for (int e = lo; e <= hi; e += 4) {
        if (e != lo) out += ",";
        out += poly.coeff(e).get_str();
    }
    return out;
}

}  // namespace

std::vector<KnotTableEntry> load_table(std::istream& in) {
    std::vector<KnotTableEntry> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() != 6)
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": expected 6 fields, got " +
                                        std::to_string(fields.size()));
        KnotTableEntry entry;
        entry.name = fields[0];
        if (entry.name.empty())
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": empty name");
        entry.components = parse_int(fields[1], "component count");
        entry.crossing_number = parse_int(fields[2], "crossing number");
        if (entry.components < 1 || entry.crossing_number < 0)
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": bad counts");
        entry.alexander = parse_poly(fields[3]);
        if (!fields[4].empty()) {
            entry.has_jones = true;
            entry.jones = parse_poly(fields[4]);
        }
        entry.note = fields[5];
        table.push_back(std::move(entry));
    }
    return table;
}

std::string serialize_table(const std::vector<KnotTableEntry>& table,
                            const std::vector<std::string>& header_comments) {
    std::string out;
    for (const auto& comment : header_comments) out += "# " + comment + "\n";
    for (const auto& entry : table) {
        out += entry.name;
        out += "|" + std::to_string(entry.components);
        out += "|" + std::to_string(entry.crossing_number);
        out += "|" + serialize_poly(entry.alexander);
        out += "|" + (entry.has_jones ? serialize_poly(entry.jones) : std::string());
        out += "|" + entry.note;
        out += "\n";
    }
    return out;
}

const std::vector<KnotTableEntry>& builtin_table() {
    static const std::vector<KnotTableEntry> table = [] {
        std::istringstream in(knot_table_text());
        return load_table(in);
    }();
    return table;
}

std::vector<Candidate> lookup(const std::vector<KnotTableEntry>& table,
                              const LaurentPoly& alexander_query,
                              const LaurentPoly* jones_query, int components) {
    LaurentPoly canonical;
    if (!alexander_query.is_zero())
        canonical = alexander_normalize(alexander_query);
    std::vector<Candidate> hits;
    for (const auto& entry : table) {
        if (entry.components != components) continue;
        if (entry.alexander != canonical) continue;
        bool mirrored = false;
        if (jones_query != nullptr && entry.has_jones) {
            if (*jones_query == entry.jones) {
                mirrored = false;
            } else if (*jones_query == entry.jones.mirrored()) {
                mirrored = true;
            } else {
                continue;
            }
        }
        hits.push_back(Candidate{entry.name, mirrored, entry.note});
    }
    return hits;
}

}  // namespace knotmarket
