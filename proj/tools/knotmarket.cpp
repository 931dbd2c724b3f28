#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotmarket/link.hpp"
#include "knotmarket/report.hpp"

using namespace knotmarket;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

PipelineOptions options_from_env() {
    PipelineOptions options;
    if (const char* raw = std::getenv("KNOTMARKET_MAX_CROSSINGS")) {
        std::string text(raw);
        int value = 0;
        try {
            size_t pos = 0;
            value = std::stoi(text, &pos);
            if (pos != text.size() || value < 1) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw std::invalid_argument(
                "KNOTMARKET_MAX_CROSSINGS must be a positive integer, got '" + text +
                "'");
        }
        options.max_crossings = value;
    }
    return options;
}

int run_analyze(const std::string& input, const std::string& tickers,
                const std::string& from_text, const std::string& to_text,
                const std::string& format) {
    PriceTable table = parse_price_table_file(input, split_commas(tickers));
    if (table.dates.empty())
        throw std::invalid_argument(input + " holds no price rows");
    Date from = from_text.empty() ? table.dates.front() : Date::parse(from_text);
    Date to = to_text.empty() ? table.dates.back() : Date::parse(to_text);
    PipelineReport report = run_pipeline(table, from, to, options_from_env());
    std::cout << (format == "json" ? report_to_json(report) : report_to_text(report));
    bool refused = !report.jones || !report.conway;
    if (refused) std::cerr << "invariants refused; partial report emitted\n";
    return refused ? 3 : 0;
}

int run_windows(const std::string& input, const std::string& tickers, int length,
                int stride, const std::string& format) {
    PriceTable table = parse_price_table_file(input, split_commas(tickers));
    WindowedAnalysis analysis = windowed_report(table, length, stride, options_from_env());
    if (format == "json")
        std::cout << windows_to_json(analysis);
    else
        std::cout << summary_to_csv(analysis.summary);
    return 0;
}

int run_invariant(const std::string& word_text, int strands,
                  const std::string& format) {
    PipelineOptions options = options_from_env();
    BraidWord word = parse_ascii(word_text, strands);
    BraidWord reduced = cyclic_reduce(word);
    LinkDiagram diagram = close_braid(reduced);
    LaurentPoly v = jones(diagram, options.max_crossings);
    LaurentPoly nabla = conway(diagram, options.max_expansions);
    LaurentPoly alex = alexander(diagram, options.max_expansions);
    auto hits = lookup(builtin_table(), alex, &v, diagram.component_count);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["word"] = render_ascii(word);
        j["reduced_word"] = render_ascii(reduced);
        j["strands"] = strands;
        j["writhe"] = writhe(word);
        j["component_count"] = diagram.component_count;
        j["jones"] = polynomial_to_json(v);
        j["conway"] = polynomial_to_json(nabla, "z");
        j["alexander"] = polynomial_to_json(alex);
        nlohmann::ordered_json classification = nlohmann::ordered_json::array();
        for (const auto& hit : hits) {
            nlohmann::ordered_json c;
            c["name"] = hit.name;
            c["mirrored"] = hit.mirrored;
            c["note"] = hit.note;
            classification.push_back(std::move(c));
        }
        j["classification"] = std::move(classification);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word:       " << render_pretty(word) << "\n";
        std::cout << "reduced:    " << render_pretty(reduced) << "\n";
        std::cout << "writhe: " << writhe(word) << "\n";
        std::cout << "components: " << diagram.component_count << "\n";
        std::cout << "jones:     " << v.to_string() << "\n";
        std::cout << "conway:    " << nabla.to_string("z") << "\n";
        std::cout << "alexander: " << alex.to_string() << "\n";
        std::cout << "classification:";
        if (hits.empty()) std::cout << " unrecognized";
        for (const auto& hit : hits) {
            std::cout << " " << hit.name;
            if (hit.mirrored) std::cout << " (mirror)";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid, knot, and link analysis of stock-price crossings"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "run the full pipeline over one window and print a report");
    std::string a_input, a_tickers, a_from, a_to, a_format = "text";
    analyze->add_option("--input", a_input, "price CSV (date,TICKER,...)")
        ->required();
    analyze->add_option("--tickers", a_tickers,
                        "comma-separated subset of tickers to keep");
    analyze->add_option("--from", a_from, "window start date (default: first row)");
    analyze->add_option("--to", a_to, "window end date (default: last row)");
    analyze->add_option("--format", a_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* windows = app.add_subcommand(
        "windows", "rolling-window reports plus a summary series");
    std::string w_input, w_tickers, w_format = "csv";
    int w_length = 0, w_stride = 1;
    windows->add_option("--input", w_input, "price CSV (date,TICKER,...)")
        ->required();
    windows->add_option("--tickers", w_tickers,
                        "comma-separated subset of tickers to keep");
    windows->add_option("--length", w_length, "window length in trading rows")
        ->required();
    windows->add_option("--stride", w_stride, "rows between window starts");
    windows->add_option("--format", w_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* invariant = app.add_subcommand(
        "invariant", "invariants of a braid word's closure, bypassing market data");
    std::string i_word;
    int i_strands = 0;
    std::string i_format = "text";
    invariant->add_option("--word", i_word, "braid word, e.g. \"s1 s2 s1'\" or \"e\"")
        ->required();
    invariant->add_option("--strands", i_strands, "strand count")->required();
    invariant->add_option("--format", i_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(a_input, a_tickers, a_from, a_to, a_format);
        if (app.got_subcommand(windows))
            return run_windows(w_input, w_tickers, w_length, w_stride, w_format);
        return run_invariant(i_word, i_strands, i_format);
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
