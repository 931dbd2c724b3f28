#include "knotmarket/report.hpp"

#include <cstdint>
#include <stdexcept>

#include "knotmarket/link.hpp"

namespace knotmarket {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* sign_name(CrossSign sign) {
    return sign == CrossSign::over ? "over" : "under";
}

ordered_json event_to_json(const CrossingEvent& event) {
    ordered_json j;
    j["date_from"] = event.date_from.to_string();
    j["date_to"] = event.date_to.to_string();
    j["position"] = event.position;
    j["left"] = event.left;
    j["right"] = event.right;
    j["delta_left"] = event.delta_left.to_string();
    j["delta_right"] = event.delta_right.to_string();
    j["sign"] = sign_name(event.sign);
    j["tie"] = event.tie;
    return j;
}

ordered_json reading_to_json(const StrandReading& reading) {
    ordered_json j;
    j["ticker"] = reading.ticker;
    j["overcrossings"] = reading.overcrossings;
    j["undercrossings"] = reading.undercrossings;
    j["start_position"] = reading.start_position;
    j["end_position"] = reading.end_position;
    j["trend"] = reading.trend;
    return j;
}

ordered_json candidate_to_json(const Candidate& candidate) {
    ordered_json j;
    j["name"] = candidate.name;
    j["mirrored"] = candidate.mirrored;
    j["note"] = candidate.note;
    return j;
}

}  // namespace

PipelineReport run_pipeline(const PriceTable& table, const Date& from,
                            const Date& to, const PipelineOptions& options) {
    PriceTable window = table_window(table, from, to);
    if (window.dates.size() < 2)
        throw std::invalid_argument("window holds " +
                                    std::to_string(window.dates.size()) +
                                    " trading dates; need at least 2");

    PipelineReport report;
    report.window_start = window.dates.front();
    report.window_end = window.dates.back();
    report.tickers = window.tickers;

    CrossingScan scan = detect_crossings(window);
    report.crossing_events = scan.events;
    report.warnings = scan.warnings;

    const int strands = static_cast<int>(window.tickers.size());
    report.word = word_from_crossings(scan.events, strands);
    report.reduced = cyclic_reduce(report.word);
    report.writhe_value = writhe(report.word);
    report.trend_summary = interpret_word(report.word, window.tickers);

    const BraidWord& closing = options.skip_cyclic_reduce ? report.word : report.reduced;
    LinkDiagram diagram = close_braid(closing);
    report.component_count = diagram.component_count;

    try {
        report.jones = jones(diagram, options.max_crossings);
    } catch (const RefusalError& e) {
        report.warnings.push_back(std::string("jones refused: ") + e.what());
    }
    try {
        report.conway = conway(diagram, options.max_expansions);
        report.alexander = alexander(diagram, options.max_expansions);
    } catch (const RefusalError& e) {
        report.warnings.push_back(std::string("conway refused: ") + e.what());
    }

    if (report.alexander) {
        report.classification =
            lookup(builtin_table(), *report.alexander,
                   report.jones ? &*report.jones : nullptr, report.component_count);
    }
    return report;
}

PipelineReport run_pipeline(const PriceTable& table, const PipelineOptions& options) {
    if (table.dates.empty()) throw std::invalid_argument("empty price table");
    return run_pipeline(table, table.dates.front(), table.dates.back(), options);
}

WindowedAnalysis windowed_report(const PriceTable& table, int window_length,
                                 int stride, const PipelineOptions& options) {
    if (window_length < 2)
        throw std::invalid_argument("window length must cover at least 2 trading rows");
    if (stride < 1) throw std::invalid_argument("stride must be at least 1");
    WindowedAnalysis analysis;
    const int rows = static_cast<int>(table.dates.size());
    for (int start = 0; start + window_length <= rows; start += stride) {
        const Date& from = table.dates[start];
        const Date& to = table.dates[start + window_length - 1];
        PipelineReport report = run_pipeline(table, from, to, options);
        WindowSummaryRow row;
        row.start = report.window_start;
        row.end = report.window_end;
        row.crossings = static_cast<int>(report.crossing_events.size());
        row.writhe_value = report.writhe_value;
        row.word_length = static_cast<int>(report.word.letters.size());
        analysis.summary.push_back(row);
        analysis.reports.push_back(std::move(report));
    }
    return analysis;
}

ordered_json polynomial_to_json(const LaurentPoly& poly, const std::string& var) {
    ordered_json j;
    j["text"] = poly.to_string(var);
    ordered_json terms = ordered_json::array();
    for (const auto& [qe, coeff] : poly.term_list()) {
        ordered_json pair = ordered_json::array();
        pair.push_back(qe);
        if (coeff.fits_slong_p())
            pair.push_back(static_cast<std::int64_t>(coeff.get_si()));
        else
            pair.push_back(coeff.get_str());
        terms.push_back(std::move(pair));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly polynomial_from_json(const json& encoded) {
    const json& terms = encoded.is_object() ? encoded.at("terms") : encoded;
    if (!terms.is_array())
        throw std::invalid_argument("polynomial JSON: expected a term array");
    std::vector<std::pair<int, mpz_class>> list;
    for (const auto& pair : terms) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("polynomial JSON: malformed term pair");
        int qe = pair.at(0).get<int>();
        mpz_class coeff;
        if (pair.at(1).is_string())
            coeff = mpz_class(pair.at(1).get<std::string>());
        else
            coeff = mpz_class(std::to_string(pair.at(1).get<std::int64_t>()));
        list.emplace_back(qe, coeff);
    }
    return LaurentPoly::from_term_list(list);
}

std::string report_to_json(const PipelineReport& report) {
    ordered_json j;
    j["schema_version"] = report.schema_version;
    j["window"] = {{"start", report.window_start.to_string()},
                   {"end", report.window_end.to_string()}};
    j["tickers"] = report.tickers;
    ordered_json events = ordered_json::array();
    for (const auto& event : report.crossing_events)
        events.push_back(event_to_json(event));
    j["crossing_events"] = std::move(events);
    j["braid_word"] = render_ascii(report.word);
    j["reduced_word"] = render_ascii(report.reduced);
    j["writhe"] = report.writhe_value;
    j["component_count"] = report.component_count;
    j["jones"] = report.jones ? polynomial_to_json(*report.jones)
                              : ordered_json(nullptr);
    j["conway"] = report.conway ? polynomial_to_json(*report.conway, "z")
                                : ordered_json(nullptr);
    j["alexander"] = report.alexander ? polynomial_to_json(*report.alexander)
                                      : ordered_json(nullptr);
    ordered_json classification = ordered_json::array();
    for (const auto& candidate : report.classification)
        classification.push_back(candidate_to_json(candidate));
    j["classification"] = std::move(classification);
    ordered_json trends = ordered_json::array();
    for (const auto& reading : report.trend_summary)
        trends.push_back(reading_to_json(reading));
    j["trend_summary"] = std::move(trends);
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string report_to_text(const PipelineReport& report) {
    std::string out;
    out += "window " + report.window_start.to_string() + " .. " +
           report.window_end.to_string() + "\n";
    out += "tickers (cheapest to priciest on day one):";
    for (const auto& ticker : report.tickers) out += " " + ticker;
    out += "\n";
    out += "crossings: " + std::to_string(report.crossing_events.size()) + "\n";
    for (const auto& event : report.crossing_events) {
        out += "  " + event.date_from.to_string() + " -> " +
               event.date_to.to_string() + "  pos " + std::to_string(event.position) +
               "  " + event.left + " x " + event.right + "  moved " +
               event.delta_left.to_string() + " / " + event.delta_right.to_string() +
               "  " + sign_name(event.sign) + "\n";
    }
    out += "braid word:   " + render_pretty(report.word) + "\n";
    out += "reduced word: " + render_pretty(report.reduced) + "\n";
    out += "writhe: " + std::to_string(report.writhe_value) + "\n";
    out += "components: " + std::to_string(report.component_count) + "\n";
    out += "jones:     " + (report.jones ? report.jones->to_string() : "(refused)") + "\n";
    out += "conway:    " + (report.conway ? report.conway->to_string("z") : "(refused)") + "\n";
    out += "alexander: " +
           (report.alexander ? report.alexander->to_string() : "(refused)") + "\n";
    out += "classification:";
    if (report.classification.empty()) out += " unrecognized";
    for (const auto& candidate : report.classification) {
        out += " " + candidate.name;
        if (candidate.mirrored) out += " (mirror)";
        if (!candidate.note.empty()) out += " [" + candidate.note + "]";
    }
    out += "\n";
    out += "trends:\n";
    for (const auto& reading : report.trend_summary) {
        out += "  " + reading.ticker + ": " + reading.trend + " (" +
               std::to_string(reading.overcrossings) + " over / " +
               std::to_string(reading.undercrossings) + " under, pos " +
               std::to_string(reading.start_position) + " -> " +
               std::to_string(reading.end_position) + ")\n";
    }
    if (!report.warnings.empty()) {
        out += "warnings:\n";
        for (const auto& warning : report.warnings) out += "  " + warning + "\n";
    }
    return out;
}

std::string summary_to_csv(const std::vector<WindowSummaryRow>& summary) {
    std::string out = "start,end,crossings,writhe,word_length\n";
    for (const auto& row : summary) {
        out += row.start.to_string() + "," + row.end.to_string() + "," +
               std::to_string(row.crossings) + "," + std::to_string(row.writhe_value) +
               "," + std::to_string(row.word_length) + "\n";
    }
    return out;
}

std::string windows_to_json(const WindowedAnalysis& analysis) {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json summary = ordered_json::array();
    for (const auto& row : analysis.summary) {
        ordered_json s;
        s["start"] = row.start.to_string();
        s["end"] = row.end.to_string();
        s["crossings"] = row.crossings;
        s["writhe"] = row.writhe_value;
        s["word_length"] = row.word_length;
        summary.push_back(std::move(s));
    }
    j["summary"] = std::move(summary);
    ordered_json reports = ordered_json::array();
    for (const auto& report : analysis.reports)
        reports.push_back(ordered_json::parse(report_to_json(report)));
    j["reports"] = std::move(reports);
    return j.dump(2) + "\n";
}

}  // namespace knotmarket
