#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotmarket/braid.hpp"
#include "knotmarket/classify.hpp"
#include "knotmarket/crossings.hpp"
#include "knotmarket/invariants.hpp"
#include "knotmarket/market.hpp"

namespace knotmarket {

// Full result of one window's pipeline run. The polynomial fields are
// empty when their computation refused (budget); the refusal text lands in
// warnings and the rest of the report stays valid.
struct PipelineReport {
    int schema_version = 1;
    Date window_start;
    Date window_end;
    std::vector<std::string> tickers;  // canonical window order
    std::vector<CrossingEvent> crossing_events;
    BraidWord word;     // complete crossing record, one letter per event
    BraidWord reduced;  // cyclically reduced, same closure
    int writhe_value = 0;
    int component_count = 0;
    std::optional<LaurentPoly> jones;
    std::optional<LaurentPoly> conway;
    std::optional<LaurentPoly> alexander;
    std::vector<Candidate> classification;
    std::vector<StrandReading> trend_summary;
    std::vector<std::string> warnings;
};

struct PipelineOptions {
    int max_crossings = kDefaultMaxCrossings;
    long max_expansions = kDefaultMaxExpansions;
    // Close the unreduced word instead (slower, same invariant values, same
    // report bytes); exists so tests can prove reduction changes nothing.
    bool skip_cyclic_reduce = false;
};

// Ingest -> crossings -> braid -> closure -> invariants -> classification
// for the rows with from <= date <= to. All invariants are computed on the
// cyclically reduced word's closure. Throws std::invalid_argument when
// fewer than two dates fall inside the window.
PipelineReport run_pipeline(const PriceTable& table, const Date& from,
                            const Date& to, const PipelineOptions& options = {});
// Whole-table span convenience.
PipelineReport run_pipeline(const PriceTable& table,
                            const PipelineOptions& options = {});

// Rolling windows over trading rows (not calendar days): one report per
// start index 0, stride, 2*stride, ... while a full window_length rows
// remain. window_length must be at least 2, stride at least 1.
struct WindowSummaryRow {
    Date start;
    Date end;
    int crossings = 0;
    int writhe_value = 0;
    int word_length = 0;
};

struct WindowedAnalysis {
    std::vector<PipelineReport> reports;
    std::vector<WindowSummaryRow> summary;
};

WindowedAnalysis windowed_report(const PriceTable& table, int window_length,
                                 int stride, const PipelineOptions& options = {});

// Exact exchange form of a polynomial: {"text": rendered, "terms":
// [[quarter_exp, coefficient], ...]} by descending exponent. Coefficients
// ride as JSON integers while they fit 64 bits and as decimal strings
// beyond, so the round trip is bit-exact either way.
nlohmann::ordered_json polynomial_to_json(const LaurentPoly& poly,
                                          const std::string& var = "t");
LaurentPoly polynomial_from_json(const nlohmann::json& encoded);

// Byte-deterministic renderings.
std::string report_to_json(const PipelineReport& report);
std::string report_to_text(const PipelineReport& report);
std::string summary_to_csv(const std::vector<WindowSummaryRow>& summary);
std::string windows_to_json(const WindowedAnalysis& analysis);

}  // namespace knotmarket
