#pragma once

#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lqa {

enum class OutputFormat { text, json, csv, latex };

OutputFormat parse_format(const std::string& s);

struct ResultRow {
    Partition lambda;
    Partition mu;
    QSeries value;
};

struct RenderContext {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// Coefficient list [[deg, c], ...]; c is a JSON number when it fits in 64 bits
/// and a decimal string otherwise.
nlohmann::ordered_json coeffs_json(const QSeries& s);

/// LaTeX math for a series: q + q^{3}.
std::string series_latex(const QSeries& s);

/// Text: the bare series for a single row, tab-separated lines otherwise.
std::string render(const std::vector<ResultRow>& rows, OutputFormat format, const RenderContext& ctx);

} // namespace lqa
