#include "lqa/render.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace lqa {

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string partition_latex(const Partition& p)
{
    return p.empty() ? "\\emptyset" : "(" + p.to_string() + ")";
}

nlohmann::ordered_json partition_json(const Partition& p)
{
    return nlohmann::ordered_json(p.parts());
}

} // namespace

OutputFormat parse_format(const std::string& s)
{
    if (s == "text")
        return OutputFormat::text;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "latex")
        return OutputFormat::latex;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

nlohmann::ordered_json coeffs_json(const QSeries& s)
{
    auto out = nlohmann::ordered_json::array();
    const Integer lo = std::numeric_limits<std::int64_t>::min();
    const Integer hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& [deg, c] : s.terms()) {
        if (c >= lo && c <= hi)
            out.push_back({deg, static_cast<std::int64_t>(c)});
        else
            out.push_back({deg, c.str()});
    }
    return out;
}

std::string series_latex(const QSeries& s)
{
    if (s.is_zero())
        return "0";
    std::string out;
    for (const auto& [deg, c] : s.terms()) {
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (deg == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1)
            out += mag.str();
        out += deg == 1 ? "q" : "q^{" + std::to_string(deg) + "}";
    }
    return out;
}

std::string render(const std::vector<ResultRow>& rows, OutputFormat format, const RenderContext& ctx)
{
    std::ostringstream out;
    switch (format) {
    case OutputFormat::text:
        if (rows.size() == 1 && ctx.command == "k") {
            out << rows.front().value.to_string() << '\n';
            break;
        }
        for (const auto& r : rows)
            out << '(' << r.lambda.to_string() << ")\t(" << r.mu.to_string() << ")\t"
                << r.value.to_string() << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["command"] = ctx.command;
        doc["params"] = ctx.params;
        auto results = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["lambda"] = partition_json(r.lambda);
            row["mu"] = partition_json(r.mu);
            row["coeffs"] = coeffs_json(r.value);
            if (r.value.truncation())
                row["truncation"] = *r.value.truncation();
            results.push_back(std::move(row));
        }
        doc["results"] = std::move(results);
        doc["meta"] = ctx.meta;
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "lambda,mu,series\n";
        for (const auto& r : rows)
            out << csv_field(r.lambda.to_string()) << ',' << csv_field(r.mu.to_string()) << ','
                << csv_field(r.value.to_string()) << '\n';
        break;
    case OutputFormat::latex:
        out << "\\begin{tabular}{lll}\n\\hline\n"
            << "$\\lambda$ & $\\mu$ & $K_{\\lambda,\\mu}(q)$ \\\\\n\\hline\n";
        for (const auto& r : rows)
            out << '$' << partition_latex(r.lambda) << "$ & $" << partition_latex(r.mu) << "$ & $"
                << series_latex(r.value) << "$ \\\\\n";
        out << "\\hline\n\\end{tabular}\n";
        break;
    }
    return out.str();
}

} // namespace lqa
