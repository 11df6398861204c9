#include "doctest.h"

#include "lqa/render.hpp"

#include <nlohmann/json.hpp>

using namespace lqa;

namespace {

std::vector<ResultRow> sample()
{
    return {{Partition{1, 1}, Partition(), QSeries::from_terms({{1, 1}, {3, 1}}, 4)},
            {Partition{2}, Partition{1, 1}, QSeries::monomial(1)}};
}

} // namespace

TEST_CASE("json output follows the schema")
{
    RenderContext ctx{"table", {{"family", "so"}}, {{"versions", {{"lqa", "test"}}}}};
    const auto doc = nlohmann::json::parse(render(sample(), OutputFormat::json, ctx));
    CHECK(doc["command"] == "table");
    CHECK(doc["params"]["family"] == "so");
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["lambda"] == nlohmann::json::array({1, 1}));
    CHECK(doc["results"][0]["mu"] == nlohmann::json::array());
    CHECK(doc["results"][0]["coeffs"] == nlohmann::json::parse("[[1,1],[3,1]]"));
    CHECK(doc.contains("meta"));
}

TEST_CASE("large coefficients are strings in json")
{
    const Integer big = Integer(1) << 80;
    const auto j = coeffs_json(QSeries::monomial(2, big));
    CHECK(j[0][1] == big.str());
}

TEST_CASE("csv and latex")
{
    RenderContext ctx{"table", {}, {}};
    const std::string csv = render(sample(), OutputFormat::csv, ctx);
    CHECK(csv == "lambda,mu,series\n\"1,1\",,q + q^3\n2,\"1,1\",q\n");
    const std::string tex = render(sample(), OutputFormat::latex, ctx);
    CHECK(tex.find("\\begin{tabular}{lll}") == 0);
    CHECK(tex.find("$(1,1)$ & $\\emptyset$ & $q + q^{3}$ \\\\") != std::string::npos);
    CHECK(tex.rfind("\\end{tabular}\n") == tex.size() - 14);
    CHECK(series_latex(QSeries::from_terms({{0, -2}, {1, 1}})) == "-2 + q");
}

TEST_CASE("text output and format parsing")
{
    RenderContext ctx{"k", {}, {}};
    CHECK(render({sample()[1]}, OutputFormat::text, ctx) == "q\n");
    CHECK(parse_format("latex") == OutputFormat::latex);
    CHECK_THROWS(parse_format("xml"));
}
