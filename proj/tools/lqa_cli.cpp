// lqa: q-analogues of weight multiplicities for the classical Lie algebras.

#include "lqa/cache_io.hpp"
#include "lqa/errors.hpp"
#include "lqa/kostant.hpp"
#include "lqa/lr.hpp"
#include "lqa/parallel.hpp"
#include "lqa/pieri.hpp"
#include "lqa/recurrence.hpp"
#include "lqa/render.hpp"
#include "lqa/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#ifndef LQA_VERSION
#define LQA_VERSION "dev"
#endif

namespace {

using namespace lqa;

constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_corrupt_cache = 3;

struct Common {
    std::string format = "text";
    std::string cache_path;
    int jobs = 1;
    bool reproducible = false;
};

struct Target {
    std::string type;
    int rank = 0;
    std::string family;

    bool finite() const { return !type.empty(); }
};

void add_target_options(CLI::App* cmd, Target& t)
{
    auto* type = cmd->add_option("--type", t.type, "Root system type")->check(CLI::IsMember({"B", "C", "D"}));
    auto* rank = cmd->add_option("--rank", t.rank, "Rank")->check(CLI::Range(1, 31));
    auto* fam = cmd->add_option("--family", t.family, "Rank-stable family")->check(CLI::IsMember({"so", "sp"}));
    type->needs(rank);
    rank->needs(type);
    type->excludes(fam);
    rank->excludes(fam);
}

void add_common_options(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    cmd->add_option("--cache", c.cache_path, "Persistent LR/Pieri cache file (default $LQA_CACHE)");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_flag("--reproducible", c.reproducible, "Omit timing and cache statistics from JSON output");
}

nlohmann::ordered_json meta_json(const Common& c, double wall_ms)
{
    nlohmann::ordered_json meta;
    meta["versions"] = {{"lqa", LQA_VERSION}, {"cache_format", cache_format_version}};
    if (c.reproducible) {
        meta["cache_stats"] = nullptr;
        meta["wall_ms"] = nullptr;
    } else {
        const auto lr = lr_cache_stats();
        const auto pieri = pieri_cache_stats();
        meta["cache_stats"] = {{"lr", {{"entries", lr.entries}, {"hits", lr.hits}}},
                               {"pieri", {{"entries", pieri.entries}, {"hits", pieri.hits}}}};
        meta["wall_ms"] = wall_ms;
    }
    return meta;
}

std::string cache_file(const Common& c)
{
    if (!c.cache_path.empty())
        return c.cache_path;
    if (const char* env = std::getenv("LQA_CACHE"))
        return env;
    return {};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lusztig q-analogues for types B, C, D and their rank-stable limits"};
    app.set_version_flag("--version", LQA_VERSION);
    app.require_subcommand(1);

    Common common;
    Target target;
    std::string lam, mu;
    std::optional<int> trunc;
    std::string method = "direct";

    auto* k_cmd = app.add_subcommand("k", "One q-analogue K_{lambda,mu}(q)");
    add_target_options(k_cmd, target);
    add_common_options(k_cmd, common);
    k_cmd->add_option("--lam", lam, "lambda as comma-separated parts")->required();
    k_cmd->add_option("--mu", mu, "mu as comma-separated parts (default: the empty partition)");
    k_cmd->add_option("--trunc", trunc, "Truncate at q-degree D")->check(CLI::NonNegativeNumber);
    k_cmd->add_option("--method", method, "Finite-rank algorithm")
        ->check(CLI::IsMember({"direct", "recurrence"}));

    int max_weight = 2;
    auto* table_cmd = app.add_subcommand("table", "All cells with |lambda| <= max weight");
    add_target_options(table_cmd, target);
    add_common_options(table_cmd, common);
    table_cmd->add_option("--max-weight", max_weight, "Largest |lambda|")->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--trunc", trunc, "Truncate at q-degree D")->check(CLI::NonNegativeNumber);

    std::string suite;
    VerifyParams vp;
    auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check suite; exit 1 on any failure");
    add_common_options(verify_cmd, common);
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("--max-weight", vp.max_weight, "Partition weight ceiling");
    verify_cmd->add_option("--degree", vp.degree, "q-degree ceiling");
    verify_cmd->add_option("--max-rank", vp.max_rank, "Rank ceiling");
    verify_cmd->add_option("--bound", vp.bound, "Matrix weight bound (hl-inverse)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    const std::string cache = cache_file(common);
    try {
        if (!cache.empty())
            cache_load(cache);

        int rc = 0;
        if (*k_cmd || *table_cmd) {
            const bool is_k = static_cast<bool>(*k_cmd);
            if (target.type.empty() && target.family.empty())
                throw CLI::RequiredError("--type/--rank or --family");
            if (!target.finite() && method != "direct" && is_k)
                throw std::invalid_argument("--method applies to finite rank only");
            if (!target.finite() && !trunc)
                throw std::invalid_argument("--trunc is required with --family");

            std::vector<std::pair<Partition, Partition>> cells;
            if (is_k) {
                cells.emplace_back(Partition::parse(lam), Partition::parse(mu));
            } else {
                for (const auto& l : enumerate_partitions(max_weight))
                    for (const auto& m : enumerate_partitions(l.weight())) {
                        if (!stable_dominates(l, m))
                            continue;
                        if (target.finite() && (l.length() > target.rank || m.length() > target.rank))
                            continue;
                        cells.emplace_back(l, m);
                    }
            }

            std::vector<ResultRow> rows(cells.size());
            auto compute = [&](const Partition& l, const Partition& m, int inner_jobs) {
                if (!target.finite())
                    return k_limit(parse_family(target.family), l, m, *trunc);
                const RootSystem rs(parse_root_type(target.type), target.rank);
                QSeries value = method == "recurrence" ? k_recurrence_finite(rs, l, m)
                                                       : k_direct(rs, l, m, trunc, inner_jobs);
                return trunc ? value.truncated(*trunc) : value;
            };
            if (cells.size() == 1) {
                rows[0] = {cells[0].first, cells[0].second, compute(cells[0].first, cells[0].second, common.jobs)};
            } else {
                parallel_for(static_cast<int>(cells.size()), common.jobs, [&](int i) {
                    const auto& [l, m] = cells[static_cast<std::size_t>(i)];
                    rows[static_cast<std::size_t>(i)] = {l, m, compute(l, m, 1)};
                });
            }

            RenderContext ctx;
            ctx.command = is_k ? "k" : "table";
            if (target.finite()) {
                ctx.params["type"] = target.type;
                ctx.params["rank"] = target.rank;
                ctx.params["method"] = method;
            } else {
                ctx.params["family"] = target.family;
            }
            if (is_k) {
                ctx.params["lambda"] = Partition::parse(lam).parts();
                ctx.params["mu"] = Partition::parse(mu).parts();
            } else {
                ctx.params["max_weight"] = max_weight;
            }
            ctx.params["trunc"] = trunc ? nlohmann::ordered_json(*trunc) : nlohmann::ordered_json(nullptr);
            const double wall =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            ctx.meta = meta_json(common, wall);
            std::cout << render(rows, parse_format(common.format), ctx);
        } else if (*verify_cmd) {
            vp.jobs = common.jobs;
            const VerifyReport report = run_verify_suite(suite, vp);
            nlohmann::ordered_json doc;
            doc["command"] = "verify";
            doc["suite"] = report.suite;
            doc["passed"] = report.passed();
            doc["checks"] = report.checks;
            doc["failures"] = report.failures;
            const double wall =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            doc["meta"] = meta_json(common, wall);
            std::cout << doc.dump(2) << '\n';
            if (!report.passed()) {
                std::cerr << "verify " << suite << ": " << report.failures.size() << " of " << report.checks
                          << " checks failed; first counterexample: " << report.failures.front() << '\n';
                rc = exit_verify_failed;
            }
        }

        if (!cache.empty())
            cache_save(cache);
        return rc;
    } catch (const corrupt_cache& e) {
        std::cerr << "lqa: corrupt cache " << cache << ": " << e.what() << '\n';
        return exit_corrupt_cache;
    } catch (const CLI::Error& e) {
        std::cerr << "lqa: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lqa: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "lqa: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "lqa: " << e.what() << '\n';
        return 4;
    }
}
