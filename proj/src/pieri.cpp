#include "lqa/pieri.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace lqa {

namespace {

// Every alpha with gamma/alpha a horizontal strip: gamma_{i+1} <= alpha_i <= gamma_i.
void strips_below(const Partition& gamma, int max_removed, int row, std::vector<int>& alpha,
                  int removed, const std::function<void(const Partition&, int)>& visit)
{
    if (row == gamma.length()) {
        visit(Partition(alpha), removed);
        return;
    }
    const int hi = gamma.part(row);
    const int lo = gamma.part(row + 1);
    for (int a = hi; a >= lo; --a) {
        const int r = removed + hi - a;
        if (r > max_removed)
            break;
        alpha[static_cast<std::size_t>(row)] = a;
        strips_below(gamma, max_removed, row + 1, alpha, r, visit);
    }
    alpha[static_cast<std::size_t>(row)] = hi;
}

// Every lambda with lambda/alpha a horizontal strip of exactly `size` boxes.
void strips_above(const Partition& alpha, int size, int row, std::vector<int>& lambda,
                  const std::function<void(const Partition&)>& visit)
{
    if (row > alpha.length()) {
        if (size == 0)
            visit(Partition(lambda));
        return;
    }
    const int base = alpha.part(row);
    const int cap = row == 0 ? base + size : std::min(alpha.part(row - 1) - base, size) + base;
    for (int v = cap; v >= base; --v) {
        if (v == 0 && row == alpha.length()) {
            lambda.resize(static_cast<std::size_t>(row));
        } else {
            lambda.resize(static_cast<std::size_t>(row) + 1);
            lambda[static_cast<std::size_t>(row)] = v;
        }
        strips_above(alpha, size - (v - base), row + 1, lambda, visit);
    }
    lambda.resize(static_cast<std::size_t>(row));
}

struct PieriCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, int>, std::unique_ptr<PieriExpansion>> table;
    std::atomic<std::size_t> hits{0};
};

PieriCache& cache()
{
    static PieriCache c;
    return c;
}

} // namespace

PieriExpansion pieri_expand_uncached(const Partition& gamma, int l)
{
    if (l < 0)
        throw std::invalid_argument("Pieri row length must be nonnegative");
    PieriExpansion out;
    std::vector<int> alpha = gamma.parts();
    strips_below(gamma, l, 0, alpha, 0, [&](const Partition& a, int removed) {
        std::vector<int> lambda;
        strips_above(a, l - removed, 0, lambda, [&](const Partition& lam) { ++out[lam]; });
    });
    return out;
}

const PieriExpansion& pieri_expand(const Partition& gamma, int l)
{
    auto& c = cache();
    auto key = std::make_pair(gamma, l);
    {
        std::shared_lock lock(c.mutex);
        auto it = c.table.find(key);
        if (it != c.table.end()) {
            c.hits.fetch_add(1, std::memory_order_relaxed);
            return *it->second;
        }
    }
    auto value = std::make_unique<PieriExpansion>(pieri_expand_uncached(gamma, l));
    std::unique_lock lock(c.mutex);
    auto [it, inserted] = c.table.emplace(std::move(key), std::move(value));
    return *it->second;
}

std::uint64_t stable_pieri(const Partition& gamma, int l, const Partition& lambda)
{
    if (l < 0)
        throw std::invalid_argument("Pieri row length must be nonnegative");
    const int lo = gamma.weight() - l, hi = gamma.weight() + l;
    if (lambda.weight() < lo || lambda.weight() > hi || (hi - lambda.weight()) % 2 != 0)
        return 0;
    const auto& expansion = pieri_expand(gamma, l);
    auto it = expansion.find(lambda);
    return it == expansion.end() ? 0 : it->second;
}

CacheStats pieri_cache_stats()
{
    auto& c = cache();
    std::shared_lock lock(c.mutex);
    return {c.table.size(), c.hits.load()};
}

void pieri_cache_clear()
{
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    c.table.clear();
    c.hits = 0;
}

std::vector<std::pair<std::pair<Partition, int>, PieriExpansion>> pieri_cache_snapshot()
{
    auto& c = cache();
    std::shared_lock lock(c.mutex);
    std::vector<std::pair<std::pair<Partition, int>, PieriExpansion>> out;
    for (const auto& [key, value] : c.table)
        out.emplace_back(key, *value);
    return out;
}

void pieri_cache_insert(const Partition& gamma, int l, PieriExpansion value)
{
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    // references handed out by pieri_expand stay valid, so existing entries are kept
    c.table.emplace(std::make_pair(gamma, l), std::make_unique<PieriExpansion>(std::move(value)));
}

} // namespace lqa
