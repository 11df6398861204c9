#include "lqa/lr.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace lqa {

LRKey LRKey::canonical() const
{
    if (weight < inner)
        return LRKey{outer, weight, inner};
    return *this;
}

std::size_t LRKeyHash::operator()(const LRKey& k) const noexcept
{
    std::hash<Partition> h;
    std::size_t seed = h(k.outer);
    seed ^= h(k.inner) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= h(k.weight) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

namespace {

// Cells of nu/lambda are visited row by row, right to left inside a row, which is
// the reverse reading order; the lattice condition is then a prefix condition.
class LRCounter {
public:
    LRCounter(const Partition& lambda, const Partition& gamma, const Partition& nu)
        : lambda_(lambda), gamma_(gamma), nu_(nu), rows_(nu.length()),
          filling_(static_cast<std::size_t>(nu.length())),
          count_(static_cast<std::size_t>(gamma.length()) + 1, 0)
    {
        for (int r = 0; r < rows_; ++r)
            filling_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)), 0);
    }

    std::uint64_t run()
    {
        total_ = 0;
        fill(0, nu_.part(0) - 1);
        return total_;
    }

private:
    void fill(int row, int col)
    {
        while (row < rows_ && col < lambda_.part(row)) {
            ++row;
            col = nu_.part(row) - 1;
        }
        if (row == rows_) {
            ++total_;
            return;
        }
        int hi = gamma_.length();
        auto& line = filling_[static_cast<std::size_t>(row)];
        if (col + 1 < nu_.part(row))
            hi = std::min(hi, line[static_cast<std::size_t>(col + 1)]);
        // entries in row r of an LR tableau are at most r+1
        hi = std::min(hi, row + 1);
        int lo = 1;
        if (row > 0 && col >= lambda_.part(row - 1))
            lo = filling_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto& cv = count_[static_cast<std::size_t>(v)];
            if (cv >= gamma_.part(v - 1))
                continue;
            if (v > 1 && cv + 1 > count_[static_cast<std::size_t>(v - 1)])
                continue;
            ++cv;
            line[static_cast<std::size_t>(col)] = v;
            fill(row, col - 1 >= 0 ? col - 1 : -1);
            --cv;
        }
        line[static_cast<std::size_t>(col)] = 0;
    }

    const Partition& lambda_;
    const Partition& gamma_;
    const Partition& nu_;
    int rows_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> count_;
    std::uint64_t total_ = 0;
};

struct LRCache {
    std::shared_mutex mutex;
    std::unordered_map<LRKey, std::uint64_t, LRKeyHash> table;
    std::atomic<std::size_t> hits{0};
};

LRCache& cache()
{
    static LRCache c;
    return c;
}

} // namespace

std::uint64_t lr_coefficient_uncached(const Partition& lambda, const Partition& gamma,
                                      const Partition& nu)
{
    if (nu.weight() != lambda.weight() + gamma.weight() || !nu.contains(lambda) ||
        !nu.contains(gamma))
        return 0;
    if (gamma.empty() || lambda.empty())
        return 1;
    return LRCounter(lambda, gamma, nu).run();
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& gamma, const Partition& nu)
{
    if (nu.weight() != lambda.weight() + gamma.weight() || !nu.contains(lambda) ||
        !nu.contains(gamma))
        return 0;
    LRKey key = LRKey{nu, lambda, gamma}.canonical();
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.table.find(key);
        if (it != c.table.end()) {
            c.hits.fetch_add(1, std::memory_order_relaxed);
            return it->second;
        }
    }
    const std::uint64_t value = lr_coefficient_uncached(key.inner, key.weight, key.outer);
    std::unique_lock lock(c.mutex);
    c.table.emplace(std::move(key), value);
    return value;
}

CacheStats lr_cache_stats()
{
    auto& c = cache();
    std::shared_lock lock(c.mutex);
    return {c.table.size(), c.hits.load()};
}

void lr_cache_clear()
{
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    c.table.clear();
    c.hits = 0;
}

std::vector<std::pair<LRKey, std::uint64_t>> lr_cache_snapshot()
{
    auto& c = cache();
    std::vector<std::pair<LRKey, std::uint64_t>> out;
    {
        std::shared_lock lock(c.mutex);
        out.assign(c.table.begin(), c.table.end());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void lr_cache_insert(const LRKey& key, std::uint64_t value)
{
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    c.table.insert_or_assign(key.canonical(), value);
}

} // namespace lqa
