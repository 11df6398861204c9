#include "lqa/kostant.hpp"

#include "lqa/errors.hpp"
#include "lqa/parallel.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace lqa {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ULL;
        return h;
    }
};

struct KostantTable {
    std::shared_mutex mutex;
    // key: [type, rank, cap (-1 for none), root index, beta...]
    std::unordered_map<std::vector<int>, QSeries, VecHash> memo;
    std::atomic<std::size_t> hits{0};
};

KostantTable& table()
{
    static KostantTable t;
    return t;
}

struct RootData {
    std::vector<std::vector<int>> roots;
    std::vector<int> group; // first nonzero coordinate of each root
};

RootData root_data(const RootSystem& rs)
{
    RootData d;
    d.roots = positive_roots_integral(rs);
    // stable-sort by first coordinate so that roots touching coordinate g are contiguous
    std::vector<std::vector<int>> sorted;
    for (int g = 0; g < rs.rank; ++g)
        for (const auto& r : d.roots) {
            int first = 0;
            while (r[static_cast<std::size_t>(first)] == 0)
                ++first;
            if (first == g) {
                sorted.push_back(r);
                d.group.push_back(g);
            }
        }
    d.roots = std::move(sorted);
    return d;
}

class KostantDP {
public:
    KostantDP(const RootSystem& rs, std::optional<int> cap)
        : rs_(rs), cap_(cap), data_(root_data(rs))
    {
    }

    QSeries eval(std::size_t idx, std::vector<int>& beta)
    {
        const int n = rs_.rank;
        if (idx == data_.roots.size()) {
            for (int x : beta)
                if (x != 0)
                    return QSeries(cap_);
            return QSeries::constant(1, cap_);
        }
        const int g = data_.group[idx];
        for (int i = 0; i < g; ++i)
            if (beta[static_cast<std::size_t>(i)] != 0)
                return QSeries(cap_);
        if (!in_positive_cone(rs_, beta))
            return QSeries(cap_);

        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(n) + 4);
        key.push_back(static_cast<int>(rs_.type));
        key.push_back(n);
        key.push_back(cap_ ? *cap_ : -1);
        key.push_back(static_cast<int>(idx));
        key.insert(key.end(), beta.begin(), beta.end());
        auto& t = table();
        {
            std::shared_lock lock(t.mutex);
            auto it = t.memo.find(key);
            if (it != t.memo.end()) {
                t.hits.fetch_add(1, std::memory_order_relaxed);
                return it->second;
            }
        }

        const auto& root = data_.roots[idx];
        const int lead = root[static_cast<std::size_t>(g)];
        int jmax = beta[static_cast<std::size_t>(g)] / lead;
        if (cap_)
            jmax = std::min(jmax, *cap_);
        QSeries total(cap_);
        std::vector<int> rest = beta;
        for (int j = 0; j <= jmax; ++j) {
            QSeries sub = eval(idx + 1, rest);
            if (!sub.is_zero())
                total += sub.shifted(j);
            for (int i = 0; i < n; ++i)
                rest[static_cast<std::size_t>(i)] -= root[static_cast<std::size_t>(i)];
        }

        std::unique_lock lock(t.mutex);
        t.memo.emplace(std::move(key), total);
        return total;
    }

private:
    RootSystem rs_;
    std::optional<int> cap_;
    RootData data_;
};

} // namespace

QSeries q_kostant(const RootSystem& rs, const std::vector<int>& beta, std::optional<int> degree_cap)
{
    if (static_cast<int>(beta.size()) != rs.rank)
        throw invalid_weight("weight length does not match the rank");
    std::vector<int> b = beta;
    return KostantDP(rs, degree_cap).eval(0, b);
}

QSeries k_direct_weights(const RootSystem& rs, const std::vector<int>& lambda,
                         const std::vector<int>& mu, std::optional<int> degree_cap, int jobs)
{
    if (static_cast<int>(lambda.size()) != rs.rank || static_cast<int>(mu.size()) != rs.rank)
        throw invalid_weight("weight length does not match the rank");
    const int shards = weyl_shard_count(rs);
    std::vector<QSeries> partial(static_cast<std::size_t>(shards), QSeries(degree_cap));
    parallel_for(shards, jobs, [&](int shard) {
        KostantDP dp(rs, degree_cap);
        QSeries acc(degree_cap);
        for_each_weyl(
            rs,
            [&](const SignedPermutation& w, int sign) {
                std::vector<int> beta = dot_action(w, lambda, rs);
                for (int i = 0; i < rs.rank; ++i)
                    beta[static_cast<std::size_t>(i)] -= mu[static_cast<std::size_t>(i)];
                if (!in_positive_cone(rs, beta))
                    return;
                QSeries p = dp.eval(0, beta);
                if (sign > 0)
                    acc += p;
                else
                    acc -= p;
            },
            shard, shards);
        partial[static_cast<std::size_t>(shard)] = std::move(acc);
    });
    QSeries total(degree_cap);
    for (const auto& p : partial)
        total += p;
    return total;
}

QSeries k_direct(const RootSystem& rs, const Partition& lambda, const Partition& mu,
                 std::optional<int> degree_cap, int jobs)
{
    return k_direct_weights(rs, weight_of(rs, lambda), weight_of(rs, mu), degree_cap, jobs);
}

Integer weight_multiplicity(const RootSystem& rs, const Partition& lambda, const Partition& mu)
{
    return k_direct(rs, lambda, mu).eval_at_one();
}

CacheStats kostant_cache_stats()
{
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return {t.memo.size(), t.hits.load()};
}

void kostant_cache_clear()
{
    auto& t = table();
    std::unique_lock lock(t.mutex);
    t.memo.clear();
    t.hits = 0;
}

} // namespace lqa
