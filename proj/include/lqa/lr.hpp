#pragma once

#include "lqa/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lqa {

/// Cache key for c^outer_{inner,weight}. `canonical()` orders the two lower
/// shapes, since the coefficient is symmetric in them.
struct LRKey {
    Partition outer;
    Partition inner;
    Partition weight;

    LRKey canonical() const;
    friend bool operator==(const LRKey&, const LRKey&) = default;
    friend auto operator<=>(const LRKey&, const LRKey&) = default;
};

struct LRKeyHash {
    std::size_t operator()(const LRKey& k) const noexcept;
};

/// c^nu_{lambda,gamma}: the number of LR skew tableaux of shape nu/lambda and content gamma.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& gamma, const Partition& nu);

/// Same count, never touching the memo table.
std::uint64_t lr_coefficient_uncached(const Partition& lambda, const Partition& gamma,
                                      const Partition& nu);

struct CacheStats {
    std::size_t entries = 0;
    std::size_t hits = 0;
};

CacheStats lr_cache_stats();
void lr_cache_clear();

/// Entries in key order, for persistence.
std::vector<std::pair<LRKey, std::uint64_t>> lr_cache_snapshot();
/// Seed the table. Values loaded from disk are trusted as-is.
void lr_cache_insert(const LRKey& key, std::uint64_t value);

} // namespace lqa
