#pragma once

#include "lqa/lr.hpp"
#include "lqa/partition.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lqa {

using PieriExpansion = std::map<Partition, std::uint64_t>;

/// Stable multiplicity of V(lambda) in V(gamma) (x) V(l): the number of alpha
/// contained in both gamma and lambda with gamma/alpha and lambda/alpha horizontal
/// strips of total size l.
std::uint64_t stable_pieri(const Partition& gamma, int l, const Partition& lambda);

/// Full support of lambda -> stable_pieri(gamma, l, lambda). Memoized.
const PieriExpansion& pieri_expand(const Partition& gamma, int l);

/// Same, computed afresh without the memo table.
PieriExpansion pieri_expand_uncached(const Partition& gamma, int l);

CacheStats pieri_cache_stats();
void pieri_cache_clear();

std::vector<std::pair<std::pair<Partition, int>, PieriExpansion>> pieri_cache_snapshot();
void pieri_cache_insert(const Partition& gamma, int l, PieriExpansion value);

} // namespace lqa
