#pragma once

#include "lqa/lr.hpp"
#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"
#include "lqa/root_system.hpp"

#include <optional>
#include <vector>

namespace lqa {

/// q-analogue of the Kostant partition function: sum over multisets of positive
/// roots adding up to beta of q^(multiset size). Zero outside the positive cone.
/// With `degree_cap` only multisets of size <= cap are counted.
QSeries q_kostant(const RootSystem& rs, const std::vector<int>& beta,
                  std::optional<int> degree_cap = std::nullopt);

/// Alternating Weyl sum of q_kostant(w . lambda - mu). Arbitrary integral weights.
QSeries k_direct_weights(const RootSystem& rs, const std::vector<int>& lambda,
                         const std::vector<int>& mu, std::optional<int> degree_cap = std::nullopt,
                         int jobs = 1);

/// K^g_{lambda,mu}(q) for partitions fitting the rank (invalid_weight otherwise).
QSeries k_direct(const RootSystem& rs, const Partition& lambda, const Partition& mu,
                 std::optional<int> degree_cap = std::nullopt, int jobs = 1);

/// dim V(lambda)_mu, i.e. k_direct at q = 1.
Integer weight_multiplicity(const RootSystem& rs, const Partition& lambda, const Partition& mu);

CacheStats kostant_cache_stats();
void kostant_cache_clear();

} // namespace lqa
