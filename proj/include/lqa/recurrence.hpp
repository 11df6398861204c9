#pragma once

#include "lqa/character.hpp"
#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"
#include "lqa/root_system.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lqa {

struct RecurrenceTerm {
    int s;           // 1-based
    int R;           // nu_s - s - mu_1 + 1
    Partition gamma; // gamma(s)
};

struct RecurrenceFrame {
    Partition nu;
    Partition mu;
    int p = 0;
    std::vector<RecurrenceTerm> terms; // s = 1..p
};

RecurrenceFrame build_frame(const Partition& nu, const Partition& mu);

/// Image of the universal character indexed by lambda in the representation
/// ring at the given rank, as signed multiplicities of dominant weights. Long
/// partitions are reduced by the border-strip modification rules; in type D a
/// full-length result also contributes its image with the last coordinate negated.
std::map<std::vector<int>, int> specialize_universal(RootType type, int rank, const Partition& lambda);

/// Smallest rank the finite recurrence descends to: 1 for B and C, 2 for D
/// (so(2) is abelian and does not follow the general pattern).
int default_base_rank(RootType type);

/// The rank-lowering recurrence: K at rank n from K at rank n-1 with mu replaced
/// by drop_first(mu). The stable Pieri coefficients are specialized to rank n-1,
/// so every length of nu up to the rank is covered. Needs rank >= length(nu)
/// (out_of_regime otherwise); ranks at or below `base_rank` (0 = default) are
/// handed to k_direct.
QSeries k_recurrence_finite(const RootSystem& rs, const Partition& nu, const Partition& mu,
                            int base_rank = 0);

/// Rank-stable limit series K^{so}_{nu,mu} or K^{sp}_{nu,mu} mod q^{D+1}.
QSeries k_limit(Family family, const Partition& nu, const Partition& mu, int D);

void recurrence_cache_clear();

struct DegreeBounds {
    int lower;
    int upper;
};

/// Lowest possible and exact top degree of a nonzero K^g_{nu,mu}.
DegreeBounds degree_bounds(const RootSystem& rs, const Partition& nu, const Partition& mu);

/// dim J^k: partial sum of the coefficients of K^g_{lambda,mu} up to q^k (0 for k = -1).
Integer brylinski_dims(const RootSystem& rs, const Partition& lambda, const Partition& mu, int k);

} // namespace lqa
