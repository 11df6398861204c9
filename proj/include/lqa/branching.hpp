#pragma once

#include "lqa/character.hpp"
#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"
#include "lqa/root_system.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lqa {

/// Multiplicity of the so/sp module V(lambda) in the restriction of the gl module
/// V(nu), in the stable range: sum of c^nu_{lambda,gamma} over gamma with even rows
/// (so) or even columns (sp).
std::uint64_t branching(Family family, const Partition& nu, const Partition& lambda);

/// Stable multiplicity m_{k,lambda} of V(lambda) in S^k of the Lie algebra.
Integer sym_mult_stable(Family family, int k, const Partition& lambda);

/// Universal character of S^k(g): lambda -> m_{k,lambda}.
CharExpansion sym_char_stable(Family family, int k);

/// Coefficient of q^k s_lambda in prod_{i>=1}(1 - q^{2i}) * sum_a q^a char S^a(g).
Integer harmonic_coeff_stable(Family family, int k, const Partition& lambda);

/// Rank-free harmonic character mod q^{D+1}, over |lambda| <= 2D.
CharExpansion harmonic_char_stable(Family family, int D);

/// Finite-rank decomposition of a W-invariant character: dominant weight -> multiplicity.
using Decomposition = std::map<std::vector<int>, Integer>;

/// S^0(g), ..., S^kmax(g) at the given rank, from the weights of g and the Weyl
/// alternation. Cached per root system.
std::vector<Decomposition> sym_decompositions_finite(const RootSystem& rs, int kmax);

/// Multiplicity of V(lambda) in S^k(g) at the given rank.
Integer sym_mult_finite(const RootSystem& rs, int k, const Partition& lambda);

/// Degree-k part of the harmonic polynomials, prod_i (1 - q^{d_i}) * char_q S(g).
Decomposition harmonic_decomposition_finite(const RootSystem& rs, int k);

/// Partition-labelled part of harmonic_decomposition_finite. In type D the
/// constituents with negative last coordinate are left out; they mirror the ones
/// with positive last coordinate.
CharExpansion harmonic_char_finite(const RootSystem& rs, int k);

/// so <-> sp with every partition conjugated. Universal expansions only.
CharExpansion phi(const CharExpansion& expansion);

} // namespace lqa
