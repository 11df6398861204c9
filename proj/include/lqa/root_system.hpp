#pragma once

#include "lqa/partition.hpp"
#include "lqa/qseries.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lqa {

enum class RootType { B, C, D };

char type_letter(RootType t);
RootType parse_root_type(const std::string& s);

/// B_n, C_n or D_n. Any rank >= 1 is accepted; the small D cases (D_2 = A_1xA_1,
/// D_3 = A_3) are useful for stabilization sweeps even though they are not simple.
struct RootSystem {
    RootType type;
    int rank;

    RootSystem(RootType t, int n);

    std::size_t positive_root_count() const;
    std::uint64_t weyl_order() const;
    std::string name() const; // "B3", "C2", ...

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

/// A weight in doubled coordinates: doubled[i] = 2 * beta_i.
struct Weight {
    std::vector<int> doubled;

    static Weight from_integral(const std::vector<int>& coords);
    int size() const { return static_cast<int>(doubled.size()); }
    bool is_integral() const;
    /// Plain coordinates; throws invalid_weight if some coordinate is a half-integer.
    std::vector<int> integral() const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// w sends e_i to sign_i * e_{perm[i]}; sign_i = -1 iff bit i of `flips` is set.
struct SignedPermutation {
    std::vector<int> perm;
    std::uint32_t flips = 0;

    static SignedPermutation identity(int n);
    int size() const { return static_cast<int>(perm.size()); }
    int sign() const;
    bool flipped(int i) const { return (flips >> i) & 1u; }

    std::vector<int> apply(const std::vector<int>& beta) const;
    Weight apply(const Weight& beta) const { return Weight{apply(beta.doubled)}; }

    /// (*this) after `other`.
    SignedPermutation compose(const SignedPermutation& other) const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

std::vector<Weight> positive_roots(const RootSystem& rs);
/// Positive roots as plain integer vectors (every root is integral).
std::vector<std::vector<int>> positive_roots_integral(const RootSystem& rs);

Weight rho(const RootSystem& rs);

std::vector<int> degrees(const RootSystem& rs);
/// dim g = rank + 2 * #positive roots.
int algebra_dimension(const RootSystem& rs);

/// Visit every Weyl group element once, with its sign (-1)^length. Elements are
/// grouped by flip set; shard `shard` of `shards` takes every shards-th flip set.
void for_each_weyl(const RootSystem& rs,
                   const std::function<void(const SignedPermutation&, int)>& visit,
                   int shard = 0, int shards = 1);

/// Number of reachable flip sets, i.e. the natural sharding width.
int weyl_shard_count(const RootSystem& rs);

/// w(lambda + rho) - rho on integral coordinates.
std::vector<int> dot_action(const SignedPermutation& w, const std::vector<int>& lambda,
                            const RootSystem& rs);

/// True iff beta is a nonnegative integer combination of simple roots.
bool in_positive_cone(const RootSystem& rs, const std::vector<int>& beta);

/// Sum of simple-root coefficients of beta (only meaningful inside the cone).
Integer root_height(const RootSystem& rs, const std::vector<int>& beta);

/// Weyl dimension formula for an integral dominant weight.
Integer weyl_dimension(const RootSystem& rs, const std::vector<int>& lambda);

/// Dominant for the type: weakly decreasing, last coordinate >= 0 except in type D,
/// where lambda_{n-1} >= |lambda_n|.
bool is_dominant(const RootSystem& rs, const std::vector<int>& lambda);

/// Pads a partition to the rank; throws invalid_weight when it is too long.
std::vector<int> weight_of(const RootSystem& rs, const Partition& lambda);

} // namespace lqa
