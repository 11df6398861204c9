#include "lqa/verify.hpp"

#include "lqa/branching.hpp"
#include "lqa/hall_littlewood.hpp"
#include "lqa/kostant.hpp"
#include "lqa/parallel.hpp"
#include "lqa/recurrence.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace lqa {

namespace {

struct Partial {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++checks;
        if (!ok)
            failures.push_back(describe());
    }
};

// Runs the tasks (possibly in parallel) and merges their findings in task order.
VerifyReport gather(const std::string& suite, const std::vector<std::function<void(Partial&)>>& tasks,
                    int jobs)
{
    std::vector<Partial> parts(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), jobs,
                 [&](int i) { tasks[static_cast<std::size_t>(i)](parts[static_cast<std::size_t>(i)]); });
    VerifyReport report{suite, 0, {}};
    for (auto& p : parts) {
        report.checks += p.checks;
        for (auto& f : p.failures)
            report.failures.push_back(std::move(f));
    }
    return report;
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string paren(const std::vector<int>& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

const RootType all_types[] = {RootType::B, RootType::C, RootType::D};

int or_default(int value, int fallback) { return value < 0 ? fallback : value; }

} // namespace

std::vector<std::string> verify_suite_names()
{
    return {"duality", "stability", "hesselink", "degrees", "pieri-oracle", "hl-inverse"};
}

VerifyReport verify_duality(int max_weight, int D, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (const auto& lambda : enumerate_partitions(max_weight)) {
        tasks.push_back([lambda, D](Partial& out) {
            const QSeries so = k_limit(Family::so, lambda, Partition(), D);
            const QSeries sp = k_limit(Family::sp, conjugate(lambda), Partition(), D);
            out.check(so == sp, [&] {
                return "duality lambda=" + paren(lambda) + ": so gives " + so.to_string() +
                       ", sp at the conjugate gives " + sp.to_string();
            });
        });
    }
    // second path: graded harmonic characters from symmetric-algebra branching
    const int hw = std::min(max_weight, 6);
    const int hk = std::min(D, 6);
    for (Family f : {Family::so, Family::sp}) {
        for (const auto& lambda : enumerate_partitions(hw)) {
            tasks.push_back([f, lambda, hk, D](Partial& out) {
                const QSeries K = k_limit(f, lambda, Partition(), D);
                for (int k = 0; k <= hk; ++k) {
                    const Integer h = harmonic_coeff_stable(f, k, lambda);
                    const Integer c = K.coefficient(k);
                    out.check(h == c, [&] {
                        return "harmonic " + family_name(f) + " k=" + std::to_string(k) +
                               " lambda=" + paren(lambda) + ": branching gives " + h.str() +
                               ", limit recurrence gives " + c.str();
                    });
                }
            });
        }
    }
    return gather("duality", tasks, jobs);
}

VerifyReport verify_stability(int max_weight, int max_k, int max_rank, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (const auto& nu : enumerate_partitions(max_weight)) {
        for (const auto& mu : enumerate_partitions(nu.weight())) {
            if (!stable_dominates(nu, mu))
                continue;
            tasks.push_back([nu, mu, max_k, max_rank](Partial& out) {
                const int a = mu.length();
                for (int k = 0; k <= max_k; ++k) {
                    const int hi = 2 * k + a + 2;
                    if (hi > max_rank)
                        continue;
                    const int lo = std::max({2 * k + a, nu.length(), 1});
                    const Integer so_lim = k_limit(Family::so, nu, mu, k).coefficient(k);
                    const Integer sp_lim = k_limit(Family::sp, nu, mu, k).coefficient(k);
                    for (int n = lo; n <= hi; ++n) {
                        const Integer b = k_direct(RootSystem(RootType::B, n), nu, mu, k).coefficient(k);
                        const Integer c = k_direct(RootSystem(RootType::C, n), nu, mu, k).coefficient(k);
                        const Integer d = k_direct(RootSystem(RootType::D, n), nu, mu, k).coefficient(k);
                        auto where = [&] {
                            return " nu=" + paren(nu) + " mu=" + paren(mu) + " k=" + std::to_string(k) +
                                   " n=" + std::to_string(n);
                        };
                        out.check(b == so_lim, [&] {
                            return "stability B" + where() + ": " + b.str() + " vs limit " + so_lim.str();
                        });
                        out.check(d == so_lim, [&] {
                            return "stability D" + where() + ": " + d.str() + " vs limit " + so_lim.str();
                        });
                        out.check(c == sp_lim, [&] {
                            return "stability C" + where() + ": " + c.str() + " vs limit " + sp_lim.str();
                        });
                    }
                }
            });
        }
    }
    return gather("stability", tasks, jobs);
}

VerifyReport verify_hesselink(int max_rank, int max_k, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (RootType t : all_types) {
        for (int n = 2; n <= max_rank; ++n) {
            tasks.push_back([t, n, max_k](Partial& out) {
                const RootSystem rs(t, n);
                const std::vector<int> zero(static_cast<std::size_t>(n), 0);
                for (int k = 0; k <= max_k; ++k) {
                    const Decomposition h = harmonic_decomposition_finite(rs, k);
                    std::map<std::vector<int>, bool> candidates;
                    for (const auto& [w, m] : h)
                        candidates[w] = true;
                    for (const auto& lambda : enumerate_partitions_fitting(2 * k, n))
                        candidates[weight_of(rs, lambda)] = true;
                    for (const auto& [w, unused] : candidates) {
                        auto it = h.find(w);
                        const Integer got = it == h.end() ? Integer(0) : it->second;
                        const Integer want = k_direct_weights(rs, w, zero, k).coefficient(k);
                        out.check(got == want, [&] {
                            return "hesselink " + rs.name() + " k=" + std::to_string(k) +
                                   " lambda=" + paren(w) + ": harmonic multiplicity " + got.str() +
                                   ", K coefficient " + want.str();
                        });
                    }
                }
            });
        }
    }
    return gather("hesselink", tasks, jobs);
}

VerifyReport verify_degrees(int max_weight, int max_rank, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (RootType t : all_types) {
        for (int n = 2; n <= max_rank; ++n) {
            for (const auto& nu : enumerate_partitions_fitting(max_weight, n)) {
                tasks.push_back([t, n, nu](Partial& out) {
                    const RootSystem rs(t, n);
                    for (const auto& mu : enumerate_partitions_fitting(nu.weight(), n)) {
                        const QSeries K = k_direct(rs, nu, mu);
                        const auto bounds = degree_bounds(rs, nu, mu);
                        std::vector<int> beta = weight_of(rs, nu);
                        const auto m = weight_of(rs, mu);
                        for (int i = 0; i < n; ++i)
                            beta[static_cast<std::size_t>(i)] -= m[static_cast<std::size_t>(i)];
                        const bool in_cone = in_positive_cone(rs, beta);
                        auto where = [&] {
                            return " " + rs.name() + " nu=" + paren(nu) + " mu=" + paren(mu) + " K=" +
                                   K.to_string();
                        };
                        out.check(K.all_nonnegative(), [&] { return "negative coefficient" + where(); });
                        out.check(K.is_zero() != in_cone, [&] { return "support mismatch" + where(); });
                        if (K.is_zero())
                            continue;
                        out.check(K.high_degree() == bounds.upper && K.terms().back().second == 1, [&] {
                            return "not monic of degree " + std::to_string(bounds.upper) + where();
                        });
                        out.check(K.low_degree() >= bounds.lower, [&] {
                            return "below degree " + std::to_string(bounds.lower) + where();
                        });
                    }
                });
            }
        }
    }
    return gather("degrees", tasks, jobs);
}

VerifyReport verify_pieri_oracle(int max_weight, int max_rank, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (RootType t : all_types) {
        for (int n = 2; n <= max_rank; ++n) {
            for (const auto& nu : enumerate_partitions_fitting(max_weight, n)) {
                tasks.push_back([t, n, nu](Partial& out) {
                    const RootSystem rs(t, n);
                    for (const auto& mu : enumerate_partitions_fitting(nu.weight(), n)) {
                        const QSeries direct = k_direct(rs, nu, mu);
                        const QSeries rec = k_recurrence_finite(rs, nu, mu);
                        out.check(direct == rec, [&] {
                            return "recurrence " + rs.name() + " nu=" + paren(nu) + " mu=" + paren(mu) +
                                   ": direct " + direct.to_string() + ", recurrence " + rec.to_string();
                        });
                    }
                });
            }
        }
    }
    return gather("pieri-oracle", tasks, jobs);
}

VerifyReport verify_hl_inverse(int bound, int D, int jobs)
{
    std::vector<std::function<void(Partial&)>> tasks;
    for (Family f : {Family::so, Family::sp}) {
        tasks.push_back([f, bound, D](Partial& out) {
            const TruncatedKMatrix K = k_matrix(f, bound, D);
            out.check(K.is_upper_unitriangular(),
                      [&] { return family_name(f) + " K-matrix is not upper unitriangular"; });
            const TruncatedKMatrix P = p_basis_matrix(f, bound, D);
            for (const auto* product : {&P, &K}) {
                const TruncatedKMatrix M = product == &P ? multiply(P, K) : multiply(K, P);
                const auto defects = identity_defects(M);
                out.check(defects.empty(), [&] {
                    const auto [i, j] = defects.front();
                    return family_name(f) + (product == &P ? " P*K" : " K*P") + " entry (" +
                           paren(M.index[i]) + ", " + paren(M.index[j]) + ") is " +
                           M.at(i, j).to_string() + " mod q^" + std::to_string(D + 1);
                });
            }
        });
    }
    return gather("hl-inverse", tasks, jobs);
}

VerifyReport run_verify_suite(const std::string& suite, VerifyParams p)
{
    if (suite == "duality")
        return verify_duality(or_default(p.max_weight, 6), or_default(p.degree, 8), p.jobs);
    if (suite == "stability")
        return verify_stability(or_default(p.max_weight, 4), or_default(p.degree, 2),
                                or_default(p.max_rank, 5), p.jobs);
    if (suite == "hesselink")
        return verify_hesselink(or_default(p.max_rank, 3), or_default(p.degree, 3), p.jobs);
    if (suite == "degrees")
        return verify_degrees(or_default(p.max_weight, 5), or_default(p.max_rank, 4), p.jobs);
    if (suite == "pieri-oracle")
        return verify_pieri_oracle(or_default(p.max_weight, 5), or_default(p.max_rank, 4), p.jobs);
    if (suite == "hl-inverse")
        return verify_hl_inverse(or_default(p.bound, 8), or_default(p.degree, 3), p.jobs);
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

} // namespace lqa
