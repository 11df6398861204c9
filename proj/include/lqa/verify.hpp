#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lqa {

/// Size knobs shared by the verification suites; each suite reads the ones it needs.
struct VerifyParams {
    int max_weight = -1; // partition weight ceiling; -1 picks the suite default
    int degree = -1;     // q-truncation / degree ceiling
    int max_rank = -1;
    int bound = -1;      // matrix weight bound for hl-inverse
    int jobs = 1;
};

struct VerifyReport {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures; // one human-readable counterexample each

    bool passed() const { return failures.empty(); }
};

std::vector<std::string> verify_suite_names();

/// Runs one named suite; throws std::invalid_argument on an unknown name.
VerifyReport run_verify_suite(const std::string& suite, VerifyParams params);

VerifyReport verify_duality(int max_weight, int D, int jobs = 1);
VerifyReport verify_stability(int max_weight, int max_k, int max_rank, int jobs = 1);
VerifyReport verify_hesselink(int max_rank, int max_k, int jobs = 1);
VerifyReport verify_degrees(int max_weight, int max_rank, int jobs = 1);
VerifyReport verify_pieri_oracle(int max_weight, int max_rank, int jobs = 1);
VerifyReport verify_hl_inverse(int bound, int D, int jobs = 1);

} // namespace lqa
