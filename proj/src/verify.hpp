#pragma once

#include <cstdint>
#include <string>

namespace ratknot {

struct VerifyOptions {
    int max_len = 5;                  // longest twist vector
    std::int64_t max_abs = 3;         // largest |n_i|
    std::int64_t max_modulus = 7;     // coloring moduli 2..max_modulus
    std::uint64_t brute_cap = 1'000'000;  // per-case brute-force bound
};

struct VerifyReport {
    std::uint64_t determinant_cases = 0;  // four-way positive checks
    std::uint64_t signed_cases = 0;       // polynomial vs. minor, signed
    std::uint64_t coloring_cases = 0;     // formula vs. SNF
    std::uint64_t brute_cases = 0;        // cases additionally brute-forced
    bool ok = true;
    std::string discrepancy;  // empty when ok

    std::string summary() const;
};

// Cross-checks every computation route on all twist vectors within the
// bounds; stops at the first disagreement.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace ratknot
