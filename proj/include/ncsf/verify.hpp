#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncsf {

// The identity-verification harness behind `verify-all` and the acceptance
// suite: every check pits a closed form against an independent brute-force
// oracle (or two algebraic routes against each other) with exact arithmetic.
// All randomness flows from the seed, so reports are byte-identical across
// runs with the same configuration.

struct VerifyConfig {
    std::uint64_t seed = 42;
    int max_n = 6;           // degree bound for the Sym/tensor identities
    int pair_oracle_n = 6;   // bound for the (n!)^2 permutation-pair oracles
    int q_order = 12;
    int p_order = 10;
    int theta_letters = 3;   // alphabet size for theta checks
    int theta_len = 5;       // word length for theta checks
    int random_relations = 50;
    int fr_n = 4;            // degree for the Fedou-Rawlings comparison
    int fr_ij = 2;           // chain indices for the same
    int poly_width = 4;
    int poly_area = 10;
    int heap_len = 5;
    int heap_max_j = 4;
};

struct CheckResult {
    std::string id;      // stable short identifier, e.g. "gamma-morphism"
    std::string name;    // one-line description
    bool pass = false;
    std::string detail;  // filled on failure, or with a short note
};

// Runs every acceptance check, in a fixed order independent of execution.
std::vector<CheckResult> run_verify_all(const VerifyConfig& cfg);

}  // namespace ncsf
