// Acceptance suite: runs every identity check at its full configured scale and
// prints one pass/fail line per criterion. Exit status 0 only when all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "ncsf/verify.hpp"

int main(int argc, char** argv) {
    ncsf::VerifyConfig cfg;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--seed") cfg.seed = std::stoull(argv[i + 1]);
        else if (flag == "--max-n") cfg.max_n = std::stoi(argv[i + 1]);
    }

    const std::vector<ncsf::CheckResult> results = ncsf::run_verify_all(cfg);
    bool all_pass = true;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::printf("[%2d] %-20s %s  %s%s%s\n", index, r.id.c_str(),
                    r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all checks passed"
                                 : "acceptance: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
