#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packfold/generators.hpp"

namespace packfold {

struct FuzzOptions {
    std::string method;  // thm1, 133, 1222, 112
    int count = 100;
    int n_min = 4;
    int n_max = 100;
    std::uint64_t seed = 1;
    int k = 3;  // method 133 only
    // Defaults per method when unset; instance i is two_connected when
    // i % 4 == 0 for the methods that do not require it.
    std::optional<Constraints> constraints;
    int threads = 0;         // 0: hardware concurrency
    std::string repro_dir;   // reproducers are written here when non-empty
    bool inject_fault = false;  // corrupt every coloring (harness self-test)
};

struct FuzzReport {
    int total = 0;
    int valid = 0;
    int rejected = 0;  // precondition failures
    int failed = 0;
    int fallback_instances = 0;  // 112 only
    int retried_instances = 0;   // 1222 only
    double seconds = 0;
    std::vector<std::string> failures;  // one line per failed instance
    std::vector<std::string> reproducers;

    std::string summary() const;
    bool ok() const { return failed == 0; }
};

// Instance i uses seed + i. Throws std::invalid_argument for an unknown method.
FuzzReport run_fuzz(const FuzzOptions& opt);

// The instance run_fuzz would generate for index i.
GeneratedGraph fuzz_instance(const FuzzOptions& opt, int i);

}  // namespace packfold
