#pragma once

#include "qhyper/verify.hpp"

namespace qhyper {

// Optional parameter overrides; unset fields take per-check defaults.
struct CheckParams {
    int n = 0;
    int m = 0;
    int l = 0;
    int k = 0;        // Pfaffian block size
    int axis = 0;
    int r = 0;
    int t = -1;
    int blocks = 0;   // Pfaffian block count
    int kprime = 0;
    int p = 0;
    int instances = 0;
    int mode = 0;     // 0 auto, 1 exact, 2 specialize
    int samples = 0;
    uint64_t seed = 0;
    size_t max_dim = 0;
    size_t max_rows = 0;
};

struct RegistryEntry {
    std::string id;
    std::string description;
    std::string default_sizes;
};

struct CheckOutcome {
    std::string id;
    std::string params_text;
    MembershipReport report;
    bool pass = false;
};

const std::vector<RegistryEntry>& check_registry();
bool check_registered(const std::string& id);
CheckOutcome check_theorem(const std::string& id, const CheckParams& params = {});

} // namespace qhyper
