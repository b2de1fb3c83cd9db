#pragma once

#include "eigenbound/check.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eigenbound::verify {

struct VerifyOptions {
    std::map<std::string, double> tol_overrides; // by check name
    std::uint64_t seed = 987654321u;
};

/// Runs the full identity/inequality ledger. Deterministic for a fixed seed.
std::vector<CheckRecord> run_verification(const VerifyOptions& opts = {});

} // namespace eigenbound::verify
