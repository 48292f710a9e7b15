#pragma once

#include <cstdint>
#include <vector>

#include "agcodes/distance.hpp"
#include "agcodes/families.hpp"
#include "agcodes/report.hpp"

namespace agcodes {

struct SweepBudget {
    std::uint64_t distance_budget = kDefaultDistanceBudget;
    std::uint64_t samples = 0;  // sampled codewords when exact distance is out of budget
    std::uint64_t seed = 0;
    std::size_t dual_identity_max_n = 256;
    bool extended = false;  // every r in 1..n+2g-3 instead of the theorem ranges
    unsigned threads = 0;   // 0: hardware concurrency
};

/// Radii visited by a sweep, ascending.
std::vector<std::int64_t> sweep_radii(const FamilySpec& spec, bool extended);

/// Builds the code at r and runs every applicable check.
RadiusRecord verify_radius(const FamilySpec& spec, std::int64_t r, const SweepBudget& budget);

VerificationReport verify(const FamilySpec& spec, std::int64_t r, const SweepBudget& budget);
VerificationReport sweep(const FamilySpec& spec, const SweepBudget& budget);

}  // namespace agcodes
