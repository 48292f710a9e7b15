#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "agcodes/families.hpp"
#include "agcodes/fmatrix.hpp"

namespace agcodes {

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 26;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DistanceKind { exact, upper_bound, designed_only };

const char* to_string(DistanceKind kind);

struct DistanceResult {
    DistanceKind kind = DistanceKind::designed_only;
    std::optional<std::size_t> value;
    std::vector<Rep> certificate;  // a codeword of weight `value`
    std::uint64_t work = 0;        // codewords examined
};

/// |F|^k - 1, saturating at UINT64_MAX.
std::uint64_t message_space(std::uint32_t field_size, std::size_t k);

/// Minimum weight of the row space of `generator` (assumed full row rank).
/// Only one representative per projective point is visited; throws
/// BudgetExceeded when |F|^k - 1 > budget.
DistanceResult exact_distance(const Matrix& generator, std::uint64_t budget = kDefaultDistanceBudget);
DistanceResult exact_distance(const EvalCode& code, std::uint64_t budget = kDefaultDistanceBudget);

/// Minimum weight over `samples` codewords: the generator rows first, then
/// uniformly random nonzero messages drawn from a generator seeded by `seed`.
DistanceResult sampled_upper_bound(const Matrix& generator, std::uint64_t samples, std::uint64_t seed);

struct DesignedBounds {
    std::int64_t d_lower;       // n - r
    std::int64_t d_dual_lower;  // r - 2g + 2
};

/// Goppa bounds for C_L(D, rQ) and its dual, clamped below at 1.
DesignedBounds designed_bounds(const FamilySpec& spec, std::int64_t r);

}  // namespace agcodes
