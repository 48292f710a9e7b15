#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/agcode.hpp"

namespace agcodes {

/// Raised when construction parameters violate a family hypothesis.
/// The message names the violated condition.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FamilyKind {
    as_roots,   // y^q + y = x^m, x in mu_{m(q-1)} + {0}
    herm_mult,  // Hermitian curve, x in mu_s + {0}
    herm_add,   // Hermitian curve, x in an F_p-subspace V_k
};

struct FamilySpec {
    FamilyKind kind;
    std::uint32_t q;
    std::uint32_t p;
    std::uint32_t t;      // q = p^t
    std::uint32_t param;  // m, s or k depending on kind
    std::vector<Rep> subspace_basis;
    std::shared_ptr<const ASCurve> curve;
    std::vector<Rep> xs;
    std::size_t n;
    std::int64_t g;

    /// "as", "herm-mult" or "herm-add".
    std::string tag() const;
    /// e.g. "as(8,3)"
    std::string label() const;
    /// n + 2g - 2, the degree of the differential divisor used for duals.
    std::int64_t dual_degree() const { return static_cast<std::int64_t>(n) + 2 * g - 2; }
};

FamilySpec validate_as_roots(std::uint32_t q, std::uint32_t m,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
FamilySpec validate_herm_mult(std::uint32_t q, std::uint32_t s,
                              std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
/// Without an explicit basis the subspace is spanned by 1, g, ..., g^(k-1), g primitive.
FamilySpec validate_herm_add(std::uint32_t q, std::uint32_t k, std::optional<std::vector<Rep>> basis = std::nullopt,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

struct RadiusRange {
    std::int64_t lo;
    std::int64_t hi;
    bool empty() const { return lo > hi; }
    bool contains(std::int64_t r) const { return lo <= r && r <= hi; }
};

struct PredictedParams {
    std::size_t n = 0;
    std::int64_t g = 0;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> k0;  // r - g + 1, only for 2g - 2 < r < n
    std::int64_t d0_lower = 0;       // n - r, clamped at 1
    RadiusRange euclidean_so_range{0, -1};
    std::optional<RadiusRange> hermitian_so_range;
    std::optional<std::int64_t> self_dual_r;

    bool predicts_euclidean_so() const { return r && euclidean_so_range.contains(*r); }
    bool predicts_hermitian_so() const { return r && hermitian_so_range && hermitian_so_range->contains(*r); }
    bool predicts_self_dual() const { return r && self_dual_r && *self_dual_r == *r; }
};

/// Theorem ranges and self-dual radius; no radius-specific fields.
PredictedParams ranges(const FamilySpec& spec);

/// Ranges plus the radius-specific predictions.
PredictedParams predict(const FamilySpec& spec, std::int64_t r);

struct FamilyCode {
    EvalCode code;
    PredictedParams predicted;
};

FamilyCode build(const FamilySpec& spec, std::int64_t r);

struct QuantumParams {
    std::size_t n;
    std::int64_t k1;
    std::int64_t d1_lower;
    std::uint32_t q;

    /// "[[n,k,>=d]]_q"
    std::string to_string() const;
};

/// Hermitian construction applied to the AS_ROOTS code at radius r.
QuantumParams quantum_params(const FamilySpec& spec, std::int64_t r);

/// The closed forms k1 = mq^2 - m - 2r - 1 and d1 >= r - mq + m + q + 1.
std::pair<std::int64_t, std::int64_t> quantum_closed_form(std::int64_t q, std::int64_t m, std::int64_t r);

/// C_L(D, rQ)^perp == C_L(D, (n + 2g - 2 - r)Q), checked by row spaces. Requires r > 0.
bool dual_identity_check(const FamilySpec& spec, std::int64_t r);

}  // namespace agcodes
