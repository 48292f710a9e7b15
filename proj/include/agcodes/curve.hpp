#pragma once

#include <span>
#include <vector>

#include "agcodes/gf.hpp"

namespace agcodes {

class CurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AffinePoint {
    Rep x;
    Rep y;
    bool operator==(const AffinePoint&) const = default;
};

/// The curve y^q + y = x^m over GF(q^2). Hermitian when m = q + 1.
class ASCurve {
public:
    ASCurve(FieldPtr field, std::uint32_t q, std::uint32_t m);

    const FieldPtr& field() const { return field_; }
    std::uint32_t characteristic() const { return field_->characteristic(); }
    std::uint32_t q() const { return q_; }
    std::uint32_t m() const { return m_; }
    std::int64_t genus() const { return static_cast<std::int64_t>(m_ - 1) * (q_ - 1) / 2; }
    bool hermitian() const { return m_ == q_ + 1; }

    /// Points (x, y) above each x in order, y ascending.
    /// Throws CurveError if some x^m lies outside GF(q).
    std::vector<AffinePoint> points_over(std::span<const Rep> xs) const;

    bool on_curve(const AffinePoint& pt) const;

private:
    FieldPtr field_;
    std::uint32_t q_;
    std::uint32_t m_;
};

/// Builds the curve over GF(q^2); `modulus` (low degree first) overrides the
/// default field modulus.
ASCurve make_curve(std::uint32_t q, std::uint32_t m,
                   std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

struct PointCount {
    std::uint64_t rational_points;  // affine points plus the single point at infinity
    std::uint64_t hasse_weil_bound; // q^2 + 1 + 2gq
    bool maximal;
};

PointCount count_and_check_maximal(const ASCurve& curve);

}  // namespace agcodes
