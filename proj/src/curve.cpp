#include "agcodes/curve.hpp"

#include <numeric>
#include <string>

namespace agcodes {

ASCurve::ASCurve(FieldPtr field, std::uint32_t q, std::uint32_t m) : field_(std::move(field)), q_(q), m_(m) {
    if (field_->degree() % 2 != 0 || field_->subfield_order() != q_)
        throw CurveError("curve field must be GF(q^2)");
    if (m_ == 0) throw CurveError("exponent m must be positive");
    if (m_ % field_->characteristic() == 0)
        throw CurveError("p | m: exponent must be prime to the characteristic");
}

ASCurve make_curve(std::uint32_t q, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    const auto pp = prime_power(q);
    if (!pp) throw CurveError("q = " + std::to_string(q) + " is not a prime power");
    if (m == 0) throw CurveError("exponent m must be positive");
    if (m % pp->first == 0) throw CurveError("p | m: exponent must be prime to the characteristic");
    return ASCurve(Field::create(pp->first, 2 * pp->second, std::move(modulus)), q, m);
}

bool ASCurve::on_curve(const AffinePoint& pt) const {
    const Field& f = *field_;
    return f.add(f.pow(pt.y, q_), pt.y) == f.pow(pt.x, m_);
}

std::vector<AffinePoint> ASCurve::points_over(std::span<const Rep> xs) const {
    const Field& f = *field_;
    const auto fibers = trace_fibers(f);
    std::vector<AffinePoint> pts;
    pts.reserve(static_cast<std::size_t>(q_) * xs.size());
    for (Rep x : xs) {
        if (x >= f.size()) throw CurveError("x outside GF(q^2)");
        const Rep c = f.pow(x, m_);
        if (!f.in_subfield(c))
            throw CurveError("x = " + std::to_string(x) + " is inadmissible: x^m is not in GF(q)");
        for (Rep y : fibers[c]) pts.push_back({x, y});
    }
    return pts;
}

PointCount count_and_check_maximal(const ASCurve& curve) {
    const Field& f = *curve.field();
    const auto fibers = trace_fibers(f);
    std::uint64_t n = 1;
    for (Rep x = 0; x < f.size(); ++x) n += fibers[f.pow(x, curve.m())].size();
    const std::uint64_t q = curve.q();
    const std::uint64_t bound = q * q + 1 + 2 * static_cast<std::uint64_t>(curve.genus()) * q;
    return {n, bound, n == bound};
}

}  // namespace agcodes
