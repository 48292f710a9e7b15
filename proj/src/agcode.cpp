#include "agcodes/agcode.hpp"

#include <stdexcept>
#include <string>

namespace agcodes {

namespace {

// Column j holds base^0 .. base^max_exp for the j-th point coordinate.
std::vector<std::vector<Rep>> power_table(const Field& f, std::span<const Rep> base, std::uint32_t max_exp) {
    std::vector<std::vector<Rep>> out(max_exp + 1, std::vector<Rep>(base.size(), 1));
    for (std::uint32_t e = 1; e <= max_exp; ++e)
        for (std::size_t c = 0; c < base.size(); ++c) out[e][c] = f.mul(out[e - 1][c], base[c]);
    return out;
}

Matrix drop_zero_rows(const RrefResult& red) { return red.reduced.top_rows(red.rank); }

}  // namespace

EvalCode build_code(std::shared_ptr<const ASCurve> curve, std::span<const Rep> xs, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("radius must be non-negative");
    const Field& f = *curve->field();
    auto points = curve->points_over(xs);
    auto basis = monomial_basis(*curve, r);

    std::vector<Rep> px(points.size()), py(points.size());
    std::uint32_t max_i = 0, max_j = 0;
    for (std::size_t c = 0; c < points.size(); ++c) {
        px[c] = points[c].x;
        py[c] = points[c].y;
    }
    for (const auto& mono : basis.monomials) {
        max_i = std::max(max_i, mono.i);
        max_j = std::max(max_j, mono.j);
    }
    const auto xpow = power_table(f, px, max_i);
    const auto ypow = power_table(f, py, max_j);

    Matrix eval(curve->field(), basis.size(), points.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const auto& mono = basis.monomials[t];
        for (std::size_t c = 0; c < points.size(); ++c) eval(t, c) = f.mul(xpow[mono.i][c], ypow[mono.j][c]);
    }
    Matrix gen = drop_zero_rows(rref(eval));

    const std::int64_t g = curve->genus();
    const auto n = static_cast<std::int64_t>(points.size());
    if (r > 2 * g - 2 && r < n && static_cast<std::int64_t>(gen.rows()) != r + 1 - g)
        throw std::logic_error("dimension " + std::to_string(gen.rows()) + " violates r + 1 - g = " +
                               std::to_string(r + 1 - g));

    return EvalCode{std::move(curve), std::move(points), r, std::move(basis), std::move(eval), std::move(gen)};
}

Matrix euclidean_dual(const EvalCode& code) { return nullspace(code.generator); }

Matrix euclidean_gram(const EvalCode& code) { return product(code.generator, code.generator.transpose(), 0); }

Matrix hermitian_gram(const EvalCode& code) {
    const std::uint32_t half = code.field()->degree() / 2;
    return product(code.generator, code.generator.transpose(), half);
}

bool is_euclidean_so(const EvalCode& code) { return euclidean_gram(code).is_zero(); }

bool is_hermitian_so(const EvalCode& code) { return hermitian_gram(code).is_zero(); }

bool dual_matches_radius(const EvalCode& code, std::int64_t dual_r) {
    std::vector<Rep> xs;
    for (const auto& pt : code.points)
        if (xs.empty() || xs.back() != pt.x) xs.push_back(pt.x);
    const EvalCode other = build_code(code.curve, xs, std::max<std::int64_t>(dual_r, 0));
    const Matrix dual = euclidean_dual(code);
    if (dual_r < 0) return dual.rows() == 0;
    return rowspace_equal(dual, other.generator);
}

}  // namespace agcodes
