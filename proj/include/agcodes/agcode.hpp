#pragma once

#include <memory>
#include <span>
#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/fmatrix.hpp"
#include "agcodes/rrbasis.hpp"

namespace agcodes {

/// The evaluation code C_L(D, r Q_inf) on the points above an admissible x-set.
struct EvalCode {
    std::shared_ptr<const ASCurve> curve;
    std::vector<AffinePoint> points;
    std::int64_t r;
    RRBasis basis;
    Matrix evaluation;  // |basis| x n, row t is monomial t evaluated at every point
    Matrix generator;   // rref(evaluation) without zero rows

    std::size_t n() const { return points.size(); }
    std::size_t k() const { return generator.rows(); }
    const FieldPtr& field() const { return curve->field(); }
};

/// Builds the code. When 2g - 2 < r < n the dimension r + 1 - g is enforced.
EvalCode build_code(std::shared_ptr<const ASCurve> curve, std::span<const Rep> xs, std::int64_t r);

/// Null space of the generator matrix (n - k rows).
Matrix euclidean_dual(const EvalCode& code);

/// G * G^T
Matrix euclidean_gram(const EvalCode& code);
/// G^(q) * G^T, the left factor conjugated entrywise.
Matrix hermitian_gram(const EvalCode& code);

bool is_euclidean_so(const EvalCode& code);
bool is_hermitian_so(const EvalCode& code);

/// C^perp == C_L(D, dual_r Q_inf) on the same evaluation set.
bool dual_matches_radius(const EvalCode& code, std::int64_t dual_r);

}  // namespace agcodes
