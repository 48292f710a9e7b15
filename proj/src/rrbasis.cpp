#include "agcodes/rrbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcodes {

RRBasis monomial_basis(const ASCurve& curve, std::int64_t r) {
    RRBasis basis{curve.q(), curve.m(), r, {}};
    if (r < 0) return basis;
    const std::int64_t q = curve.q(), m = curve.m();
    for (std::int64_t j = 0; j < q && m * j <= r; ++j)
        for (std::int64_t i = 0; q * i + m * j <= r; ++i)
            basis.monomials.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    std::sort(basis.monomials.begin(), basis.monomials.end(), [&](const Monomial& a, const Monomial& b) {
        const auto pa = basis.pole_order(a), pb = basis.pole_order(b);
        return pa != pb ? pa < pb : a.j < b.j;
    });
    // gcd(m, p) = 1 and j < q make pole orders distinct.
    for (std::size_t k = 1; k < basis.monomials.size(); ++k)
        if (basis.pole_order(basis.monomials[k - 1]) == basis.pole_order(basis.monomials[k]))
            throw std::logic_error("repeated pole order in monomial basis");
    return basis;
}

std::size_t rr_dim(const ASCurve& curve, std::int64_t r) { return monomial_basis(curve, r).size(); }

}  // namespace agcodes
