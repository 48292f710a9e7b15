#pragma once

#include <cstdint>
#include <vector>

#include "agcodes/curve.hpp"

namespace agcodes {

/// x^i y^j with 0 <= j < q.
struct Monomial {
    std::uint32_t i;
    std::uint32_t j;
    bool operator==(const Monomial&) const = default;
};

/// Basis of L(r Q_inf), ordered by pole order q*i + m*j.
struct RRBasis {
    std::uint32_t q;
    std::uint32_t m;
    std::int64_t r;
    std::vector<Monomial> monomials;

    std::int64_t pole_order(const Monomial& mono) const {
        return static_cast<std::int64_t>(q) * mono.i + static_cast<std::int64_t>(m) * mono.j;
    }
    std::size_t size() const { return monomials.size(); }
};

RRBasis monomial_basis(const ASCurve& curve, std::int64_t r);

std::size_t rr_dim(const ASCurve& curve, std::int64_t r);

}  // namespace agcodes
