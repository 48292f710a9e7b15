#include "agcodes/families.hpp"

#include <sstream>

namespace agcodes {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw HypothesisError("q = " + std::to_string(q) + " is not a prime power");
    return *pp;
}

FamilySpec finish(FamilyKind kind, std::uint32_t q, std::uint32_t p, std::uint32_t t, std::uint32_t param,
                  std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    FamilySpec spec{kind, q, p, t, param, {}, nullptr, {}, 0, 0};
    try {
        spec.curve = std::make_shared<const ASCurve>(make_curve(q, m, std::move(modulus)));
    } catch (const FieldError& e) {
        throw HypothesisError(std::string("invalid field modulus: ") + e.what());
    }
    spec.g = spec.curve->genus();
    return spec;
}

void require(const std::vector<std::string>& violated) {
    if (violated.empty()) return;
    std::string msg = "hypothesis violated: ";
    for (std::size_t i = 0; i < violated.size(); ++i) msg += (i ? "; " : "") + violated[i];
    throw HypothesisError(msg);
}

std::vector<Rep> with_zero(std::vector<Rep> roots) {
    roots.insert(roots.begin(), 0);
    return roots;
}

}  // namespace

std::string FamilySpec::tag() const {
    switch (kind) {
        case FamilyKind::as_roots: return "as";
        case FamilyKind::herm_mult: return "herm-mult";
        case FamilyKind::herm_add: return "herm-add";
    }
    return "?";
}

std::string FamilySpec::label() const {
    return tag() + "(" + std::to_string(q) + "," + std::to_string(param) + ")";
}

FamilySpec validate_as_roots(std::uint32_t q, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    const auto [p, t] = split_prime_power(q);
    if (m == 0) throw HypothesisError("m must be positive");
    std::vector<std::string> violated;
    if ((m - 1) % p != 0)
        violated.push_back("p ∤ m−1 (" + std::to_string(p) + " does not divide " + std::to_string(m - 1) + ")");
    if ((q + 1) % m != 0)
        violated.push_back("m ∤ q+1 (" + std::to_string(m) + " does not divide " + std::to_string(q + 1) + ")");
    require(violated);
    auto spec = finish(FamilyKind::as_roots, q, p, t, m, m, std::move(modulus));
    spec.xs = with_zero(roots_of_unity(*spec.curve->field(), static_cast<std::uint64_t>(m) * (q - 1)));
    spec.n = static_cast<std::size_t>(q) * (static_cast<std::size_t>(m) * (q - 1) + 1);
    return spec;
}

FamilySpec validate_herm_mult(std::uint32_t q, std::uint32_t s, std::optional<std::vector<std::uint32_t>> modulus) {
    const auto [p, t] = split_prime_power(q);
    const std::uint64_t order = static_cast<std::uint64_t>(q) * q - 1;
    if (s == 0) throw HypothesisError("s must be positive");
    std::vector<std::string> violated;
    if (order % s != 0)
        violated.push_back("s ∤ q²−1 (" + std::to_string(s) + " does not divide " + std::to_string(order) + ")");
    if ((s + 1) % p != 0)
        violated.push_back("p ∤ s+1 (" + std::to_string(p) + " does not divide " + std::to_string(s + 1) + ")");
    require(violated);
    auto spec = finish(FamilyKind::herm_mult, q, p, t, s, q + 1, std::move(modulus));
    spec.xs = with_zero(roots_of_unity(*spec.curve->field(), s));
    spec.n = static_cast<std::size_t>(q) * (s + 1);
    return spec;
}

FamilySpec validate_herm_add(std::uint32_t q, std::uint32_t k, std::optional<std::vector<Rep>> basis,
                             std::optional<std::vector<std::uint32_t>> modulus) {
    const auto [p, t] = split_prime_power(q);
    if (k == 0) throw HypothesisError("subspace dimension k must be positive");
    if (k > 2 * t)
        throw HypothesisError("k > 2t (k = " + std::to_string(k) + ", q = " + std::to_string(p) + "^" +
                              std::to_string(t) + ")");
    auto spec = finish(FamilyKind::herm_add, q, p, t, k, q + 1, std::move(modulus));
    const Field& f = *spec.curve->field();
    if (basis) {
        if (basis->size() != k) throw HypothesisError("subspace basis must have exactly k elements");
        spec.subspace_basis = *basis;
    } else {
        for (std::uint32_t i = 0; i < k; ++i) spec.subspace_basis.push_back(f.pow(f.primitive(), i));
    }
    try {
        spec.xs = fp_subspace(f, spec.subspace_basis);
    } catch (const FieldError& e) {
        throw HypothesisError(std::string("dependent subspace basis: ") + e.what());
    }
    spec.n = static_cast<std::size_t>(q) * ipow(p, k);
    return spec;
}

PredictedParams ranges(const FamilySpec& spec) {
    PredictedParams out;
    out.n = spec.n;
    out.g = spec.g;
    const std::int64_t q = spec.q;
    const std::int64_t param = spec.param;
    bool parity = false;
    switch (spec.kind) {
        case FamilyKind::as_roots: {
            const std::int64_t m = param;
            out.euclidean_so_range = {m * q - m - q, floor_div(m * (q * q - 1) - 1, 2)};
            out.hermitian_so_range = RadiusRange{m * q - m - q, m * (q - 1) - 1};
            parity = q % 2 == 0;
            break;
        }
        case FamilyKind::herm_mult: {
            const std::int64_t s = param;
            out.euclidean_so_range = {q * q - q - 1, floor_div(q * (q + s) - 2, 2)};
            parity = q % 2 == 0 || s % 2 == 1;
            break;
        }
        case FamilyKind::herm_add: {
            const auto pk = static_cast<std::int64_t>(ipow(spec.p, spec.param));
            out.euclidean_so_range = {q * q - q - 1, floor_div(q * (pk + q - 1) - 2, 2)};
            parity = q % 2 == 0;
            break;
        }
    }
    const std::int64_t degree = spec.dual_degree();
    if (parity != (degree % 2 == 0))
        throw std::logic_error("self-dual parity condition disagrees with n + 2g - 2 for " + spec.label());
    if (parity) out.self_dual_r = degree / 2;
    return out;
}

PredictedParams predict(const FamilySpec& spec, std::int64_t r) {
    PredictedParams out = ranges(spec);
    const auto n = static_cast<std::int64_t>(spec.n);
    out.r = r;
    if (r > 2 * spec.g - 2 && r < n) out.k0 = r - spec.g + 1;
    out.d0_lower = std::max<std::int64_t>(n - r, 1);
    return out;
}

FamilyCode build(const FamilySpec& spec, std::int64_t r) {
    auto code = build_code(spec.curve, spec.xs, r);
    auto predicted = predict(spec, r);
    if (predicted.k0 && static_cast<std::int64_t>(code.k()) != *predicted.k0)
        throw std::logic_error("rank " + std::to_string(code.k()) + " differs from predicted k0 " +
                               std::to_string(*predicted.k0));
    return {std::move(code), std::move(predicted)};
}

std::string QuantumParams::to_string() const {
    std::ostringstream os;
    os << "[[" << n << ',' << k1 << ",>=" << d1_lower << "]]_" << q;
    return os.str();
}

std::pair<std::int64_t, std::int64_t> quantum_closed_form(std::int64_t q, std::int64_t m, std::int64_t r) {
    return {m * q * q - m - 2 * r - 1, r - m * q + m + q + 1};
}

QuantumParams quantum_params(const FamilySpec& spec, std::int64_t r) {
    if (spec.kind != FamilyKind::as_roots)
        throw HypothesisError("quantum derivation is defined for the as family only");
    const auto herm = *ranges(spec).hermitian_so_range;
    if (!herm.contains(r))
        throw HypothesisError("r = " + std::to_string(r) + " outside the Hermitian range [" + std::to_string(herm.lo) +
                              "," + std::to_string(herm.hi) + "]");
    const auto n = static_cast<std::int64_t>(spec.n);
    const std::int64_t k0 = r - spec.g + 1;
    QuantumParams out{spec.n, n - 2 * k0, r - 2 * spec.g + 2, spec.q};
    const auto [k1, d1] = quantum_closed_form(spec.q, spec.param, r);
    if (k1 != out.k1 || d1 != out.d1_lower)
        throw std::logic_error("quantum closed forms disagree with n - 2k0 and r - 2g + 2");
    return out;
}

bool dual_identity_check(const FamilySpec& spec, std::int64_t r) {
    if (r <= 0) throw std::invalid_argument("dual identity requires r > 0");
    const auto code = build_code(spec.curve, spec.xs, r);
    return dual_matches_radius(code, spec.dual_degree() - r);
}

}  // namespace agcodes
