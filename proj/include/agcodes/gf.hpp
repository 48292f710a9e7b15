#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcodes {

/// Integer encoding of a field element: sum of c_i * p^i over the power-basis
/// coefficients of the modulus root. Always < Field::size().
using Rep = std::uint32_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Backend {
    automatic,  // tables up to 2^20 elements, polynomial arithmetic above
    tables,
    polynomial,
};

class FieldElement;

/// GF(p^k) with a fixed monic irreducible modulus.
///
/// Fields are immutable after construction and handed out as
/// shared_ptr<const Field>. Arithmetic is available in two layers: raw Rep
/// operations (used by the matrix code) and the FieldElement value type.
class Field : public std::enable_shared_from_this<Field> {
public:
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t k,
                                               std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                                               Backend backend = Backend::automatic);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t size() const { return size_; }
    bool uses_tables() const { return !exp_.empty(); }

    /// Coefficients c_0..c_k of the monic modulus (low degree first, c_k == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// `GF(p^k) mod=c_k,...,c_0`
    std::string describe() const;

    /// Order of the quadratic subfield, p^(k/2). Throws for odd degree.
    std::uint32_t subfield_order() const;

    Rep primitive() const { return primitive_; }

    Rep add(Rep a, Rep b) const {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        if (zech_.empty()) return digit_add(a, b);
        const std::uint32_t la = log_[a];
        const std::uint32_t d = log_[b] >= la ? log_[b] - la : log_[b] + (size_ - 1) - la;
        const std::uint32_t z = zech_[d];
        return z == size_ - 1 ? 0 : exp_[la + z];
    }
    Rep sub(Rep a, Rep b) const { return add(a, neg(b)); }
    Rep neg(Rep a) const;
    Rep mul(Rep a, Rep b) const {
        if (a == 0 || b == 0) return 0;
        if (exp_.empty()) return poly_mul(a, b);
        return exp_[log_[a] + log_[b]];
    }
    Rep inv(Rep a) const;
    Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
    Rep pow(Rep a, std::int64_t e) const;
    /// a^(p^e)
    Rep frobenius(Rep a, std::uint32_t e) const;
    /// The element 1 + 1 + ... + 1 (n times).
    Rep from_integer(std::int64_t n) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Rep a) const;
    bool in_subfield(Rep a) const;

    std::vector<std::uint32_t> digits(Rep a) const;
    Rep from_digits(std::span<const std::uint32_t> digits) const;

    FieldElement element(Rep r) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool same_as(const Field& other) const;

    /// Discrete log of a nonzero element w.r.t. primitive(); table backend only.
    std::uint32_t log(Rep a) const { return log_[a]; }

private:
    Field() = default;

    Rep poly_mul(Rep a, Rep b) const;
    Rep digit_add(Rep a, Rep b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    Rep primitive_ = 0;

    std::vector<Rep> exp_;            // primitive^i for i < 2(size-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<std::uint32_t> zech_; // log(1 + g^i); size-1 marks 1 + g^i == 0
    std::vector<std::uint64_t> order_factors_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Element of a specific field. Mixing fields throws FieldError.
class FieldElement {
public:
    FieldElement(FieldPtr field, Rep rep);

    const FieldPtr& field() const { return field_; }
    Rep rep() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    FieldElement frobenius(std::uint32_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator<(const FieldElement& o) const { return rep_ < o.rep_; }

private:
    const Field& checked(const FieldElement& o) const;

    FieldPtr field_;
    Rep rep_;
};

bool is_prime(std::uint64_t n);
/// Returns (p, t) with q = p^t, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// All y in GF(q^2) with y^q + y = c, ascending by Rep. Empty unless c is in GF(q).
std::vector<Rep> trace_preimages(const Field& field, Rep c);

/// Fibers of y -> y^q + y for every c in GF(q^2), indexed by Rep of c.
std::vector<std::vector<Rep>> trace_fibers(const Field& field);

/// The l-th roots of unity, sorted by Rep.
std::vector<Rep> roots_of_unity(const Field& field, std::uint64_t l);

/// F_p-span of `basis`, sorted by Rep. Throws when the basis is dependent.
std::vector<Rep> fp_subspace(const Field& field, std::span<const Rep> basis);

/// For a primitive m-th root a: prod_{j != i} (a^i - a^j) == m * a^(-i) for all i.
bool check_lemma_m(const Field& field, std::uint64_t m);

/// Inverse of Field::describe(); builds the field with the stated modulus.
FieldPtr parse_field_description(const std::string& text);

}  // namespace agcodes
