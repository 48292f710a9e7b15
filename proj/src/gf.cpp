#include "agcodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace agcodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), low degree first

constexpr std::uint32_t kTableLimit = 1u << 20;
constexpr std::uint64_t kSizeLimit = 1ull << 31;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

Poly poly_rem(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            const std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_rem(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin-style test: f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= k/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    Poly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
    const std::int64_t r = a % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    std::uint32_t t = 0;
    for (std::uint64_t v = q; v > 1; v /= factors[0]) ++t;
    return std::make_pair(static_cast<std::uint32_t>(factors[0]), t);
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t k,
                                           std::optional<std::vector<std::uint32_t>> modulus,
                                           Backend backend) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("extension degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        size *= p;
        if (size > kSizeLimit) throw FieldError("field too large for 32-bit element encoding");
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->k_ = k;
    f->size_ = static_cast<std::uint32_t>(size);

    if (modulus) {
        Poly m = *modulus;
        if (m.size() != k + 1) throw FieldError("modulus degree differs from extension degree");
        if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }))
            throw FieldError("modulus coefficient out of range");
        if (m.back() != 1) throw FieldError("modulus is not monic");
        if (!is_irreducible(m, p)) throw FieldError("modulus is reducible");
        f->modulus_ = std::move(m);
    } else {
        // Smallest encoding of (c_0, ..., c_{k-1}) whose monic completion is irreducible.
        for (std::uint64_t enc = 0; enc < size; ++enc) {
            Poly m(k + 1, 0);
            std::uint64_t v = enc;
            for (std::uint32_t i = 0; i < k; ++i, v /= p) m[i] = static_cast<std::uint32_t>(v % p);
            m[k] = 1;
            if (is_irreducible(m, p)) {
                f->modulus_ = std::move(m);
                break;
            }
        }
    }

    f->order_factors_ = prime_factors(size - 1);
    if (size == 2) {
        f->primitive_ = 1;
    } else {
        for (Rep a = 2; a < size; ++a) {
            if (f->order(a) == size - 1) {
                f->primitive_ = a;
                break;
            }
        }
    }

    const bool tables = backend == Backend::tables || (backend == Backend::automatic && size <= kTableLimit);
    if (tables) f->build_tables();
    return f;
}

void Field::build_tables() {
    const std::uint32_t n = size_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(size_, 0);
    Rep x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x;
        exp_[i + n] = x;
        log_[x] = i;
        x = poly_mul(x, primitive_);
    }
    if (p_ != 2) {
        zech_.assign(n, n);
        for (std::uint32_t i = 0; i < n; ++i) {
            const Rep s = digit_add(1, exp_[i]);
            if (s != 0) zech_[i] = log_[s];
        }
    }
}

std::vector<std::uint32_t> Field::digits(Rep a) const {
    std::vector<std::uint32_t> d(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
}

Rep Field::from_digits(std::span<const std::uint32_t> d) const {
    std::uint64_t r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i] % p_;
    return static_cast<Rep>(r);
}

Rep Field::digit_add(Rep a, Rep b) const {
    Rep r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, place *= p_) r += ((a % p_ + b % p_) % p_) * place;
    return r;
}

Rep Field::poly_mul(Rep a, Rep b) const {
    if (a == 0 || b == 0) return 0;
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
    // modulus is monic: x^k = -(c_0 + ... + c_{k-1} x^{k-1})
    for (std::size_t d = prod.size(); d-- > k_;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
    Rep r = 0;
    for (std::uint32_t i = k_; i-- > 0;) r = r * p_ + static_cast<Rep>(prod[i]);
    return r;
}

Rep Field::neg(Rep a) const {
    if (p_ == 2 || a == 0) return a;
    if (!exp_.empty()) return exp_[log_[a] + (size_ - 1) / 2];
    Rep r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, place *= p_) r += ((p_ - a % p_) % p_) * place;
    return r;
}

Rep Field::inv(Rep a) const {
    if (a == 0) throw FieldError("inverse of zero");
    if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    return pow(a, size_ - 2);
}

Rep Field::pow(Rep a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw FieldError("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::uint64_t n = size_ - 1;
    const std::uint64_t ee = mod_floor(e, n);
    if (!exp_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * ee % n];
    Rep result = 1, base = a;
    for (std::uint64_t x = ee; x > 0; x >>= 1) {
        if (x & 1) result = poly_mul(result, base);
        base = poly_mul(base, base);
    }
    return result;
}

Rep Field::frobenius(Rep a, std::uint32_t e) const {
    e %= k_;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < e; ++i) power *= p_;
    return pow(a, static_cast<std::int64_t>(power));
}

Rep Field::from_integer(std::int64_t n) const {
    return static_cast<Rep>(mod_floor(n, p_));
}

std::uint64_t Field::order(Rep a) const {
    if (a == 0) throw FieldError("order of zero");
    std::uint64_t ord = size_ - 1;
    for (std::uint64_t f : order_factors_) {
        while (ord % f == 0 && pow(a, static_cast<std::int64_t>(ord / f)) == 1) ord /= f;
    }
    return ord;
}

std::uint32_t Field::subfield_order() const {
    if (k_ % 2 != 0) throw FieldError("field has odd degree; no quadratic subfield tower");
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < k_ / 2; ++i) q *= p_;
    return q;
}

bool Field::in_subfield(Rep a) const {
    return k_ % 2 == 0 && frobenius(a, k_ / 2) == a;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << '^' << k_ << ") mod=";
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        os << modulus_[i];
        if (i != 0) os << ',';
    }
    return os.str();
}

bool Field::same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

FieldElement Field::element(Rep r) const {
    if (r >= size_) throw FieldError("representation out of range");
    return FieldElement(shared_from_this(), r);
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

FieldElement::FieldElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(rep) {
    if (!field_) throw FieldError("element without field");
    if (rep_ >= field_->size()) throw FieldError("representation out of range");
}

const Field& FieldElement::checked(const FieldElement& o) const {
    if (!field_->same_as(*o.field_)) throw FieldError("operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, checked(o).add(rep_, o.rep_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, checked(o).sub(rep_, o.rep_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, checked(o).mul(rep_, o.rep_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, checked(o).div(rep_, o.rep_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(rep_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(rep_, e)}; }
FieldElement FieldElement::frobenius(std::uint32_t e) const { return {field_, field_->frobenius(rep_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_as(*o.field_) && rep_ == o.rep_;
}

std::vector<std::vector<Rep>> trace_fibers(const Field& field) {
    const std::uint32_t q = field.subfield_order();
    std::vector<std::vector<Rep>> fibers(field.size());
    for (Rep y = 0; y < field.size(); ++y) fibers[field.add(field.pow(y, q), y)].push_back(y);
    return fibers;
}

std::vector<Rep> trace_preimages(const Field& field, Rep c) {
    const std::uint32_t q = field.subfield_order();
    if (c >= field.size()) throw FieldError("representation out of range");
    std::vector<Rep> out;
    if (!field.in_subfield(c)) return out;
    for (Rep y = 0; y < field.size(); ++y)
        if (field.add(field.pow(y, q), y) == c) out.push_back(y);
    return out;
}

std::vector<Rep> roots_of_unity(const Field& field, std::uint64_t l) {
    const std::uint64_t n = field.size() - 1;
    if (l == 0 || n % l != 0) throw FieldError(std::to_string(l) + " does not divide |F*| = " + std::to_string(n));
    const Rep zeta = field.pow(field.primitive(), static_cast<std::int64_t>(n / l));
    std::vector<Rep> out;
    out.reserve(l);
    Rep z = 1;
    for (std::uint64_t t = 0; t < l; ++t, z = field.mul(z, zeta)) out.push_back(z);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rep> fp_subspace(const Field& field, std::span<const Rep> basis) {
    if (basis.size() > field.degree()) throw FieldError("subspace basis longer than the extension degree");
    for (Rep b : basis)
        if (b >= field.size()) throw FieldError("representation out of range");
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= field.characteristic();

    std::vector<Rep> out;
    out.reserve(count);
    std::vector<std::uint32_t> coeffs(basis.size(), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        Rep sum = 0;
        for (std::size_t i = 0; i < basis.size(); ++i, v /= field.characteristic())
            sum = field.add(sum, field.mul(field.from_integer(static_cast<std::int64_t>(v % field.characteristic())), basis[i]));
        out.push_back(sum);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != count) throw FieldError("subspace basis is F_p-linearly dependent");
    return out;
}

bool check_lemma_m(const Field& field, std::uint64_t m) {
    const std::uint64_t n = field.size() - 1;
    if (m == 0 || n % m != 0) throw FieldError(std::to_string(m) + " does not divide |F*| = " + std::to_string(n));
    const Rep alpha = field.pow(field.primitive(), static_cast<std::int64_t>(n / m));
    const Rep m_elem = field.from_integer(static_cast<std::int64_t>(m % field.characteristic()));
    for (std::uint64_t i = 1; i <= m; ++i) {
        const Rep ai = field.pow(alpha, static_cast<std::int64_t>(i));
        Rep prod = 1;
        for (std::uint64_t j = 1; j <= m; ++j) {
            if (j == i) continue;
            prod = field.mul(prod, field.sub(ai, field.pow(alpha, static_cast<std::int64_t>(j))));
        }
        if (prod != field.mul(m_elem, field.pow(alpha, -static_cast<std::int64_t>(i)))) return false;
    }
    return true;
}

FieldPtr parse_field_description(const std::string& text) {
    static const std::regex re(R"(^\s*GF\((\d+)\^(\d+)\) mod=([0-9,]+)\s*$)");
    std::smatch match;
    if (!std::regex_match(text, match, re)) throw FieldError("malformed field description: " + text);
    const auto p = static_cast<std::uint32_t>(std::stoul(match[1]));
    const auto k = static_cast<std::uint32_t>(std::stoul(match[2]));
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(match[3]);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) throw FieldError("malformed modulus in: " + text);
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    std::reverse(coeffs.begin(), coeffs.end());
    return Field::create(p, k, coeffs);
}

}  // namespace agcodes
