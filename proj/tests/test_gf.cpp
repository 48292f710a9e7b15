#include <doctest.h>

#include <random>

#include "agcodes/gf.hpp"

using namespace agcodes;

namespace {

// All (p, k) with p^k <= limit and k >= min_degree.
std::vector<std::pair<std::uint32_t, std::uint32_t>> fields_up_to(std::uint64_t limit, std::uint32_t min_degree) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t size = p;
        for (std::uint32_t k = 1; size <= limit; ++k, size *= p)
            if (k >= min_degree) out.emplace_back(p, k);
    }
    return out;
}

}  // namespace

TEST_CASE("create_field picks the smallest irreducible modulus") {
    const auto f4 = Field::create(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->size() == 4);
    CHECK(f4->describe() == "GF(2^2) mod=1,1,1");

    const auto f64 = Field::create(2, 6);
    CHECK(f64->size() == 64);
    CHECK(f64->describe() == "GF(2^6) mod=1,0,0,0,0,1,1");

    const auto f9 = Field::create(3, 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(Field::create(4, 2), FieldError);
    CHECK_THROWS_AS(Field::create(2, 0), FieldError);
}

TEST_CASE("explicit moduli are validated") {
    CHECK_THROWS_WITH_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), "modulus is reducible", FieldError);
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 0, 1}), FieldError);
    CHECK_THROWS_AS(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);  // not monic
    const auto f8 = Field::create(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK(f8->describe() == "GF(2^3) mod=1,1,0,1");
}

TEST_CASE("primitive element has full order") {
    for (auto [p, k] : fields_up_to(1024, 1)) {
        const auto f = Field::create(p, k);
        REQUIRE(f->order(f->primitive()) == f->size() - 1);
        for (Rep a = 1; a < f->primitive(); ++a) CHECK(f->order(a) < f->size() - 1);
    }
}

TEST_CASE("arith examples") {
    const auto f4 = Field::create(2, 2);
    const Rep w = 2;
    CHECK(f4->mul(w, w) == 3);
    CHECK(f4->add(w, 1) == 3);

    const auto f9 = Field::create(3, 2);  // x^2 + 1; rep 3 is the root
    CHECK(f9->mul(3, 3) == 2);
    CHECK(f9->neg(1) == 2);

    for (auto [p, k] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 1u}}) {
        const auto f = Field::create(p, k);
        for (Rep a = 1; a < f->size(); ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->pow(a, -1) == f->inv(a));
            CHECK(f->pow(a, -3) == f->inv(f->mul(a, f->mul(a, a))));
        }
    }
    CHECK_THROWS_AS(f4->inv(0), FieldError);
    CHECK_THROWS_AS(f4->pow(0, -1), FieldError);
    CHECK(f4->pow(0, 0) == 1);
}

TEST_CASE("FieldElement wraps arithmetic and rejects mixed fields") {
    const auto f4 = Field::create(2, 2);
    const auto f8 = Field::create(2, 3);
    const auto w = f4->element(2);
    CHECK((w * w).rep() == 3);
    CHECK((w * w * w) == f4->one());
    CHECK((w / w) == f4->one());
    CHECK((-w) == w);
    CHECK(w.frobenius(1).rep() == 3);
    CHECK_THROWS_AS(w + f8->element(2), FieldError);
    CHECK_THROWS_AS(f4->zero().inv(), FieldError);
    CHECK_THROWS_AS(f4->element(4), FieldError);

    // Equal descriptors are the same field even across instances.
    const auto f4b = Field::create(2, 2);
    CHECK((w + f4b->element(1)).rep() == 3);
}

TEST_CASE("frobenius examples") {
    const auto f4 = Field::create(2, 2);
    CHECK(f4->frobenius(2, 1) == 3);
    const auto f729 = Field::create(3, 6);
    for (Rep a = 0; a < f729->size(); a += 7) {
        CHECK(f729->frobenius(a, 0) == a);
        CHECK(f729->frobenius(f729->frobenius(a, 3), 3) == a);
    }
}

TEST_CASE("frobenius is an automorphism (exhaustive, extension fields up to 2^10)") {
    for (auto [p, k] : fields_up_to(1024, 2)) {
        const auto f = Field::create(p, k);
        for (Rep a = 0; a < f->size(); ++a) {
            const Rep fa = f->frobenius(a, 1);
            for (Rep b = 0; b < f->size(); ++b) {
                const Rep fb = f->frobenius(b, 1);
                if (f->frobenius(f->mul(a, b), 1) != f->mul(fa, fb) || f->frobenius(f->add(a, b), 1) != f->add(fa, fb)) {
                    FAIL("frobenius not multiplicative/additive in GF(" << p << "^" << k << ")");
                }
            }
        }
    }
}

TEST_CASE("table and polynomial backends agree") {
    for (auto [p, k] : {std::pair{2u, 5u}, {3u, 4u}, {5u, 3u}, {7u, 2u}}) {
        const auto t = Field::create(p, k, std::nullopt, Backend::tables);
        const auto s = Field::create(p, k, std::nullopt, Backend::polynomial);
        REQUIRE(t->uses_tables());
        REQUIRE_FALSE(s->uses_tables());
        REQUIRE(t->primitive() == s->primitive());
        for (Rep a = 0; a < t->size(); ++a) {
            CHECK(t->neg(a) == s->neg(a));
            CHECK(t->frobenius(a, 1) == s->frobenius(a, 1));
            if (a != 0) CHECK(t->inv(a) == s->inv(a));
            for (Rep b = 0; b < t->size(); ++b) {
                if (t->add(a, b) != s->add(a, b) || t->mul(a, b) != s->mul(a, b)) FAIL("backends disagree");
            }
        }
    }
}

TEST_CASE("large fields use polynomial arithmetic") {
    const auto f = Field::create(2, 21);
    CHECK_FALSE(f->uses_tables());
    CHECK(f->order(f->primitive()) == f->size() - 1);
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rep a = 1 + rng() % (f->size() - 1);
        const Rep b = 1 + rng() % (f->size() - 1);
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->mul(f->mul(a, b), f->inv(b)) == a);
    }
}

TEST_CASE("encoding round-trips for fields up to 2^16") {
    for (auto [p, k] : {std::pair{2u, 16u}, {3u, 10u}, {5u, 6u}, {251u, 2u}, {65521u, 1u}}) {
        const auto f = Field::create(p, k);
        for (Rep a = 0; a < f->size(); ++a) {
            const auto d = f->digits(a);
            if (f->from_digits(d) != a) FAIL("round trip failed for " << a);
        }
    }
    const auto f4 = Field::create(2, 2);
    CHECK(f4->digits(0) == std::vector<std::uint32_t>{0, 0});
    CHECK(f4->digits(1) == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("trace_preimages examples") {
    const auto f4 = Field::create(2, 2);
    CHECK(trace_preimages(*f4, 0) == std::vector<Rep>{0, 1});
    CHECK(trace_preimages(*f4, 1) == std::vector<Rep>{2, 3});
    CHECK(trace_preimages(*f4, 2).empty());
    CHECK_THROWS_AS(trace_preimages(*Field::create(2, 3), 0), FieldError);
}

TEST_CASE("trace fibers have size q over GF(q) and are empty elsewhere (q <= 32)") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 32u}) {
        const auto pp = prime_power(q);
        const auto f = Field::create(pp->first, 2 * pp->second);
        REQUIRE(f->subfield_order() == q);
        const auto fibers = trace_fibers(*f);
        std::size_t subfield = 0;
        for (Rep c = 0; c < f->size(); ++c) {
            const bool in = f->in_subfield(c);
            subfield += in;
            CHECK(fibers[c].size() == (in ? q : 0u));
        }
        CHECK(subfield == q);
    }
    const auto f16 = Field::create(2, 4);
    CHECK(trace_fibers(*f16)[1] == trace_preimages(*f16, 1));
}

TEST_CASE("roots_of_unity examples and properties") {
    const auto f4 = Field::create(2, 2);
    CHECK(roots_of_unity(*f4, 3) == std::vector<Rep>{1, 2, 3});
    CHECK(roots_of_unity(*f4, 1) == std::vector<Rep>{1});
    CHECK_THROWS_AS(roots_of_unity(*f4, 2), FieldError);

    const auto f81 = Field::create(3, 4);
    for (std::uint64_t l : {1u, 2u, 4u, 5u, 8u, 10u, 16u, 20u, 40u, 80u}) {
        const auto roots = roots_of_unity(*f81, l);
        REQUIRE(roots.size() == l);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(f81->pow(roots[i], static_cast<std::int64_t>(l)) == 1);
            if (i > 0) CHECK(roots[i - 1] < roots[i]);
        }
    }
}

TEST_CASE("fp_subspace examples") {
    const auto f4 = Field::create(2, 2);
    const std::vector<Rep> full{1, 2}, line{1}, dup{1, 1};
    CHECK(fp_subspace(*f4, full) == std::vector<Rep>{0, 1, 2, 3});
    CHECK(fp_subspace(*f4, line) == std::vector<Rep>{0, 1});
    CHECK_THROWS_AS(fp_subspace(*f4, dup), FieldError);

    const auto f9 = Field::create(3, 2);
    const std::vector<Rep> b{3};
    CHECK(fp_subspace(*f9, b) == std::vector<Rep>{0, 3, 6});
}

TEST_CASE("check_lemma_m examples") {
    CHECK(check_lemma_m(*Field::create(2, 2), 3));
    CHECK(check_lemma_m(*Field::create(2, 2), 1));
    CHECK(check_lemma_m(*Field::create(3, 2), 8));
    CHECK(check_lemma_m(*Field::create(5, 1), 1));
    CHECK_THROWS_AS(check_lemma_m(*Field::create(2, 2), 2), FieldError);
}

TEST_CASE("field descriptions parse back") {
    for (auto [p, k] : {std::pair{2u, 2u}, {2u, 6u}, {3u, 6u}, {5u, 1u}}) {
        const auto f = Field::create(p, k);
        const auto g = parse_field_description(f->describe());
        CHECK(g->same_as(*f));
    }
    CHECK_THROWS_AS(parse_field_description("GF(2^2) mod=1,0,1"), FieldError);
    CHECK_THROWS_AS(parse_field_description("GF(4)"), FieldError);
}

TEST_CASE("prime_power") {
    CHECK(prime_power(27) == std::pair<std::uint32_t, std::uint32_t>{3, 3});
    CHECK(prime_power(2) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
    CHECK_FALSE(prime_power(6));
    CHECK_FALSE(prime_power(1));
}
