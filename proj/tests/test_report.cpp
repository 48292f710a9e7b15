#include <doctest.h>

#include <sstream>

#include "agcodes/matrix_io.hpp"
#include "agcodes/sweep.hpp"

using namespace agcodes;

TEST_CASE("sweep of as(2,3) passes with exact distances at every theorem radius") {
    const auto report = sweep(validate_as_roots(2, 3), SweepBudget{});
    CHECK(report.passed());
    CHECK(report.summary.failed == 0);
    std::vector<std::int64_t> rs;
    for (const auto& rec : report.records) {
        rs.push_back(rec.r);
        CHECK(rec.distance.kind == "exact");
    }
    CHECK(rs == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(report.self_dual_r == 4);
    CHECK(report.records.back().self_dual);
    CHECK(report.first_failure().empty());
}

TEST_CASE("sweep of herm-mult(3,2) passes and reports no self-dual radius") {
    const auto report = sweep(validate_herm_mult(3, 2), SweepBudget{});
    CHECK(report.passed());
    CHECK_FALSE(report.self_dual_r);
    for (const auto& rec : report.records) CHECK_FALSE(rec.self_dual);
}

TEST_CASE("sweep of as(8,3) under the default budget skips exact distance") {
    SweepBudget budget;
    budget.dual_identity_max_n = 0;
    const auto report = sweep(validate_as_roots(8, 3), budget);
    CHECK(report.passed());
    CHECK(report.summary.skipped > 0);
    for (const auto& rec : report.records) {
        if (rec.k >= 14) CHECK(rec.distance.kind == "designed_only");
        CHECK(rec.euclidean_so.observed == rec.euclidean_so.predicted);
    }
}

TEST_CASE("extended sweeps stay consistent beyond the theorem ranges") {
    SweepBudget budget;
    budget.extended = true;
    for (const auto& spec : {validate_as_roots(2, 3), validate_herm_add(2, 2), validate_herm_mult(2, 3)}) {
        const auto report = sweep(spec, budget);
        CAPTURE(spec.label());
        CHECK(report.passed());
        CHECK(report.records.size() == static_cast<std::size_t>(spec.dual_degree() - 1));
    }
}

TEST_CASE("sweeps are deterministic across thread counts") {
    SweepBudget one, many;
    one.threads = 1;
    many.threads = 4;
    const auto spec = validate_herm_mult(3, 8);
    CHECK(to_json(sweep(spec, one)).dump() == to_json(sweep(spec, many)).dump());
}

TEST_CASE("report JSON round-trips byte-identically") {
    SweepBudget budget;
    budget.samples = 50;
    budget.seed = 9;
    for (const auto& spec : {validate_as_roots(2, 3), validate_herm_add(3, 1, std::vector<Rep>{1}), validate_as_roots(8, 3)}) {
        const auto report = sweep(spec, budget);
        const auto text = to_json(report).dump(2);
        const auto again = to_json(report_from_json(nlohmann::ordered_json::parse(text))).dump(2);
        CHECK(text == again);
    }
}

TEST_CASE("report JSON carries spec echo and summary") {
    const auto j = to_json(verify(validate_as_roots(2, 3), 2, SweepBudget{}));
    CHECK(j.at("spec").at("family") == "as");
    CHECK(j.at("spec").at("q") == 2);
    CHECK(j.at("records").size() == 1);
    CHECK(j.at("records")[0].at("quantum").at("notation") == "[[8,4,>=2]]_2");
    CHECK(j.at("summary").at("failed") == 0);
}

TEST_CASE("matrix files round-trip") {
    for (const auto& [spec, r] : {std::pair{validate_as_roots(8, 3), 20}, {validate_herm_add(2, 1), 2},
                                  {validate_herm_mult(3, 2), 5}}) {
        const auto code = build_code(spec.curve, spec.xs, r);
        std::stringstream ss;
        write_matrix_file(ss, code.generator, r, spec.tag());
        const auto file = read_matrix_file(ss);
        CHECK(file.n == code.n());
        CHECK(file.k == code.k());
        CHECK(file.r == r);
        CHECK(file.family == spec.tag());
        CHECK(file.generator.field()->same_as(*code.field()));
        CHECK(rowspace_equal(file.generator, code.generator));
        std::stringstream again;
        write_matrix_file(again, file.generator, file.r, file.family);
        std::stringstream first;
        write_matrix_file(first, code.generator, r, spec.tag());
        CHECK(again.str() == first.str());
    }
}

TEST_CASE("matrix file header layout") {
    const auto spec = validate_herm_add(2, 1, std::vector<Rep>{1});
    const auto code = build_code(spec.curve, spec.xs, 2);
    std::stringstream ss;
    write_matrix_file(ss, code.generator, 2, spec.tag());
    std::string l1, l2;
    std::getline(ss, l1);
    std::getline(ss, l2);
    CHECK(l1 == "FIELD GF(2^2) mod=1,1,1");
    CHECK(l2 == "CODE n=4 k=2 r=2 family=herm-add");
}

TEST_CASE("malformed matrix files are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_matrix_file(is);
    };
    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("FIELD GF(2^2) mod=1,0,1\nCODE n=1 k=1 r=0 family=as\n1\n"), FormatError);
    CHECK_THROWS_AS(parse("FIELD GF(2^2) mod=1,1,1\nCODE n=2 k=1 r=0 family=as\n1\n"), FormatError);
    CHECK_THROWS_AS(parse("FIELD GF(2^2) mod=1,1,1\nCODE n=2 k=1 r=0 family=as\n1 4\n"), FormatError);
    CHECK_THROWS_AS(parse("FIELD GF(2^2) mod=1,1,1\nCODE n=2 k=2 r=0 family=as\n1 1\n"), FormatError);
    CHECK_NOTHROW(parse("FIELD GF(2^2) mod=1,1,1\nCODE n=2 k=1 r=0 family=as\n1 3\n"));
}
