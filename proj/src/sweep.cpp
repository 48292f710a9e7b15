#include "agcodes/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

namespace agcodes {

namespace {

void add_check(RadiusRecord& rec, std::string name, bool ok, std::string detail) {
    rec.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void skip_check(RadiusRecord& rec, std::string name, std::string detail) {
    rec.checks.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
}

std::string eq_detail(const std::string& what, std::int64_t observed, std::int64_t expected) {
    return what + " " + std::to_string(observed) + " vs expected " + std::to_string(expected);
}

DistanceSummary summarize(const DistanceResult& d, std::int64_t designed) {
    return {to_string(d.kind), d.value, designed, d.work};
}

ReportSpec echo(const FamilySpec& spec) {
    ReportSpec out;
    out.family = spec.tag();
    out.q = spec.q;
    out.param_name = spec.kind == FamilyKind::as_roots ? "m" : spec.kind == FamilyKind::herm_mult ? "s" : "k";
    out.param = spec.param;
    out.field = spec.curve->field()->describe();
    out.subspace_basis = spec.subspace_basis;
    out.n = spec.n;
    out.g = spec.g;
    return out;
}

VerificationReport skeleton(const FamilySpec& spec, bool extended) {
    VerificationReport report;
    report.spec = echo(spec);
    const auto pred = ranges(spec);
    report.euclidean_range = pred.euclidean_so_range;
    report.hermitian_range = pred.hermitian_so_range;
    report.self_dual_r = pred.self_dual_r;
    report.extended = extended;
    return report;
}

}  // namespace

std::vector<std::int64_t> sweep_radii(const FamilySpec& spec, bool extended) {
    const auto pred = ranges(spec);
    std::set<std::int64_t> radii;
    auto add_range = [&](const RadiusRange& rr) {
        for (std::int64_t r = std::max<std::int64_t>(rr.lo, 0); r <= rr.hi; ++r) radii.insert(r);
    };
    add_range(pred.euclidean_so_range);
    if (pred.hermitian_so_range) add_range(*pred.hermitian_so_range);
    if (pred.self_dual_r) radii.insert(*pred.self_dual_r);
    if (extended) add_range({1, spec.dual_degree() - 1});
    return {radii.begin(), radii.end()};
}

RadiusRecord verify_radius(const FamilySpec& spec, std::int64_t r, const SweepBudget& budget) {
    const auto fc = build(spec, r);
    const EvalCode& code = fc.code;
    const PredictedParams& pred = fc.predicted;
    const Field& field = *code.field();
    const auto n = static_cast<std::int64_t>(code.n());
    const auto k = static_cast<std::int64_t>(code.k());

    RadiusRecord rec;
    rec.r = r;
    rec.n = code.n();
    rec.k = code.k();
    rec.predicted_k0 = pred.k0;

    if (pred.k0) {
        const bool ok = k == *pred.k0 && code.basis.size() == code.k();
        add_check(rec, "dimension_law", ok,
                  eq_detail("rank", k, *pred.k0) + ", monomials " + std::to_string(code.basis.size()));
    }

    rec.euclidean_so = {pred.predicts_euclidean_so(), is_euclidean_so(code)};
    if (rec.euclidean_so.predicted) {
        add_check(rec, "euclidean_so", rec.euclidean_so.observed, "Gram matrix G*G^T identically zero");
    } else if (budget.extended && 2 * r <= spec.dual_degree()) {
        add_check(rec, "euclidean_so_beyond_theorem_range", rec.euclidean_so.observed,
                  "2r <= n+2g-2 outside the stated range");
    }

    if (spec.kind == FamilyKind::as_roots) {
        rec.hermitian_so = SoFlag{pred.predicts_hermitian_so(), is_hermitian_so(code)};
        if (rec.hermitian_so->predicted)
            add_check(rec, "hermitian_so", rec.hermitian_so->observed, "Gram matrix G^(q)*G^T identically zero");
    }

    std::optional<Matrix> dual;
    auto dual_matrix = [&]() -> const Matrix& {
        if (!dual) dual = euclidean_dual(code);
        return *dual;
    };

    if (2 * k == n) rec.self_dual = rowspace_equal(code.generator, dual_matrix());
    if (pred.predicts_self_dual()) {
        add_check(rec, "self_dual", 2 * k == n && rec.self_dual,
                  eq_detail("2k", 2 * k, n) + ", C == C^perp " + (rec.self_dual ? "yes" : "no"));
    }

    if (r > 0 && r < spec.dual_degree()) {
        if (code.n() <= budget.dual_identity_max_n) {
            const bool ok = dual_matches_radius(code, spec.dual_degree() - r);
            rec.dual_identity = ok ? "pass" : "fail";
            add_check(rec, "dual_identity", ok, "C(r)^perp == C(" + std::to_string(spec.dual_degree() - r) + ")");
        } else {
            rec.dual_identity = "skipped";
            skip_check(rec, "dual_identity", "n = " + std::to_string(n) + " above dual-identity limit");
        }
    }

    const auto bounds = designed_bounds(spec, r);
    if (code.k() == 0) {
        rec.distance = {to_string(DistanceKind::designed_only), std::nullopt, bounds.d_lower, 0};
    } else if (message_space(field.size(), code.k()) <= budget.distance_budget) {
        const auto d = exact_distance(code, budget.distance_budget);
        rec.distance = summarize(d, bounds.d_lower);
        add_check(rec, "designed_distance", static_cast<std::int64_t>(*d.value) >= bounds.d_lower,
                  "exact d = " + std::to_string(*d.value) + " >= n-r = " + std::to_string(bounds.d_lower));
    } else if (budget.samples > 0) {
        const auto d = sampled_upper_bound(code.generator, budget.samples, budget.seed);
        rec.distance = summarize(d, bounds.d_lower);
        add_check(rec, "sampled_distance", static_cast<std::int64_t>(*d.value) >= bounds.d_lower,
                  "lightest of " + std::to_string(d.work) + " sampled codewords has weight " +
                      std::to_string(*d.value) + ", designed n-r = " + std::to_string(bounds.d_lower));
    } else {
        rec.distance = {to_string(DistanceKind::designed_only), std::nullopt, bounds.d_lower, 0};
        skip_check(rec, "designed_distance", "message space above distance budget; designed bound only");
    }

    const std::size_t dual_dim = code.n() - code.k();
    if (dual_dim > 0) {
        if (message_space(field.size(), dual_dim) <= budget.distance_budget) {
            const auto d = exact_distance(dual_matrix(), budget.distance_budget);
            rec.dual_distance = summarize(d, bounds.d_dual_lower);
            add_check(rec, "designed_dual_distance", static_cast<std::int64_t>(*d.value) >= bounds.d_dual_lower,
                      "exact dual d = " + std::to_string(*d.value) + " >= r-2g+2 = " +
                          std::to_string(bounds.d_dual_lower));
        } else {
            rec.dual_distance = DistanceSummary{to_string(DistanceKind::designed_only), std::nullopt,
                                                bounds.d_dual_lower, 0};
            skip_check(rec, "designed_dual_distance", "dual message space above distance budget");
        }
    }

    if (spec.kind == FamilyKind::as_roots && pred.predicts_hermitian_so()) {
        const auto qp = quantum_params(spec, r);
        rec.quantum = qp;
        add_check(rec, "quantum_params", qp.k1 == n - 2 * k,
                  qp.to_string() + " from n - 2k with observed k = " + std::to_string(k));
    }
    return rec;
}

VerificationReport verify(const FamilySpec& spec, std::int64_t r, const SweepBudget& budget) {
    auto report = skeleton(spec, budget.extended);
    report.records.push_back(verify_radius(spec, r, budget));
    report.tally();
    return report;
}

VerificationReport sweep(const FamilySpec& spec, const SweepBudget& budget) {
    auto report = skeleton(spec, budget.extended);
    const auto radii = sweep_radii(spec, budget.extended);
    report.records.resize(radii.size());

    unsigned workers = budget.threads != 0 ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, radii.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(radii.size());
    auto work = [&] {
        for (std::size_t i = next++; i < radii.size(); i = next++) {
            try {
                report.records[i] = verify_radius(spec, radii[i], budget);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    report.tally();
    return report;
}

}  // namespace agcodes
