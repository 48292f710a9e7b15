#include "agcodes/report.hpp"

namespace agcodes {

using json = nlohmann::ordered_json;

namespace {

CheckStatus status_from(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw std::invalid_argument("unknown check status: " + s);
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

json range_json(const RadiusRange& r) { return json::array({r.lo, r.hi}); }
RadiusRange range_from(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

json so_json(const SoFlag& f) { return json{{"predicted", f.predicted}, {"observed", f.observed}}; }
SoFlag so_from(const json& j) { return {j.at("predicted").get<bool>(), j.at("observed").get<bool>()}; }

json distance_json(const DistanceSummary& d) {
    return json{{"kind", d.kind}, {"value", optional_to_json(d.value)}, {"designed_lower", d.designed_lower}, {"work", d.work}};
}

DistanceSummary distance_from(const json& j) {
    return {j.at("kind").get<std::string>(), optional_from_json<std::size_t>(j.at("value")),
            j.at("designed_lower").get<std::int64_t>(), j.at("work").get<std::uint64_t>()};
}

json quantum_json(const QuantumParams& qp) {
    return json{{"n", qp.n}, {"k", qp.k1}, {"d_lower", qp.d1_lower}, {"q", qp.q}, {"notation", qp.to_string()}};
}

QuantumParams quantum_from(const json& j) {
    return {j.at("n").get<std::size_t>(), j.at("k").get<std::int64_t>(), j.at("d_lower").get<std::int64_t>(),
            j.at("q").get<std::uint32_t>()};
}

}  // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::tally() {
    summary = {};
    for (const auto& rec : records) {
        for (const auto& c : rec.checks) {
            switch (c.status) {
                case CheckStatus::pass: ++summary.checks_run, ++summary.passed; break;
                case CheckStatus::fail: ++summary.checks_run, ++summary.failed; break;
                case CheckStatus::skipped: ++summary.skipped; break;
            }
        }
    }
}

std::string VerificationReport::first_failure() const {
    for (const auto& rec : records)
        for (const auto& c : rec.checks)
            if (c.status == CheckStatus::fail) return "r=" + std::to_string(rec.r) + ": " + c.name + ": " + c.detail;
    return {};
}

json to_json(const VerificationReport& report) {
    const auto& s = report.spec;
    json spec{{"family", s.family},
              {"q", s.q},
              {s.param_name, s.param},
              {"field", s.field},
              {"subspace_basis", s.subspace_basis},
              {"n", s.n},
              {"g", s.g}};
    json ranges{{"euclidean_so", range_json(report.euclidean_range)},
                {"hermitian_so", report.hermitian_range ? range_json(*report.hermitian_range) : json(nullptr)},
                {"self_dual_r", optional_to_json(report.self_dual_r)}};

    json records = json::array();
    for (const auto& rec : report.records) {
        json checks = json::array();
        for (const auto& c : rec.checks) checks.push_back(json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        records.push_back(json{{"r", rec.r},
                               {"n", rec.n},
                               {"k", rec.k},
                               {"predicted_k0", optional_to_json(rec.predicted_k0)},
                               {"euclidean_so", so_json(rec.euclidean_so)},
                               {"hermitian_so", rec.hermitian_so ? so_json(*rec.hermitian_so) : json(nullptr)},
                               {"self_dual", rec.self_dual},
                               {"dual_identity", rec.dual_identity},
                               {"distance", distance_json(rec.distance)},
                               {"dual_distance", rec.dual_distance ? distance_json(*rec.dual_distance) : json(nullptr)},
                               {"quantum", rec.quantum ? quantum_json(*rec.quantum) : json(nullptr)},
                               {"checks", std::move(checks)}});
    }
    const auto& sum = report.summary;
    return json{{"spec", std::move(spec)},
                {"ranges", std::move(ranges)},
                {"extended", report.extended},
                {"records", std::move(records)},
                {"summary",
                 {{"checks_run", sum.checks_run}, {"passed", sum.passed}, {"failed", sum.failed}, {"skipped", sum.skipped}}}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport report;
    const auto& s = j.at("spec");
    report.spec.family = s.at("family").get<std::string>();
    report.spec.q = s.at("q").get<std::uint32_t>();
    for (const char* name : {"m", "s", "k"}) {
        if (s.contains(name)) {
            report.spec.param_name = name;
            report.spec.param = s.at(name).get<std::uint32_t>();
        }
    }
    report.spec.field = s.at("field").get<std::string>();
    report.spec.subspace_basis = s.at("subspace_basis").get<std::vector<Rep>>();
    report.spec.n = s.at("n").get<std::size_t>();
    report.spec.g = s.at("g").get<std::int64_t>();

    const auto& r = j.at("ranges");
    report.euclidean_range = range_from(r.at("euclidean_so"));
    if (!r.at("hermitian_so").is_null()) report.hermitian_range = range_from(r.at("hermitian_so"));
    report.self_dual_r = optional_from_json<std::int64_t>(r.at("self_dual_r"));
    report.extended = j.at("extended").get<bool>();

    for (const auto& jr : j.at("records")) {
        RadiusRecord rec;
        rec.r = jr.at("r").get<std::int64_t>();
        rec.n = jr.at("n").get<std::size_t>();
        rec.k = jr.at("k").get<std::size_t>();
        rec.predicted_k0 = optional_from_json<std::int64_t>(jr.at("predicted_k0"));
        rec.euclidean_so = so_from(jr.at("euclidean_so"));
        if (!jr.at("hermitian_so").is_null()) rec.hermitian_so = so_from(jr.at("hermitian_so"));
        rec.self_dual = jr.at("self_dual").get<bool>();
        rec.dual_identity = jr.at("dual_identity").get<std::string>();
        rec.distance = distance_from(jr.at("distance"));
        if (!jr.at("dual_distance").is_null()) rec.dual_distance = distance_from(jr.at("dual_distance"));
        if (!jr.at("quantum").is_null()) rec.quantum = quantum_from(jr.at("quantum"));
        for (const auto& c : jr.at("checks"))
            rec.checks.push_back({c.at("name").get<std::string>(), status_from(c.at("status").get<std::string>()),
                                  c.at("detail").get<std::string>()});
        report.records.push_back(std::move(rec));
    }
    const auto& sum = j.at("summary");
    report.summary = {sum.at("checks_run").get<std::size_t>(), sum.at("passed").get<std::size_t>(),
                      sum.at("failed").get<std::size_t>(), sum.at("skipped").get<std::size_t>()};
    return report;
}

}  // namespace agcodes
