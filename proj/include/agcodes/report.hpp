#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agcodes/families.hpp"

namespace agcodes {

enum class CheckStatus { pass, fail, skipped };

struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct SoFlag {
    bool predicted;
    bool observed;
};

struct DistanceSummary {
    std::string kind;  // exact | upper_bound | designed_only
    std::optional<std::size_t> value;
    std::int64_t designed_lower;
    std::uint64_t work;
};

struct RadiusRecord {
    std::int64_t r = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::int64_t> predicted_k0;
    SoFlag euclidean_so{false, false};
    std::optional<SoFlag> hermitian_so;
    bool self_dual = false;
    std::string dual_identity = "n/a";  // pass | fail | skipped | n/a
    DistanceSummary distance;
    std::optional<DistanceSummary> dual_distance;
    std::optional<QuantumParams> quantum;
    std::vector<Check> checks;
};

struct ReportSpec {
    std::string family;
    std::uint32_t q = 0;
    std::string param_name;  // m | s | k
    std::uint32_t param = 0;
    std::string field;
    std::vector<Rep> subspace_basis;
    std::size_t n = 0;
    std::int64_t g = 0;
};

struct ReportSummary {
    std::size_t checks_run = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct VerificationReport {
    ReportSpec spec;
    RadiusRange euclidean_range{0, -1};
    std::optional<RadiusRange> hermitian_range;
    std::optional<std::int64_t> self_dual_r;
    bool extended = false;
    std::vector<RadiusRecord> records;
    ReportSummary summary;

    bool passed() const { return summary.failed == 0; }
    /// Recomputes the summary from the per-record checks.
    void tally();
    /// First failing check as "r=<r>: <name>: <detail>", empty when none.
    std::string first_failure() const;
};

const char* to_string(CheckStatus status);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace agcodes
