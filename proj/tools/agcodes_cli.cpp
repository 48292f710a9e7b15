// agcodes: build, verify and sweep self-orthogonal AG codes from maximal curves.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid parameters (a family
// hypothesis or range condition is violated), 3 a predicted property failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agcodes/curve.hpp"
#include "agcodes/families.hpp"
#include "agcodes/matrix_io.hpp"
#include "agcodes/sweep.hpp"

namespace {

using agcodes::FamilySpec;
using json = nlohmann::ordered_json;

constexpr int kExitIo = 1;
constexpr int kExitParams = 2;
constexpr int kExitFailed = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyArgs {
    std::string family;
    std::uint32_t q = 0;
    std::optional<std::uint32_t> m, s, k;
    std::string modulus;         // c_k,...,c_0
    std::string subspace_basis;  // comma-separated element encodings
};

struct RunArgs {
    std::int64_t r = 0;
    std::string out;
    std::string json_path;
    agcodes::SweepBudget budget;
};

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw agcodes::HypothesisError(std::string("malformed ") + what + ": " + text);
        }
    }
    return out;
}

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--family", fa.family, "as | herm-mult | herm-add")
        ->required()
        ->check(CLI::IsMember({"as", "herm-mult", "herm-add"}));
    cmd->add_option("--q", fa.q, "subfield order q (a prime power)")->required();
    cmd->add_option("--m", fa.m, "exponent m (family as)");
    cmd->add_option("--s", fa.s, "subgroup order s (family herm-mult)");
    cmd->add_option("--k", fa.k, "subspace dimension k (family herm-add)");
    cmd->add_option("--modulus", fa.modulus, "GF(q^2) modulus coefficients, highest degree first");
    cmd->add_option("--subspace-basis", fa.subspace_basis, "herm-add subspace basis as element encodings");
}

void add_budget_options(CLI::App* cmd, RunArgs& ra) {
    cmd->add_flag("--extended", ra.budget.extended, "also visit radii outside the theorem ranges");
    cmd->add_option("--distance-budget", ra.budget.distance_budget, "max codewords for exact distance")
        ->capture_default_str();
    cmd->add_option("--samples", ra.budget.samples, "random codewords when exact distance is out of budget");
    cmd->add_option("--seed", ra.budget.seed, "sampling seed")->capture_default_str();
    cmd->add_option("--dual-identity-max-n", ra.budget.dual_identity_max_n, "largest n for the dual identity check")
        ->capture_default_str();
    cmd->add_option("--threads", ra.budget.threads, "worker threads (0: all cores)");
    cmd->add_option("--json", ra.json_path, "write the JSON report here ('-' for stdout)");
}

FamilySpec make_spec(const FamilyArgs& fa) {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!fa.modulus.empty()) {
        auto coeffs = parse_list(fa.modulus, "modulus");
        std::reverse(coeffs.begin(), coeffs.end());
        modulus = std::move(coeffs);
    }
    auto need = [&](const std::optional<std::uint32_t>& v, const char* flag) {
        if (!v) throw agcodes::HypothesisError(std::string("family ") + fa.family + " requires " + flag);
        return *v;
    };
    if (fa.family == "as") return agcodes::validate_as_roots(fa.q, need(fa.m, "--m"), modulus);
    if (fa.family == "herm-mult") return agcodes::validate_herm_mult(fa.q, need(fa.s, "--s"), modulus);
    std::optional<std::vector<agcodes::Rep>> basis;
    if (!fa.subspace_basis.empty()) basis = parse_list(fa.subspace_basis, "subspace basis");
    return agcodes::validate_herm_add(fa.q, need(fa.k, "--k"), basis, modulus);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    os << text;
    if (!os) throw IoError("failed writing " + path);
}

json spec_json(const FamilySpec& spec) {
    json j{{"family", spec.tag()}, {"q", spec.q}};
    j[spec.kind == agcodes::FamilyKind::as_roots ? "m" : spec.kind == agcodes::FamilyKind::herm_mult ? "s" : "k"] =
        spec.param;
    j["field"] = spec.curve->field()->describe();
    j["subspace_basis"] = spec.subspace_basis;
    j["n"] = spec.n;
    j["g"] = spec.g;
    return j;
}

int cmd_build(const FamilyArgs& fa, const RunArgs& ra) {
    const auto spec = make_spec(fa);
    if (ra.r < 0) throw agcodes::HypothesisError("r must be non-negative");
    const auto fc = agcodes::build(spec, ra.r);
    const auto& code = fc.code;
    std::cout << spec.label() << " r=" << ra.r << ": n=" << code.n() << " k=" << code.k() << " over "
              << spec.curve->field()->describe() << '\n';
    if (ra.out.empty()) return 0;

    std::ostringstream mat;
    agcodes::write_matrix_file(mat, code.generator, ra.r, spec.tag());
    write_text(ra.out, mat.str());

    json side = spec_json(spec);
    side["r"] = ra.r;
    side["k"] = code.k();
    side["predicted_k0"] = fc.predicted.k0 ? json(*fc.predicted.k0) : json(nullptr);
    side["d0_lower"] = fc.predicted.d0_lower;
    side["monomials"] = json::array();
    for (const auto& mono : code.basis.monomials) side["monomials"].push_back({mono.i, mono.j});
    write_text(ra.out + ".json", side.dump(2) + "\n");
    return 0;
}

int emit_report(const agcodes::VerificationReport& report, const RunArgs& ra) {
    for (const auto& rec : report.records) {
        std::cout << "r=" << rec.r << " n=" << rec.n << " k=" << rec.k;
        for (const auto& c : rec.checks) std::cout << ' ' << c.name << '=' << agcodes::to_string(c.status);
        if (rec.distance.value) std::cout << " d(" << rec.distance.kind << ")=" << *rec.distance.value;
        if (rec.quantum) std::cout << " quantum=" << rec.quantum->to_string();
        std::cout << '\n';
    }
    const auto& s = report.summary;
    std::cout << "checks run " << s.checks_run << ", passed " << s.passed << ", failed " << s.failed << ", skipped "
              << s.skipped << '\n';
    if (!ra.json_path.empty()) write_text(ra.json_path, agcodes::to_json(report).dump(2) + "\n");
    if (!report.passed()) {
        std::cerr << "FAILED " << report.first_failure() << '\n';
        return kExitFailed;
    }
    return 0;
}

int cmd_quantum(const FamilyArgs& fa, const RunArgs& ra) {
    const auto spec = make_spec(fa);
    const auto qp = agcodes::quantum_params(spec, ra.r);
    json j = spec_json(spec);
    j["r"] = ra.r;
    j["quantum"] = {{"n", qp.n}, {"k", qp.k1}, {"d_lower", qp.d1_lower}, {"q", qp.q}, {"notation", qp.to_string()}};
    const std::string text = j.dump(2) + "\n";
    if (ra.json_path.empty() || ra.json_path == "-")
        std::cout << text;
    else
        write_text(ra.json_path, text);
    return 0;
}

int cmd_curve(std::uint32_t q, std::uint32_t m) {
    const auto curve = agcodes::make_curve(q, m);
    const auto count = agcodes::count_and_check_maximal(curve);
    json j{{"q", q},
           {"m", m},
           {"genus", curve.genus()},
           {"hermitian", curve.hermitian()},
           {"rational_points", count.rational_points},
           {"hasse_weil_bound", count.hasse_weil_bound},
           {"maximal", count.maximal}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-orthogonal and self-dual AG codes from maximal curves"};
    app.require_subcommand(1);

    FamilyArgs fa;
    RunArgs ra;
    std::uint32_t curve_q = 0, curve_m = 0;

    auto* build = app.add_subcommand("build", "construct a code and write its generator matrix");
    add_family_options(build, fa);
    build->add_option("--r", ra.r, "divisor multiple r of Q_inf")->required();
    build->add_option("--out", ra.out, "generator matrix file (a .json sidecar is written next to it)");

    auto* verify = app.add_subcommand("verify", "check every predicted property at one radius");
    add_family_options(verify, fa);
    verify->add_option("--r", ra.r, "divisor multiple r of Q_inf")->required();
    add_budget_options(verify, ra);

    auto* sweep = app.add_subcommand("sweep", "verify all radii of the theorem ranges");
    add_family_options(sweep, fa);
    add_budget_options(sweep, ra);

    auto* quantum = app.add_subcommand("quantum", "quantum code parameters via the Hermitian construction");
    add_family_options(quantum, fa);
    quantum->add_option("--r", ra.r, "divisor multiple r of Q_inf")->required();
    quantum->add_option("--json", ra.json_path, "write the JSON record here instead of stdout");

    auto* curve = app.add_subcommand("curve", "count rational points of y^q + y = x^m over GF(q^2)");
    curve->add_option("--q", curve_q)->required();
    curve->add_option("--m", curve_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParams;
    }

    try {
        if (*build) return cmd_build(fa, ra);
        if (*verify) return emit_report(agcodes::verify(make_spec(fa), ra.r, ra.budget), ra);
        if (*sweep) return emit_report(agcodes::sweep(make_spec(fa), ra.budget), ra);
        if (*quantum) return cmd_quantum(fa, ra);
        if (*curve) return cmd_curve(curve_q, curve_m);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::logic_error& e) {
        // HypothesisError, CurveError and FieldError all derive from invalid_argument.
        if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitParams;
        }
        std::cerr << "FAILED internal consistency check: " << e.what() << '\n';
        return kExitFailed;
    }
    return 0;
}
