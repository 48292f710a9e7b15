#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agcodes/distance.hpp"
#include "agcodes/families.hpp"
#include "agcodes/sweep.hpp"

namespace py = pybind11;
using namespace agcodes;

namespace {

// pybind11 holders cannot be pointer-to-const.
using FieldHolder = std::shared_ptr<Field>;

FieldHolder hold(const FieldPtr& f) { return std::const_pointer_cast<Field>(f); }

std::vector<std::vector<Rep>> rows_of(const Matrix& m) {
    std::vector<std::vector<Rep>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

Matrix matrix_from(const FieldPtr& f, const std::vector<std::vector<Rep>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rep> e;
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeError("ragged generator rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(f, rows.size(), cols, std::move(e));
}

py::dict distance_dict(const DistanceResult& d) {
    py::dict out;
    out["kind"] = to_string(d.kind);
    out["value"] = d.value ? py::cast(*d.value) : py::none();
    out["certificate"] = d.certificate;
    out["work"] = d.work;
    return out;
}

py::object range_obj(const std::optional<RadiusRange>& r) {
    return r ? py::cast(std::pair{r->lo, r->hi}) : py::none();
}

SweepBudget budget_from(std::uint64_t distance_budget, std::uint64_t samples, std::uint64_t seed,
                        std::size_t dual_identity_max_n, bool extended, unsigned threads) {
    return {distance_budget, samples, seed, dual_identity_max_n, extended, threads};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-orthogonal AG codes from y^q + y = x^m over GF(q^2)";

    auto hypothesis = py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    py::register_exception<CurveError>(m, "CurveError", PyExc_ValueError);
    (void)hypothesis;

    py::class_<Field, FieldHolder>(m, "Field")
        .def_static("create", [](std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
            return hold(Field::create(p, k, std::move(modulus)));
        }, py::arg("p"), py::arg("k"), py::arg("modulus") = std::nullopt,
           "Modulus coefficients are given lowest degree first.")
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("size", &Field::size)
        .def_property_readonly("primitive", &Field::primitive)
        .def_property_readonly("modulus", &Field::modulus)
        .def("describe", &Field::describe)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("mul", &Field::mul)
        .def("neg", &Field::neg)
        .def("inv", &Field::inv)
        .def("div", &Field::div)
        .def("pow", &Field::pow)
        .def("frobenius", &Field::frobenius)
        .def("__repr__", [](const Field& f) { return "<Field " + f.describe() + ">"; });

    py::class_<FamilySpec>(m, "FamilySpec")
        .def_property_readonly("family", &FamilySpec::tag)
        .def_property_readonly("label", &FamilySpec::label)
        .def_readonly("q", &FamilySpec::q)
        .def_readonly("param", &FamilySpec::param)
        .def_readonly("n", &FamilySpec::n)
        .def_readonly("g", &FamilySpec::g)
        .def_readonly("xs", &FamilySpec::xs)
        .def_readonly("subspace_basis", &FamilySpec::subspace_basis)
        .def_property_readonly("field", [](const FamilySpec& s) { return hold(s.curve->field()); })
        .def("__repr__", [](const FamilySpec& s) { return "<FamilySpec " + s.label() + ">"; });

    m.def("as_roots", &validate_as_roots, py::arg("q"), py::arg("m"), py::arg("modulus") = std::nullopt);
    m.def("herm_mult", &validate_herm_mult, py::arg("q"), py::arg("s"), py::arg("modulus") = std::nullopt);
    m.def("herm_add", &validate_herm_add, py::arg("q"), py::arg("k"), py::arg("basis") = std::nullopt,
          py::arg("modulus") = std::nullopt);

    m.def("ranges", [](const FamilySpec& spec) {
        const auto p = ranges(spec);
        py::dict out;
        out["euclidean_so"] = range_obj(p.euclidean_so_range);
        out["hermitian_so"] = range_obj(p.hermitian_so_range);
        out["self_dual_r"] = p.self_dual_r ? py::cast(*p.self_dual_r) : py::none();
        return out;
    });

    m.def("build", [](const FamilySpec& spec, std::int64_t r) {
        const auto fc = build(spec, r);
        py::dict out;
        out["n"] = fc.code.n();
        out["k"] = fc.code.k();
        out["r"] = r;
        out["generator"] = rows_of(fc.code.generator);
        out["points"] = [&] {
            std::vector<std::pair<Rep, Rep>> pts;
            for (const auto& pt : fc.code.points) pts.emplace_back(pt.x, pt.y);
            return pts;
        }();
        out["predicted_k0"] = fc.predicted.k0 ? py::cast(*fc.predicted.k0) : py::none();
        out["d0_lower"] = fc.predicted.d0_lower;
        out["euclidean_so"] = is_euclidean_so(fc.code);
        out["hermitian_so"] = is_hermitian_so(fc.code);
        return out;
    }, py::arg("spec"), py::arg("r"));

    m.def("quantum_params", [](const FamilySpec& spec, std::int64_t r) {
        const auto qp = quantum_params(spec, r);
        py::dict out;
        out["n"] = qp.n;
        out["k"] = qp.k1;
        out["d_lower"] = qp.d1_lower;
        out["q"] = qp.q;
        out["notation"] = qp.to_string();
        return out;
    }, py::arg("spec"), py::arg("r"));

    m.def("dual_identity_check", &dual_identity_check, py::arg("spec"), py::arg("r"));

    m.def("exact_distance", [](const FieldHolder& f, const std::vector<std::vector<Rep>>& rows, std::uint64_t budget) {
        return distance_dict(exact_distance(matrix_from(f, rows), budget));
    }, py::arg("field"), py::arg("generator"), py::arg("budget") = kDefaultDistanceBudget);

    m.def("sampled_upper_bound", [](const FieldHolder& f, const std::vector<std::vector<Rep>>& rows, std::uint64_t samples,
                                    std::uint64_t seed) {
        return distance_dict(sampled_upper_bound(matrix_from(f, rows), samples, seed));
    }, py::arg("field"), py::arg("generator"), py::arg("samples"), py::arg("seed") = 0);

    m.def("count_points", [](std::uint32_t q, std::uint32_t mm) {
        const auto c = count_and_check_maximal(make_curve(q, mm));
        py::dict out;
        out["rational_points"] = c.rational_points;
        out["hasse_weil_bound"] = c.hasse_weil_bound;
        out["maximal"] = c.maximal;
        return out;
    }, py::arg("q"), py::arg("m"));

    // Reports cross the boundary as JSON text; the Python side parses them.
    m.def("_verify_json", [](const FamilySpec& spec, std::int64_t r, std::uint64_t distance_budget, std::uint64_t samples,
                             std::uint64_t seed, std::size_t dual_identity_max_n, unsigned threads) {
        py::gil_scoped_release release;
        return to_json(verify(spec, r, budget_from(distance_budget, samples, seed, dual_identity_max_n, false, threads))).dump();
    });
    m.def("_sweep_json", [](const FamilySpec& spec, std::uint64_t distance_budget, std::uint64_t samples,
                            std::uint64_t seed, std::size_t dual_identity_max_n, bool extended, unsigned threads) {
        py::gil_scoped_release release;
        return to_json(sweep(spec, budget_from(distance_budget, samples, seed, dual_identity_max_n, extended, threads))).dump();
    });
    m.attr("DEFAULT_DISTANCE_BUDGET") = kDefaultDistanceBudget;
}
