#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grastor/verify.hpp"

namespace py = pybind11;
using namespace grastor;

namespace {

Matrix matrix_from_lists(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
    Matrix m(ring, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Scalar::parse(ring, rows[i][j]);
    return m;
}

std::vector<std::vector<std::string>> matrix_to_lists(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).to_string();
    return rows;
}

py::dict verify_to_dict(const VerifyResult& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["passed"] = r.passed;
    d["checked"] = r.checked;
    d["failures"] = r.failures.dump();
    d["notes"] = r.notes.dump();
    return d;
}

}  // namespace

PYBIND11_MODULE(_grastor, m) {
    m.doc() = "exact Grassmannian geometry calculus: the quintary product, linear "
              "relations, involutions, classical torsors and their homotopes";

    py::register_exception<NotAdmissible>(m, "NotAdmissibleError");
    py::register_exception<NotTransversal>(m, "NotTransversalError");
    py::register_exception<NotInvertible>(m, "NotInvertibleError");
    py::register_exception<Error>(m, "GrastorError");

    py::class_<Ring>(m, "Ring")
        .def_static("gf", &Ring::gf, py::arg("p"))
        .def_static("gf2", [](uint32_t p) { return Ring::gf2(p); }, py::arg("p"))
        .def_static("rationals", &Ring::rationals)
        .def_static("parse", &Ring::parse)
        .def("cardinality", &Ring::cardinality)
        .def("__str__", &Ring::to_string)
        .def("__repr__", &Ring::to_string)
        .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init([](const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
                 return matrix_from_lists(ring, rows);
             }),
             py::arg("ring"), py::arg("rows"))
        .def_static("identity", &Matrix::identity)
        .def_static("of_ints", &Matrix::of_ints)
        .def("rows", [](const Matrix& m) { return matrix_to_lists(m); })
        .def("inverse", &Matrix::inverse)
        .def("transpose", &Matrix::transpose)
        .def("__mul__", [](const Matrix& a, const Matrix& b) { return a * b; })
        .def("__add__", [](const Matrix& a, const Matrix& b) { return a + b; })
        .def("__sub__", [](const Matrix& a, const Matrix& b) { return a - b; })
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__str__", &Matrix::to_string)
        .def("__repr__", &Matrix::to_string);

    py::class_<Subspace>(m, "Subspace")
        .def_static(
            "span",
            [](const Ring& ring, size_t n, const std::vector<std::vector<long>>& rows) {
                return Subspace::span_of_ints(ring, n, rows);
            },
            py::arg("ring"), py::arg("n"), py::arg("rows"))
        .def_static("from_span", &Subspace::from_span)
        .def_static("zero", &Subspace::zero)
        .def_static("full", &Subspace::full)
        .def("dim", &Subspace::dim)
        .def("ambient_dim", &Subspace::ambient_dim)
        .def("basis", [](const Subspace& s) { return matrix_to_lists(s.basis()); })
        .def("leq", &Subspace::leq)
        .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
        .def("__lt__", [](const Subspace& a, const Subspace& b) { return a < b; })
        .def("__hash__", [](const Subspace& s) { return py::hash(py::str(s.to_string())); })
        .def("__str__", &Subspace::to_string)
        .def("__repr__", &Subspace::to_string);

    m.def("join", &join);
    m.def("meet", &meet);
    m.def("is_transversal", &is_transversal);
    m.def("complement", &complement);
    m.def("projection_matrix", &projection_matrix);
    m.def("apply", &apply);
    m.def("enumerate_subspaces", &enumerate_subspaces, py::arg("ring"), py::arg("n"),
          py::arg("limit") = default_enumeration_limit());
    m.def("count_subspaces", &count_subspaces);
    m.def("gaussian_binomial", &gaussian_binomial);

    m.def("gamma", &gamma_global, "the global quintary product (relation path)");
    m.def("gamma_oracle", &gamma_oracle, "the defining set-formula evaluation");
    m.def("gamma_restricted", &gamma_restricted, py::arg("x"), py::arg("a"), py::arg("y"),
          py::arg("b"), py::arg("z"), py::arg("strict_y") = true);
    m.def("pi_scalar", [](const Subspace& x, const Subspace& a, const Subspace& y, long s) {
        return pi_scalar(x, a, y, Scalar::of(x.ring(), s));
    });

    py::class_<LinearRelation>(m, "LinearRelation")
        .def_static("identity", &LinearRelation::identity)
        .def_static("graph", &LinearRelation::graph)
        .def_static("from_carrier", &LinearRelation::from_carrier)
        .def("carrier", &LinearRelation::carrier)
        .def("dim", &LinearRelation::dim)
        .def("is_graph", &LinearRelation::is_graph)
        .def("as_matrix", &LinearRelation::as_matrix)
        .def("__eq__", [](const LinearRelation& a, const LinearRelation& b) { return a == b; })
        .def("__repr__",
             [](const LinearRelation& f) { return "relation " + f.carrier().to_string(); });
    m.def("compose", &compose);
    m.def("rel_inverse", &rel_inverse);
    m.def("rel_apply", &rel_apply);
    m.def("rel_diff", &rel_diff);
    m.def("gen_projection", &gen_projection);
    m.def("rel_adjoint", &rel_adjoint);

    py::enum_<FormKind>(m, "FormKind")
        .value("hermitian", FormKind::hermitian)
        .value("skew_hermitian", FormKind::skew_hermitian);
    py::enum_<StandardFamily>(m, "StandardFamily")
        .value("symplectic", StandardFamily::symplectic)
        .value("hyperbolic", StandardFamily::hyperbolic)
        .value("signature", StandardFamily::signature);
    py::class_<FormDescriptor>(m, "FormDescriptor")
        .def(py::init<FormKind, Matrix>())
        .def("gram", &FormDescriptor::gram)
        .def("alternating", &FormDescriptor::alternating);
    m.def("standard_form", &standard_form);
    m.def("orthocomplement", &orthocomplement);
    m.def("is_lagrangian", &is_lagrangian);
    m.def("enumerate_lagrangians", &enumerate_lagrangians, py::arg("beta"),
          py::arg("limit") = default_enumeration_limit());
    m.def("operator_adjoint", &operator_adjoint);
    m.def("is_adjoinable_pair", &is_adjoinable_pair);

    m.def("homotope_product", &homotope_product);
    m.def("homotope_inverse", &homotope_inverse);
    m.def("lie_bracket", &lie_bracket_homotope);
    m.def("lie_bracket_dual", &lie_bracket_via_dual_numbers);

    py::enum_<GroupFamily>(m, "GroupFamily")
        .value("gl", GroupFamily::gl)
        .value("gl_rect", GroupFamily::gl_rect)
        .value("orthogonal", GroupFamily::orthogonal)
        .value("symplectic", GroupFamily::symplectic)
        .value("unitary", GroupFamily::unitary);
    py::class_<HomotopeGroupSpec>(m, "HomotopeGroupSpec").def(py::init<GroupFamily, Matrix>());
    py::class_<MatrixTable>(m, "MatrixTable")
        .def("order", &MatrixTable::order)
        .def_readonly("table", &MatrixTable::table)
        .def("elements",
             [](const MatrixTable& t) {
                 std::vector<std::vector<std::vector<std::string>>> out;
                 for (const auto& el : t.elements) out.push_back(matrix_to_lists(el));
                 return out;
             });
    m.def("group_membership", &group_membership);
    m.def("enumerate_group", &enumerate_group, py::arg("spec"), py::arg("limit") = 1u << 20);
    m.def("semigroup_hull", &semigroup_hull, py::arg("spec"), py::arg("limit") = 1u << 20);

    py::enum_<ParameterFamily>(m, "ParameterFamily")
        .value("sym", ParameterFamily::sym)
        .value("asym", ParameterFamily::asym)
        .value("herm", ParameterFamily::herm);
    m.def("classify_orbits", [](ParameterFamily fam, size_t n, const Ring& ring) {
        OrbitReport rep = classify_orbits(fam, n, ring);
        py::list orbits;
        for (const auto& orbit : rep.orbits) {
            py::dict d;
            d["representative"] = matrix_to_lists(orbit.representative);
            d["size"] = orbit.size;
            orbits.append(d);
        }
        return orbits;
    });

    m.def(
        "verify",
        [](const std::string& suite, uint32_t p, size_t n, uint64_t samples, uint64_t seed,
           int exhaustive, const std::string& form, unsigned workers) {
            RunConfig cfg;
            cfg.p = p;
            cfg.n = n;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.exhaustive = exhaustive;
            cfg.form = form;
            cfg.workers = workers;
            return verify_to_dict(run_suite(suite, cfg));
        },
        py::arg("suite"), py::arg("p") = 2, py::arg("n") = 2, py::arg("samples") = 1000,
        py::arg("seed") = 1, py::arg("exhaustive") = -1, py::arg("form") = "symplectic",
        py::arg("workers") = 0);
    m.def("suite_names", &suite_names);
}
