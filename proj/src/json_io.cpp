#include "grastor/json_io.hpp"

#include <sstream>

#include "grastor/error.hpp"

namespace grastor {

json to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Subspace& s) {
    return json{{"n", s.ambient_dim()}, {"ring", s.ring().to_string()}, {"basis", to_json(s.basis())}};
}

json to_json(const LinearRelation& f) {
    json j = to_json(f.carrier());
    j["half_dim"] = f.half_dim();
    return j;
}

json to_json(const FormDescriptor& f) {
    return json{{"n", f.ambient_dim()},
                {"ring", f.ring().to_string()},
                {"kind", f.kind() == FormKind::hermitian ? "hermitian" : "skew_hermitian"},
                {"gram", to_json(f.gram())}};
}

Matrix matrix_from_json(const Ring& ring, const json& j) {
    if (!j.is_array()) throw Error("matrix JSON must be an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j.at(0).size() : 0;
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw Error("ragged matrix JSON");
        for (size_t k = 0; k < cols; ++k) {
            const json& cell = j.at(i).at(k);
            m.at(i, k) = cell.is_number_integer()
                             ? Scalar::of(ring, cell.get<long>())
                             : Scalar::parse(ring, cell.get<std::string>());
        }
    }
    return m;
}

Subspace subspace_from_json(const json& j) {
    Ring ring = Ring::parse(j.at("ring").get<std::string>());
    size_t n = j.at("n").get<size_t>();
    Matrix basis = matrix_from_json(ring, j.at("basis"));
    if (basis.rows() == 0) return Subspace::zero(ring, n);
    if (basis.cols() != n) throw DimensionError("basis rows must have length n");
    Subspace s = Subspace::from_span(basis);
    if (!(s.basis() == basis))
        throw Error("subspace basis is not in canonical reduced row echelon form");
    return s;
}

LinearRelation relation_from_json(const json& j) {
    Subspace carrier = subspace_from_json(j);
    size_t half = j.at("half_dim").get<size_t>();
    if (carrier.ambient_dim() != 2 * half) throw DimensionError("carrier ambient must be 2n");
    return LinearRelation::from_carrier(carrier);
}

FormDescriptor form_from_json(const json& j) {
    Ring ring = Ring::parse(j.at("ring").get<std::string>());
    Matrix gram = matrix_from_json(ring, j.at("gram"));
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "hermitian" && kind != "skew_hermitian") throw Error("unknown form kind");
    return FormDescriptor(kind == "hermitian" ? FormKind::hermitian : FormKind::skew_hermitian,
                          gram);
}

std::string table_csv(const std::vector<std::vector<uint32_t>>& table) {
    std::ostringstream os;
    os << "index";
    for (size_t j = 0; j < table.size(); ++j) os << "," << j;
    os << "\n";
    for (size_t i = 0; i < table.size(); ++i) {
        os << i;
        for (uint32_t cell : table[i]) os << "," << cell;
        os << "\n";
    }
    return os.str();
}

json group_legend(const SubspaceGroup& g) {
    json legend = json::array();
    for (const auto& el : g.elements) legend.push_back(to_json(el));
    return json{{"origin", g.origin}, {"elements", legend}};
}

json table_legend(const MatrixTable& t) {
    json legend = json::array();
    for (const auto& el : t.elements) legend.push_back(to_json(el));
    return json{{"elements", legend}};
}

}  // namespace grastor
