#pragma once

#include <json.hpp>

#include "grastor/classical.hpp"
#include "grastor/relation.hpp"

namespace grastor {

using nlohmann::json;

// Wire formats. Subspace: {"n": int, "ring": str, "basis": [[scalar-str]]}
// with the basis rows in canonical RREF (rejected otherwise). Relations add
// {"half_dim": n} around a carrier in K^{2n}. Forms:
// {"n", "ring", "kind", "gram": [[...]]}.
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const LinearRelation& f);
json to_json(const FormDescriptor& f);

Matrix matrix_from_json(const Ring& ring, const json& j);
Subspace subspace_from_json(const json& j);
LinearRelation relation_from_json(const json& j);
FormDescriptor form_from_json(const json& j);

// CSV table export: header row "index,elements...", cells are product
// indices; the legend maps indices to serialized elements.
std::string table_csv(const std::vector<std::vector<uint32_t>>& table);
json group_legend(const SubspaceGroup& g);
json table_legend(const MatrixTable& t);

}  // namespace grastor
