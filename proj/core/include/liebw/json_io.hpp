#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liebw/double.hpp"
#include "liebw/homogeneous.hpp"
#include "liebw/numeric_checks.hpp"

namespace liebw {

/// Insertion-ordered, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Throws ParseError with the parser's line and column.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(std::string_view text, const std::string& source = "<string>");

/// A poly-string ("2*eta - 1/2") or a JSON integer.
PolyExpr poly_from_json(const Json& j, const std::string& where);
Json poly_to_json(const PolyExpr& p);

/// A basis label or a zero-based index.
std::size_t index_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& where);

/// {"name": "poly-string", ...}
Substitution substitution_from_json(const Json& j, const std::string& where);
Json substitution_to_json(const Substitution& s);
/// {"name": number, ...}
Assignment assignment_from_json(const Json& j, const std::string& where);
ExactAssignment exact_assignment_from_json(const Json& j, const std::string& where);

/// {"dim":N,"labels":[...],"params":[...],"brackets":[{"i","j","k","coef"}]}.
/// Parameters appearing in coefficients must be declared in "params" when
/// that field is present.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& l);

/// [{"i":label,"j":label,"coef":"poly"}] wedge terms.
RMatrix rmatrix_from_json(const Json& terms, const std::vector<std::string>& labels, const std::string& where);
Json rmatrix_to_json(const RMatrix& r, const std::vector<std::string>& labels);

/// [{"i","j","k","coef"}]: delta(e_i) contains coef * e_j ^ e_k.
CocommTensor cocomm_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& where);
Json cocomm_to_json(const CocommTensor& f, const std::vector<std::string>& labels);

/// Rows are new basis vectors in old coordinates, either dense arrays or
/// objects {"old label": "coef"}.
PolyMatrix basis_rows_from_json(const Json& rows, const std::vector<std::string>& old_labels, const std::string& where);
Json basis_change_to_json(const BasisChange& m, const std::vector<std::string>& old_labels);

Json bialgebra_to_json(const LieBialgebra& b);
Json double_to_json(const DoubleAlgebra& d);
Json closure_report_to_json(const ClosureReport& r);
Json cell_result_to_json(const CellResult& c);
Json flat_limit_to_json(const FlatLimitReport& f);

}  // namespace liebw
