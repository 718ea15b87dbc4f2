#include "liebw/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    if (!j[n].is_string()) throw ParseError(where + "[" + std::to_string(n) + "]: expected a string");
    out.push_back(j[n].get<std::string>());
  }
  return out;
}

std::string at(const std::string& where, std::size_t n) { return where + "[" + std::to_string(n) + "]"; }

Json vec_json(const Eigen::Vector3d& v) { return Json::array({v[0], v[1], v[2]}); }

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

PolyExpr poly_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return PolyExpr(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": expected a poly-string or an integer");
  try {
    return PolyExpr::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json poly_to_json(const PolyExpr& p) { return p.str(); }

std::size_t index_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& where) {
  if (j.is_number_integer()) {
    const long v = j.get<long>();
    if (v < 0 || static_cast<std::size_t>(v) >= labels.size()) {
      throw ParseError(where + ": index " + std::to_string(v) + " out of range");
    }
    return static_cast<std::size_t>(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::size_t n = 0; n < labels.size(); ++n) {
      if (labels[n] == s) return n;
    }
    throw ParseError(where + ": unknown label '" + s + "'");
  }
  throw ParseError(where + ": expected a label or an index");
}

Substitution substitution_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object of poly-strings");
  Substitution s;
  for (const auto& [k, v] : j.items()) s.emplace(k, poly_from_json(v, where + "." + k));
  return s;
}

Json substitution_to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [k, v] : s) out[k] = v.str();
  return out;
}

Assignment assignment_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object of numbers");
  Assignment a;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw ParseError(where + "." + k + ": expected a number");
    a.emplace(k, v.get<double>());
  }
  return a;
}

ExactAssignment exact_assignment_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object of rationals");
  ExactAssignment a;
  for (const auto& [k, v] : j.items()) {
    const auto p = poly_from_json(v, where + "." + k);
    const auto c = p.constant_value();
    if (!c) throw ParseError(where + "." + k + ": expected a rational constant");
    a.emplace(k, *c);
  }
  return a;
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::string where = "algebra";
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = string_list(j["labels"], where + ".labels");
  if (j.contains("dim")) {
    const auto& d = j["dim"];
    if (!d.is_number_integer() || d.get<long>() < 0) throw ParseError(where + ".dim: expected a nonnegative integer");
    const auto n = static_cast<std::size_t>(d.get<long>());
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    } else if (labels.size() != n) {
      throw ParseError(where + ": dim " + std::to_string(n) + " but " + std::to_string(labels.size()) + " labels");
    }
  }
  if (labels.empty()) throw ParseError(where + ": needs \"dim\" or \"labels\"");

  std::set<std::string> declared;
  const bool check_params = j.contains("params");
  if (check_params) {
    for (auto& p : string_list(j["params"], where + ".params")) declared.insert(p);
  }

  const auto& br = field(j, "brackets", where);
  if (!br.is_array()) throw ParseError(where + ".brackets: expected an array");
  std::vector<BracketEntry> entries;
  for (std::size_t n = 0; n < br.size(); ++n) {
    const std::string w = at(where + ".brackets", n);
    const auto& e = br[n];
    BracketEntry be{index_from_json(field(e, "i", w), labels, w + ".i"),
                    index_from_json(field(e, "j", w), labels, w + ".j"),
                    index_from_json(field(e, "k", w), labels, w + ".k"), poly_from_json(field(e, "coef", w), w + ".coef")};
    if (check_params) {
      for (const auto& p : be.coef.parameters()) {
        if (!declared.count(p)) throw ParseError(w + ".coef: undeclared parameter '" + p + "'");
      }
    }
    if (be.i == be.j) throw ParseError(w + ": bracket of '" + labels[be.i] + "' with itself");
    entries.push_back(std::move(be));
  }
  return LieAlgebra(std::move(labels), entries);
}

Json algebra_to_json(const LieAlgebra& l) {
  Json out;
  out["dim"] = l.dim();
  out["labels"] = l.labels();
  out["params"] = l.parameters();
  Json br = Json::array();
  for (const auto& e : l.entries()) {
    br.push_back({{"i", l.label(e.i)}, {"j", l.label(e.j)}, {"k", l.label(e.k)}, {"coef", e.coef.str()}});
  }
  out["brackets"] = std::move(br);
  return out;
}

RMatrix rmatrix_from_json(const Json& terms, const std::vector<std::string>& labels, const std::string& where) {
  if (!terms.is_array()) throw ParseError(where + ": expected an array of wedge terms");
  std::vector<WedgeTerm> out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string w = at(where, n);
    const auto& t = terms[n];
    out.push_back({index_from_json(field(t, "i", w), labels, w + ".i"), index_from_json(field(t, "j", w), labels, w + ".j"),
                   poly_from_json(field(t, "coef", w), w + ".coef")});
  }
  return RMatrix(labels.size(), out);
}

Json rmatrix_to_json(const RMatrix& r, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& t : r.wedge_terms()) {
    out.push_back({{"i", labels.at(t.i)}, {"j", labels.at(t.j)}, {"coef", t.coef.str()}});
  }
  return out;
}

CocommTensor cocomm_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<BracketEntry> entries;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string w = at(where, n);
    const auto& e = j[n];
    entries.push_back({index_from_json(field(e, "i", w), labels, w + ".i"), index_from_json(field(e, "j", w), labels, w + ".j"),
                       index_from_json(field(e, "k", w), labels, w + ".k"), poly_from_json(field(e, "coef", w), w + ".coef")});
  }
  return CocommTensor(labels.size(), entries);
}

Json cocomm_to_json(const CocommTensor& f, const std::vector<std::string>& labels) {
  Json out = Json::array();
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!f(i, a, b).is_zero()) {
          out.push_back({{"i", labels.at(i)}, {"j", labels.at(a)}, {"k", labels.at(b)}, {"coef", f(i, a, b).str()}});
        }
      }
    }
  }
  return out;
}

PolyMatrix basis_rows_from_json(const Json& rows, const std::vector<std::string>& old_labels, const std::string& where) {
  if (!rows.is_array()) throw ParseError(where + ": expected an array of rows");
  const std::size_t n = old_labels.size();
  if (rows.size() != n) {
    throw ParseError(where + ": " + std::to_string(rows.size()) + " rows for dimension " + std::to_string(n));
  }
  PolyMatrix m(n, PolyVec(n));
  for (std::size_t a = 0; a < n; ++a) {
    const std::string w = at(where, a);
    const auto& row = rows[a];
    if (row.is_array()) {
      if (row.size() != n) throw ParseError(w + ": expected " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) m[a][i] = poly_from_json(row[i], at(w, i));
    } else if (row.is_object()) {
      for (const auto& [k, v] : row.items()) {
        m[a][index_from_json(Json(k), old_labels, w)] += poly_from_json(v, w + "." + k);
      }
    } else {
      throw ParseError(w + ": expected an array or an object");
    }
  }
  return m;
}

Json basis_change_to_json(const BasisChange& m, const std::vector<std::string>& old_labels) {
  Json out;
  out["labels"] = m.labels();
  Json rows = Json::array();
  for (const auto& row : m.matrix()) {
    Json r = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_zero()) r[old_labels.at(i)] = row[i].str();
    }
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out;
}

Json bialgebra_to_json(const LieBialgebra& b) {
  Json out = algebra_to_json(b.algebra());
  out["cocomm"] = cocomm_to_json(b.cocomm(), b.algebra().labels());
  out["dual_labels"] = b.dual_labels();
  return out;
}

Json double_to_json(const DoubleAlgebra& d) {
  Json out = algebra_to_json(d.algebra());
  out["half"] = d.half();
  out["canonical_r"] = rmatrix_to_json(d.canonical_r(), d.labels());
  out["canonical_cocomm"] = cocomm_to_json(d.canonical_cocomm(), d.labels());
  return out;
}

Json closure_report_to_json(const ClosureReport& r) {
  Json out;
  out["lagrangian"] = r.lagrangian;
  out["subalgebra"] = r.subalgebra;
  out["coisotropic"] = r.coisotropic;
  out["poisson_subgroup"] = r.poisson_subgroup;
  out["pi_zero"] = r.pi_zero;
  auto tensor = [](const std::vector<std::vector<PolyVec>>& t, const char* last) {
    Json arr = Json::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t[a].size(); ++b) {
        for (std::size_t c = 0; c < t[a][b].size(); ++c) {
          if (!t[a][b][c].is_zero()) arr.push_back({{"a", a}, {"b", b}, {last, c}, {"value", t[a][b][c].str()}});
        }
      }
    }
    return arr;
  };
  out["M_tensor"] = {{"gamma", tensor(r.m_gamma, "gamma")}, {"i", tensor(r.m_i, "i")}};
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"check", x.check}, {"component", x.component}, {"value", x.value}});
  out["violations"] = std::move(v);
  return out;
}

Json cell_result_to_json(const CellResult& c) {
  return {{"bracket_id", c.bracket_id}, {"chart", c.chart},       {"pair", c.pair},
          {"n_points", c.n_points},     {"max_abs_err", c.max_abs_err}, {"max_rel_err", c.max_rel_err},
          {"pass", c.pass}};
}

Json flat_limit_to_json(const FlatLimitReport& f) {
  return {{"bracket_id", f.bracket_id}, {"pair", Json::array({f.i, f.j})}, {"point", vec_json(f.point.coords)},
          {"param", f.param},           {"sequence", f.sequence},        {"values", f.values},
          {"extrapolated", f.extrapolated}, {"target", f.target},        {"abs_err", f.abs_err}};
}

}  // namespace liebw
