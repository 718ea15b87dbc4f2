#include "liebw/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "liebw/errors.hpp"

#ifndef LIEBW_DEFAULT_CATALOG_DIR
#define LIEBW_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace liebw {

namespace {

using Lookup = std::function<const CatalogEntry&(const std::string&)>;

struct KindInfo {
  EntryKind kind;
  const char* name;
  const char* dir;
};

constexpr KindInfo kKinds[] = {
    {EntryKind::Algebra, "algebra", "algebras"},
    {EntryKind::Bialgebra, "bialgebra", "bialgebras"},
    {EntryKind::RMatrix, "rmatrix", "rmatrices"},
    {EntryKind::BasisChange, "basis_change", "basis_changes"},
    {EntryKind::BracketFn, "bracket_fn", "brackets"},
};

template <class T>
const T& expect(const CatalogEntry& e, EntryKind kind) {
  if (e.kind != kind) {
    throw UnknownKey("'" + e.key + "' is a " + to_string(e.kind) + ", not a " + to_string(kind));
  }
  return std::get<T>(e.payload);
}

std::string string_field(const Json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_string()) throw ParseError(where + ": expected string field \"" + name + "\"");
  return it->get<std::string>();
}

Substitution optional_substitution(const Json& j, const char* name, const std::string& where) {
  return j.contains(name) ? substitution_from_json(j[name], where + "." + name) : Substitution{};
}

LieAlgebra algebra_ref(const Json& j, const Lookup& lookup, const std::string& where) {
  if (j.is_string()) return expect<LieAlgebra>(lookup(j.get<std::string>()), EntryKind::Algebra);
  if (j.is_object()) return algebra_from_json(j);
  throw ParseError(where + ": expected an algebra key or an inline algebra");
}

YbeVerdict verdict_from_string(const std::string& s, const std::string& where) {
  if (s == "cybe") return YbeVerdict::Cybe;
  if (s == "mcybe") return YbeVerdict::Mcybe;
  if (s == "none") return YbeVerdict::None;
  throw ParseError(where + ": verdict must be cybe, mcybe or none");
}

bool holds(YbeVerdict v, const LieAlgebra& l, const RMatrix& r) {
  switch (v) {
    case YbeVerdict::Cybe: return is_cybe(l, r);
    case YbeVerdict::Mcybe: return is_mcybe(l, r);
    case YbeVerdict::None: return true;
  }
  return true;
}

// A few deterministic points on an affine constraint, used for load-time
// validation. Points where the solved parameter is undetermined are skipped.
std::vector<ExactAssignment> generated_points(const Constraint& c) {
  std::vector<ExactAssignment> out;
  if (!c.solve_for) return out;
  std::vector<std::string> free;
  for (const auto& p : c.poly.parameters()) {
    if (p != *c.solve_for) free.push_back(p);
  }
  for (int k = 1; k <= 3; ++k) {
    ExactAssignment pt;
    for (std::size_t n = 0; n < free.size(); ++n) pt[free[n]] = Rational(static_cast<long>(n + 2 * k), k + 1);
    try {
      out.push_back(solve_affine(c.poly, *c.solve_for, pt));
    } catch (const DomainError&) {
    }
  }
  return out;
}

void validate_rmatrix(const RMatrixPayload& p, const std::string& where) {
  if (!p.constraint) {
    if (!holds(p.verdict, p.algebra, p.r)) throw VerdictMismatch(where + ": declared YBE verdict does not hold");
    return;
  }
  auto points = p.constraint->samples;
  for (auto& g : generated_points(*p.constraint)) points.push_back(std::move(g));
  if (points.empty()) throw ParseError(where + ".constraint: needs samples or solve_for");
  for (const auto& pt : points) {
    const Substitution s = constants(pt);
    if (!p.constraint->poly.substitute(s).is_zero()) {
      throw VerdictMismatch(where + ".constraint: sample point is not on the constraint variety");
    }
    if (!holds(p.verdict, p.algebra.substitute(s), p.r.substitute(s))) {
      throw VerdictMismatch(where + ": declared YBE verdict fails at a point of the constraint variety");
    }
  }
}

RMatrixPayload parse_rmatrix(const Json& j, const Lookup& lookup, const std::string& where) {
  if (!j.contains("algebra")) throw ParseError(where + ": missing field \"algebra\"");
  RMatrixPayload p{j["algebra"].is_string() ? j["algebra"].get<std::string>() : std::string(),
                   algebra_ref(j["algebra"], lookup, where + ".algebra"), RMatrix(0), YbeVerdict::None, std::nullopt};
  if (!j.contains("terms")) throw ParseError(where + ": missing field \"terms\"");
  p.r = rmatrix_from_json(j["terms"], p.algebra.labels(), where + ".terms");
  const Substitution s = optional_substitution(j, "substitute", where);
  if (!s.empty()) {
    p.algebra = p.algebra.substitute(s);
    p.r = p.r.substitute(s);
  }
  if (j.contains("verdict")) p.verdict = verdict_from_string(string_field(j, "verdict", where), where + ".verdict");
  if (j.contains("constraint")) {
    const auto& cj = j["constraint"];
    const std::string w = where + ".constraint";
    Constraint c;
    if (!cj.contains("poly")) throw ParseError(w + ": missing field \"poly\"");
    c.substitute = optional_substitution(cj, "substitute", w);
    c.poly = poly_from_json(cj["poly"], w + ".poly").substitute(c.substitute);
    if (cj.contains("solve_for")) c.solve_for = string_field(cj, "solve_for", w);
    if (cj.contains("samples")) {
      const auto& sj = cj["samples"];
      if (!sj.is_array()) throw ParseError(w + ".samples: expected an array");
      for (std::size_t n = 0; n < sj.size(); ++n) {
        c.samples.push_back(exact_assignment_from_json(sj[n], w + ".samples[" + std::to_string(n) + "]"));
      }
    }
    p.constraint = std::move(c);
  }
  validate_rmatrix(p, where);
  return p;
}

LieBialgebra parse_bialgebra(const Json& j, const Lookup& lookup, const std::string& where) {
  LieAlgebra base = j.contains("brackets") ? algebra_from_json(j)
                    : j.contains("algebra") ? algebra_ref(j["algebra"], lookup, where + ".algebra")
                                            : throw ParseError(where + ": needs \"brackets\" or \"algebra\"");
  LieAlgebra algebra = base;
  if (j.contains("relabel")) {
    std::vector<std::string> labels;
    for (const auto& l : j["relabel"]) {
      if (!l.is_string()) throw ParseError(where + ".relabel: expected strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != algebra.dim()) throw ParseError(where + ".relabel: wrong number of labels");
    algebra = algebra.relabeled(labels);
  }
  const Substitution s = optional_substitution(j, "substitute", where);
  algebra = algebra.substitute(s);

  std::vector<std::string> dual;
  if (j.contains("dual_labels")) {
    for (const auto& l : j["dual_labels"]) {
      if (!l.is_string()) throw ParseError(where + ".dual_labels: expected strings");
      dual.push_back(l.get<std::string>());
    }
    if (dual.size() != algebra.dim()) throw ParseError(where + ".dual_labels: wrong number of labels");
  }

  if (j.contains("cocomm") == j.contains("cocomm_from_r")) {
    throw ParseError(where + ": needs exactly one of \"cocomm\" and \"cocomm_from_r\"");
  }
  CocommTensor f(algebra.dim());
  if (j.contains("cocomm")) {
    f = cocomm_from_json(j["cocomm"], algebra.labels(), where + ".cocomm").substitute(s);
  } else {
    const auto& rj = j["cocomm_from_r"];
    RMatrix r(algebra.dim());
    if (rj.is_string()) {
      const auto& rp = expect<RMatrixPayload>(lookup(rj.get<std::string>()), EntryKind::RMatrix);
      if (!(rp.algebra.substitute(s) == algebra)) {
        throw ParseError(where + ".cocomm_from_r: r-matrix '" + rj.get<std::string>() + "' lives on another algebra");
      }
      r = rp.r.substitute(s);
    } else {
      r = rmatrix_from_json(rj, algebra.labels(), where + ".cocomm_from_r").substitute(s);
    }
    f = cocommutator_from_r(algebra, r);
  }
  return LieBialgebra(std::move(algebra), std::move(f), std::move(dual));
}

BasisChangePayload parse_basis_change(const Json& j, const Lookup& lookup, const std::string& where) {
  BasisChangePayload p{{}, {}, {}, BasisChange(PolyMatrix{}), {}, {}};
  if (j.contains("source")) {
    p.source_key = string_field(j, "source", where);
    p.source_labels = expect<LieAlgebra>(lookup(p.source_key), EntryKind::Algebra).labels();
  } else if (j.contains("source_labels")) {
    for (const auto& l : j["source_labels"]) {
      if (!l.is_string()) throw ParseError(where + ".source_labels: expected strings");
      p.source_labels.push_back(l.get<std::string>());
    }
  } else {
    throw ParseError(where + ": needs \"source\" or \"source_labels\"");
  }
  p.source_substitute = optional_substitution(j, "source_substitute", where);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError(where + ".labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != p.source_labels.size()) throw ParseError(where + ".labels: wrong number of labels");
  }
  if (!j.contains("rows")) throw ParseError(where + ": missing field \"rows\"");
  p.change = BasisChange(basis_rows_from_json(j["rows"], p.source_labels, where + ".rows"), labels);
  if (j.contains("target")) {
    p.target_key = string_field(j, "target", where);
    const auto& t = expect<LieAlgebra>(lookup(p.target_key), EntryKind::Algebra);
    if (t.dim() != p.change.dim()) throw ParseError(where + ".target: dimension mismatch");
  }
  p.target_substitute = optional_substitution(j, "target_substitute", where);
  return p;
}

BracketPayload parse_bracket(const Json& j, const std::string& key, const Lookup& lookup, const std::string& where) {
  BracketPayload p;
  p.id = j.contains("id") ? string_field(j, "id", where) : key;
  const auto& fn = bracket_fn(p.id);
  p.chart = chart_from_string(string_field(j, "chart", where));
  if (p.chart != fn.chart) throw ParseError(where + ".chart: bracket " + p.id + " lives on " + to_string(fn.chart));
  if (j.contains("params")) p.params = assignment_from_json(j["params"], where + ".params");
  for (const auto& name : fn.params) {
    if (!p.params.count(name)) throw ParseError(where + ".params: missing value for '" + name + "'");
  }
  if (j.contains("pairs")) {
    const auto& pj = j["pairs"];
    for (std::size_t n = 0; n < pj.size(); ++n) {
      const std::string w = where + ".pairs[" + std::to_string(n) + "]";
      if (!pj[n].is_array() || pj[n].size() != 2 || !pj[n][0].is_string() || !pj[n][1].is_string()) {
        throw ParseError(w + ": expected [coordinate, coordinate]");
      }
      try {
        p.pairs.emplace_back(coordinate_index(p.chart, pj[n][0].get<std::string>()),
                             coordinate_index(p.chart, pj[n][1].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(w + ": " + e.what());
      }
    }
  }
  if (j.contains("rmatrix")) {
    p.rmatrix_key = string_field(j, "rmatrix", where);
    const auto& rp = expect<RMatrixPayload>(lookup(p.rmatrix_key), EntryKind::RMatrix);
    if (rp.labels() != chart_basis_labels(p.chart)) {
      throw ParseError(where + ".rmatrix: basis of '" + p.rmatrix_key + "' does not match the " + to_string(p.chart) +
                       " fields");
    }
    if (p.pairs.empty()) throw ParseError(where + ": a Sklyanin entry needs \"pairs\"");
  }
  return p;
}

Payload parse_payload(EntryKind kind, const Json& j, const std::string& key, const Lookup& lookup,
                      const std::string& where) {
  switch (kind) {
    case EntryKind::Algebra: {
      LieAlgebra l = algebra_from_json(j);
      const auto res = l.jacobi_residual();
      const auto nz = res.nonzero();
      if (!nz.empty()) {
        const auto& ix = nz.front();
        throw VerdictMismatch(where + ": Jacobi fails at (" + l.label(ix[0]) + "," + l.label(ix[1]) + "," + l.label(ix[2]) +
                        "," + l.label(ix[3]) + ") = " + res.at(ix).str());
      }
      return l;
    }
    case EntryKind::Bialgebra: return parse_bialgebra(j, lookup, where);
    case EntryKind::RMatrix: return parse_rmatrix(j, lookup, where);
    case EntryKind::BasisChange: return parse_basis_change(j, lookup, where);
    case EntryKind::BracketFn: return parse_bracket(j, key, lookup, where);
  }
  throw ParseError(where + ": unknown kind");
}

}  // namespace

std::string to_string(EntryKind k) {
  for (const auto& info : kKinds) {
    if (info.kind == k) return info.name;
  }
  return "?";
}

EntryKind kind_from_string(std::string_view s) {
  for (const auto& info : kKinds) {
    if (s == info.name || s == info.dir) return info.kind;
  }
  throw ParseError("unknown entry kind '" + std::string(s) + "'");
}

std::filesystem::path Catalog::default_dir() {
  if (const char* env = std::getenv("LIEBW_CATALOG_DIR"); env && *env) return env;
  return LIEBW_DEFAULT_CATALOG_DIR;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir.string() + ": catalog directory not found");

  struct Raw {
    EntryKind kind;
    Json doc;
    fs::path file;
  };
  std::map<std::string, Raw, std::less<>> raw;
  for (const auto& info : kKinds) {
    const fs::path sub = dir / info.dir;
    if (!fs::is_directory(sub)) continue;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(sub)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Json doc = read_json_file(f);
      const std::string key = string_field(doc, "key", f.string());
      if (raw.count(key)) throw ParseError(f.string() + ": duplicate key '" + key + "'");
      raw.emplace(key, Raw{info.kind, std::move(doc), f});
    }
  }

  Catalog cat;
  std::set<std::string> in_progress;
  Lookup resolve = [&](const std::string& key) -> const CatalogEntry& {
    if (auto it = cat.entries_.find(key); it != cat.entries_.end()) return it->second;
    auto r = raw.find(key);
    if (r == raw.end()) throw UnknownKey("no catalog entry '" + key + "'");
    if (!in_progress.insert(key).second) throw ParseError(r->second.file.string() + ": reference cycle through '" + key + "'");
    const std::string where = r->second.file.filename().string();
    Payload payload = parse_payload(r->second.kind, r->second.doc, key, resolve, where);
    std::string provenance = r->second.doc.value("provenance", std::string());
    in_progress.erase(key);
    auto [it, ok] = cat.entries_.emplace(
        key, CatalogEntry{key, r->second.kind, std::move(provenance), r->second.file, std::move(payload)});
    return it->second;
  };
  for (const auto& [key, r] : raw) resolve(key);
  return cat;
}

const CatalogEntry& Catalog::get(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw UnknownKey("no catalog entry '" + std::string(key) + "'");
  return it->second;
}

bool Catalog::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::vector<std::string> Catalog::list(EntryKind kind) const {
  std::vector<std::string> out;
  for (const auto& [k, e] : entries_) {
    if (e.kind == kind) out.push_back(k);
  }
  return out;
}

std::vector<std::string> Catalog::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, e] : entries_) out.push_back(k);
  return out;
}

const LieAlgebra& Catalog::algebra(std::string_view key) const {
  return expect<LieAlgebra>(get(key), EntryKind::Algebra);
}
const LieBialgebra& Catalog::bialgebra(std::string_view key) const {
  return expect<LieBialgebra>(get(key), EntryKind::Bialgebra);
}
const RMatrixPayload& Catalog::rmatrix(std::string_view key) const {
  return expect<RMatrixPayload>(get(key), EntryKind::RMatrix);
}
const BasisChangePayload& Catalog::basis_change(std::string_view key) const {
  return expect<BasisChangePayload>(get(key), EntryKind::BasisChange);
}
const BracketPayload& Catalog::bracket(std::string_view key) const {
  return expect<BracketPayload>(get(key), EntryKind::BracketFn);
}

Payload Catalog::parse(EntryKind kind, const Json& j) const {
  Lookup lookup = [this](const std::string& key) -> const CatalogEntry& { return get(key); };
  const std::string key = j.is_object() ? j.value("key", std::string("<input>")) : std::string("<input>");
  return parse_payload(kind, j, key, lookup, key);
}

EntryKind Catalog::detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("input: expected a JSON object");
  if (j.contains("chart")) return EntryKind::BracketFn;
  if (j.contains("rows")) return EntryKind::BasisChange;
  if (j.contains("terms")) return EntryKind::RMatrix;
  if (j.contains("cocomm") || j.contains("cocomm_from_r")) return EntryKind::Bialgebra;
  if (j.contains("brackets")) return EntryKind::Algebra;
  throw ParseError("input: cannot tell what kind of document this is");
}

std::vector<VerifyCell> Catalog::verification_cells() const {
  std::vector<VerifyCell> cells;
  for (const auto& key : list(EntryKind::BracketFn)) {
    const auto& b = bracket(key);
    if (b.rmatrix_key.empty()) {
      cells.push_back({b.id, b.chart, 0, 0, b.params, std::nullopt, {}});
      continue;
    }
    const auto& rp = rmatrix(b.rmatrix_key);
    for (const auto& [i, j] : b.pairs) cells.push_back({b.id, b.chart, i, j, b.params, rp.r, rp.labels()});
  }
  return cells;
}

}  // namespace liebw
