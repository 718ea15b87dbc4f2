// liebw: validate catalog entries and JSON files, build doubles, classify
// homogeneous spaces and run the numeric bracket verification.
//
// Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "liebw/catalog.hpp"
#include "liebw/errors.hpp"

using namespace liebw;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Globals {
  std::string catalog_dir;
  std::string json_out;
  std::string format = "text";
  bool timing = false;
};

struct Report {
  Json doc;
  std::vector<std::string> text;  // extra lines for the text format
  bool pass = true;
};

struct Input {
  std::string name;
  EntryKind kind;
  Json doc;                          // empty for catalog entries
  const CatalogEntry* entry = nullptr;
};

Input resolve_input(const Catalog& cat, const std::string& arg) {
  std::string key = arg;
  if (arg.rfind("catalog:", 0) == 0) {
    key = arg.substr(8);
    const auto& e = cat.get(key);
    return {arg, e.kind, Json(), &e};
  }
  if (!std::filesystem::exists(arg) && cat.contains(arg)) {
    const auto& e = cat.get(arg);
    return {arg, e.kind, Json(), &e};
  }
  Json doc = read_json_file(arg);
  return {arg, Catalog::detect_kind(doc), std::move(doc), nullptr};
}

const LieBialgebra& bialgebra_input(const Catalog& cat, const std::string& arg, std::optional<LieBialgebra>& holder) {
  auto in = resolve_input(cat, arg);
  if (in.kind != EntryKind::Bialgebra) throw ParseError(arg + ": not a bialgebra");
  if (in.entry) return std::get<LieBialgebra>(in.entry->payload);
  holder = std::get<LieBialgebra>(cat.parse(EntryKind::Bialgebra, in.doc));
  return *holder;
}

Json jacobi_residuals(const LieAlgebra& l, std::size_t limit, std::size_t& count) {
  const auto res = l.jacobi_residual();
  const auto nz = res.nonzero();
  count = nz.size();
  Json out = Json::array();
  for (std::size_t n = 0; n < nz.size() && n < limit; ++n) {
    const auto& ix = nz[n];
    out.push_back({{"i", l.label(ix[0])}, {"j", l.label(ix[1])}, {"l", l.label(ix[2])}, {"m", l.label(ix[3])},
                   {"value", res.at(ix).str()}});
  }
  return out;
}

Report cmd_validate(const Catalog& cat, const std::string& arg) {
  Report rep;
  auto in = resolve_input(cat, arg);
  rep.doc["command"] = "validate";
  rep.doc["inputs"] = {{"input", arg}, {"kind", to_string(in.kind)}};
  Json verdicts = Json::object();
  Json residuals = Json::array();

  if (in.kind == EntryKind::Algebra) {
    const LieAlgebra l = in.entry ? std::get<LieAlgebra>(in.entry->payload) : algebra_from_json(in.doc);
    std::size_t count = 0;
    residuals = jacobi_residuals(l, 20, count);
    verdicts["jacobi"] = count == 0 ? "pass" : "fail";
    rep.doc["residual_count"] = count;
    rep.pass = count == 0;
    for (const auto& r : residuals) {
      rep.text.push_back("jacobi residual (" + r["i"].get<std::string>() + "," + r["j"].get<std::string>() + "," +
                         r["l"].get<std::string>() + "," + r["m"].get<std::string>() +
                         ") = " + r["value"].get<std::string>());
    }
  } else if (in.entry) {
    // Catalog entries were validated when the catalog was loaded.
    verdicts[to_string(in.kind)] = "pass";
    if (in.kind == EntryKind::Bialgebra) {
      std::size_t count = 0;
      jacobi_residuals(build_double(std::get<LieBialgebra>(in.entry->payload)).algebra(), 0, count);
      verdicts["double_jacobi"] = count == 0 ? "pass" : "fail";
      rep.pass = count == 0;
    }
  } else {
    try {
      cat.parse(in.kind, in.doc);
      verdicts[to_string(in.kind)] = "pass";
    } catch (const NotACobracket& e) {
      verdicts[to_string(in.kind)] = "fail";
      residuals.push_back({{"message", e.what()}});
      rep.text.push_back(e.what());
      rep.pass = false;
    } catch (const VerdictMismatch& e) {
      verdicts[to_string(in.kind)] = "fail";
      residuals.push_back({{"message", e.what()}});
      rep.text.push_back(e.what());
      rep.pass = false;
    }
  }
  rep.doc["verdicts"] = verdicts;
  rep.doc["residuals"] = residuals;
  return rep;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Report cmd_double(const Catalog& cat, const std::string& arg, bool iterate, const std::string& expect,
                  const std::string& out_path) {
  Report rep;
  std::optional<LieBialgebra> holder;
  const LieBialgebra& b = bialgebra_input(cat, arg, holder);
  rep.doc["command"] = "double";
  rep.doc["inputs"] = {{"bialgebra", arg}, {"iterate", iterate}};
  Json verdicts = Json::object();

  const DoubleAlgebra d = build_double(b);
  std::size_t count = 0;
  jacobi_residuals(d.algebra(), 0, count);
  verdicts["jacobi"] = count == 0 ? "pass" : "fail";
  rep.pass = count == 0;
  Json table = double_to_json(d);
  std::string text = d.text_table();

  if (!expect.empty()) {
    const bool same = cat.algebra(expect) == d.algebra() && cat.algebra(expect).labels() == d.labels();
    verdicts["matches_" + expect] = same ? "pass" : "fail";
    rep.pass = rep.pass && same;
  }

  if (iterate) {
    const DoubleAlgebra dd = double_of_double(b);
    const LieAlgebra formula = iterated_double_formula(b);
    const std::size_t n = b.dim();
    std::size_t mismatches = 0;
    Json crossed = Json::array();
    for (std::size_t i = 2 * n; i < 4 * n; ++i) {
      for (std::size_t j = 0; j < 2 * n; ++j) {
        PolyVec v(4 * n), w(4 * n);
        for (std::size_t k = 0; k < 4 * n; ++k) {
          v[k] = dd.algebra().c(i, j, k);
          w[k] = formula.c(i, j, k);
        }
        if (v != w) ++mismatches;
        if (!is_zero_vector(v)) {
          crossed.push_back("[" + dd.algebra().label(i) + ", " + dd.algebra().label(j) + "] = " +
                            format_vector(v, dd.labels()));
        }
      }
    }
    const bool all_equal = dd.algebra() == formula;
    verdicts["crossed_brackets"] = (mismatches == 0 && all_equal) ? "pass" : "fail";
    rep.doc["crossed_bracket_mismatches"] = mismatches;
    rep.text.push_back("crossed bracket mismatches: " + std::to_string(mismatches));
    rep.pass = rep.pass && mismatches == 0 && all_equal;
    table = double_to_json(dd);
    text = dd.text_table();
    rep.doc["crossed_brackets"] = crossed;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError(out_path + ": cannot write");
    if (std::filesystem::path(out_path).extension() == ".json") {
      out << table.dump(2) << "\n";
    } else {
      out << text;
    }
  }
  rep.doc["verdicts"] = verdicts;
  rep.doc["table"] = lines(text);
  for (auto& l : lines(text)) rep.text.push_back(std::move(l));
  return rep;
}

std::string classification(const ClosureReport& r) {
  if (!r.lagrangian || !r.subalgebra) return "not_lagrangian_subalgebra";
  if (r.poisson_subgroup) return "poisson_subgroup";
  if (r.coisotropic) return "coisotropic";
  return "lagrangian";
}

Report cmd_classify(const Catalog& cat, const std::string& arg, const std::vector<std::string>& h_args,
                    const std::vector<std::string>& complement_args, const std::string& pi_arg,
                    const std::string& expect) {
  Report rep;
  std::optional<LieBialgebra> holder;
  const LieBialgebra& b = bialgebra_input(cat, arg, holder);
  const auto& labels = b.algebra().labels();
  const std::size_t n = b.dim();

  LagrangianSpec spec;
  for (const auto& h : h_args) spec.h_basis.push_back(parse_vector(h, labels));
  if (rank(spec.h_basis) != spec.h_basis.size()) throw ParseError("--h vectors are linearly dependent");
  if (!complement_args.empty()) {
    for (const auto& t : complement_args) spec.complement.push_back(parse_vector(t, labels));
  } else {
    std::vector<PolyVec> current = spec.h_basis;
    for (std::size_t k = 0; k < n && current.size() < n; ++k) {
      current.push_back(unit_vector(n, k));
      if (rank(current) == current.size()) {
        spec.complement.push_back(current.back());
      } else {
        current.pop_back();
      }
    }
  }
  if (!pi_arg.empty()) {
    const Json pj = parse_json(pi_arg, "--pi");
    if (!pj.is_array()) throw ParseError("--pi: expected a square array of poly-strings");
    for (std::size_t a = 0; a < pj.size(); ++a) {
      if (!pj[a].is_array()) throw ParseError("--pi: expected a square array of poly-strings");
      PolyVec row;
      for (std::size_t c = 0; c < pj[a].size(); ++c) {
        row.push_back(poly_from_json(pj[a][c], "--pi[" + std::to_string(a) + "][" + std::to_string(c) + "]"));
      }
      spec.pi.push_back(std::move(row));
    }
  }

  const DoubleAlgebra d = build_double(b);
  const ClosureReport r = classify(d, b, spec);
  rep.doc["command"] = "classify";
  Json h = Json::array(), t = Json::array();
  for (const auto& v : spec.h_basis) h.push_back(format_vector(v, labels));
  for (const auto& v : spec.complement) t.push_back(format_vector(v, labels));
  rep.doc["inputs"] = {{"bialgebra", arg}, {"h", h}, {"complement", t}, {"pi", pi_arg.empty() ? "0" : pi_arg}};
  rep.doc["classification"] = classification(r);
  rep.doc["closure"] = closure_report_to_json(r);
  rep.text.push_back("classification: " + classification(r));
  for (const auto& v : r.violations) rep.text.push_back("violation " + v.check + " " + v.component + " = " + v.value);
  if (r.lagrangian && r.subalgebra) {
    const LieAlgebra table = lagrangian_bracket_table(d, spec);
    rep.doc["lagrangian_brackets"] = lines(bracket_table_text(table));
    for (const auto& l : lines(bracket_table_text(table))) rep.text.push_back(l);
  }
  Json verdicts = Json::object();
  if (!expect.empty()) {
    const bool ok = classification(r) == expect;
    verdicts["expected_" + expect] = ok ? "pass" : "fail";
    rep.pass = ok;
  }
  rep.doc["verdicts"] = verdicts;
  return rep;
}

Report cmd_verify(const Catalog& cat, const VerifyOptions& opts) {
  Report rep;
  const auto cells = cat.verification_cells();
  for (const auto& f : opts.filter) {
    const bool known = std::any_of(cells.begin(), cells.end(), [&](const VerifyCell& c) { return cell_selected(c, {f}); });
    if (!known) throw UnknownBracket("--cells: no verification cell matches '" + f + "'");
  }
  const auto results = run_verification(cells, opts);
  rep.doc["command"] = "verify-brackets";
  Json filter = opts.filter;
  rep.doc["inputs"] = {{"cells", filter}, {"points", opts.points}, {"tol_rel", opts.tol_rel}, {"tol_abs", opts.tol_abs}};
  rep.doc["seed"] = opts.seed;
  Json cells_json = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    cells_json.push_back(cell_result_to_json(r));
    if (!r.pass) ++failed;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-14s %-4s %-10s abs %.3e rel %.3e", r.pass ? "PASS" : "FAIL",
                  r.bracket_id.c_str(), r.chart.c_str(), r.pair.c_str(), r.max_abs_err, r.max_rel_err);
    rep.text.push_back(buf);
  }
  rep.doc["cells"] = cells_json;
  rep.doc["verdicts"] = {{"cells_passed", results.size() - failed}, {"cells_failed", failed}};
  rep.pass = failed == 0;
  return rep;
}

Report cmd_list(const Catalog& cat, const std::string& kind) {
  Report rep;
  rep.doc["command"] = "list";
  Json keys = Json::array();
  if (kind.empty()) {
    for (const auto& k : cat.keys()) keys.push_back({{"key", k}, {"kind", to_string(cat.get(k).kind)}});
  } else {
    for (const auto& k : cat.list(kind_from_string(kind))) keys.push_back({{"key", k}, {"kind", kind}});
  }
  for (const auto& k : keys) {
    const auto key = k["key"].get<std::string>();
    rep.text.push_back(key + "  [" + k["kind"].get<std::string>() + "]  " + cat.get(key).provenance);
  }
  rep.doc["inputs"] = {{"kind", kind}};
  rep.doc["entries"] = keys;
  return rep;
}

void emit(Report& rep, const Globals& g, double seconds) {
  rep.doc["pass"] = rep.pass;
  if (g.timing) rep.doc["timing"] = {{"seconds", seconds}};
  if (!g.json_out.empty()) {
    std::ofstream out(g.json_out);
    if (!out) throw ParseError(g.json_out + ": cannot write");
    out << rep.doc.dump(2) << "\n";
  }
  if (g.format == "json") {
    std::cout << rep.doc.dump(2) << "\n";
    return;
  }
  std::cout << rep.doc["command"].get<std::string>() << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
  if (rep.doc.contains("verdicts")) {
    for (const auto& [k, v] : rep.doc["verdicts"].items()) std::cout << "  " << k << ": " << v.dump() << "\n";
  }
  for (const auto& l : rep.text) std::cout << "  " << l << "\n";
  if (g.timing) std::cout << "  time: " << seconds << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie bialgebra toolkit and Poisson bracket verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--catalog", g.catalog_dir, "Catalog directory (default: $LIEBW_CATALOG_DIR or the build-time path)");
  app.add_option("--json", g.json_out, "Also write the JSON report to this path");
  app.add_option("--format", g.format, "Standard output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", g.timing, "Include wall-clock timing in the report");

  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "Check Jacobi, cobracket and YBE verdicts of an entry or file");
  validate->add_option("input", validate_input, "catalog:KEY, a catalog key, or a JSON file")->required();

  std::string double_input, double_expect, double_out;
  bool iterate = false;
  auto* dbl = app.add_subcommand("double", "Build the classical double of a bialgebra");
  dbl->add_option("bialgebra", double_input, "Catalog key or JSON file")->required();
  dbl->add_flag("--iterate", iterate, "Also build D(D(a)) and compare its crossed brackets with the closed formula");
  dbl->add_option("--expect", double_expect, "Catalog algebra the double must equal");
  dbl->add_option("--out", double_out, "Write the bracket table (.json or text)");

  std::string classify_input, pi_arg, classify_expect;
  std::vector<std::string> h_args, complement_args;
  auto* cls = app.add_subcommand("classify", "Classify l = h + span{t^a + pi^{ab} T_b} in the double");
  cls->set_help_flag("--help", "Print this help message and exit");
  cls->add_option("bialgebra", classify_input, "Catalog key or JSON file")->required();
  cls->add_option("--h", h_args, "Basis vector of h, e.g. J12 or \"P1 + P2\" (repeatable)")->required();
  cls->add_option("--complement", complement_args, "Complement basis vector (repeatable; default: unit vectors)");
  cls->add_option("--pi", pi_arg, "pi on the complement as a JSON array of poly-strings");
  cls->add_option("--expect", classify_expect, "Expected classification")
      ->check(CLI::IsMember({"poisson_subgroup", "coisotropic", "lagrangian", "not_lagrangian_subalgebra"}));

  VerifyOptions vopts;
  std::string cells_arg;
  std::optional<double> tol, tol_rel, tol_abs;
  auto* ver = app.add_subcommand("verify-brackets", "Compare numeric Sklyanin brackets with the closed forms");
  ver->add_option("--cells", cells_arg, "Comma-separated bracket ids or cell names");
  ver->add_option("--points", vopts.points, "Random points per cell")->check(CLI::PositiveNumber);
  ver->add_option("--seed", vopts.seed, "Seed for point generation");
  ver->add_option("--tol", tol, "Set both the relative and the absolute tolerance");
  ver->add_option("--tol-rel", tol_rel, "Relative tolerance");
  ver->add_option("--tol-abs", tol_abs, "Absolute tolerance");

  std::string list_kind;
  auto* lst = app.add_subcommand("list", "List catalog entries");
  lst->add_option("kind", list_kind, "algebra, bialgebra, rmatrix, basis_change or bracket_fn");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Catalog cat = Catalog::load(g.catalog_dir.empty() ? Catalog::default_dir() : std::filesystem::path(g.catalog_dir));
    Report rep;
    if (*validate) {
      rep = cmd_validate(cat, validate_input);
    } else if (*dbl) {
      rep = cmd_double(cat, double_input, iterate, double_expect, double_out);
    } else if (*cls) {
      rep = cmd_classify(cat, classify_input, h_args, complement_args, pi_arg, classify_expect);
    } else if (*ver) {
      if (tol) vopts.tol_rel = vopts.tol_abs = *tol;
      if (tol_rel) vopts.tol_rel = *tol_rel;
      if (tol_abs) vopts.tol_abs = *tol_abs;
      std::stringstream ss(cells_arg);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) vopts.filter.push_back(item);
      }
      rep = cmd_verify(cat, vopts);
    } else {
      rep = cmd_list(cat, list_kind);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(rep, g, seconds);
    return rep.pass ? kPass : kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
