#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liebw/json_io.hpp"

namespace liebw {

enum class EntryKind { Algebra, Bialgebra, RMatrix, BasisChange, BracketFn };

std::string to_string(EntryKind k);
/// "algebra", "bialgebra", "rmatrix", "basis_change", "bracket_fn"; also the
/// directory names (plural forms). Throws ParseError.
EntryKind kind_from_string(std::string_view s);

/// A polynomial side condition on an r-matrix, e.g. a2^2 + b2^2 - c2^2 + 4 Lambda a6^2.
struct Constraint {
  PolyExpr poly;                   // after `substitute`
  Substitution substitute;
  std::optional<std::string> solve_for;  // poly is affine in this parameter
  std::vector<ExactAssignment> samples;  // points on the variety
};

/// Verdict an r-matrix must satisfy (on its constraint variety, if any).
enum class YbeVerdict { None, Cybe, Mcybe };

struct RMatrixPayload {
  std::string algebra_key;
  LieAlgebra algebra;
  RMatrix r;
  YbeVerdict verdict = YbeVerdict::None;
  std::optional<Constraint> constraint;

  const std::vector<std::string>& labels() const { return algebra.labels(); }
};

struct BasisChangePayload {
  std::vector<std::string> source_labels;
  std::string source_key;             // empty if only labels are given
  Substitution source_substitute;     // to apply to the source first
  BasisChange change;
  std::string target_key;             // expected result, may be empty
  Substitution target_substitute;
};

struct BracketPayload {
  std::string id;
  ChartId chart = ChartId::CK;
  Assignment params;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string rmatrix_key;  // empty: Jacobi-only cell
};

using Payload = std::variant<LieAlgebra, LieBialgebra, RMatrixPayload, BasisChangePayload, BracketPayload>;

struct CatalogEntry {
  std::string key;
  EntryKind kind;
  std::string provenance;
  std::filesystem::path file;
  Payload payload;
};

/// Registry loaded from catalog/{algebras,bialgebras,rmatrices,basis_changes,brackets}/*.json.
/// Entries may refer to each other by key; everything is resolved and
/// validated at load time, after which the catalog is read-only.
class Catalog {
 public:
  /// Throws ParseError (with file and field context), or the validator's
  /// error for an entry that fails validation.
  static Catalog load(const std::filesystem::path& dir);
  /// $LIEBW_CATALOG_DIR, else the directory configured at build time.
  static std::filesystem::path default_dir();

  /// Throws UnknownKey.
  const CatalogEntry& get(std::string_view key) const;
  bool contains(std::string_view key) const;
  std::vector<std::string> list(EntryKind kind) const;
  std::vector<std::string> keys() const;

  /// Typed access; throws UnknownKey if the key is missing or of another kind.
  const LieAlgebra& algebra(std::string_view key) const;
  const LieBialgebra& bialgebra(std::string_view key) const;
  const RMatrixPayload& rmatrix(std::string_view key) const;
  const BasisChangePayload& basis_change(std::string_view key) const;
  const BracketPayload& bracket(std::string_view key) const;

  /// Builds an entry from a JSON document of the given kind, resolving string
  /// references against this catalog. Used for files passed on the command line.
  Payload parse(EntryKind kind, const Json& j) const;
  /// Guesses the kind of a standalone document from its fields.
  static EntryKind detect_kind(const Json& j);

  /// One Sklyanin cell per reference pair of every bracket entry with an
  /// r-matrix, one Jacobi cell for each of the others.
  std::vector<VerifyCell> verification_cells() const;

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
};

}  // namespace liebw
