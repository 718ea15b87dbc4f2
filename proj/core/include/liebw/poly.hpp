#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liebw/errors.hpp"
#include "liebw/rational.hpp"

namespace liebw {

/// Product of named parameters with nonzero integer exponents, sorted by name.
/// Negative exponents are allowed so that square roots of parameters can be
/// housed by a fresh parameter (e.g. s with eta = s^2/2).
class Monomial {
 public:
  using Factor = std::pair<std::string, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(std::string_view name, int exponent = 1);

  bool is_one() const noexcept { return factors_.empty(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  int exponent_of(std::string_view name) const noexcept;
  int total_degree() const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  /// Monomial with `name` removed.
  Monomial without(std::string_view name) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

using Assignment = std::map<std::string, double, std::less<>>;
using ExactAssignment = std::map<std::string, Rational, std::less<>>;
class PolyExpr;
using Substitution = std::map<std::string, PolyExpr, std::less<>>;

/// Exact (Laurent) polynomial in named real parameters with rational
/// coefficients. Canonical form: no zero coefficients, terms keyed by
/// Monomial, so structural equality is polynomial equality.
class PolyExpr {
 public:
  using TermMap = std::map<Monomial, Rational>;

  PolyExpr() = default;
  PolyExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyExpr(long c);             // NOLINT(google-explicit-constructor)
  PolyExpr(int c) : PolyExpr(static_cast<long>(c)) {}  // NOLINT
  PolyExpr(const Rational& c, Monomial m);

  static PolyExpr param(std::string_view name, int exponent = 1);
  /// Parses the textual form produced by str(); also accepts parentheses,
  /// '/' by nonzero constants and unit polynomials, and integer powers.
  static PolyExpr parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::optional<Rational> constant_value() const;
  /// A single term c*m: invertible in the Laurent ring.
  bool is_unit() const noexcept { return terms_.size() == 1; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::set<std::string> parameters() const;

  PolyExpr& operator+=(const PolyExpr& other);
  PolyExpr& operator-=(const PolyExpr& other);
  PolyExpr& operator*=(const PolyExpr& other);
  /// Adds c * a * b without materializing the product.
  PolyExpr& add_product(const PolyExpr& a, const PolyExpr& b, const Rational& c = 1);

  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator-(PolyExpr a);
  friend bool operator==(const PolyExpr& a, const PolyExpr& b) { return a.terms_ == b.terms_; }

  /// Integer power; negative exponents require a unit.
  PolyExpr pow(int exponent) const;
  /// Inverse of a unit. Throws DomainError otherwise.
  PolyExpr inverse() const;

  PolyExpr substitute(std::string_view name, const PolyExpr& value) const;
  PolyExpr substitute(const Substitution& values) const;

  /// Floating evaluation. Throws UnassignedParameter or DomainError (0^-k).
  double eval(const Assignment& values) const;
  /// Exact evaluation at a rational point.
  Rational eval_exact(const ExactAssignment& values) const;

  /// Canonical text "c*p1^e1*p2 + ..." ; "0" for zero. parse(str()) == *this.
  std::string str() const;

  /// Rational gcd of the coefficients (positive), 1 for zero.
  Rational content() const;
  /// Largest monomial dividing every term in the Laurent sense (min exponents).
  Monomial monomial_gcd() const;
  /// Divide by content and monomial gcd; sign chosen so the leading coefficient is positive.
  PolyExpr primitive_part() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

inline PolyExpr operator-(PolyExpr a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const PolyExpr& p);

}  // namespace liebw
