#include "liebw/poly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "liebw/errors.hpp"

namespace liebw {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
}

Monomial Monomial::variable(std::string_view name, int exponent) {
  return Monomial({{std::string(name), exponent}});
}

int Monomial::exponent_of(std::string_view name) const noexcept {
  for (const auto& [n, e] : factors_) {
    if (n == name) return e;
  }
  return 0;
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      if (int e = a->second + b->second; e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != name) out.factors_.push_back(f);
  }
  return out;
}

// gmpxx does not canonicalize Rational(num, den); do it here so that
// coefficients always compare and print canonically.
PolyExpr::PolyExpr(const Rational& c) : PolyExpr(c, Monomial{}) {}

PolyExpr::PolyExpr(long c) : PolyExpr(Rational(c)) {}

PolyExpr::PolyExpr(const Rational& c, Monomial m) {
  Rational q = c;
  q.canonicalize();
  if (q != 0) terms_.emplace(std::move(m), std::move(q));
}

PolyExpr PolyExpr::param(std::string_view name, int exponent) {
  return PolyExpr(Rational(1), Monomial::variable(name, exponent));
}

bool PolyExpr::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> PolyExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<std::string> PolyExpr::parameters() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

void PolyExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PolyExpr& PolyExpr::add_product(const PolyExpr& a, const PolyExpr& b, const Rational& c) {
  if (c == 0) return *this;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) add_term(ma * mb, c * ca * cb);
  }
  return *this;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr out;
  out.add_product(a, b);
  return out;
}

PolyExpr& PolyExpr::operator*=(const PolyExpr& other) { return *this = *this * other; }

PolyExpr PolyExpr::inverse() const {
  if (!is_unit()) throw DomainError("cannot invert non-monomial '" + str() + "'");
  const auto& [m, c] = *terms_.begin();
  return PolyExpr(1 / c, m.inverse());
}

PolyExpr PolyExpr::pow(int exponent) const {
  PolyExpr base = exponent < 0 ? inverse() : *this;
  unsigned n = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  PolyExpr out(1);
  while (n > 0) {
    if (n & 1U) out *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return out;
}

PolyExpr PolyExpr::substitute(std::string_view name, const PolyExpr& value) const {
  Substitution s;
  s.emplace(std::string(name), value);
  return substitute(s);
}

PolyExpr PolyExpr::substitute(const Substitution& values) const {
  PolyExpr out;
  for (const auto& [m, c] : terms_) {
    PolyExpr term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        kept.emplace_back(name, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out.add_product(term, PolyExpr(1, Monomial(std::move(kept))));
  }
  return out;
}

double PolyExpr::eval(const Assignment& values) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) throw UnassignedParameter("parameter '" + name + "' has no value");
      if (e < 0 && it->second == 0.0) {
        throw DomainError("negative power of '" + name + "' at 0");
      }
      t *= std::pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

Rational PolyExpr::eval_exact(const ExactAssignment& values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) throw UnassignedParameter("parameter '" + name + "' has no value");
      if (e < 0 && it->second == 0) throw DomainError("negative power of '" + name + "' at 0");
      Rational p = 1;
      for (int k = 0; k < std::abs(e); ++k) p *= it->second;
      t *= e < 0 ? Rational(1 / p) : p;
    }
    sum += t;
  }
  return sum;
}

std::string PolyExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest total degree first, then the map order; deterministic either way.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return a->first.total_degree() > b->first.total_degree();
  });
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    bool need_star = false;
    if (m.is_one() || mag != 1) {
      out += to_string(mag);
      need_star = true;
    }
    for (const auto& [name, e] : m.factors()) {
      if (need_star) out += "*";
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

Rational PolyExpr::content() const {
  if (terms_.empty()) return 1;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class n = abs(c.get_num());
    num_gcd = gcd(num_gcd, n);
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Monomial PolyExpr::monomial_gcd() const {
  if (terms_.empty()) return {};
  std::map<std::string, int> mins;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      for (const auto& [n, e] : m.factors()) mins[n] = e;
      first = false;
      continue;
    }
    for (auto& [n, e] : mins) e = std::min(e, m.exponent_of(n));
    for (const auto& [n, e] : m.factors()) {
      if (!mins.contains(n)) mins[n] = std::min(e, 0);
    }
  }
  std::vector<Monomial::Factor> f(mins.begin(), mins.end());
  return Monomial(std::move(f));
}

PolyExpr PolyExpr::primitive_part() const {
  if (terms_.empty()) return {};
  PolyExpr out = *this * PolyExpr(1 / content(), monomial_gcd().inverse());
  // Leading term in print order of the result decides the sign, so the
  // operation is idempotent.
  const TermMap::value_type* lead = nullptr;
  for (const auto& t : out.terms_) {
    if (lead == nullptr || t.first.total_degree() > lead->first.total_degree()) lead = &t;
  }
  return lead->second < 0 ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const PolyExpr& p) { return os << p.str(); }

}  // namespace liebw
