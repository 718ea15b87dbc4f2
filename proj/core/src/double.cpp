#include "liebw/double.hpp"

#include "liebw/errors.hpp"

namespace liebw {

namespace {

Tensor2 hyperbolic_pairing(std::size_t half) {
  Tensor2 p(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    p(i, half + i) = 1;
    p(half + i, i) = 1;
  }
  return p;
}

}  // namespace

DoubleAlgebra::DoubleAlgebra(LieAlgebra algebra, std::size_t half, CocommTensor canonical_cocomm)
    : algebra_(std::move(algebra)),
      half_(half),
      pairing_(hyperbolic_pairing(half)),
      r_raw_(2 * half),
      r_skew_(2 * half),
      cocomm_(std::move(canonical_cocomm)) {
  if (algebra_.dim() != 2 * half || cocomm_.dim() != 2 * half) {
    throw DimensionMismatch("double of half-dimension " + std::to_string(half));
  }
  std::vector<WedgeTerm> terms;
  for (std::size_t i = 0; i < half; ++i) {
    r_raw_(half + i, i) = 1;
    terms.push_back({half + i, i, PolyExpr(Rational(1, 2))});
  }
  r_skew_ = RMatrix(2 * half, terms);
}

PolyExpr DoubleAlgebra::pairing(const PolyVec& u, const PolyVec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("pairing: vector length");
  PolyExpr out;
  for (std::size_t i = 0; i < half_; ++i) {
    out.add_product(u[i], v[half_ + i]);
    out.add_product(u[half_ + i], v[i]);
  }
  return out;
}

LieBialgebra DoubleAlgebra::as_bialgebra(std::vector<std::string> dual_labels) const {
  if (dual_labels.empty()) {
    for (std::size_t i = 0; i < half_; ++i) dual_labels.push_back("y." + algebra_.label(i));
    for (std::size_t i = 0; i < half_; ++i) dual_labels.push_back("Y." + algebra_.label(i));
  }
  return LieBialgebra(algebra_, cocomm_, std::move(dual_labels));
}

DoubleAlgebra build_double(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const Tensor3& c = b.algebra().structure();
  const Tensor3& f = b.cocomm().components();
  std::vector<std::string> labels = b.algebra().labels();
  labels.insert(labels.end(), b.dual_labels().begin(), b.dual_labels().end());
  LieAlgebra d(std::move(labels), double_structure(c, f));
  Tensor3 delta(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        delta(i, j, k) = -f(i, j, k);
        delta(n + i, n + j, n + k) = c(j, k, i);
      }
    }
  }
  return DoubleAlgebra(std::move(d), n, CocommTensor(std::move(delta)));
}

DoubleAlgebra double_of_double(const LieBialgebra& b, std::vector<std::string> outer_dual_labels) {
  return build_double(build_double(b).as_bialgebra(std::move(outer_dual_labels)));
}

LieAlgebra iterated_double_formula(const LieBialgebra& b, std::vector<std::string> outer_dual_labels) {
  const DoubleAlgebra inner = build_double(b);
  const std::size_t n = b.dim();
  if (outer_dual_labels.empty()) outer_dual_labels = inner.as_bialgebra().dual_labels();
  if (outer_dual_labels.size() != 2 * n) throw DimensionMismatch("outer dual labels");
  std::vector<std::string> labels = inner.labels();
  labels.insert(labels.end(), outer_dual_labels.begin(), outer_dual_labels.end());

  const auto X = [](std::size_t i) { return i; };
  const auto x = [n](std::size_t i) { return n + i; };
  const auto y = [n](std::size_t i) { return 2 * n + i; };
  const auto Y = [n](std::size_t i) { return 3 * n + i; };
  const Tensor3& d = b.algebra().structure();
  const Tensor3& g = b.cocomm().components();

  std::vector<BracketEntry> e;
  auto add = [&e](std::size_t p, std::size_t q, std::size_t r, const PolyExpr& c) {
    if (!c.is_zero()) e.push_back({p, q, r, c});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i < j) {
          add(X(i), X(j), X(k), d(i, j, k));
          add(x(i), x(j), x(k), g(k, i, j));
          add(Y(i), Y(j), Y(k), d(i, j, k));
          add(y(i), y(j), y(k), -g(k, i, j));
        }
        add(x(i), X(j), x(k), d(j, k, i));
        add(x(i), X(j), X(k), -g(j, i, k));
        add(y(i), X(j), y(k), d(j, k, i));
        add(y(i), X(j), X(k), g(j, i, k));
        add(y(i), X(j), Y(k), -g(j, i, k));
        add(y(i), x(j), y(k), g(k, i, j));
        add(Y(i), X(j), Y(k), d(i, j, k));
        add(Y(i), x(j), Y(k), g(i, j, k));
        add(Y(i), x(j), x(k), -d(i, k, j));
        add(Y(i), x(j), y(k), -d(i, k, j));
      }
    }
  }
  return LieAlgebra(std::move(labels), e);
}

}  // namespace liebw
