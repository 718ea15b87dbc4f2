#include "liebw/bialgebra.hpp"

#include "liebw/errors.hpp"

namespace liebw {

Tensor3 double_structure(const Tensor3& c, const Tensor3& f) {
  const std::size_t n = c.dim();
  if (f.dim() != n) throw DimensionMismatch("cocommutator vs algebra dimension");
  Tensor3 d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        d(i, j, k) = c(i, j, k);
        d(n + i, n + j, n + k) = f(k, i, j);
        // [x^i, X_j] = C_jk^i x^k - f_j^{ik} X_k
        PolyExpr dual_part = c(j, k, i);
        PolyExpr first_part = -f(j, i, k);
        d(n + i, j, n + k) += dual_part;
        d(j, n + i, n + k) -= dual_part;
        d(n + i, j, k) += first_part;
        d(j, n + i, k) -= first_part;
      }
    }
  }
  return d;
}

std::vector<std::string> default_dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

namespace {

void validate_double(const LieAlgebra& l, const CocommTensor& f, const std::vector<std::string>& dual) {
  std::vector<std::string> labels = l.labels();
  labels.insert(labels.end(), dual.begin(), dual.end());
  const LieAlgebra d(labels, double_structure(l.structure(), f.components()));
  const Tensor4 r = d.jacobi_residual();
  const auto bad = r.nonzero();
  if (bad.empty()) return;
  const auto& [i, j, k, m] = bad.front();
  throw NotACobracket("double violates Jacobi: " + std::to_string(bad.size()) +
                      " nonzero residual components, first at (" + labels[i] + "," + labels[j] +
                      "," + labels[k] + "; " + labels[m] + ") = " + r(i, j, k, m).str());
}

}  // namespace

LieBialgebra::LieBialgebra(LieAlgebra algebra, CocommTensor cocomm, std::vector<std::string> dual_labels)
    : LieBialgebra(Unchecked{}, std::move(algebra), std::move(cocomm), std::move(dual_labels)) {
  validate_double(algebra_, cocomm_, dual_labels_);
}

LieBialgebra::LieBialgebra(Unchecked, LieAlgebra algebra, CocommTensor cocomm,
                           std::vector<std::string> dual_labels)
    : algebra_(std::move(algebra)), cocomm_(std::move(cocomm)), dual_labels_(std::move(dual_labels)) {
  if (cocomm_.dim() != algebra_.dim()) {
    throw DimensionMismatch("cocommutator dimension " + std::to_string(cocomm_.dim()) +
                            " vs algebra " + std::to_string(algebra_.dim()));
  }
  if (dual_labels_.empty()) dual_labels_ = default_dual_labels(algebra_.labels());
  if (dual_labels_.size() != algebra_.dim()) throw DimensionMismatch("dual labels");
}

LieBialgebra LieBialgebra::change_basis(const BasisChange& m) const {
  auto dual = m.labels().empty() ? dual_labels_ : default_dual_labels(m.labels());
  return LieBialgebra(Unchecked{}, algebra_.change_basis(m), cocomm_.change_basis(m), std::move(dual));
}

LieBialgebra LieBialgebra::substitute(const Substitution& s) const {
  return LieBialgebra(algebra_.substitute(s), cocomm_.substitute(s), dual_labels_);
}

LieBialgebra dual_bialgebra(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const Tensor3& c = b.algebra().structure();
  const Tensor3& f = b.cocomm().components();
  Tensor3 dc(n);
  Tensor3 df(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        dc(i, j, k) = f(k, i, j);
        df(i, j, k) = c(j, k, i);
      }
    }
  }
  return LieBialgebra(LieBialgebra::Unchecked{}, LieAlgebra(b.dual_labels(), std::move(dc)),
                      CocommTensor(std::move(df)), b.algebra().labels());
}

}  // namespace liebw
