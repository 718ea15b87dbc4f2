#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "liebw/poly.hpp"

namespace liebw {

/// Dense rank-R tensor of PolyExpr with equal extent n in every slot,
/// row-major (last index fastest).
template <std::size_t R>
class Tensor {
 public:
  using Index = std::array<std::size_t, R>;

  Tensor() = default;
  explicit Tensor(std::size_t n) : n_(n), data_(ipow(n)) {}

  std::size_t dim() const noexcept { return n_; }

  template <typename... I>
  PolyExpr& operator()(I... idx) {
    static_assert(sizeof...(I) == R);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <typename... I>
  const PolyExpr& operator()(I... idx) const {
    static_assert(sizeof...(I) == R);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  PolyExpr& at(const Index& idx) { return data_[offset(idx)]; }
  const PolyExpr& at(const Index& idx) const { return data_[offset(idx)]; }

  bool is_zero() const {
    for (const auto& p : data_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  /// Multi-indices of nonzero entries in row-major order.
  std::vector<Index> nonzero() const {
    std::vector<Index> out;
    for (std::size_t flat = 0; flat < data_.size(); ++flat) {
      if (!data_[flat].is_zero()) out.push_back(unflatten(flat));
    }
    return out;
  }

  Tensor substitute(const Substitution& s) const {
    Tensor out = *this;
    for (auto& p : out.data_) p = p.substitute(s);
    return out;
  }

  const std::vector<PolyExpr>& data() const noexcept { return data_; }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t ipow(std::size_t n) const {
    std::size_t s = 1;
    for (std::size_t k = 0; k < R; ++k) s *= n;
    return s;
  }
  std::size_t offset(const Index& idx) const {
    std::size_t o = 0;
    for (std::size_t k = 0; k < R; ++k) o = o * n_ + idx[k];
    return o;
  }
  Index unflatten(std::size_t flat) const {
    Index idx{};
    for (std::size_t k = R; k-- > 0;) {
      idx[k] = flat % n_;
      flat /= n_;
    }
    return idx;
  }

  std::size_t n_ = 0;
  std::vector<PolyExpr> data_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

}  // namespace liebw
