#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liebw/poly.hpp"

namespace liebw {

using PolyVec = std::vector<PolyExpr>;
/// Row-major.
using PolyMatrix = std::vector<PolyVec>;

PolyMatrix identity_matrix(std::size_t n);
PolyMatrix transpose(const PolyMatrix& m);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyVec matvec(const PolyMatrix& a, const PolyVec& v);
PolyVec unit_vector(std::size_t n, std::size_t i);
bool is_zero_vector(const PolyVec& v);
PolyMatrix substitute(const PolyMatrix& m, const Substitution& s);

/// Exact inverse by Gauss-Jordan elimination with monomial pivots, so the
/// result stays in the (Laurent) polynomial ring. Throws SingularMatrix when
/// no invertible pivot exists in some column.
PolyMatrix invert(const PolyMatrix& m);

/// Solves a x = b over the polynomial ring using monomial pivots. Returns
/// nullopt when the system is inconsistent; throws SingularMatrix when the
/// columns are dependent or no monomial pivot is available.
std::optional<PolyVec> solve(const PolyMatrix& a, const PolyVec& b);

/// Generic rank: an entry counts as nonzero unless identically zero.
std::size_t rank(const std::vector<PolyVec>& rows);
bool in_span(const std::vector<PolyVec>& rows, const PolyVec& v);
/// Basis of { x : m x = 0 } with polynomial entries, each vector primitive.
std::vector<PolyVec> nullspace(const PolyMatrix& m);

}  // namespace liebw
