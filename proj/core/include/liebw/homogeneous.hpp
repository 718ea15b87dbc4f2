#pragma once

#include <string>
#include <vector>

#include "liebw/double.hpp"

namespace liebw {

/// Span of `vectors` inside a space of dimension `ambient_dim`.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<PolyVec> vectors;

  std::size_t dim() const { return rank(vectors); }
};

/// Base-point data of l = h + span{t^a + pi^{ab} T_b}: a basis {H_i} of
/// h, a complement {T_a}, and pi on the complement. Vectors are in g
/// coordinates (length N).
struct LagrangianSpec {
  std::vector<PolyVec> h_basis;
  std::vector<PolyVec> complement;
  PolyMatrix pi;  // (N-n) x (N-n); empty means zero
};

struct Violation {
  std::string check;
  std::string component;
  std::string value;
};

struct ClosureReport {
  bool lagrangian = false;
  bool subalgebra = false;
  bool coisotropic = false;
  bool poisson_subgroup = false;
  bool pi_zero = false;
  /// M^{ab}_g = f^{ab}_g + pi^{db} C_gd^a + pi^{ad} C_gd^b, indexed (a,b,g)
  /// over the complement.
  std::vector<std::vector<PolyVec>> m_gamma;
  /// M^{ab}_i = f_i^{ab} + pi^{db} C_id^a + pi^{ad} C_id^b, indexed (a,b,i).
  /// Must vanish for l to close.
  std::vector<std::vector<PolyVec>> m_i;
  std::vector<Violation> violations;
};

/// Adapted basis {H_i, T_a} of g with its dual basis {h^i, t^a} of g*.
struct AdaptedBasis {
  PolyMatrix basis;       // rows H_1..H_n, T_1..T_{N-n}, in g coordinates
  PolyMatrix dual_basis;  // rows h^1.., t^1.., in g* coordinates
  std::size_t n = 0;      // dim h
};

/// Throws BasisNotComplete unless {H, T} is a basis with monomial pivots.
AdaptedBasis adapted_basis(const LagrangianSpec& spec);

/// h^perp inside D, as 2N-vectors with zero g part. Accepts h in g coordinates
/// (length N) or in D coordinates (length 2N, dual part must vanish).
Subspace annihilator(const DoubleAlgebra& d, const Subspace& h);

/// h + span{t^a + pi^{ab} T_b} as 2N-vectors.
Subspace lagrangian_from_pi(const DoubleAlgebra& d, const LagrangianSpec& spec);

/// Pairing vanishes on l x l. Throws WrongDimension unless dim l = N.
bool is_lagrangian(const DoubleAlgebra& d, const Subspace& l);
bool is_subalgebra(const DoubleAlgebra& d, const Subspace& l);

/// Lagrangian, subalgebra, coisotropy (pi = 0) and Poisson-subgroup
/// (f_i^{jb} = f_i^{bc} = 0 in the adapted basis) verdicts with the
/// M-tensors. `source` must be the bialgebra D was built from.
ClosureReport classify(const DoubleAlgebra& d, const LieBialgebra& source, const LagrangianSpec& spec);

/// Brackets of l in the basis {H_i, t^a + pi^{ab} T_b}. Labels come from D
/// when a basis vector is a D basis vector. Throws NotClosed.
LieAlgebra lagrangian_bracket_table(const DoubleAlgebra& d, const LagrangianSpec& spec,
                                    std::vector<std::string> labels = {});

/// [t,t] in t, [h,h] in h and [t,h] in t. Throws BadPartition.
bool is_semidirect(const LieAlgebra& table, const std::vector<std::size_t>& h_indices,
                   const std::vector<std::size_t>& t_indices);

}  // namespace liebw
