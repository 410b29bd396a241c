#pragma once

#include <Eigen/Sparse>
#include <map>
#include <string>
#include <vector>

#include "dfskit/operator_core.hpp"
#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

// S_α = Σ_{r=0..n-1} λ_α^(r), for α = 1..d²−1.
std::vector<Matrix> collective_generators(const GellMannBasis& basis, int n);

// The five three-site operators commuting with every S_α:
//   e1 = Σ μ_{0ii}, e2 = Σ μ_{i0i}, e3 = Σ μ_{ii0},
//   F = Σ f_ijk μ_ijk, D = Σ d_ijk μ_ijk.
// Keys: "e1", "e2", "e3", "F", "D".
std::map<std::string, Matrix> known_hamiltonians(const GellMannBasis& basis);

// Linear system whose nullspace is the commutant, in coefficient space:
// row (α, b) maps a ↦ Σ_t a_t Σ_r f_{t_r, α, b_r} [t_{-r} = b_{-r}].
// Assembled slot-wise from the f tensor; no dⁿ×dⁿ commutator is formed.
struct ConstraintSystem {
  int d = 0;
  int n = 0;
  Eigen::SparseMatrix<double> rows;  // ((d²−1)·M) × M with M = (d²)ⁿ
};

ConstraintSystem build_constraint_system(const GellMannBasis& basis,
                                         int n = 3);

struct CommutantBasis {
  int d = 0;
  int n = 0;
  std::vector<CoeffTensor> elements;  // orthonormal coefficient vectors
  bool includes_identity = true;      // the all-zero tuple is in the space
  RealVector singular_values;         // descending
  // ratio of smallest kept σ to largest discarded σ; flagged below 10³
  double spectral_gap = 0.0;
  bool gap_ok = true;
};

// Nullspace via singular-value thresholding at tolerance·σ_max, followed by
// modified Gram-Schmidt for reproducibility.  Systems with more than 1000
// columns go through the RᵀR Gram matrix and a self-adjoint eigensolver
// (σ = √λ) to bound memory; that path floors the threshold at √eps since
// squared singular values carry eps·λ_max noise.
CommutantBasis commutant_basis(const ConstraintSystem& system,
                               double tolerance = 1e-9);

struct MatchReport {
  std::vector<std::string> known_names;
  // change_of_basis(i, j): coefficient of known j in found element i
  RealMatrix change_of_basis;
  std::vector<double> residuals;  // per-element least-squares residual (max)
};

// Least-squares projection of each found element onto
// span{identity, knowns} in coefficient space.
MatchReport match_against_known(const CommutantBasis& found,
                                const std::map<std::string, Matrix>& known,
                                const GellMannBasis& basis);

// Residual of the slot-wise compatibility contraction
//   Σ_l f_ilm a_jkl + f_jlm a_kil + f_klm a_ijl
// maximized over all free indices, for a generic 3-index tensor a given as
// a dense array a[(i·N + j)·N + k] with N = d²−1.
double compatibility_residual(const StructureTensors& tensors,
                              const std::vector<double>& a);

}  // namespace dfskit
