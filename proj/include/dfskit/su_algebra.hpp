#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dfskit/types.hpp"

namespace dfskit {

// Traceless Hermitian basis of su(d), normalized so Tr(λ_i λ_j) = 2δ_ij.
// Index 0 is reserved for the d×d identity; the basis matrices carry
// labels 1..d²−1.  Ordering: for l = 2..d, for k = 1..l−1 emit the
// symmetric then the antisymmetric (k,l) matrix, then the diagonal matrix
// of sub-dimension l.  For d = 3 this reproduces the standard λ₁..λ₈.
class GellMannBasis {
 public:
  int dim() const { return d_; }
  // Number of basis matrices, d²−1.
  int count() const { return d_ * d_ - 1; }

  // index 0 → identity, 1..d²−1 → basis matrix with that label.
  const Matrix& op(int index) const;

  // Labels l²−1 for l = 2..d; exactly the diagonal basis matrices.
  const std::vector<int>& diagonal_indices() const { return diag_; }
  bool is_diagonal(int index) const;

 private:
  friend GellMannBasis generate_basis(int d);
  int d_ = 0;
  std::vector<Matrix> ops_;  // size d², ops_[0] = identity
  std::vector<int> diag_;
};

// Throws std::invalid_argument for d < 2.  Deterministic: equal d gives
// bit-identical matrices.
GellMannBasis generate_basis(int d);

// Sparse totally antisymmetric f and totally symmetric d tensors defined by
//   λ_i λ_j = (2/d) δ_ij + (i f_ijk + d_ijk) λ_k.
// One canonical representative (sorted triple) is stored per orbit; lookups
// resolve permutation signs.  Entries below 1e-13 are absent.
class StructureTensors {
 public:
  using TripleMap = std::map<std::array<int, 3>, double>;

  int dim() const { return d_; }
  double f(int i, int j, int k) const;
  double dsym(int i, int j, int k) const;

  const TripleMap& f_entries() const { return f_; }
  const TripleMap& dsym_entries() const { return dsym_; }

 private:
  friend StructureTensors structure_constants(const GellMannBasis& basis);
  int d_ = 0;
  TripleMap f_, dsym_;
};

// f_ijk = −(i/4)·Tr([λ_i,λ_j] λ_k), d_ijk = (1/4)·Tr({λ_i,λ_j} λ_k).
// Throws if any computed entry has imaginary part ≥ 1e-12.
StructureTensors structure_constants(const GellMannBasis& basis);

struct IdentityReport {
  std::map<std::string, double> residuals;  // identity name → max |residual|
  double tolerance = 0.0;
  bool pass = false;

  double max_residual() const;
};

// Evaluates, over all free indices, the contraction identities of the f/d
// tensors: both Jacobi-type identities, the pairwise contractions
// f·f = dδ, d·d = ((d²−4)/d)δ, f·d = 0, Σ_i d_iik = 0, the ff → dd
// expansion, the four cyclic triple-product traces, and the restricted sum
// Σ_{i∈diag} d_iil = 0.  Failures are reported, never thrown.
IdentityReport verify_algebra_identities(const StructureTensors& tensors,
                                         double tolerance);

}  // namespace dfskit
