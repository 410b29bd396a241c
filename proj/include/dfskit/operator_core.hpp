#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::span<const Matrix> factors);

// μ_{i₁..i_n} = λ_{i₁} ⊗ … ⊗ λ_{i_n}, index 0 meaning the identity.
Matrix mu(const GellMannBasis& basis, std::span<const int> indices);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

// exp(−i t H) for Hermitian H, via eigendecomposition.  Throws if H fails
// the Hermiticity check at 1e-10.
Matrix expm_hermitian(const Matrix& h, double t);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the
// R-diagonal phase correction.  Deterministic per seed.
Matrix haar_unitary(int d, std::uint64_t seed);

// Real coefficients a_{i₁..i_n} of an n-site Hermitian operator in the
// μ basis.  Stored dense over all (d²)ⁿ index tuples.
class CoeffTensor {
 public:
  CoeffTensor(int d, int n);

  int dim() const { return d_; }
  int sites() const { return n_; }
  int tuple_count() const { return static_cast<int>(flat_.size()); }

  double coeff(std::span<const int> tuple) const;
  void set_coeff(std::span<const int> tuple, double value);

  const RealVector& flat() const { return flat_; }
  RealVector& flat() { return flat_; }

  std::vector<int> tuple_at(int flat_index) const;
  static int flat_index(std::span<const int> tuple, int d);

 private:
  int d_ = 0, n_ = 0;
  RealVector flat_;
};

// a_t = Tr(H μ_t) / Π_slots (2 if index > 0 else d); the exact inverse of
// reconstruct_operator.  Throws on dimension mismatch or if any coefficient
// comes out non-real beyond 1e-12 (H not Hermitian in the μ span).
CoeffTensor coeff_expand(const Matrix& h, const GellMannBasis& basis, int n);

// H = Σ_t a_t μ_t over the nonzero coefficients.
Matrix reconstruct_operator(const CoeffTensor& coeffs,
                            const GellMannBasis& basis);

}  // namespace dfskit
