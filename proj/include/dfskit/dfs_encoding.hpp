#pragma once

#include <vector>

#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

// The three-qutrit noiseless encoding: two octet blocks carrying the
// logical qubit, plus the orthogonal complement (singlet ⊕ decuplet).
// Kets |abc⟩ put site 0 leftmost; qutrit levels are 0, 1, 2.
struct DfsEncoding {
  Matrix octet0;    // 27×8, columns ψ_j^{8,0}
  Matrix octet1;    // 27×8, columns ψ_j^{8,1}
  Matrix singlet;   // 27×1
  Matrix decuplet;  // 27×10

  Matrix complement() const;          // 27×11, singlet then decuplet
  Matrix projector_octet0() const;    // Σ_j |ψ_j⟩⟨ψ_j|
  Matrix projector_octet1() const;
  Matrix projector_complement() const;
};

// Octet columns are the sixteen explicit superpositions; the complement is
// computed as the orthogonal complement and split into singlet/decuplet by
// collective-Casimir eigenvalue.
DfsEncoding octet_states();

struct CasimirBlock {
  double eigenvalue = 0.0;
  std::vector<int> block_dims;  // irreducible block sizes inside this space
  Matrix vectors;               // dⁿ × dim, columns grouped by block
  int total_dim() const { return static_cast<int>(vectors.cols()); }
};

// Diagonalizes C₂ = Σ_α S_α², groups its eigenspaces, and resolves each
// into irreducible blocks using the spectrum of a generic exchange
// combination restricted to the eigenspace.  Blocks are sorted by ascending
// eigenvalue.
std::vector<CasimirBlock> casimir_decompose(const GellMannBasis& basis,
                                            int n);

struct LogicalState {
  Complex a, b;   // logical amplitudes, |a|² + |b|² = 1
  Vector gauge;   // 8 complex weights, unit norm, shared by both blocks
  Vector vector;  // 27-dim physical state
};

// |ψ⟩ = a Σ_j g_j ψ_j^{8,0} + b Σ_j g_j ψ_j^{8,1}; inputs are normalized.
// Throws if (a, b) or the gauge weights are all zero.
LogicalState encode(Complex a, Complex b, const Vector& gauge,
                    const DfsEncoding& enc);

struct Populations {
  double p0 = 0.0, p1 = 0.0, leak = 0.0;
};

// Projector weights on the two octet blocks; leak = 1 − p0 − p1.
// Throws if the state norm deviates from 1 by more than 1e-8.
Populations logical_populations(const Vector& state, const DfsEncoding& enc);

struct BlockReport {
  Matrix m0;              // 8×8 within-block matrix on octet 0
  Matrix m1;              // 8×8 within-block matrix on octet 1
  Matrix cross;           // 8×8 octet0 → octet1 cross block
  double cross_max = 0;   // max |cross-block element| (both directions)
  double leak_max = 0;    // max |complement ↔ octet element|
  double block_diff = 0;  // max |m0 − m1|
};

BlockReport block_report(const Matrix& a, const DfsEncoding& enc);

}  // namespace dfskit
