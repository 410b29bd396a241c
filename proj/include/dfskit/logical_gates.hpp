#pragma once

#include <map>
#include <span>
#include <string>

#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

// Lifts a k-site operator onto sites (ascending index order) of an n-site
// space, identity elsewhere.
Matrix embed_sites(const Matrix& op, std::span<const int> sites, int d,
                   int n);

// e_pq = Σ_i λ_i^(p) λ_i^(q); symmetric in (p, q).
Matrix exchange_hamiltonian(const GellMannBasis& basis, int p, int q, int n);

// Σ f_ijk λ_i^(p) λ_j^(q) λ_k^(r) and the d-tensor analog.
Matrix f_triple_hamiltonian(const GellMannBasis& basis, int p, int q, int r,
                            int n);
Matrix d_triple_hamiltonian(const GellMannBasis& basis, int p, int q, int r,
                            int n);

// Logical Pauli analogs on three sites:
//   X̄ = (e1 − e2)/(2√3), Z̄ = (e1 + e2 − 2e3)/6, Ȳ = F/(2√3),
// normalized so [Z̄, X̄] = 2iȲ.
Matrix xbar(const GellMannBasis& basis);
Matrix zbar(const GellMannBasis& basis);
Matrix ybar(const GellMannBasis& basis);

// Closed-form evolutions (X̄³ = X̄ and Z̄³ = Z̄ let the series collapse):
//   u_xbar(t) = I + i X̄ sin t − X̄² (1 − cos t)   [= exp(+i X̄ t)]
//   u_zbar(t) = I − i Z̄ sin t − Z̄² (1 − cos t)   [= exp(−i Z̄ t)]
// Note the sign asymmetry: u_xbar evolves with +i so that
// u_xbar(t)|0_L⟩ = cos t |0_L⟩ + i sin t |1_L⟩ holds verbatim, while
// euler_rotation uses exp(−i X̄ β) throughout.
Matrix u_xbar(const GellMannBasis& basis, double t);
Matrix u_zbar(const GellMannBasis& basis, double t);

// exp(−i Z̄ α) · exp(−i X̄ β) · exp(−i Z̄ γ)
Matrix euler_rotation(const GellMannBasis& basis, double alpha, double beta,
                      double gamma);

// Two-site ingredients of the analytic exchange exponential.
// Q_kl = |k⟩⟨l|⊗|l⟩⟨k| + |l⟩⟨k|⊗|k⟩⟨l|, R_kl = Q_kl².
Matrix q_kl(int d, int k, int l);
Matrix r_kl(int d, int k, int l);
// U_kl(t) = exp(−i t M_kl) with M_kl = 2 Q_kl:
//   I − i Q_kl sin 2t + R_kl (cos 2t − 1)
Matrix u_kl(int d, int k, int l, double t);
// Closed-form exponential of the diagonal-member sum
// Σ_{i∈diag} λ_i ⊗ λ_i = Σ_{m,n} ξ_{m,n} |mm⟩⟨mm| ⊗ |nn⟩⟨nn| style kernel:
// entries exp(−2it(d−1)/d) at m=n, exp(+2it/d) otherwise.
Matrix diagonal_exchange_exponential(int d, double t);

struct SwapDiagnostics {
  Matrix k;                  // K = Σ_{k<l} Q_kl, half the off-diagonal sum
  RealVector ksq_diagonal;   // diag(K²)
  RealMatrix xi;             // d×d: ξ_mm = 2(d−1)/d, ξ_mn = −2/d
  Complex phase;             // global phase of the t = π/4 exchange unitary
};

SwapDiagnostics swap_diagnostics(const GellMannBasis& basis);

// exp(−i t Σ_s λ_s^(p) λ_s^(q)) assembled analytically as the diagonal-part
// exponential times the commuting U_kl factors in lexicographic (k,l)
// order, then embedded.  At t = π/4 this is SWAP up to the global phase
// −i e^{iπ/2d}.
Matrix exchange_unitary(const GellMannBasis& basis, int p, int q, int n,
                        double t);

struct CommutationTable {
  std::map<std::string, double> residuals;
  double max_residual() const;
};

// Residuals of the closed commutator/product table of {e1, e2, e3, F, D}
// on three sites:
//   [e1,e2] = −2iF, [e1,e3] = 2iF, [e2,e3] = −2iF,
//   [e1,F] = 4i(e2−e3), [e2,F] = 4i(e3−e1), [e3,F] = 4i(e1−e2),
//   [e_i,D] = 0, [F,D] = 0,
//   e_i² = (4/d²)(d²−1) I − (4/d) e_i,
//   e1e2 = (2/d)e3 − iF + D, e1e3 = (2/d)e2 + iF + D,
//   e2e3 = (2/d)e1 − iF + D,
//   e_i D = (2(d²−4)/d²)(e_j + e_k) − (6/d) D.
CommutationTable verify_commutation_table(const GellMannBasis& basis);

}  // namespace dfskit
