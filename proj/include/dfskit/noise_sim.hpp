#pragma once

#include <cstdint>
#include <vector>

#include "dfskit/dfs_encoding.hpp"
#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

// exp(Σ_α v_α S_α) for a complex coefficient vector v of length d²−1.
// Unitary exactly when every v_α is purely imaginary; non-unitary elements
// are constructed but flagged.
struct StabilizerElement {
  Vector v;
  Matrix matrix;
  bool unitary = false;
};

StabilizerElement stabilizer_element(const GellMannBasis& basis,
                                     const Vector& v, int n);

// U^{⊗n} with U Haar-distributed on d dimensions.
Matrix random_collective_unitary(int d, int n, std::uint64_t seed);

struct TrajectoryStep {
  double p0 = 0.0, p1 = 0.0, leak = 0.0;
  Vector octet0_overlap;  // ⟨ψ_j^{8,0}|state⟩, 8 entries
  Vector octet1_overlap;
};

struct NoiseTrajectory {
  std::uint64_t seed = 0;
  std::vector<Matrix> step_unitaries;  // the d×d factors, one per step
  std::vector<TrajectoryStep> record;  // record[0] is the initial point
};

// Applies `steps` i.i.d. Haar collective unitaries U^{⊗3} to the encoded
// state, recording populations and gauge overlaps after each step.
// control_step ≥ 0 replaces that step with a single-site perturbation
// exp(−i λ₁) on site 0 (negative-testing hook; breaks collectivity).
NoiseTrajectory run_trajectory(const LogicalState& state,
                               const DfsEncoding& enc, int steps,
                               std::uint64_t seed, int control_step = -1);

struct CompatEntry {
  std::string name;
  double residual = 0.0;
};

struct CompatReport {
  int d = 0, n = 0;
  double tolerance = 0.0;
  std::vector<CompatEntry> entries;
  double max_residual = 0.0;
  bool pass = false;
};

// max_α ‖[H, S_α]‖_max for every pair exchange e_pq and every ordered-site
// triple F_pqr, D_pqr on n qudits.
CompatReport verify_n_qudit_compat(const GellMannBasis& basis, int n,
                                   double tolerance);

}  // namespace dfskit
