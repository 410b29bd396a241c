#include "dfskit/noise_sim.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "dfskit/compat_search.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/operator_core.hpp"

namespace dfskit {

StabilizerElement stabilizer_element(const GellMannBasis& basis,
                                     const Vector& v, int n) {
  if (v.size() != basis.count())
    throw std::invalid_argument(
        "stabilizer_element: coefficient vector length mismatch");
  const auto gens = collective_generators(basis, n);

  StabilizerElement el;
  el.v = v;
  el.unitary = true;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i].real()) >= 1e-12) el.unitary = false;

  if (el.unitary) {
    // v = i·w with real w: exp(Σ v_α S_α) = exp(i H), H = Σ w_α S_α.
    Matrix h = Matrix::Zero(gens[0].rows(), gens[0].cols());
    for (std::size_t a = 0; a < gens.size(); ++a)
      h += v[static_cast<Eigen::Index>(a)].imag() * gens[a];
    el.matrix = expm_hermitian(h, -1.0);
  } else {
    Matrix m = Matrix::Zero(gens[0].rows(), gens[0].cols());
    for (std::size_t a = 0; a < gens.size(); ++a)
      m += v[static_cast<Eigen::Index>(a)] * gens[a];
    el.matrix = m.exp();
  }
  return el;
}

Matrix random_collective_unitary(int d, int n, std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("random_collective_unitary: requires n >= 1");
  const Matrix u = haar_unitary(d, seed);
  Matrix out = u;
  for (int i = 1; i < n; ++i) out = kron(out, u);
  return out;
}

namespace {

TrajectoryStep snapshot(const Vector& state, const DfsEncoding& enc) {
  TrajectoryStep step;
  const Populations p = logical_populations(state, enc);
  step.p0 = p.p0;
  step.p1 = p.p1;
  step.leak = p.leak;
  step.octet0_overlap = enc.octet0.adjoint() * state;
  step.octet1_overlap = enc.octet1.adjoint() * state;
  return step;
}

}  // namespace

NoiseTrajectory run_trajectory(const LogicalState& state,
                               const DfsEncoding& enc, int steps,
                               std::uint64_t seed, int control_step) {
  if (steps < 0) throw std::invalid_argument("run_trajectory: steps < 0");
  const GellMannBasis basis = generate_basis(3);

  NoiseTrajectory traj;
  traj.seed = seed;
  Vector psi = state.vector;
  traj.record.push_back(snapshot(psi, enc));

  std::mt19937_64 master(seed);
  for (int k = 0; k < steps; ++k) {
    const std::uint64_t step_seed = master();
    if (k == control_step) {
      // Single-site perturbation, deliberately non-collective.
      const Matrix u1 = expm_hermitian(basis.op(1), 1.0);
      traj.step_unitaries.push_back(u1);
      psi = kron(u1, Matrix::Identity(9, 9)) * psi;
    } else {
      const Matrix u = haar_unitary(3, step_seed);
      traj.step_unitaries.push_back(u);
      psi = kron(u, kron(u, u)) * psi;
    }
    traj.record.push_back(snapshot(psi, enc));
  }
  return traj;
}

CompatReport verify_n_qudit_compat(const GellMannBasis& basis, int n,
                                   double tolerance) {
  const int d = basis.dim();
  double dim = std::pow(static_cast<double>(d), n);
  if (dim > 1024.5)
    throw std::invalid_argument("verify_n_qudit_compat: d^n exceeds 1024");

  const auto gens = collective_generators(basis, n);
  CompatReport rep;
  rep.d = d;
  rep.n = n;
  rep.tolerance = tolerance;

  auto check = [&](const std::string& name, const Matrix& h) {
    double r = 0.0;
    for (const Matrix& s : gens) r = std::max(r, max_abs(commutator(h, s)));
    rep.entries.push_back({name, r});
    rep.max_residual = std::max(rep.max_residual, r);
  };

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      check("e_" + std::to_string(p) + std::to_string(q),
            exchange_hamiltonian(basis, p, q, n));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r) {
        const std::string suffix =
            std::to_string(p) + std::to_string(q) + std::to_string(r);
        check("F_" + suffix, f_triple_hamiltonian(basis, p, q, r, n));
        check("D_" + suffix, d_triple_hamiltonian(basis, p, q, r, n));
      }

  rep.pass = rep.max_residual < tolerance;
  return rep;
}

}  // namespace dfskit
