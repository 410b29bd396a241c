#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "dfskit/compat_search.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/noise_sim.hpp"
#include "dfskit/operator_core.hpp"

using namespace dfskit;

namespace {

Vector random_imaginary_v(int len, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  Vector v(len);
  for (int i = 0; i < len; ++i) v[i] = Complex(0.0, g(rng));
  return v;
}

Vector random_gauge(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(8);
  for (int i = 0; i < 8; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("noise_sim");

TEST_CASE("stabilizer element basics") {
  const GellMannBasis b = generate_basis(3);
  const StabilizerElement id = stabilizer_element(b, Vector::Zero(8), 3);
  CHECK(id.unitary);
  CHECK(max_abs(id.matrix - Matrix::Identity(27, 27)) < 1e-13);

  CHECK_THROWS_AS(stabilizer_element(b, Vector::Zero(5), 3),
                  std::invalid_argument);
}

TEST_CASE("single-generator element factorizes over sites") {
  // v = (it, 0, ...): exp(it S_1) = exp(it lambda_1)^{x n}
  const GellMannBasis b = generate_basis(3);
  const double t = 0.83;
  Vector v = Vector::Zero(8);
  v[0] = Complex(0.0, t);
  const StabilizerElement el = stabilizer_element(b, v, 3);
  CHECK(el.unitary);
  const Matrix site = expm_hermitian(b.op(1), -t);  // exp(+it lambda_1)
  CHECK(max_abs(el.matrix - kron(site, kron(site, site))) < 1e-12);
}

TEST_CASE("non-unitary elements are flagged and still exponentiate") {
  const GellMannBasis b = generate_basis(3);
  Vector v = Vector::Zero(8);
  v[2] = Complex(0.3, 0.1);
  const StabilizerElement el = stabilizer_element(b, v, 2);
  CHECK_FALSE(el.unitary);
  CHECK_FALSE(is_unitary(el.matrix, 1e-6));
  // exp(c S_3) for the single diagonal generator: entrywise exponential
  const auto gens = collective_generators(b, 2);
  Matrix direct = Matrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i)
    direct(i, i) = std::exp(v[2] * gens[2](i, i));
  CHECK(max_abs(el.matrix - direct) < 1e-12);
}

TEST_CASE("stabilizer elements leave logical populations unchanged") {
  const GellMannBasis b = generate_basis(3);
  const DfsEncoding enc = octet_states();
  for (std::uint64_t s = 0; s < 5; ++s) {
    const StabilizerElement el =
        stabilizer_element(b, random_imaginary_v(8, 70 + s, 0.7), 3);
    const LogicalState st =
        encode(Complex(0.6, 0.1), Complex(-0.2, 0.77), random_gauge(90 + s),
               enc);
    const Populations before = logical_populations(st.vector, enc);
    const Populations after = logical_populations(el.matrix * st.vector, enc);
    CHECK(std::abs(after.p0 - before.p0) < 1e-10);
    CHECK(std::abs(after.leak) < 1e-10);
    // cross-octet blocks vanish for every element
    CHECK(block_report(el.matrix, enc).cross_max < 1e-10);
  }
}

TEST_CASE("random collective unitary structure") {
  const Matrix u1 = random_collective_unitary(3, 1, 99);
  CHECK(max_abs(u1 - haar_unitary(3, 99)) == 0.0);

  const Matrix u3 = random_collective_unitary(3, 3, 7);
  CHECK(is_unitary(u3, 1e-11));
  const GellMannBasis b = generate_basis(3);
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      CHECK(max_abs(commutator(u3, exchange_hamiltonian(b, p, q, 3))) <
            1e-10);
}

TEST_CASE("gates commute with sampled stabilizer exponentials") {
  const GellMannBasis b = generate_basis(3);
  const std::array<Matrix, 4> gates{
      u_xbar(b, 0.3), u_zbar(b, 0.7), euler_rotation(b, 0.2, 0.4, 0.6),
      exchange_unitary(b, 0, 1, 3, 0.5)};
  for (std::uint64_t s = 0; s < 4; ++s) {
    const StabilizerElement el =
        stabilizer_element(b, random_imaginary_v(8, 200 + s, 0.5), 3);
    for (const Matrix& u : gates)
      CHECK(max_abs(u * el.matrix - el.matrix * u) < 1e-10);
  }
}

TEST_CASE("trajectories preserve the encoding") {
  const DfsEncoding enc = octet_states();
  const LogicalState st =
      encode(Complex(0.48, 0.36), Complex(0.6, -0.53), random_gauge(5), enc);
  const NoiseTrajectory traj = run_trajectory(st, enc, 100, 31415);
  REQUIRE(traj.record.size() == 101);
  const double p0 = traj.record[0].p0;
  for (const TrajectoryStep& step : traj.record) {
    CHECK(std::abs(step.p0 - p0) < 1e-10);
    CHECK(std::abs(step.leak) < 1e-10);
  }
}

TEST_CASE("zero-step trajectory holds only the initial point") {
  const DfsEncoding enc = octet_states();
  const LogicalState st = encode(1.0, 0.0, random_gauge(8), enc);
  const NoiseTrajectory traj = run_trajectory(st, enc, 0, 1);
  CHECK(traj.record.size() == 1);
  CHECK(traj.step_unitaries.empty());
}

TEST_CASE("trajectories are deterministic per seed") {
  const DfsEncoding enc = octet_states();
  const LogicalState st =
      encode(Complex(0.3, 0.5), Complex(0.7, 0.1), random_gauge(11), enc);
  const NoiseTrajectory a = run_trajectory(st, enc, 20, 777);
  const NoiseTrajectory b = run_trajectory(st, enc, 20, 777);
  for (std::size_t k = 0; k < a.record.size(); ++k) {
    CHECK(a.record[k].p0 == b.record[k].p0);  // bit-identical
    CHECK(max_abs(a.record[k].octet0_overlap - b.record[k].octet0_overlap) ==
          0.0);
  }
}

TEST_CASE("a single-site control perturbation leaks") {
  const DfsEncoding enc = octet_states();
  const LogicalState st =
      encode(Complex(0.6, 0.0), Complex(0.0, 0.8), random_gauge(21), enc);
  const NoiseTrajectory traj = run_trajectory(st, enc, 10, 2718, 5);
  CHECK(traj.record[5].leak < 1e-10);   // still clean before the control hit
  CHECK(traj.record[6].leak > 0.01);    // measured ~0.1 for generic states
  CHECK(traj.record.back().leak > 0.01);
}

TEST_CASE("gate interleaved with noise still acts as the clean gate") {
  const GellMannBasis b = generate_basis(3);
  const DfsEncoding enc = octet_states();
  const LogicalState st =
      encode(Complex(0.9, 0.1), Complex(0.2, -0.38), random_gauge(33), enc);
  const double t = 1.234;
  const Matrix gate = u_xbar(b, t);

  const Populations clean = logical_populations(gate * st.vector, enc);
  Vector psi = st.vector;
  psi = random_collective_unitary(3, 3, 404) * psi;
  psi = gate * psi;
  psi = random_collective_unitary(3, 3, 405) * psi;
  const Populations noisy = logical_populations(psi, enc);
  CHECK(std::abs(noisy.p0 - clean.p0) < 1e-9);
  CHECK(std::abs(noisy.p1 - clean.p1) < 1e-9);
  CHECK(std::abs(noisy.leak) < 1e-9);
}

TEST_CASE("n-qudit compatibility sweep") {
  const GellMannBasis b = generate_basis(3);
  const CompatReport rep = verify_n_qudit_compat(b, 4, 1e-11);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-11);
  // C(4,2) exchanges + 2 * C(4,3) triples
  CHECK(rep.entries.size() == 6 + 8);
  bool found_f013 = false, found_d023 = false;
  for (const CompatEntry& e : rep.entries) {
    if (e.name == "F_013") found_f013 = e.residual < 1e-11;
    if (e.name == "D_023") found_d023 = e.residual < 1e-11;
  }
  CHECK(found_f013);
  CHECK(found_d023);

  CHECK_THROWS_AS(verify_n_qudit_compat(b, 7, 1e-11), std::invalid_argument);
}

TEST_SUITE_END();
