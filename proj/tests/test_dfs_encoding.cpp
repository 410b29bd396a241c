#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "dfskit/compat_search.hpp"
#include "dfskit/dfs_encoding.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/noise_sim.hpp"
#include "dfskit/operator_core.hpp"

using namespace dfskit;

namespace {

int ket(int a, int b, int c) { return a * 9 + b * 3 + c; }

Vector random_gauge(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(8);
  for (int i = 0; i < 8; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("dfs_encoding");

TEST_CASE("transcribed octet entries") {
  const DfsEncoding enc = octet_states();
  const double s2 = 1.0 / std::sqrt(2.0);

  // psi_1^{8,0} = (|200> - |020>)/sqrt(2)
  Vector v = enc.octet0.col(0);
  CHECK(v[ket(2, 0, 0)] == Complex(s2, 0));
  CHECK(v[ket(0, 2, 0)] == Complex(-s2, 0));
  CHECK(v.cwiseAbs().sum() == doctest::Approx(2 * s2));

  // psi_8^{8,1} = (|021> - |120> + |201> - |210>)/2
  v = enc.octet1.col(7);
  CHECK(v[ket(0, 2, 1)] == Complex(0.5, 0));
  CHECK(v[ket(1, 2, 0)] == Complex(-0.5, 0));
  CHECK(v[ket(2, 0, 1)] == Complex(0.5, 0));
  CHECK(v[ket(2, 1, 0)] == Complex(-0.5, 0));
}

TEST_CASE("all 27 encoding vectors are orthonormal") {
  const DfsEncoding enc = octet_states();
  Matrix all(27, 27);
  all.leftCols(8) = enc.octet0;
  all.middleCols(8, 8) = enc.octet1;
  all.rightCols(11) = enc.complement();
  CHECK(max_abs(all.adjoint() * all - Matrix::Identity(27, 27)) < 1e-12);
}

TEST_CASE("projectors resolve the identity") {
  const DfsEncoding enc = octet_states();
  const Matrix sum = enc.projector_octet0() + enc.projector_octet1() +
                     enc.projector_complement();
  CHECK(max_abs(sum - Matrix::Identity(27, 27)) < 1e-12);
}

TEST_CASE("collective generators act identically on both octets") {
  const DfsEncoding enc = octet_states();
  const auto gens = collective_generators(generate_basis(3), 3);
  for (const Matrix& s : gens) {
    const BlockReport rep = block_report(s, enc);
    CHECK(rep.cross_max < 1e-11);
    CHECK(rep.block_diff < 1e-11);
    CHECK(rep.leak_max < 1e-11);
    CHECK(is_hermitian(rep.m0, 1e-11));
  }
}

TEST_CASE("casimir decomposition dims: 1 + 8 + 8 + 10 for qutrits") {
  const auto blocks = casimir_decompose(generate_basis(3), 3);
  REQUIRE(blocks.size() == 3);
  CHECK(std::abs(blocks[0].eigenvalue) < 1e-10);  // singlet is annihilated
  CHECK(blocks[0].block_dims == std::vector<int>{1});
  CHECK(blocks[1].block_dims == std::vector<int>{8, 8});
  CHECK(blocks[2].block_dims == std::vector<int>{10});
}

TEST_CASE("casimir decomposition dims: 2 + 2 + 4 for qubits") {
  const auto blocks = casimir_decompose(generate_basis(2), 3);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].block_dims == std::vector<int>{2, 2});
  CHECK(blocks[1].block_dims == std::vector<int>{4});
}

TEST_CASE("octets are reproduced from the casimir + commutant structure") {
  // Split the 16-dim eigenspace by the sign of the logical Z, resolve the
  // gauge index with collective isospin + Cartan labels, then match each
  // vector against the transcription up to a per-vector phase.
  const GellMannBasis b = generate_basis(3);
  const DfsEncoding enc = octet_states();
  const auto blocks = casimir_decompose(b, 3);
  const Matrix& sixteen = blocks[1].vectors;
  REQUIRE(sixteen.cols() == 16);

  const Matrix z = zbar(b);
  const auto gens = collective_generators(b, 3);
  const Matrix tsq =
      gens[0] * gens[0] + gens[1] * gens[1] + gens[2] * gens[2];
  // weights spread the eight (t, t3, y) labels apart
  const Matrix labels = tsq + std::sqrt(2.0) * gens[2] +
                        std::sqrt(5.0) * gens[7];

  // the commutant element Z splits the eigenspace into the two blocks
  Eigen::SelfAdjointEigenSolver<Matrix> zs(sixteen.adjoint() * z * sixteen);
  for (int i = 0; i < 8; ++i) {
    CHECK(zs.eigenvalues()[i] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(zs.eigenvalues()[8 + i] == doctest::Approx(1.0).epsilon(1e-10));
  }
  const Matrix rotated = sixteen * zs.eigenvectors();

  for (int half = 0; half < 2; ++half) {
    const Matrix sub = rotated.middleCols(half * 8, 8);
    const Matrix& expected = (half == 0) ? enc.octet1 : enc.octet0;

    Eigen::SelfAdjointEigenSolver<Matrix> es(sub.adjoint() * labels * sub);
    // label spectrum must be non-degenerate for the matching to be honest
    for (int i = 0; i + 1 < 8; ++i)
      CHECK(es.eigenvalues()[i + 1] - es.eigenvalues()[i] > 1e-6);
    const Matrix resolved = sub * es.eigenvectors();
    std::array<bool, 8> used{};
    for (int j = 0; j < 8; ++j) {
      bool matched = false;
      for (int k = 0; k < 8; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        const double overlap =
            std::abs(expected.col(k).dot(resolved.col(j)));
        if (overlap > 1.0 - 1e-10) {
          used[static_cast<std::size_t>(k)] = true;
          matched = true;
          break;
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("encode: pinned states and populations") {
  const DfsEncoding enc = octet_states();

  Vector hot = Vector::Zero(8);
  hot[0] = 1.0;
  const LogicalState s1 = encode(1.0, 0.0, hot, enc);
  CHECK(max_abs(s1.vector - enc.octet0.col(0)) < 1e-15);

  const Vector uniform = Vector::Constant(8, Complex(1.0, 0.0));
  const LogicalState s2 =
      encode(Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0)),
             uniform, enc);
  CHECK(s2.vector.norm() == doctest::Approx(1.0).epsilon(1e-13));

  const LogicalState s3 = encode(0.6, Complex(0, 0.8), random_gauge(3), enc);
  const Populations p = logical_populations(s3.vector, enc);
  CHECK(p.p0 == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(p.p1 == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(std::abs(p.leak) < 1e-12);

  CHECK_THROWS_AS(encode(0.0, 0.0, hot, enc), std::invalid_argument);
  CHECK_THROWS_AS(encode(1.0, 0.0, Vector::Zero(8), enc),
                  std::invalid_argument);
}

TEST_CASE("logical populations: pinned cases and validation") {
  const DfsEncoding enc = octet_states();

  const Populations p1 = logical_populations(enc.octet1.col(2), enc);
  CHECK(p1.p0 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(p1.p1 == doctest::Approx(1.0).epsilon(1e-13));

  // |000> is symmetric, hence entirely in the decuplet
  Vector sym = Vector::Zero(27);
  sym[ket(0, 0, 0)] = 1.0;
  const Populations p2 = logical_populations(sym, enc);
  CHECK(p2.p0 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p2.p1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p2.leak == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(logical_populations(2.0 * sym, enc), std::invalid_argument);
}

TEST_CASE("block report pinned forms") {
  const DfsEncoding enc = octet_states();
  const GellMannBasis b = generate_basis(3);

  const BlockReport ri = block_report(Matrix::Identity(27, 27), enc);
  CHECK(max_abs(ri.m0 - Matrix::Identity(8, 8)) < 1e-13);
  CHECK(max_abs(ri.m1 - Matrix::Identity(8, 8)) < 1e-13);
  CHECK(ri.cross_max < 1e-13);
  CHECK(ri.leak_max < 1e-13);

  // logical X: vanishing within-block action, identity across blocks
  const BlockReport rx = block_report(xbar(b), enc);
  CHECK(max_abs(rx.m0) < 1e-12);
  CHECK(max_abs(rx.m1) < 1e-12);
  CHECK(max_abs(rx.cross - Matrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("collective unitaries preserve populations and gauge structure") {
  const DfsEncoding enc = octet_states();
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Matrix u = random_collective_unitary(3, 3, 1000 + s);
    for (std::uint64_t k = 0; k < 20; ++k) {
      const LogicalState st =
          encode(Complex(0.3, 0.04 * k), Complex(0.8, -0.1),
                 random_gauge(50 + 20 * s + k), enc);
      const Populations before = logical_populations(st.vector, enc);
      const Populations after = logical_populations(u * st.vector, enc);
      worst = std::max({worst, std::abs(after.p0 - before.p0),
                        std::abs(after.p1 - before.p1),
                        std::abs(after.leak)});
    }
  }
  CHECK(worst < 1e-10);
}

TEST_SUITE_END();
