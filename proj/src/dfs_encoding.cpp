#include "dfskit/dfs_encoding.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "dfskit/compat_search.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/operator_core.hpp"

namespace dfskit {

namespace {

// |abc⟩ with site 0 leftmost, qutrit levels 0..2.
int ket(int a, int b, int c) { return a * 9 + b * 3 + c; }

Vector state(std::initializer_list<std::pair<int, double>> terms,
             double norm) {
  Vector v = Vector::Zero(27);
  for (const auto& [idx, w] : terms) v[idx] = w;
  return v / norm;
}

}  // namespace

Matrix DfsEncoding::complement() const {
  Matrix w(27, 11);
  w.col(0) = singlet.col(0);
  w.rightCols(10) = decuplet;
  return w;
}

Matrix DfsEncoding::projector_octet0() const { return octet0 * octet0.adjoint(); }
Matrix DfsEncoding::projector_octet1() const { return octet1 * octet1.adjoint(); }
Matrix DfsEncoding::projector_complement() const {
  const Matrix w = complement();
  return w * w.adjoint();
}

DfsEncoding octet_states() {
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  const double s12 = std::sqrt(12.0);

  DfsEncoding enc;
  enc.octet0.resize(27, 8);
  enc.octet0.col(0) = state({{ket(2, 0, 0), 1}, {ket(0, 2, 0), -1}}, s2);
  enc.octet0.col(1) = state({{ket(1, 0, 0), 1}, {ket(0, 1, 0), -1}}, s2);
  enc.octet0.col(2) = state({{ket(0, 1, 1), 1}, {ket(1, 0, 1), -1}}, s2);
  enc.octet0.col(3) = state({{ket(2, 1, 1), 1}, {ket(1, 2, 1), -1}}, s2);
  enc.octet0.col(4) = state({{ket(1, 2, 2), 1}, {ket(2, 1, 2), -1}}, s2);
  enc.octet0.col(5) = state({{ket(0, 2, 2), 1}, {ket(2, 0, 2), -1}}, s2);
  enc.octet0.col(6) = state({{ket(0, 2, 1), -1},
                             {ket(1, 2, 0), -1},
                             {ket(2, 0, 1), 1},
                             {ket(2, 1, 0), 1}},
                            2.0);
  enc.octet0.col(7) = state({{ket(0, 1, 2), 2},
                             {ket(0, 2, 1), 1},
                             {ket(1, 0, 2), -2},
                             {ket(1, 2, 0), -1},
                             {ket(2, 0, 1), -1},
                             {ket(2, 1, 0), 1}},
                            s12);

  enc.octet1.resize(27, 8);
  enc.octet1.col(0) =
      state({{ket(0, 0, 2), -2}, {ket(0, 2, 0), 1}, {ket(2, 0, 0), 1}}, s6);
  enc.octet1.col(1) =
      state({{ket(0, 0, 1), -2}, {ket(0, 1, 0), 1}, {ket(1, 0, 0), 1}}, s6);
  enc.octet1.col(2) =
      state({{ket(1, 1, 0), -2}, {ket(0, 1, 1), 1}, {ket(1, 0, 1), 1}}, s6);
  enc.octet1.col(3) =
      state({{ket(1, 1, 2), -2}, {ket(1, 2, 1), 1}, {ket(2, 1, 1), 1}}, s6);
  enc.octet1.col(4) =
      state({{ket(2, 2, 1), -2}, {ket(1, 2, 2), 1}, {ket(2, 1, 2), 1}}, s6);
  enc.octet1.col(5) =
      state({{ket(2, 2, 0), -2}, {ket(0, 2, 2), 1}, {ket(2, 0, 2), 1}}, s6);
  enc.octet1.col(6) = state({{ket(0, 1, 2), -2},
                             {ket(0, 2, 1), 1},
                             {ket(1, 0, 2), -2},
                             {ket(1, 2, 0), 1},
                             {ket(2, 0, 1), 1},
                             {ket(2, 1, 0), 1}},
                            s12);
  enc.octet1.col(7) = state({{ket(0, 2, 1), 1},
                             {ket(1, 2, 0), -1},
                             {ket(2, 0, 1), 1},
                             {ket(2, 1, 0), -1}},
                            2.0);

  // Orthogonal complement of the sixteen octet vectors, then the
  // singlet/decuplet split by collective-Casimir eigenvalue (the singlet is
  // annihilated by every S_alpha, so it sits in the lowest eigenspace).
  const Matrix proj = enc.projector_octet0() + enc.projector_octet1();
  Eigen::SelfAdjointEigenSolver<Matrix> es(proj);
  const Matrix w = es.eigenvectors().leftCols(11);

  const GellMannBasis basis = generate_basis(3);
  const auto gens = collective_generators(basis, 3);
  Matrix casimir = Matrix::Zero(27, 27);
  for (const Matrix& s : gens) casimir += s * s;
  Eigen::SelfAdjointEigenSolver<Matrix> cs(w.adjoint() * casimir * w);
  const Matrix rotated = w * cs.eigenvectors();
  enc.singlet = rotated.leftCols(1);
  enc.decuplet = rotated.rightCols(10);
  return enc;
}

std::vector<CasimirBlock> casimir_decompose(const GellMannBasis& basis,
                                            int n) {
  const int d = basis.dim();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  if (dim > 1024)
    throw std::invalid_argument("casimir_decompose: d^n exceeds 1024");

  const auto gens = collective_generators(basis, n);
  Matrix casimir = Matrix::Zero(dim, dim);
  for (const Matrix& s : gens) casimir += s * s;
  Eigen::SelfAdjointEigenSolver<Matrix> es(casimir);
  const RealVector evals = es.eigenvalues();
  const double scale = std::max(1.0, std::abs(evals[dim - 1]));

  // Generic commutant element: an irrationally weighted exchange sum, whose
  // restriction to an isotypic component has each eigenvalue d_J-fold
  // degenerate.
  Matrix generic = Matrix::Zero(dim, dim);
  double prime = 2.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      generic += std::sqrt(prime) * exchange_hamiltonian(basis, p, q, n);
      prime += 1.0;
    }

  std::vector<CasimirBlock> out;
  Eigen::Index start = 0;
  while (start < dim) {
    Eigen::Index stop = start + 1;
    while (stop < dim && evals[stop] - evals[start] < 1e-8 * scale) ++stop;
    const Eigen::Index m = stop - start;
    const Matrix vc = es.eigenvectors().middleCols(start, m);

    CasimirBlock block;
    block.eigenvalue = evals.segment(start, m).mean();
    Eigen::SelfAdjointEigenSolver<Matrix> bs(vc.adjoint() * generic * vc);
    block.vectors = vc * bs.eigenvectors();
    const RealVector mu = bs.eigenvalues();
    const double mscale = std::max(1.0, max_abs(mu));
    Eigen::Index bstart = 0;
    while (bstart < m) {
      Eigen::Index bstop = bstart + 1;
      while (bstop < m && mu[bstop] - mu[bstart] < 1e-8 * mscale) ++bstop;
      block.block_dims.push_back(static_cast<int>(bstop - bstart));
      bstart = bstop;
    }
    out.push_back(std::move(block));
    start = stop;
  }
  return out;
}

LogicalState encode(Complex a, Complex b, const Vector& gauge,
                    const DfsEncoding& enc) {
  if (gauge.size() != 8)
    throw std::invalid_argument("encode: gauge must have 8 weights");
  const double amp = std::sqrt(std::norm(a) + std::norm(b));
  const double gn = gauge.norm();
  if (amp == 0.0 || gn == 0.0)
    throw std::invalid_argument("encode: zero amplitudes or gauge");

  LogicalState st;
  st.a = a / amp;
  st.b = b / amp;
  st.gauge = gauge / gn;
  st.vector = st.a * (enc.octet0 * st.gauge) + st.b * (enc.octet1 * st.gauge);
  return st;
}

Populations logical_populations(const Vector& state, const DfsEncoding& enc) {
  if (state.size() != 27)
    throw std::invalid_argument("logical_populations: state must be 27-dim");
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("logical_populations: state not normalized");
  Populations p;
  p.p0 = (enc.octet0.adjoint() * state).squaredNorm();
  p.p1 = (enc.octet1.adjoint() * state).squaredNorm();
  p.leak = 1.0 - p.p0 - p.p1;
  return p;
}

BlockReport block_report(const Matrix& a, const DfsEncoding& enc) {
  if (a.rows() != 27 || a.cols() != 27)
    throw std::invalid_argument("block_report: operator must be 27x27");
  BlockReport rep;
  rep.m0 = enc.octet0.adjoint() * a * enc.octet0;
  rep.m1 = enc.octet1.adjoint() * a * enc.octet1;
  rep.cross = enc.octet0.adjoint() * a * enc.octet1;
  rep.cross_max = std::max(max_abs(rep.cross),
                           max_abs(enc.octet1.adjoint() * a * enc.octet0));
  const Matrix w = enc.complement();
  rep.leak_max = std::max({max_abs(w.adjoint() * a * enc.octet0),
                           max_abs(w.adjoint() * a * enc.octet1),
                           max_abs(enc.octet0.adjoint() * a * w),
                           max_abs(enc.octet1.adjoint() * a * w)});
  rep.block_diff = max_abs(rep.m0 - rep.m1);
  return rep;
}

}  // namespace dfskit
