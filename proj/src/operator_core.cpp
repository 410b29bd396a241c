#include "dfskit/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dfskit {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron(std::span<const Matrix> factors) {
  if (factors.empty()) throw std::invalid_argument("kron: empty factor list");
  Matrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

Matrix mu(const GellMannBasis& basis, std::span<const int> indices) {
  if (indices.empty()) throw std::invalid_argument("mu: empty index list");
  const int top = basis.dim() * basis.dim() - 1;
  for (int idx : indices)
    if (idx < 0 || idx > top)
      throw std::invalid_argument("mu: index out of range");
  Matrix out = basis.op(indices[0]);
  for (std::size_t i = 1; i < indices.size(); ++i)
    out = kron(out, basis.op(indices[i]));
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("anticommutator: dimension mismatch");
  return a * b + b * a;
}

Matrix expm_hermitian(const Matrix& h, double t) {
  if (!is_hermitian(h, 1e-10))
    throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  const Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Vector phases =
      (Complex(0.0, -t) * es.eigenvalues().cast<Complex>().array())
          .exp()
          .matrix();
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix haar_unitary(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("haar_unitary: requires d >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases of R to make the distribution Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double m = std::abs(rjj);
    q.col(j) *= (m > 0.0) ? rjj / m : Complex(1.0, 0.0);
  }
  return q;
}

CoeffTensor::CoeffTensor(int d, int n) : d_(d), n_(n) {
  if (d < 2 || n < 1)
    throw std::invalid_argument("CoeffTensor: requires d >= 2, n >= 1");
  std::size_t m = 1;
  for (int i = 0; i < n; ++i) m *= static_cast<std::size_t>(d) * d;
  flat_ = RealVector::Zero(static_cast<Eigen::Index>(m));
}

int CoeffTensor::flat_index(std::span<const int> tuple, int d) {
  const int base = d * d;
  int idx = 0;
  for (int v : tuple) {
    if (v < 0 || v >= base)
      throw std::invalid_argument("CoeffTensor: tuple index out of range");
    idx = idx * base + v;
  }
  return idx;
}

double CoeffTensor::coeff(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != n_)
    throw std::invalid_argument("CoeffTensor: tuple length mismatch");
  return flat_[flat_index(tuple, d_)];
}

void CoeffTensor::set_coeff(std::span<const int> tuple, double value) {
  if (static_cast<int>(tuple.size()) != n_)
    throw std::invalid_argument("CoeffTensor: tuple length mismatch");
  flat_[flat_index(tuple, d_)] = value;
}

std::vector<int> CoeffTensor::tuple_at(int flat_index) const {
  const int base = d_ * d_;
  std::vector<int> t(n_);
  for (int s = n_ - 1; s >= 0; --s) {
    t[s] = flat_index % base;
    flat_index /= base;
  }
  return t;
}

namespace {

struct SparseEntry {
  int row, col;
  Complex value;
};

// Nonzero entries of every basis operator, for kron-factorized traces.
std::vector<std::vector<SparseEntry>> op_entries(const GellMannBasis& basis) {
  const int base = basis.dim() * basis.dim();
  std::vector<std::vector<SparseEntry>> out(base);
  for (int idx = 0; idx < base; ++idx) {
    const Matrix& m = basis.op(idx);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (std::abs(m(r, c)) > 0.0) out[idx].push_back({r, c, m(r, c)});
  }
  return out;
}

// Tr(H μ_t) = Σ H(x, y) μ(y, x) over the nonzero μ entries, built slot by
// slot without materializing μ.
Complex mu_trace(const Matrix& h,
                 const std::vector<std::vector<SparseEntry>>& entries,
                 std::span<const int> tuple, int d) {
  struct Frame {
    int x = 0, y = 0;
    Complex w{1.0, 0.0};
  };
  Complex total(0.0, 0.0);
  const int n = static_cast<int>(tuple.size());
  std::vector<std::size_t> pos(n, 0);
  std::vector<Frame> stack(n + 1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) {
      total += stack[n].w * h(stack[n].x, stack[n].y);
      --depth;
      continue;
    }
    const auto& list = entries[tuple[depth]];
    if (pos[depth] >= list.size()) {
      pos[depth] = 0;
      --depth;
      continue;
    }
    const SparseEntry& e = list[pos[depth]++];
    // μ entry (y, x): trace pairs H(x, y) with μ(y, x).
    stack[depth + 1].x = stack[depth].x * d + e.col;
    stack[depth + 1].y = stack[depth].y * d + e.row;
    stack[depth + 1].w = stack[depth].w * e.value;
    ++depth;
  }
  return total;
}

}  // namespace

CoeffTensor coeff_expand(const Matrix& h, const GellMannBasis& basis, int n) {
  const int d = basis.dim();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  if (h.rows() != dim || h.cols() != dim)
    throw std::invalid_argument("coeff_expand: dimension mismatch");

  const auto entries = op_entries(basis);
  CoeffTensor out(d, n);
  for (int t = 0; t < out.tuple_count(); ++t) {
    const std::vector<int> tuple = out.tuple_at(t);
    double norm = 1.0;
    for (int idx : tuple) norm *= (idx == 0) ? d : 2.0;
    const Complex tr = mu_trace(h, entries, tuple, d) / norm;
    if (std::abs(tr.imag()) >= 1e-12)
      throw std::invalid_argument("coeff_expand: non-real coefficient");
    out.flat()[t] = tr.real();
  }
  return out;
}

Matrix reconstruct_operator(const CoeffTensor& coeffs,
                            const GellMannBasis& basis) {
  const int d = coeffs.dim();
  Eigen::Index dim = 1;
  for (int i = 0; i < coeffs.sites(); ++i) dim *= d;
  Matrix out = Matrix::Zero(dim, dim);
  for (int t = 0; t < coeffs.tuple_count(); ++t) {
    const double a = coeffs.flat()[t];
    if (a == 0.0) continue;
    out += a * mu(basis, coeffs.tuple_at(t));
  }
  return out;
}

}  // namespace dfskit
