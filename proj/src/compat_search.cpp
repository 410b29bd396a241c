#include "dfskit/compat_search.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfskit {

std::vector<Matrix> collective_generators(const GellMannBasis& basis, int n) {
  if (n < 2)
    throw std::invalid_argument("collective_generators: requires n >= 2");
  const int d = basis.dim();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  std::vector<Matrix> out;
  out.reserve(basis.count());
  for (int alpha = 1; alpha <= basis.count(); ++alpha) {
    Matrix s = Matrix::Zero(dim, dim);
    for (int site = 0; site < n; ++site) {
      Matrix term = Matrix::Identity(1, 1);
      for (int r = 0; r < n; ++r)
        term = kron(term, r == site ? basis.op(alpha) : basis.op(0));
      s += term;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::map<std::string, Matrix> known_hamiltonians(const GellMannBasis& basis) {
  const int d = basis.dim();
  const int nb = basis.count();
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
  const Matrix id = basis.op(0);

  Matrix e1 = Matrix::Zero(dim, dim);
  Matrix e2 = Matrix::Zero(dim, dim);
  Matrix e3 = Matrix::Zero(dim, dim);
  for (int i = 1; i <= nb; ++i) {
    const Matrix& l = basis.op(i);
    e1 += kron(id, kron(l, l));
    e2 += kron(l, kron(id, l));
    e3 += kron(kron(l, l), id);
  }

  const StructureTensors t = structure_constants(basis);
  Matrix fham = Matrix::Zero(dim, dim);
  Matrix dham = Matrix::Zero(dim, dim);
  for (const auto& [triple, value] : t.f_entries()) {
    // Expand the canonical triple over its six permutations.
    const auto [i, j, k] = triple;
    const Matrix mij = kron(basis.op(i), kron(basis.op(j), basis.op(k))) -
                       kron(basis.op(i), kron(basis.op(k), basis.op(j))) +
                       kron(basis.op(j), kron(basis.op(k), basis.op(i))) -
                       kron(basis.op(j), kron(basis.op(i), basis.op(k))) +
                       kron(basis.op(k), kron(basis.op(i), basis.op(j))) -
                       kron(basis.op(k), kron(basis.op(j), basis.op(i)));
    fham += value * mij;
  }
  for (const auto& [triple, value] : t.dsym_entries()) {
    const auto [i, j, k] = triple;
    std::vector<std::array<int, 3>> perms = {{i, j, k}, {i, k, j}, {j, i, k},
                                             {j, k, i}, {k, i, j}, {k, j, i}};
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    for (const auto& p : perms)
      dham += value * kron(basis.op(p[0]), kron(basis.op(p[1]), basis.op(p[2])));
  }

  return {{"e1", std::move(e1)}, {"e2", std::move(e2)}, {"e3", std::move(e3)},
          {"F", std::move(fham)}, {"D", std::move(dham)}};
}

ConstraintSystem build_constraint_system(const GellMannBasis& basis, int n) {
  if (n < 2)
    throw std::invalid_argument("build_constraint_system: requires n >= 2");
  const int d = basis.dim();
  const int nb = basis.count();
  const StructureTensors tensors = structure_constants(basis);

  std::size_t m = 1;
  for (int i = 0; i < n; ++i) m *= static_cast<std::size_t>(d) * d;
  const int cols = static_cast<int>(m);

  // partners[alpha-1][j-1]: all (i, f_{i,alpha,j}) with a nonzero entry.
  std::vector<std::vector<std::vector<std::pair<int, double>>>> partners(
      nb, std::vector<std::vector<std::pair<int, double>>>(nb));
  for (int alpha = 1; alpha <= nb; ++alpha)
    for (int j = 1; j <= nb; ++j)
      for (int i = 1; i <= nb; ++i) {
        const double v = tensors.f(i, alpha, j);
        if (v != 0.0) partners[alpha - 1][j - 1].push_back({i, v});
      }

  // Row (alpha, b), column t = b with slot r replaced: coefficient
  // f_{t_r, alpha, b_r}.  Slots with b_r = 0 contribute nothing.
  std::vector<Eigen::Triplet<double>> trips;
  const int base = d * d;
  std::vector<int> tuple(n);
  std::vector<int> place(n);  // base^(n-1-s), stride of slot s
  place[n - 1] = 1;
  for (int s = n - 2; s >= 0; --s) place[s] = place[s + 1] * base;

  for (int alpha = 1; alpha <= nb; ++alpha) {
    for (int b = 0; b < cols; ++b) {
      int rem = b;
      for (int s = 0; s < n; ++s) {
        tuple[s] = rem / place[s];
        rem %= place[s];
      }
      const int rowidx = (alpha - 1) * cols + b;
      for (int s = 0; s < n; ++s) {
        const int br = tuple[s];
        if (br == 0) continue;
        for (const auto& [i, v] : partners[alpha - 1][br - 1]) {
          const int col = b + (i - br) * place[s];
          trips.emplace_back(rowidx, col, v);
        }
      }
    }
  }

  ConstraintSystem sys;
  sys.d = d;
  sys.n = n;
  sys.rows.resize(static_cast<Eigen::Index>(nb) * cols, cols);
  sys.rows.setFromTriplets(trips.begin(), trips.end());
  return sys;
}

namespace {

// Modified Gram-Schmidt, in place on the columns of v.
void orthonormalize(RealMatrix& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i)
      v.col(j) -= v.col(i).dot(v.col(j)) * v.col(i);
    const double norm = v.col(j).norm();
    if (norm > 0.0) v.col(j) /= norm;
  }
}

}  // namespace

CommutantBasis commutant_basis(const ConstraintSystem& system,
                               double tolerance) {
  const int cols = static_cast<int>(system.rows.cols());
  RealVector sigma;
  RealMatrix v;  // right singular vectors, columns
  double effective_tol = tolerance;

  if (cols <= 1000) {
    const RealMatrix dense(system.rows);
    Eigen::BDCSVD<RealMatrix> svd(dense, Eigen::ComputeThinV);
    sigma = svd.singularValues();
    v = svd.matrixV();
  } else {
    // Gram path for the big optional searches: σ = √eig(RᵀR).  Squared
    // singular values are resolved only to ~eps·λ_max, so the threshold is
    // floored at √eps relative.
    const RealMatrix gram =
        (RealMatrix(system.rows.transpose() * system.rows));
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
    sigma.resize(cols);
    v.resize(cols, cols);
    // Reverse to descending σ order.
    for (int i = 0; i < cols; ++i) {
      const double lambda = std::max(es.eigenvalues()[cols - 1 - i], 0.0);
      sigma[i] = std::sqrt(lambda);
      v.col(i) = es.eigenvectors().col(cols - 1 - i);
    }
    effective_tol = std::max(tolerance, 1e-7);
  }

  const double smax = sigma.size() > 0 ? sigma[0] : 0.0;
  const double cut = effective_tol * smax;
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > cut) ++rank;

  CommutantBasis out;
  out.d = system.d;
  out.n = system.n;
  out.singular_values = sigma;
  out.includes_identity = true;
  if (rank > 0 && rank < sigma.size()) {
    const double kept = sigma[rank - 1];        // smallest kept
    const double discarded = sigma[rank];       // largest discarded
    out.spectral_gap = discarded > 0.0
                           ? kept / discarded
                           : std::numeric_limits<double>::infinity();
  } else {
    out.spectral_gap = std::numeric_limits<double>::infinity();
  }
  out.gap_ok = out.spectral_gap >= 1e3;

  RealMatrix null = v.rightCols(cols - rank);
  orthonormalize(null);
  for (Eigen::Index j = 0; j < null.cols(); ++j) {
    CoeffTensor c(system.d, system.n);
    c.flat() = null.col(j);
    out.elements.push_back(std::move(c));
  }
  return out;
}

MatchReport match_against_known(const CommutantBasis& found,
                                const std::map<std::string, Matrix>& known,
                                const GellMannBasis& basis) {
  MatchReport rep;
  if (found.elements.empty()) return rep;
  const int cols = found.elements.front().tuple_count();
  const int nk = static_cast<int>(known.size()) + 1;

  RealMatrix k(cols, nk);
  rep.known_names.push_back("identity");
  CoeffTensor ident(found.d, found.n);
  ident.flat()[0] = 1.0;
  k.col(0) = ident.flat();
  int j = 1;
  for (const auto& [name, op] : known) {
    rep.known_names.push_back(name);
    k.col(j++) = coeff_expand(op, basis, found.n).flat();
  }

  const Eigen::ColPivHouseholderQR<RealMatrix> qr(k);
  rep.change_of_basis.resize(static_cast<int>(found.elements.size()), nk);
  for (std::size_t e = 0; e < found.elements.size(); ++e) {
    const RealVector& target = found.elements[e].flat();
    const RealVector coeffs = qr.solve(target);
    rep.change_of_basis.row(static_cast<int>(e)) = coeffs.transpose();
    rep.residuals.push_back(max_abs(k * coeffs - target));
  }
  return rep;
}

double compatibility_residual(const StructureTensors& tensors,
                              const std::vector<double>& a) {
  const int n = tensors.dim() * tensors.dim() - 1;
  if (a.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("compatibility_residual: bad tensor size");
  // fp[(x*n + z)*n + y] = f(x, y, z): contiguous in the summed index
  std::vector<double> fp(a.size());
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        fp[(static_cast<std::size_t>(x - 1) * n + (z - 1)) * n + (y - 1)] =
            tensors.f(x, y, z);
  auto frow = [&](int x, int z) {
    return fp.data() + (static_cast<std::size_t>(x) * n + z) * n;
  };
  auto arow = [&](int x, int y) {
    return a.data() + (static_cast<std::size_t>(x) * n + y) * n;
  };
  auto dot = [n](const double* x, const double* y) {
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += x[l] * y[l];
    return s;
  };
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          const double s = dot(frow(i, m), arow(j, k)) +
                           dot(frow(j, m), arow(k, i)) +
                           dot(frow(k, m), arow(i, j));
          r = std::max(r, std::abs(s));
        }
  return r;
}

}  // namespace dfskit
