#include "dfskit/logical_gates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dfskit/operator_core.hpp"

namespace dfskit {

namespace {

void validate_sites(std::span<const int> sites, int n) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= n)
      throw std::invalid_argument("site index out of range");
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j])
        throw std::invalid_argument("site indices must be distinct");
  }
}

// Two-site Σ_i λ_i ⊗ λ_i.
Matrix exchange_kernel(const GellMannBasis& basis) {
  const int d = basis.dim();
  Matrix h = Matrix::Zero(d * d, d * d);
  for (int i = 1; i <= basis.count(); ++i)
    h += kron(basis.op(i), basis.op(i));
  return h;
}

}  // namespace

Matrix embed_sites(const Matrix& op, std::span<const int> sites, int d,
                   int n) {
  validate_sites(sites, n);
  const int k = static_cast<int>(sites.size());
  Eigen::Index opdim = 1;
  for (int i = 0; i < k; ++i) opdim *= d;
  if (op.rows() != opdim || op.cols() != opdim)
    throw std::invalid_argument("embed_sites: operator/site count mismatch");

  std::vector<Eigen::Index> place(n);  // stride of each site's digit
  place[n - 1] = 1;
  for (int s = n - 2; s >= 0; --s) place[s] = place[s + 1] * d;

  std::vector<int> others;
  for (int s = 0; s < n; ++s)
    if (std::find(sites.begin(), sites.end(), s) == sites.end())
      others.push_back(s);

  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  Eigen::Index rest = 1;
  for (std::size_t i = 0; i < others.size(); ++i) rest *= d;

  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < opdim; ++r) {
    // digit t of r goes to sites[t], first listed most significant
    Eigen::Index rbase = 0, tmp = r;
    for (int t = k - 1; t >= 0; --t) {
      rbase += (tmp % d) * place[sites[t]];
      tmp /= d;
    }
    for (Eigen::Index c = 0; c < opdim; ++c) {
      const Complex v = op(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      Eigen::Index cbase = 0;
      tmp = c;
      for (int t = k - 1; t >= 0; --t) {
        cbase += (tmp % d) * place[sites[t]];
        tmp /= d;
      }
      for (Eigen::Index m = 0; m < rest; ++m) {
        Eigen::Index pad = 0, mm = m;
        for (int t = static_cast<int>(others.size()) - 1; t >= 0; --t) {
          pad += (mm % d) * place[others[t]];
          mm /= d;
        }
        out(rbase + pad, cbase + pad) += v;
      }
    }
  }
  return out;
}

Matrix exchange_hamiltonian(const GellMannBasis& basis, int p, int q, int n) {
  const std::array<int, 2> sites{p, q};
  return embed_sites(exchange_kernel(basis), sites, basis.dim(), n);
}

namespace {

Matrix triple_hamiltonian(const GellMannBasis& basis, int p, int q, int r,
                          int n, bool use_f) {
  const StructureTensors t = structure_constants(basis);
  const int d = basis.dim();
  const int nb = basis.count();
  Matrix h = Matrix::Zero(d * d * d, d * d * d);
  for (int i = 1; i <= nb; ++i)
    for (int j = 1; j <= nb; ++j)
      for (int k = 1; k <= nb; ++k) {
        const double v = use_f ? t.f(i, j, k) : t.dsym(i, j, k);
        if (v == 0.0) continue;
        h += v * kron(basis.op(i), kron(basis.op(j), basis.op(k)));
      }
  const std::array<int, 3> sites{p, q, r};
  return embed_sites(h, sites, d, n);
}

}  // namespace

Matrix f_triple_hamiltonian(const GellMannBasis& basis, int p, int q, int r,
                            int n) {
  return triple_hamiltonian(basis, p, q, r, n, true);
}

Matrix d_triple_hamiltonian(const GellMannBasis& basis, int p, int q, int r,
                            int n) {
  return triple_hamiltonian(basis, p, q, r, n, false);
}

Matrix xbar(const GellMannBasis& basis) {
  return (exchange_hamiltonian(basis, 1, 2, 3) -
          exchange_hamiltonian(basis, 0, 2, 3)) /
         (2.0 * std::sqrt(3.0));
}

Matrix zbar(const GellMannBasis& basis) {
  return (exchange_hamiltonian(basis, 1, 2, 3) +
          exchange_hamiltonian(basis, 0, 2, 3) -
          2.0 * exchange_hamiltonian(basis, 0, 1, 3)) /
         6.0;
}

Matrix ybar(const GellMannBasis& basis) {
  return f_triple_hamiltonian(basis, 0, 1, 2, 3) / (2.0 * std::sqrt(3.0));
}

Matrix u_xbar(const GellMannBasis& basis, double t) {
  const Matrix x = xbar(basis);
  const Eigen::Index dim = x.rows();
  return Matrix::Identity(dim, dim) + Complex(0.0, std::sin(t)) * x -
         (1.0 - std::cos(t)) * (x * x);
}

Matrix u_zbar(const GellMannBasis& basis, double t) {
  const Matrix z = zbar(basis);
  const Eigen::Index dim = z.rows();
  return Matrix::Identity(dim, dim) - Complex(0.0, std::sin(t)) * z -
         (1.0 - std::cos(t)) * (z * z);
}

Matrix euler_rotation(const GellMannBasis& basis, double alpha, double beta,
                      double gamma) {
  const Matrix x = xbar(basis);
  const Matrix z = zbar(basis);
  return expm_hermitian(z, alpha) * expm_hermitian(x, beta) *
         expm_hermitian(z, gamma);
}

Matrix q_kl(int d, int k, int l) {
  Matrix ekl = Matrix::Zero(d, d);
  ekl(k, l) = 1.0;
  Matrix elk = Matrix::Zero(d, d);
  elk(l, k) = 1.0;
  return kron(ekl, elk) + kron(elk, ekl);
}

Matrix r_kl(int d, int k, int l) {
  Matrix ekk = Matrix::Zero(d, d);
  ekk(k, k) = 1.0;
  Matrix ell = Matrix::Zero(d, d);
  ell(l, l) = 1.0;
  return kron(ekk, ell) + kron(ell, ekk);
}

Matrix u_kl(int d, int k, int l, double t) {
  return Matrix::Identity(d * d, d * d) -
         Complex(0.0, std::sin(2.0 * t)) * q_kl(d, k, l) +
         (std::cos(2.0 * t) - 1.0) * r_kl(d, k, l);
}

Matrix diagonal_exchange_exponential(int d, double t) {
  Matrix u = Matrix::Zero(d * d, d * d);
  const Complex same = std::exp(Complex(0.0, -2.0 * t * (d - 1) / d));
  const Complex diff = std::exp(Complex(0.0, 2.0 * t / d));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) u(m * d + n, m * d + n) = (m == n) ? same : diff;
  return u;
}

SwapDiagnostics swap_diagnostics(const GellMannBasis& basis) {
  const int d = basis.dim();
  SwapDiagnostics diag;
  diag.k = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) diag.k += q_kl(d, k, l);
  diag.ksq_diagonal = (diag.k * diag.k).diagonal().real();

  // ξ_{m,n} from the diagonal of Σ_{i∈diag} λ_i ⊗ λ_i
  Matrix dsum = Matrix::Zero(d * d, d * d);
  for (int idx : basis.diagonal_indices())
    dsum += kron(basis.op(idx), basis.op(idx));
  diag.xi.resize(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) diag.xi(m, n) = dsum(m * d + n, m * d + n).real();

  const Matrix u = exchange_unitary(basis, 0, 1, 2, std::numbers::pi / 4.0);
  diag.phase = u(1 * d + 0, 0 * d + 1);  // ⟨10|U|01⟩
  return diag;
}

Matrix exchange_unitary(const GellMannBasis& basis, int p, int q, int n,
                        double t) {
  const int d = basis.dim();
  Matrix u = diagonal_exchange_exponential(d, t);
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) u = u * u_kl(d, k, l, t);
  const std::array<int, 2> sites{p, q};
  return embed_sites(u, sites, d, n);
}

double CommutationTable::max_residual() const {
  double m = 0.0;
  for (const auto& [name, r] : residuals) m = std::max(m, r);
  return m;
}

CommutationTable verify_commutation_table(const GellMannBasis& basis) {
  const double d = basis.dim();
  const Matrix e1 = exchange_hamiltonian(basis, 1, 2, 3);
  const Matrix e2 = exchange_hamiltonian(basis, 0, 2, 3);
  const Matrix e3 = exchange_hamiltonian(basis, 0, 1, 3);
  const Matrix f = f_triple_hamiltonian(basis, 0, 1, 2, 3);
  const Matrix dh = d_triple_hamiltonian(basis, 0, 1, 2, 3);
  const Matrix id = Matrix::Identity(e1.rows(), e1.cols());
  const Complex i2(0.0, 2.0), i4(0.0, 4.0);

  CommutationTable tab;
  auto& res = tab.residuals;
  res["comm_e1_e2"] = max_abs(commutator(e1, e2) + i2 * f);
  res["comm_e1_e3"] = max_abs(commutator(e1, e3) - i2 * f);
  res["comm_e2_e3"] = max_abs(commutator(e2, e3) + i2 * f);
  res["comm_e1_F"] = max_abs(commutator(e1, f) - i4 * (e2 - e3));
  res["comm_e2_F"] = max_abs(commutator(e2, f) - i4 * (e3 - e1));
  res["comm_e3_F"] = max_abs(commutator(e3, f) - i4 * (e1 - e2));
  res["comm_e1_D"] = max_abs(commutator(e1, dh));
  res["comm_e2_D"] = max_abs(commutator(e2, dh));
  res["comm_e3_D"] = max_abs(commutator(e3, dh));
  res["comm_F_D"] = max_abs(commutator(f, dh));

  const double sq_id = 4.0 / (d * d) * (d * d - 1.0);
  res["sq_e1"] = max_abs(e1 * e1 - sq_id * id + (4.0 / d) * e1);
  res["sq_e2"] = max_abs(e2 * e2 - sq_id * id + (4.0 / d) * e2);
  res["sq_e3"] = max_abs(e3 * e3 - sq_id * id + (4.0 / d) * e3);

  const Complex i1(0.0, 1.0);
  res["prod_e1_e2"] = max_abs(e1 * e2 - (2.0 / d) * e3 + i1 * f - dh);
  res["prod_e1_e3"] = max_abs(e1 * e3 - (2.0 / d) * e2 - i1 * f - dh);
  res["prod_e2_e3"] = max_abs(e2 * e3 - (2.0 / d) * e1 + i1 * f - dh);

  const double cd = 2.0 * (d * d - 4.0) / (d * d);
  res["prod_e1_D"] = max_abs(e1 * dh - cd * (e2 + e3) + (6.0 / d) * dh);
  res["prod_e2_D"] = max_abs(e2 * dh - cd * (e3 + e1) + (6.0 / d) * dh);
  res["prod_e3_D"] = max_abs(e3 * dh - cd * (e1 + e2) + (6.0 / d) * dh);
  return tab;
}

}  // namespace dfskit
