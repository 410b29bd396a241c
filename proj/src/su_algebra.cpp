#include "dfskit/su_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfskit {

namespace {

constexpr double kStoreCutoff = 1e-13;  // entries below this are absent

// Sorts (i,j,k) and returns the permutation parity (+1/-1).
int sort_triple(std::array<int, 3>& t) {
  int sign = 1;
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  return sign;
}

// Dense copy of a sparse symmetric/antisymmetric tensor, laid out so the
// last index is contiguous: v[(i*n + j)*n + k].
std::vector<double> densify(const StructureTensors& t, int n, bool anti) {
  std::vector<double> v(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const double x = anti ? t.f(i, j, k) : t.dsym(i, j, k);
        v[(static_cast<std::size_t>(i - 1) * n + (j - 1)) * n + (k - 1)] = x;
      }
  return v;
}

// Re-lays t(a,b,c) as p[(a*n + c)*n + b], making the middle index the
// contiguous one.
std::vector<double> swap_last_two(const std::vector<double>& t, int n) {
  std::vector<double> p(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        p[(static_cast<std::size_t>(a) * n + c) * n + b] =
            t[(static_cast<std::size_t>(a) * n + b) * n + c];
  return p;
}

double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

// Slice matrices (G_a)_{x,y} = t(x, a, y), used for the cyclic
// triple-product traces.
std::vector<RealMatrix> middle_slices(const std::vector<double>& t, int n) {
  std::vector<RealMatrix> g(n, RealMatrix(n, n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        g[a](x, y) = t[(static_cast<std::size_t>(x) * n + a) * n + y];
  return g;
}

}  // namespace

const Matrix& GellMannBasis::op(int index) const {
  if (index < 0 || index >= static_cast<int>(ops_.size()))
    throw std::invalid_argument("GellMannBasis::op: index out of range");
  return ops_[index];
}

bool GellMannBasis::is_diagonal(int index) const {
  if (index == 0) return true;
  return std::binary_search(diag_.begin(), diag_.end(), index);
}

GellMannBasis generate_basis(int d) {
  if (d < 2) throw std::invalid_argument("generate_basis: requires d >= 2");
  GellMannBasis b;
  b.d_ = d;
  b.ops_.reserve(d * d);
  b.ops_.push_back(Matrix::Identity(d, d));
  for (int l = 2; l <= d; ++l) {
    for (int k = 1; k < l; ++k) {
      Matrix sym = Matrix::Zero(d, d);
      sym(k - 1, l - 1) = 1.0;
      sym(l - 1, k - 1) = 1.0;
      b.ops_.push_back(sym);
      Matrix asym = Matrix::Zero(d, d);
      asym(k - 1, l - 1) = Complex(0.0, -1.0);
      asym(l - 1, k - 1) = Complex(0.0, 1.0);
      b.ops_.push_back(asym);
    }
    Matrix diag = Matrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l - 1)));
    for (int m = 0; m < l - 1; ++m) diag(m, m) = scale;
    diag(l - 1, l - 1) = -scale * (l - 1);
    b.ops_.push_back(diag);
    b.diag_.push_back(l * l - 1);
  }
  return b;
}

double StructureTensors::f(int i, int j, int k) const {
  std::array<int, 3> t{i, j, k};
  const int sign = sort_triple(t);
  if (t[0] == t[1] || t[1] == t[2]) return 0.0;
  const auto it = f_.find(t);
  return it == f_.end() ? 0.0 : sign * it->second;
}

double StructureTensors::dsym(int i, int j, int k) const {
  std::array<int, 3> t{i, j, k};
  sort_triple(t);
  const auto it = dsym_.find(t);
  return it == dsym_.end() ? 0.0 : it->second;
}

StructureTensors structure_constants(const GellMannBasis& basis) {
  const int d = basis.dim();
  const int n = basis.count();
  StructureTensors out;
  out.d_ = d;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Matrix prod = basis.op(i) * basis.op(j);
      const Matrix comm = prod - basis.op(j) * basis.op(i);
      const Matrix anti = prod + basis.op(j) * basis.op(i);
      for (int k = j; k <= n; ++k) {
        const Complex ftr = Complex(0.0, -0.25) * (comm * basis.op(k)).trace();
        const Complex dtr = 0.25 * (anti * basis.op(k)).trace();
        if (std::abs(ftr.imag()) >= 1e-12 || std::abs(dtr.imag()) >= 1e-12)
          throw std::invalid_argument(
              "structure_constants: non-real tensor entry; bad basis");
        if (i != j && j != k && std::abs(ftr.real()) >= kStoreCutoff)
          out.f_[{i, j, k}] = ftr.real();
        if (std::abs(dtr.real()) >= kStoreCutoff)
          out.dsym_[{i, j, k}] = dtr.real();
      }
    }
  }
  return out;
}

double IdentityReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, r] : residuals) m = std::max(m, r);
  return m;
}

IdentityReport verify_algebra_identities(const StructureTensors& tensors,
                                         double tolerance) {
  const int d = tensors.dim();
  const int n = d * d - 1;
  const auto f = densify(tensors, n, true);
  const auto dd = densify(tensors, n, false);
  const auto fp = swap_last_two(f, n);   // fp[(a,c),b] = f(a,b,c)
  const auto ddp = swap_last_two(dd, n);

  IdentityReport rep;
  rep.tolerance = tolerance;
  auto row = [n](const std::vector<double>& t, int a, int b) {
    return t.data() + (static_cast<std::size_t>(a) * n + b) * n;
  };

  // Jacobi: Σ_l f_ilm f_jkl + f_jlm f_kil + f_klm f_ijl = 0, and the same
  // contraction with the second factor drawn from d.
  double r_jac_f = 0.0, r_jac_d = 0.0;
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double jf = dot(row(fp, i, m), row(f, j, k), n) +
                            dot(row(fp, j, m), row(f, k, i), n) +
                            dot(row(fp, k, m), row(f, i, j), n);
          const double jd = dot(row(fp, i, m), row(dd, j, k), n) +
                            dot(row(fp, j, m), row(dd, k, i), n) +
                            dot(row(fp, k, m), row(dd, i, j), n);
          r_jac_f = std::max(r_jac_f, std::abs(jf));
          r_jac_d = std::max(r_jac_d, std::abs(jd));
        }
  rep.residuals["jacobi_ff"] = r_jac_f;
  rep.residuals["jacobi_fd"] = r_jac_d;

  // Σ_i d_iik = 0
  double r_trace = 0.0;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) s += tensors.dsym(i, i, k);
    r_trace = std::max(r_trace, std::abs(s));
  }
  rep.residuals["d_self_trace"] = r_trace;

  // Σ_{i∈diag} d_iil = 0, diag = {l²−1 : l = 2..d}
  double r_diag = 0.0;
  for (int l = 1; l <= n; ++l) {
    double s = 0.0;
    for (int m = 2; m <= d; ++m) s += tensors.dsym(m * m - 1, m * m - 1, l);
    r_diag = std::max(r_diag, std::abs(s));
  }
  rep.residuals["diag_d_sum"] = r_diag;

  // Pairwise contractions over (j,k): f·f = d δ, d·d = ((d²−4)/d) δ, d·f = 0
  double r_ff = 0.0, r_ddg = 0.0, r_df = 0.0;
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      double sff = 0.0, sdd = 0.0, sdf = 0.0;
      for (int j = 0; j < n; ++j) {
        sff += dot(row(f, i, j), row(f, l, j), n);
        sdd += dot(row(dd, i, j), row(dd, l, j), n);
        sdf += dot(row(dd, i, j), row(f, l, j), n);
      }
      const double delta = (i == l) ? 1.0 : 0.0;
      r_ff = std::max(r_ff, std::abs(sff - d * delta));
      r_ddg = std::max(
          r_ddg, std::abs(sdd - (d * d - 4.0) / d * delta));
      r_df = std::max(r_df, std::abs(sdf));
    }
  rep.residuals["ff_gram"] = r_ff;
  rep.residuals["dd_gram"] = r_ddg;
  rep.residuals["fd_orthogonality"] = r_df;

  // Σ_m f_ijm f_klm = (2/d)(δ_ik δ_jl − δ_il δ_jk) + d_ikm d_jlm − d_jkm d_ilm
  double r_exp = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double lhs = dot(row(f, i, j), row(f, k, l), n);
          const double kron = 2.0 / d *
              ((i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0));
          const double rhs = kron + dot(row(dd, i, k), row(dd, j, l), n) -
                             dot(row(dd, j, k), row(dd, i, l), n);
          r_exp = std::max(r_exp, std::abs(lhs - rhs));
        }
  rep.residuals["ff_to_dd"] = r_exp;

  // Cyclic triple-product traces: with (G_a)_{xy} = t(x,a,y),
  // Σ_{pqr} t1_piq t2_qjr t3_rkp = Tr(G1_i G2_j G3_k).
  const auto gf = middle_slices(f, n);
  const auto gd = middle_slices(dd, n);
  auto cyclic = [&](const std::vector<RealMatrix>& g1,
                    const std::vector<RealMatrix>& g2,
                    const std::vector<RealMatrix>& g3, auto expected) {
    double r = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const RealMatrix h = g1[i] * g2[j];
        for (int k = 0; k < n; ++k) {
          const double tr = (h.array() * g3[k].transpose().array()).sum();
          r = std::max(r, std::abs(tr - expected(i + 1, j + 1, k + 1)));
        }
      }
    return r;
  };
  const double half_d = d / 2.0;
  const double c_ddf = (d * d - 4.0) / (2.0 * d);
  const double c_ddd = (d * d - 12.0) / (2.0 * d);
  rep.residuals["fff_cycle"] = cyclic(gf, gf, gf, [&](int i, int j, int k) {
    return -half_d * tensors.f(i, j, k);
  });
  rep.residuals["dff_cycle"] = cyclic(gd, gf, gf, [&](int i, int j, int k) {
    return -half_d * tensors.dsym(i, j, k);
  });
  rep.residuals["ddf_cycle"] = cyclic(gd, gd, gf, [&](int i, int j, int k) {
    return c_ddf * tensors.f(i, j, k);
  });
  rep.residuals["ddd_cycle"] = cyclic(gd, gd, gd, [&](int i, int j, int k) {
    return c_ddd * tensors.dsym(i, j, k);
  });

  rep.pass = rep.max_residual() <= tolerance;
  return rep;
}

}  // namespace dfskit
