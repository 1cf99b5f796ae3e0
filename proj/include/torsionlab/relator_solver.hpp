#ifndef TORSIONLAB_RELATOR_SOLVER_HPP
#define TORSIONLAB_RELATOR_SOLVER_HPP

#include <cmath>
#include <optional>
#include <utility>

#include "torsionlab/linalg.hpp"
#include "torsionlab/rng.hpp"

namespace torsionlab {

// Genus-2 relator completion over SL(2, R).  Given images for a1, b1 and
// seeds for a2, b2, solves
//     a2 b2 = C b2 a2,   C = ([a1, b1])^{-1},
// together with the two determinant constraints, by damped Gauss-Newton with
// numerical Jacobians.  a2 is adjusted along with b2: for fixed generic a2
// the commutator equation has no solution (its image is a hypersurface), so
// a completion that only moves b2 would almost always fail.
struct RelatorSolution {
  Matrix<Approx> a2, b2;
  double residual = 0.0;
  int iterations = 0;
};

namespace detail {

inline Matrix<Approx> mat2(const double* x) {
  Matrix<Approx> m(2, 2);
  m(0, 0) = x[0];
  m(0, 1) = x[1];
  m(1, 0) = x[2];
  m(1, 1) = x[3];
  return m;
}

inline void relator_residual(const double* x, const Matrix<Approx>& c, double* f) {
  Matrix<Approx> a2 = mat2(x), b2 = mat2(x + 4);
  Matrix<Approx> lhs = a2 * b2;
  Matrix<Approx> rhs = c * b2 * a2;
  f[0] = lhs(0, 0).value() - rhs(0, 0).value();
  f[1] = lhs(0, 1).value() - rhs(0, 1).value();
  f[2] = lhs(1, 0).value() - rhs(1, 0).value();
  f[3] = lhs(1, 1).value() - rhs(1, 1).value();
  f[4] = x[0] * x[3] - x[1] * x[2] - 1.0;
  f[5] = x[4] * x[7] - x[5] * x[6] - 1.0;
}

inline double sup_norm(const double* f, int n) {
  double m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(f[i]));
  return m;
}

}  // namespace detail

inline std::optional<RelatorSolution> solve_relator_genus2(const Matrix<Approx>& a1,
                                                           const Matrix<Approx>& b1,
                                                           const Matrix<Approx>& a2_seed,
                                                           const Matrix<Approx>& b2_seed,
                                                           int max_iter = 120) {
  Matrix<Approx> comm = a1 * b1 * inverse(a1) * inverse(b1);
  Matrix<Approx> c = inverse(comm);

  double x[8] = {a2_seed(0, 0).value(), a2_seed(0, 1).value(), a2_seed(1, 0).value(),
                 a2_seed(1, 1).value(), b2_seed(0, 0).value(), b2_seed(0, 1).value(),
                 b2_seed(1, 0).value(), b2_seed(1, 1).value()};
  double f[6];
  detail::relator_residual(x, c, f);
  double res = detail::sup_norm(f, 6);
  double damping = 1e-4;
  int iter = 0;
  const double target = 5e-15;  // polish to near machine precision

  while (res > target && iter < max_iter) {
    // numerical Jacobian, central differences
    double jac[6][8];
    for (int col = 0; col < 8; ++col) {
      double h = 1e-7 * std::max(1.0, std::fabs(x[col]));
      double fp[6], fm[6];
      double save = x[col];
      x[col] = save + h;
      detail::relator_residual(x, c, fp);
      x[col] = save - h;
      detail::relator_residual(x, c, fm);
      x[col] = save;
      for (int row = 0; row < 6; ++row) jac[row][col] = (fp[row] - fm[row]) / (2 * h);
    }
    // normal equations with Levenberg damping
    Matrix<Approx> jtj(8, 8);
    Matrix<Approx> jtf(8, 1);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        double s = 0;
        for (int r = 0; r < 6; ++r) s += jac[r][i] * jac[r][j];
        jtj(i, j) = s;
      }
      double s = 0;
      for (int r = 0; r < 6; ++r) s += jac[r][i] * f[r];
      jtf(i, 0) = s;
    }
    for (int i = 0; i < 8; ++i) jtj(i, i) += Approx(damping);

    Matrix<Approx> step;
    try {
      step = solve(jtj, jtf, PivotPolicy::LargestAbs);
    } catch (const SingularError&) {
      damping *= 10;
      ++iter;
      continue;
    }
    double xt[8];
    for (int i = 0; i < 8; ++i) xt[i] = x[i] - step(i, 0).value();
    double ft[6];
    detail::relator_residual(xt, c, ft);
    double rt = detail::sup_norm(ft, 6);
    if (rt < res) {
      for (int i = 0; i < 8; ++i) x[i] = xt[i];
      for (int i = 0; i < 6; ++i) f[i] = ft[i];
      res = rt;
      damping = std::max(damping * 0.25, 1e-14);
    } else {
      damping *= 10;
      if (damping > 1e8) break;
    }
    ++iter;
  }
  if (res > 1e-12) return std::nullopt;
  return RelatorSolution{detail::mat2(x), detail::mat2(x + 4), res, iter};
}

// Seeded loxodromic SL(2, R) matrix with |trace| slightly above 2: a mild
// diagonal conjugated by a mild unimodular matrix.  Keeping the eigenvalues
// near 1 keeps the adjoint magnitudes small downstream, which is what makes
// the float torsion pipeline numerically clean.
inline Matrix<Approx> random_sl2_loxodromic(Rng& rng) {
  auto unit = [&] { return static_cast<double>(rng.bits() % 100000) / 100000.0; };
  double lambda = 1.1 + 0.5 * unit();
  Matrix<Approx> d(2, 2);
  d(0, 0) = lambda;
  d(1, 1) = 1.0 / lambda;
  for (;;) {
    double a = 0.6 + 0.9 * unit();
    double b = -0.8 + 1.6 * unit();
    double c = -0.8 + 1.6 * unit();
    double dd = (1.0 + b * c) / a;
    if (std::fabs(dd) > 2.0) continue;
    Matrix<Approx> s(2, 2);
    s(0, 0) = a;
    s(0, 1) = b;
    s(1, 0) = c;
    s(1, 1) = dd;
    return s * d * inverse(s);
  }
}

}  // namespace torsionlab

#endif  // TORSIONLAB_RELATOR_SOLVER_HPP
