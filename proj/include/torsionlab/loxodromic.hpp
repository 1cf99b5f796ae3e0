#ifndef TORSIONLAB_LOXODROMIC_HPP
#define TORSIONLAB_LOXODROMIC_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "torsionlab/lie_algebra.hpp"

namespace torsionlab {

template <class K>
Matrix<Approx> matrix_to_approx(const Matrix<K>& m) {
  Matrix<Approx> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Approx(m(i, j).to_double());
  return out;
}

template <class K>
bool is_diagonal(const Matrix<K>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

template <class K>
struct LoxodromicDecomposition {
  Matrix<K> conjugator;  // Q with Q g Q^{-1} = diag
  Matrix<K> diag;
};

// Exact fast path: an already-diagonal matrix with simple spectrum is its own
// decomposition.
template <class K>
std::optional<LoxodromicDecomposition<K>> diagonalize_loxodromic_exact(const Matrix<K>& g) {
  if (!is_diagonal(g)) return std::nullopt;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i).is_zero()) return std::nullopt;
    for (std::size_t j = i + 1; j < g.rows(); ++j)
      if (g(i, i) == g(j, j)) return std::nullopt;
  }
  return LoxodromicDecomposition<K>{Matrix<K>::identity(g.rows()), g};
}

// Numeric path: real simple spectrum detected by a dense eigensolver; returns
// the conjugator and the diagonal in the ordering
// (lambda_1..lambda_n, 1/lambda_1..1/lambda_n), |lambda_i| descending, with a
// leading unit eigenvalue for odd ambient dimension.
inline std::optional<LoxodromicDecomposition<Approx>> diagonalize_loxodromic(
    const Matrix<Approx>& g) {
  if (!g.is_square() || g.rows() == 0) return std::nullopt;
  if (auto fast = diagonalize_loxodromic_exact(g)) return fast;
  const std::size_t m = g.rows();
  Eigen::MatrixXd a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = g(i, j).value();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) return std::nullopt;
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  double eps = std::max(Approx::tolerance(), 1e-11) * scale;

  std::vector<double> vals(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::complex<double> ev = solver.eigenvalues()(static_cast<long>(i));
    if (std::fabs(ev.imag()) > eps) return std::nullopt;  // complex spectrum
    vals[i] = ev.real();
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::fabs(vals[i] - vals[j]) <= eps) return std::nullopt;  // repeated

  auto real_vector = [&](std::size_t idx) {
    Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<long>(idx));
    std::size_t top = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (std::abs(v(static_cast<long>(i))) > std::abs(v(static_cast<long>(top)))) top = i;
    v /= v(static_cast<long>(top));
    Eigen::VectorXd r(m);
    for (std::size_t i = 0; i < m; ++i) r(static_cast<long>(i)) = v(static_cast<long>(i)).real();
    return r;
  };

  std::vector<std::size_t> order;
  std::vector<std::size_t> expanding;
  for (std::size_t i = 0; i < m; ++i)
    if (std::fabs(vals[i]) > 1.0 + eps) expanding.push_back(i);
  if (expanding.size() != m / 2) return std::nullopt;
  std::sort(expanding.begin(), expanding.end(), [&](std::size_t x, std::size_t y) {
    double ax = std::fabs(vals[x]), ay = std::fabs(vals[y]);
    if (std::fabs(ax - ay) > eps) return ax > ay;
    return vals[x] > vals[y];
  });
  if (m % 2 == 1) {
    std::size_t unit = m;
    for (std::size_t i = 0; i < m; ++i)
      if (std::fabs(vals[i] - 1.0) <= 100 * eps) unit = i;
    if (unit == m) return std::nullopt;
    order.push_back(unit);
  }
  for (std::size_t i : expanding) order.push_back(i);
  for (std::size_t i : expanding) {
    std::size_t best = m;
    double target = 1.0 / vals[i];
    for (std::size_t j = 0; j < m; ++j) {
      bool used = std::find(order.begin(), order.end(), j) != order.end();
      if (used) continue;
      if (best == m || std::fabs(vals[j] - target) < std::fabs(vals[best] - target)) best = j;
    }
    if (best == m || std::fabs(vals[best] - target) > 100 * eps * std::fabs(target))
      return std::nullopt;
    order.push_back(best);
  }

  Eigen::MatrixXd p(m, m);
  Matrix<Approx> diag(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    p.col(static_cast<long>(c)) = real_vector(order[c]);
    diag(c, c) = Approx(vals[order[c]]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(p);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::MatrixXd q = lu.inverse();
  Matrix<Approx> conj(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      conj(i, j) = Approx(q(static_cast<long>(i), static_cast<long>(j)));
  return LoxodromicDecomposition<Approx>{std::move(conj), std::move(diag)};
}

}  // namespace torsionlab

#endif  // TORSIONLAB_LOXODROMIC_HPP
