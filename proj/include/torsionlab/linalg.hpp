#ifndef TORSIONLAB_LINALG_HPP
#define TORSIONLAB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "torsionlab/matrix.hpp"

namespace torsionlab {

// Pivot selection rule for elimination.  Exact fields default to the first
// nonzero entry scanning top to bottom, which keeps kernel/image bases and
// solve outputs reproducible across runs.  The float field defaults to the
// entry of largest magnitude (equally deterministic).  Torsion values are
// independent of this choice; tests exercise both rules.
enum class PivotPolicy { Default, FirstNonzero, LastNonzero, LargestAbs };

namespace detail {

template <class K>
PivotPolicy resolve_policy(PivotPolicy p) {
  if (p != PivotPolicy::Default) return p;
  return FieldTraits<K>::exact ? PivotPolicy::FirstNonzero : PivotPolicy::LargestAbs;
}

// Largest entry magnitude, used to make float-field zero tests relative to
// the matrix scale.  Exact fields ignore it.
template <class K>
double magnitude(const Matrix<K>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      s = std::max(s, std::fabs(m(i, j).to_double()));
  return s;
}

template <class K>
bool negligible(const K& x, double scale) {
  if constexpr (FieldTraits<K>::exact)
    return x.is_zero();
  else
    return std::fabs(x.to_double()) <= Approx::tolerance() * std::max(1.0, scale);
}

template <class K>
std::size_t pick_pivot(const Matrix<K>& m, std::size_t row0, std::size_t col, PivotPolicy policy,
                       double scale, bool& found) {
  found = false;
  std::size_t best = row0;
  for (std::size_t i = row0; i < m.rows(); ++i) {
    if (negligible(m(i, col), scale)) continue;
    switch (policy) {
      case PivotPolicy::FirstNonzero:
        found = true;
        return i;
      case PivotPolicy::LastNonzero:
        best = i;
        found = true;
        break;
      case PivotPolicy::LargestAbs:
        if (!found || m(best, col).abs().to_double() < m(i, col).abs().to_double()) best = i;
        found = true;
        break;
      default:
        break;
    }
  }
  return best;
}

}  // namespace detail

// Whether a matrix is zero up to the field's comparison semantics, measured
// against a reference scale (relevant for the float field only).
template <class K>
bool is_negligible(const Matrix<K>& m, double scale = 1.0) {
  if constexpr (FieldTraits<K>::exact) {
    return m.is_zero();
  } else {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!detail::negligible(m(i, j), scale)) return false;
    return true;
  }
}

// Reduced row echelon form together with the pivot bookkeeping everything
// else here is built on.
template <class K>
struct Echelon {
  Matrix<K> rref;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
  K pivot_product = FieldTraits<K>::from_int(1);  // product of pivots as eliminated
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class K>
Echelon<K> row_reduce(Matrix<K> m, PivotPolicy policy = PivotPolicy::Default) {
  policy = detail::resolve_policy<K>(policy);
  // per-column reference scales keep the float-field zero tests meaningful
  // when columns of very different magnitude are mixed
  std::vector<double> colscale(m.cols(), 1.0);
  if constexpr (!FieldTraits<K>::exact) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double top = 1.0;
      for (std::size_t i = 0; i < m.rows(); ++i)
        top = std::max(top, std::fabs(m(i, j).to_double()));
      colscale[j] = top;
    }
  }
  Echelon<K> e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    bool found = false;
    std::size_t piv = detail::pick_pivot(m, row, col, policy, colscale[col], found);
    if (!found) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      e.swap_sign = -e.swap_sign;
    }
    K p = m(row, col);
    e.pivot_product *= p;
    K pinv = p.inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= pinv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || detail::negligible(m(i, col), colscale[col])) continue;
      K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        K t = f;
        t *= m(row, j);
        m(i, j) -= t;
      }
      m(i, col) = FieldTraits<K>::from_int(0);  // clear residue in inexact fields
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

template <class K>
std::size_t rank(const Matrix<K>& m, PivotPolicy policy = PivotPolicy::Default) {
  return row_reduce(m, policy).rank();
}

// Exact determinant by pivoted elimination; det of the empty 0x0 matrix is 1.
template <class K>
K det(const Matrix<K>& m, PivotPolicy policy = PivotPolicy::Default) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape_string());
  Echelon<K> e = row_reduce(m, policy);
  if (e.rank() < m.rows()) return FieldTraits<K>::from_int(0);
  K d = e.pivot_product;
  if (e.swap_sign < 0) d = -d;
  return d;
}

// Columns spanning Ker m, echelon-selected: each free column contributes one
// basis vector with unit entry at the free index.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m, PivotPolicy policy = PivotPolicy::Default) {
  Echelon<K> e = row_reduce(m, policy);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::size_t nfree = m.cols() - e.rank();
  Matrix<K> ker(m.cols(), nfree);
  std::size_t out = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ker(c, out) = FieldTraits<K>::from_int(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      ker(e.pivot_cols[r], out) = -e.rref(r, c);
    ++out;
  }
  return ker;
}

// The pivot columns of the original matrix: a spanning subset of the columns.
template <class K>
Matrix<K> image_basis(const Matrix<K>& m, PivotPolicy policy = PivotPolicy::Default) {
  Echelon<K> e = row_reduce(m, policy);
  Matrix<K> img(m.rows(), e.rank());
  for (std::size_t j = 0; j < e.pivot_cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) img(i, j) = m(i, e.pivot_cols[j]);
  return img;
}

// One solution X of M X = B (columnwise), free variables set to zero.
// Throws SingularError when some column of B is outside the column space.
template <class K>
Matrix<K> solve(const Matrix<K>& m, const Matrix<K>& rhs, PivotPolicy policy = PivotPolicy::Default) {
  if (m.rows() != rhs.rows())
    throw DimensionError("solve shape mismatch: " + m.shape_string() + " vs " + rhs.shape_string());
  Echelon<K> e = row_reduce(Matrix<K>::hcat(m, rhs), policy);
  Matrix<K> x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::size_t c = e.pivot_cols[r];
    if (c >= m.cols()) throw SingularError("inconsistent linear system");
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(c, j) = e.rref(r, m.cols() + j);
  }
  return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m, PivotPolicy policy = PivotPolicy::Default) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape_string());
  if (rank(m, policy) != m.rows()) throw SingularError("matrix not invertible");
  return solve(m, Matrix<K>::identity(m.rows()), policy);
}

// Pfaffian of a skew-symmetric matrix by skew elimination (congruence with
// elementary transvections), so Pf(m)^2 = det(m) holds exactly over exact
// fields.  Odd dimension or a non-skew input is rejected.
template <class K>
K pfaffian(const Matrix<K>& m_in, PivotPolicy policy = PivotPolicy::Default) {
  policy = detail::resolve_policy<K>(policy);
  if (!m_in.is_square()) throw FormError("pfaffian of non-square " + m_in.shape_string());
  std::size_t n = m_in.rows();
  if (n % 2 != 0) throw FormError("pfaffian needs even dimension, got " + m_in.shape_string());
  double scale = FieldTraits<K>::exact ? 1.0 : detail::magnitude(m_in);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!detail::negligible(m_in(i, j) + m_in(j, i), scale))
        throw FormError("pfaffian input is not skew-symmetric");
  if (n == 0) return FieldTraits<K>::from_int(1);

  Matrix<K> m = m_in;
  K pf = FieldTraits<K>::from_int(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Bring a usable pivot into position (k, k+1).
    bool found = !detail::negligible(m(k, k + 1), scale);
    std::size_t piv = k + 1;
    if (policy == PivotPolicy::LargestAbs) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (detail::negligible(m(k, j), scale)) continue;
        if (!found || m(k, piv).abs().to_double() < m(k, j).abs().to_double()) piv = j;
        found = true;
      }
    } else if (!found) {
      for (std::size_t j = k + 2; j < n; ++j) {
        if (!detail::negligible(m(k, j), scale)) {
          piv = j;
          found = true;
          if (policy != PivotPolicy::LastNonzero) break;
        }
      }
    }
    if (!found) return FieldTraits<K>::from_int(0);
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
      pf = -pf;
    }
    K p = m(k, k + 1);
    pf *= p;
    if (k + 2 >= n) break;
    K pinv = p.inverse();
    std::vector<K> tau(n, FieldTraits<K>::from_int(0));
    for (std::size_t j = k + 2; j < n; ++j) {
      tau[j] = m(k, j);
      tau[j] *= pinv;
    }
    // Schur update keeps the trailing block skew:
    // m[i][j] += tau[i] m[k+1][j] ... - tau[j] m[k+1][i] ...
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        K t1 = tau[i];
        t1 *= m(j, k + 1);
        K t2 = tau[j];
        t2 *= m(i, k + 1);
        m(i, j) += t1;
        m(i, j) -= t2;
      }
    }
    // Rows/cols k, k+1 are consumed; zero them for hygiene.
    for (std::size_t j = k + 2; j < n; ++j) {
      m(k, j) = FieldTraits<K>::from_int(0);
      m(j, k) = FieldTraits<K>::from_int(0);
      m(k + 1, j) = FieldTraits<K>::from_int(0);
      m(j, k + 1) = FieldTraits<K>::from_int(0);
    }
  }
  return pf;
}

// Determinant of the matrix T solving old * T = new columnwise: the
// change-of-base determinant of `nb` relative to `ob` over a common ambient
// coordinate system.
template <class K>
K change_base_det(const Matrix<K>& nb, const Matrix<K>& ob,
                  PivotPolicy policy = PivotPolicy::Default) {
  if (!nb.is_square() || !ob.is_square() || nb.rows() != ob.rows())
    throw DimensionError("change of base needs equal square shapes");
  K od = det(ob, policy);
  if (od.is_zero()) throw SingularError("old basis is singular");
  K nd = det(nb, policy);
  return nd / od;
}

}  // namespace torsionlab

#endif  // TORSIONLAB_LINALG_HPP
