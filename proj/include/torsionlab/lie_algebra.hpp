#ifndef TORSIONLAB_LIE_ALGEBRA_HPP
#define TORSIONLAB_LIE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/linalg.hpp"
#include "torsionlab/rng.hpp"

namespace torsionlab {

enum class LieFamily { Sp, SoNN, SoNN1 };

inline const char* family_name(LieFamily f) {
  switch (f) {
    case LieFamily::Sp: return "sp";
    case LieFamily::SoNN: return "so_nn";
    case LieFamily::SoNN1: return "so_nn1";
  }
  return "?";
}

inline LieFamily family_from_name(const std::string& s) {
  if (s == "sp") return LieFamily::Sp;
  if (s == "so_nn") return LieFamily::SoNN;
  if (s == "so_nn1") return LieFamily::SoNN1;
  throw ParseError("unknown family '" + s + "' (expected sp, so_nn, so_nn1)");
}

// ---------------------------------------------------------------------------
// One of the split families sp(2n), so(n,n), so(n,n+1) with its explicit
// ordered basis, the invariant bilinear form J of the ambient representation,
// the Killing form B(X,Y) = c * tr(XY), and the coordinatization operator
// expressing ambient matrices in the basis.
//
// Basis element ordering follows the displayed generator lists row by row,
// indices ascending; ranges that are antisymmetric under swapping i, j are
// enumerated with i < j.
// ---------------------------------------------------------------------------
template <class K>
class LieAlgebraSpec {
 public:
  static LieAlgebraSpec build(LieFamily family, std::size_t n) {
    LieAlgebraSpec spec;
    spec.family_ = family;
    spec.n_ = n;
    switch (family) {
      case LieFamily::Sp:
        if (n < 2) throw DomainError("sp(2n) needs n >= 2");
        spec.ambient_ = 2 * n;
        spec.killing_scale_ = 2 * static_cast<long>(n) + 2;
        spec.build_sp();
        break;
      case LieFamily::SoNN:
        if (n < 3) throw DomainError("so(n,n) needs n >= 3");
        spec.ambient_ = 2 * n;
        spec.killing_scale_ = 2 * static_cast<long>(n) - 2;
        spec.build_so_nn();
        break;
      case LieFamily::SoNN1:
        if (n < 2) throw DomainError("so(n,n+1) needs n >= 2");
        spec.ambient_ = 2 * n + 1;
        spec.killing_scale_ = 2 * static_cast<long>(n) - 1;
        spec.build_so_nn1();
        break;
    }
    spec.finish();
    return spec;
  }

  LieFamily family() const { return family_; }
  std::size_t rank_n() const { return n_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<K>>& basis() const { return basis_; }
  const Matrix<K>& invariant_form() const { return form_; }
  const Matrix<K>& killing_gram() const { return killing_gram_; }
  long killing_scale() const { return killing_scale_; }

  K killing_form(const Matrix<K>& x, const Matrix<K>& y) const {
    Matrix<K> xy = x * y;
    K tr = FieldTraits<K>::from_int(0);
    for (std::size_t i = 0; i < ambient_; ++i) tr += xy(i, i);
    return FieldTraits<K>::from_int(killing_scale_) * tr;
  }

  bool preserves_form(const Matrix<K>& g) const {
    if (g.rows() != ambient_ || g.cols() != ambient_) return false;
    return g.transpose() * form_ * g == form_;
  }

  bool in_algebra(const Matrix<K>& x) const {
    if (x.rows() != ambient_ || x.cols() != ambient_) return false;
    return (x.transpose() * form_ + form_ * x).is_zero();
  }

  // Coordinates of an algebra element in the stored basis.
  Matrix<K> coordinates(const Matrix<K>& x) const {
    Matrix<K> coords = coordinatizer_ * flatten(x);
    Matrix<K> rebuilt(ambient_, ambient_);
    for (std::size_t k = 0; k < dim(); ++k) rebuilt = rebuilt + coords(k, 0) * basis_[k];
    if (!(rebuilt == x)) throw DomainError("matrix is not in the Lie algebra");
    return coords;
  }

  // Matrix of X -> g X g^{-1} in the stored basis.
  Matrix<K> ad_action(const Matrix<K>& g) const {
    if (!preserves_form(g))
      throw DomainError("conjugator does not preserve the invariant bilinear form");
    Matrix<K> ginv = inverse(g);
    Matrix<K> out(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
      out.set_block(0, k, coordinates(g * basis_[k] * ginv));
    return out;
  }

  // Matrix of ad_X = [X, -] in the stored basis.
  Matrix<K> bracket_action(const Matrix<K>& x) const {
    Matrix<K> out(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
      out.set_block(0, k, coordinates(x * basis_[k] - basis_[k] * x));
    return out;
  }

  // Cayley transform (I - X)(I + X)^{-1} of a random small algebra element: an
  // exact form-preserving group element of determinant one.
  Matrix<K> random_group_element(Rng& rng, long spread = 2) const {
    for (;;) {
      Matrix<K> x(ambient_, ambient_);
      for (std::size_t k = 0; k < dim(); ++k) {
        K c = FieldTraits<K>::from_rational(rng.rational(spread, 2));
        if (!c.is_zero()) x = x + c * basis_[k];
      }
      Matrix<K> plus = Matrix<K>::identity(ambient_) + x;
      if (det(plus).is_zero()) continue;
      Matrix<K> g = (Matrix<K>::identity(ambient_) - x) * inverse(plus);
      return g;
    }
  }

 private:
  Matrix<K> unit(std::size_t i, std::size_t j) const {  // 1-based E_ij
    Matrix<K> e(ambient_, ambient_);
    e(i - 1, j - 1) = FieldTraits<K>::from_int(1);
    return e;
  }
  Matrix<K> flatten(const Matrix<K>& x) const {
    Matrix<K> f(ambient_ * ambient_, 1);
    for (std::size_t i = 0; i < ambient_; ++i)
      for (std::size_t j = 0; j < ambient_; ++j) f(i * ambient_ + j, 0) = x(i, j);
    return f;
  }

  void build_sp() {
    std::size_t n = n_;
    form_ = Matrix<K>(ambient_, ambient_);
    for (std::size_t i = 1; i <= n; ++i) {
      form_(i - 1, n + i - 1) = FieldTraits<K>::from_int(1);
      form_(n + i - 1, i - 1) = FieldTraits<K>::from_int(-1);
    }
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(i, i) - unit(n + i, n + i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j) basis_.push_back(unit(i, j) - unit(n + j, n + i));
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(i, n + i));
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(n + i, i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(i, n + j) + unit(j, n + i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(n + i, j) + unit(n + j, i));
  }

  void build_so_nn() {
    std::size_t n = n_;
    form_ = Matrix<K>(ambient_, ambient_);
    for (std::size_t i = 1; i <= n; ++i) {
      form_(i - 1, n + i - 1) = FieldTraits<K>::from_int(1);
      form_(n + i - 1, i - 1) = FieldTraits<K>::from_int(1);
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j) basis_.push_back(unit(i, j) - unit(n + j, n + i));
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(i, i) - unit(n + i, n + i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(i, n + j) - unit(j, n + i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(n + i, j) - unit(n + j, i));
  }

  void build_so_nn1() {
    std::size_t n = n_;
    form_ = Matrix<K>(ambient_, ambient_);
    form_(0, 0) = FieldTraits<K>::from_int(1);
    for (std::size_t i = 1; i <= n; ++i) {
      form_(i, n + i) = FieldTraits<K>::from_int(1);
      form_(n + i, i) = FieldTraits<K>::from_int(1);
    }
    for (std::size_t i = 2; i <= n + 1; ++i) basis_.push_back(unit(i, i) - unit(n + i, n + i));
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(1, n + i + 1) - unit(i + 1, 1));
    for (std::size_t i = 1; i <= n; ++i) basis_.push_back(unit(1, i + 1) - unit(n + i + 1, 1));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j) basis_.push_back(unit(i + 1, j + 1) - unit(n + j + 1, n + i + 1));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(i + 1, n + j + 1) - unit(j + 1, n + i + 1));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        basis_.push_back(unit(n + i + 1, j + 1) - unit(n + j + 1, i + 1));
  }

  void finish() {
    std::size_t expected = (family_ == LieFamily::SoNN) ? n_ * (2 * n_ - 1) : n_ * (2 * n_ + 1);
    if (basis_.size() != expected)
      throw Error("internal: basis count " + std::to_string(basis_.size()) + " != " +
                  std::to_string(expected));
    for (const Matrix<K>& b : basis_)
      if (!in_algebra(b)) throw Error("internal: basis element violates the defining relation");

    // left inverse of the flattened basis matrix
    Matrix<K> flat(ambient_ * ambient_, dim());
    for (std::size_t k = 0; k < dim(); ++k) flat.set_block(0, k, flatten(basis_[k]));
    Matrix<K> gram = flat.transpose() * flat;
    coordinatizer_ = inverse(gram) * flat.transpose();

    killing_gram_ = Matrix<K>(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j) {
        K v = killing_form(basis_[i], basis_[j]);
        killing_gram_(i, j) = v;
        killing_gram_(j, i) = v;
      }
    if (det(killing_gram_).is_zero()) throw Error("internal: Killing form degenerate");

    // The trace-form scale is a standard fact the displayed lists do not
    // restate; cross-check it against trace(ad ad) on all basis pairs while
    // the dimension stays small.
    if (n_ <= 3) {
      std::vector<Matrix<K>> ads;
      ads.reserve(dim());
      for (const Matrix<K>& b : basis_) ads.push_back(bracket_action(b));
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
          Matrix<K> prod = ads[i] * ads[j];
          K tr = FieldTraits<K>::from_int(0);
          for (std::size_t t = 0; t < dim(); ++t) tr += prod(t, t);
          if (!(tr == killing_gram_(i, j)))
            throw Error("internal: Killing scale disagrees with trace(ad ad) at pair " +
                        std::to_string(i) + "," + std::to_string(j));
        }
    }
  }

  LieFamily family_ = LieFamily::Sp;
  std::size_t n_ = 0;
  std::size_t ambient_ = 0;
  long killing_scale_ = 0;
  std::vector<Matrix<K>> basis_;
  Matrix<K> form_;
  Matrix<K> killing_gram_;
  Matrix<K> coordinatizer_;
};

// Diagonal entries of the adjoint action of D = Diag(lambda_1..lambda_n,
// reciprocals) (a leading 1 for so(n,n+1)) in the stored basis order.
template <class K>
std::vector<K> expected_ad_diagonal(LieFamily family, std::size_t n, const std::vector<K>& lam) {
  std::vector<K> out;
  K one = FieldTraits<K>::from_int(1);
  switch (family) {
    case LieFamily::Sp:
      for (std::size_t i = 0; i < n; ++i) out.push_back(one);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(lam[i] / lam[j]);
      for (std::size_t i = 0; i < n; ++i) out.push_back(lam[i] * lam[i]);
      for (std::size_t i = 0; i < n; ++i) out.push_back((lam[i] * lam[i]).inverse());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(lam[i] * lam[j]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back((lam[i] * lam[j]).inverse());
      break;
    case LieFamily::SoNN:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(lam[i] / lam[j]);
      for (std::size_t i = 0; i < n; ++i) out.push_back(one);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(lam[i] * lam[j]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back((lam[i] * lam[j]).inverse());
      break;
    case LieFamily::SoNN1:
      for (std::size_t i = 0; i < n; ++i) out.push_back(one);
      for (std::size_t i = 0; i < n; ++i) out.push_back(lam[i]);
      for (std::size_t i = 0; i < n; ++i) out.push_back(lam[i].inverse());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(lam[i] / lam[j]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(lam[i] * lam[j]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back((lam[i] * lam[j]).inverse());
      break;
  }
  return out;
}

// Diagonal loxodromic group element from eigenvalue list lambda_1..lambda_n.
template <class K>
Matrix<K> loxodromic_diagonal(LieFamily family, std::size_t n, const std::vector<K>& lam) {
  if (lam.size() != n) throw DomainError("need n eigenvalues");
  std::size_t m = family == LieFamily::SoNN1 ? 2 * n + 1 : 2 * n;
  Matrix<K> d(m, m);
  std::size_t off = family == LieFamily::SoNN1 ? 1 : 0;
  if (off) d(0, 0) = FieldTraits<K>::from_int(1);
  for (std::size_t i = 0; i < n; ++i) {
    d(off + i, off + i) = lam[i];
    d(off + n + i, off + n + i) = lam[i].inverse();
  }
  return d;
}

// Random rational eigenvalues, pairwise distinct with |lambda| > 1, so the
// full spectrum (including reciprocals) is simple.
inline std::vector<Rational> random_loxodromic_eigenvalues(Rng& rng, std::size_t n) {
  std::vector<Rational> lam;
  while (lam.size() < n) {
    long den = rng.uniform(1, 4);
    long num = rng.uniform(den + 1, 5 * den + 5);
    Rational v(num, den);
    if (rng.coin()) v = -v;
    bool fresh = true;
    for (const Rational& u : lam)
      if (u == v || u == -v) fresh = false;
    if (fresh) lam.push_back(v);
  }
  return lam;
}

// ---------------------------------------------------------------------------
// Principal embedding SL(2) -> Sp(2n): the (2n-1)-st symmetric power acting
// on binary forms.  The monomial basis x^{2n-1}, x^{2n-2} y, ..., y^{2n-1}
// carries an invariant pairing  <m_k, m_{2n-1-k}> = (-1)^k / binom(2n-1, k);
// a fixed rescaling of the second half of the basis turns it into the
// standard symplectic form, so images land in the sp(2n) ambient group.
// ---------------------------------------------------------------------------
template <class K>
Matrix<K> principal_sl2_embed(const Matrix<K>& a, std::size_t n) {
  if (a.rows() != 2 || a.cols() != 2) throw DomainError("embedding expects a 2x2 matrix");
  if (n < 2) throw DomainError("target sp(2n) needs n >= 2");
  if (!(det(a) == FieldTraits<K>::from_int(1)))
    throw DomainError("embedding expects a unimodular matrix");
  std::size_t d = 2 * n - 1;

  auto binom = [](std::size_t nn, std::size_t kk) {
    long b = 1;
    for (std::size_t t = 1; t <= kk; ++t)
      b = b * static_cast<long>(nn - kk + t) / static_cast<long>(t);
    return b;
  };

  // image of monomial m_k = x^{d-k} y^k under x -> a00 x + a10 y,
  // y -> a01 x + a11 y, expanded by convolution
  Matrix<K> mono(d + 1, d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<K> poly(1, FieldTraits<K>::from_int(1));
    auto mul_linear = [&](const K& cx, const K& cy) {
      std::vector<K> next(poly.size() + 1, FieldTraits<K>::from_int(0));
      for (std::size_t t = 0; t < poly.size(); ++t) {
        next[t] += poly[t] * cx;
        next[t + 1] += poly[t] * cy;
      }
      poly = std::move(next);
    };
    for (std::size_t t = 0; t < d - k; ++t) mul_linear(a(0, 0), a(1, 0));
    for (std::size_t t = 0; t < k; ++t) mul_linear(a(0, 1), a(1, 1));
    for (std::size_t r = 0; r <= d; ++r) mono(r, k) = poly[r];
  }

  // basis change to the standard symplectic frame
  Matrix<K> s(d + 1, d + 1);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = FieldTraits<K>::from_int(1);
    long scale = binom(d, i) * ((i % 2 == 0) ? 1 : -1);
    s(d - i, n + i) = FieldTraits<K>::from_int(scale);
  }
  Matrix<K> out = inverse(s) * mono * s;

  Matrix<K> j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = FieldTraits<K>::from_int(1);
    j(n + i, i) = FieldTraits<K>::from_int(-1);
  }
  if (!(out.transpose() * j * out == j))
    throw Error("internal: symmetric power image fails to preserve the symplectic form");
  return out;
}

}  // namespace torsionlab

#endif  // TORSIONLAB_LIE_ALGEBRA_HPP
