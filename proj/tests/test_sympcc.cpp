#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torsionlab/symplectic.hpp"

using namespace torsionlab;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

Matrix<Rational> standard_j(std::size_t half) {
  Matrix<Rational> j(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    j(i, half + i) = Q(1);
    j(half + i, i) = Q(-1);
  }
  return j;
}

SymplecticComplex<Rational> zero_boundary_symplectic(std::size_t k, std::size_t half,
                                                     Matrix<Rational> w1) {
  ChainComplex<Rational> base({k, 2 * half, k},
                              {Matrix<Rational>(k, 2 * half), Matrix<Rational>(2 * half, k)});
  return SymplecticComplex<Rational>(std::move(base),
                                     {Matrix<Rational>::identity(k), std::move(w1)});
}

}  // namespace

TEST_CASE("construction validates the symplectic structure") {
  // odd length
  CHECK_THROWS_AS(SymplecticComplex<Rational>(
                      ChainComplex<Rational>({1, 1}, {Matrix<Rational>(1, 1)}),
                      {Matrix<Rational>::identity(1)}),
                  FormError);
  // n must be odd: length 4 rejected
  std::vector<Matrix<Rational>> zb4 = {Matrix<Rational>(1, 1), Matrix<Rational>(1, 1),
                                       Matrix<Rational>(1, 1), Matrix<Rational>(1, 1)};
  CHECK_THROWS_AS(SymplecticComplex<Rational>(
                      ChainComplex<Rational>({1, 1, 1, 1, 1}, zb4),
                      {Matrix<Rational>::identity(1), Matrix<Rational>::identity(1),
                       Matrix<Rational>::identity(1)}),
                  FormError);
  // degenerate pairing
  CHECK_THROWS_AS(zero_boundary_symplectic(1, 1, Matrix<Rational>(2, 2)), NondegeneracyError);
  // middle pairing must be skew
  CHECK_THROWS_AS(zero_boundary_symplectic(0, 1, Matrix<Rational>::identity(2)), FormError);
  // boundary compatibility
  Matrix<Rational> d1{{Q(0), Q(1)}};
  Matrix<Rational> d2{{Q(1)}, {Q(0)}};
  ChainComplex<Rational> ok_base({1, 2, 1}, {d1, d2});
  CHECK_NOTHROW(SymplecticComplex<Rational>(ok_base, {Matrix<Rational>::identity(1), standard_j(1)}));
  // valid complex, pairing not compatible with the boundaries
  CHECK_THROWS_AS(
      SymplecticComplex<Rational>(ok_base, {Matrix<Rational>::identity(1), Q(2) * standard_j(1)}),
      FormError);
}

TEST_CASE("omega-compatible basis recognition") {
  SymplecticComplex<Rational> good = zero_boundary_symplectic(2, 1, standard_j(1));
  CHECK(is_omega_compatible_bases(good));

  SymplecticComplex<Rational> scaled = zero_boundary_symplectic(2, 1, Q(2) * standard_j(1));
  CHECK(!is_omega_compatible_bases(scaled));

  SUBCASE("random conjugated complexes fail, then pass after normalization") {
    Rng rng(41);
    int normalized = 0;
    for (int trial = 0; trial < 20; ++trial) {
      SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 4, 2);
      std::vector<Matrix<Rational>> nb = make_omega_compatible(s);
      std::vector<Matrix<Rational>> grams;
      ChainComplex<Rational> moved = s.base().with_chain_bases(nb);
      for (std::size_t p = 0; p <= 1; ++p)
        grams.push_back(nb[p].transpose() * s.gram_ambient(p) * nb[2 - p]);
      SymplecticComplex<Rational> renorm(moved, grams);
      CHECK(is_omega_compatible_bases(renorm));
      if (!is_omega_compatible_bases(s)) ++normalized;
    }
    CHECK(normalized > 10);  // random Grams are almost never in normal shape
  }
}

TEST_CASE("make_omega_compatible on the half-scaled middle pairing") {
  SymplecticComplex<Rational> s = zero_boundary_symplectic(0, 1, Matrix<Rational>{{Q(0), Q(2)}, {Q(-2), Q(0)}});
  std::vector<Matrix<Rational>> nb = make_omega_compatible(s);
  Matrix<Rational> expected{{Q(1), Q(0)}, {Q(0), Q(1, 2)}};
  CHECK(nb[1] == expected);

  SymplecticComplex<Rational> compat = zero_boundary_symplectic(2, 1, standard_j(1));
  std::vector<Matrix<Rational>> unchanged = make_omega_compatible(compat);
  for (std::size_t p = 0; p <= 2; ++p) CHECK(unchanged[p] == compat.base().chain_basis(p));
}

TEST_CASE("delta pairing determinants") {
  SymplecticComplex<Rational> s = zero_boundary_symplectic(2, 1, standard_j(1));
  HomologyBasis<Rational> h = homology_basis_default(s.base());
  CHECK(delta_pairing_det(s, h, 0) == Q(1));
  CHECK(delta_pairing_det(s, h, 1) == Q(1));

  // scaling a one-dimensional homology basis doubles the pairing determinant
  SymplecticComplex<Rational> one = zero_boundary_symplectic(1, 1, standard_j(1));
  HomologyBasis<Rational> h1 = homology_basis_default(one.base());
  HomologyBasis<Rational> h2 = h1;
  h2.cycles(0) = Q(2) * h1.cycles(0);
  CHECK(delta_pairing_det(one, h2, 0) == Q(2) * delta_pairing_det(one, h1, 0));
}

TEST_CASE("middle Pfaffian squares to the middle pairing determinant") {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 4, 3);
    HomologyBasis<Rational> h = homology_basis_default(s.base());
    Rational pf = middle_pfaffian(s, h);
    if (h.cycles(1).cols() == 0) {
      CHECK(pf == Q(1));
      continue;
    }
    CHECK(pf * pf == delta_pairing_det(s, h, 1));
  }
}

TEST_CASE("closed-form torsion of normal-shape complexes") {
  SymplecticComplex<Rational> s = zero_boundary_symplectic(2, 1, standard_j(1));
  HomologyBasis<Rational> h = homology_basis_default(s.base());
  CHECK(torsion_via_symplectic(s, h).value == Q(1));

  // A doubled middle pairing in otherwise standard shape: the closed form
  // tracks the defining algorithm (homology basis equal to the chain basis),
  // the Pfaffian of the middle Gram being 2 and absorbed by the
  // compatible-basis transport.
  SymplecticComplex<Rational> doubled =
      zero_boundary_symplectic(0, 1, Matrix<Rational>{{Q(0), Q(2)}, {Q(-2), Q(0)}});
  HomologyBasis<Rational> hd = homology_basis_default(doubled.base());
  CHECK(middle_pfaffian(doubled, hd) == Q(2));
  CHECK(torsion_via_symplectic(doubled, hd).value == torsion(doubled.base(), hd).value);
}

TEST_CASE("closed form equals the defining algorithm on random complexes") {
  Rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 6, 3);
    HomologyBasis<Rational> h = homology_basis_default(s.base());
    if (trial % 2 == 0) {
      std::vector<Matrix<Rational>> cyc;
      for (std::size_t p = 0; p <= 2; ++p) {
        Matrix<Rational> mix = rng.invertible<Rational>(h.cycles(p).cols(), 2, 1);
        cyc.push_back(h.cycles(p) * mix);
      }
      h = HomologyBasis<Rational>(cyc);
    }
    CHECK(torsion_via_symplectic(s, h).value == torsion(s.base(), h).value);
  }
}

TEST_CASE("closed form equals the defining algorithm on longer complexes") {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 3, 2, 3);
    HomologyBasis<Rational> h = homology_basis_default(s.base());
    CHECK(torsion_via_symplectic(s, h).value == torsion(s.base(), h).value);
  }
}

TEST_CASE("symplectic json round trip") {
  Rng rng(45);
  SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 4, 2);
  FieldContext ctx;
  SymplecticComplex<Rational> back = symplectic_from_json<Rational>(symplectic_to_json(s), ctx);
  CHECK(back.base().dims() == s.base().dims());
  for (std::size_t p = 0; p <= 1; ++p)
    CHECK(back.gram_in_chain_bases(p) == s.gram_in_chain_bases(p));
  HomologyBasis<Rational> h = homology_basis_default(s.base());
  CHECK(torsion_via_symplectic(back, h).value == torsion_via_symplectic(s, h).value);
}
