#ifndef TORSIONLAB_TESTS_FIXTURES_HPP
#define TORSIONLAB_TESTS_FIXTURES_HPP

// Exact representation fixtures shared by the unit and acceptance suites.
//
// The genus-2 generators live in SL(2, Q(sqrt 2)) and satisfy the surface
// relator on the nose through the assignment (a2, b2) = (b1, a1):
//   [a, b] [b, a] = 1  identically.
// The images generate a Zariski-dense subgroup, which is what the torsion
// pipeline needs (vanishing twisted homology in degrees 0 and 2); the words
// on a short list are checked loxodromic by the |trace| > 2 criterion.

#include "torsionlab/relator_solver.hpp"
#include "torsionlab/surface.hpp"

namespace torsionlab::fixtures {

inline QuadExt qr(long a_num, long a_den, long b_num, long b_den) {
  return QuadExt(Rational(a_num, a_den), Rational(b_num, b_den), 2);
}

inline Matrix<QuadExt> sl2_gen_a() {
  // [[2 + r2, 1], [1, 2 - r2]], det 1, trace 4
  Matrix<QuadExt> m(2, 2);
  m(0, 0) = qr(2, 1, 1, 1);
  m(0, 1) = QuadExt(Rational(1));
  m(1, 0) = QuadExt(Rational(1));
  m(1, 1) = qr(2, 1, -1, 1);
  return m;
}

inline Matrix<QuadExt> sl2_gen_b() {
  // [[1 + r2, -1], [-1, 2 r2 - 2]], det 1, trace 3 r2 - 1
  Matrix<QuadExt> m(2, 2);
  m(0, 0) = qr(1, 1, 1, 1);
  m(0, 1) = QuadExt(Rational(-1));
  m(1, 0) = QuadExt(Rational(-1));
  m(1, 1) = qr(-2, 1, 2, 1);
  return m;
}

inline Matrix<QuadExt> sl2_gen_c() {
  // [[2, 1], [1, 1]], det 1, trace 3
  Matrix<QuadExt> m(2, 2);
  m(0, 0) = QuadExt(Rational(2));
  m(0, 1) = QuadExt(Rational(1));
  m(1, 0) = QuadExt(Rational(1));
  m(1, 1) = QuadExt(Rational(1));
  return m;
}

// Genus-2 representation over Q(sqrt 2), pushed through the symmetric-power
// embedding into Sp(2n).
inline SurfaceRepresentation<QuadExt> genus2_quad_rep(std::size_t n = 2) {
  Matrix<QuadExt> a = principal_sl2_embed(sl2_gen_a(), n);
  Matrix<QuadExt> b = principal_sl2_embed(sl2_gen_b(), n);
  return SurfaceRepresentation<QuadExt>(SurfacePresentation(2),
                                        LieAlgebraSpec<QuadExt>::build(LieFamily::Sp, n),
                                        {a, b, b, a});
}

// Genus-3 sibling: the extra handle maps to a commuting pair (c, c).
inline SurfaceRepresentation<QuadExt> genus3_quad_rep(std::size_t n = 2) {
  Matrix<QuadExt> a = principal_sl2_embed(sl2_gen_a(), n);
  Matrix<QuadExt> b = principal_sl2_embed(sl2_gen_b(), n);
  Matrix<QuadExt> c = principal_sl2_embed(sl2_gen_c(), n);
  return SurfaceRepresentation<QuadExt>(SurfacePresentation(3),
                                        LieAlgebraSpec<QuadExt>::build(LieFamily::Sp, n),
                                        {a, b, b, a, c, c});
}

// Float-field genus-2 representation produced by the relator solver from a
// seeded start; all four generator images are honest numerical solutions.
// Solutions too close to the reducible locus (rank margins below the working
// tolerance) are rejected, since the torsion formula's hypotheses fail there.
inline std::optional<SurfaceRepresentation<Approx>> genus2_float_rep(Rng& rng,
                                                                     std::size_t n = 2) {
  Matrix<Approx> a1 = random_sl2_loxodromic(rng);
  Matrix<Approx> b1 = random_sl2_loxodromic(rng);
  Matrix<Approx> a2_seed = random_sl2_loxodromic(rng);
  Matrix<Approx> b2_seed = random_sl2_loxodromic(rng);
  auto sol = solve_relator_genus2(a1, b1, a2_seed, b2_seed);
  if (!sol) return std::nullopt;
  try {
    std::vector<Matrix<Approx>> images = {
        principal_sl2_embed(a1, n), principal_sl2_embed(b1, n),
        principal_sl2_embed(sol->a2, n), principal_sl2_embed(sol->b2, n)};
    SurfaceRepresentation<Approx> rep(SurfacePresentation(2),
                                      LieAlgebraSpec<Approx>::build(LieFamily::Sp, n),
                                      std::move(images));
    ChainComplex<Approx> chain = build_twisted_complex(rep);
    if (!has_isolated_middle_homology(chain)) return std::nullopt;
    homology_basis_default(chain).validate(chain);
    ChainComplex<Approx> cochain = build_twisted_cochain_complex(rep);
    if (cochain.homology_dim(0) != 0 || cochain.homology_dim(2) != 0) return std::nullopt;
    homology_basis_default(cochain).validate(cochain);
    return rep;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Short word list used for loxodromy spot checks: |trace| > 2 in SL(2).
inline std::vector<Word> loxodromy_word_list() {
  Word a = {lit(0)}, b = {lit(1)};
  return {a,
          b,
          word_concat(a, b),
          word_concat(a, word_inverse(b)),
          word_concat(word_concat(a, b), a),
          word_concat(b, b)};
}

}  // namespace torsionlab::fixtures

#endif  // TORSIONLAB_TESTS_FIXTURES_HPP
