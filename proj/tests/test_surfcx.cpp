#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "torsionlab/relator_solver.hpp"
#include "torsionlab/surface.hpp"

using namespace torsionlab;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("fox derivatives of the commutator") {
  SurfacePresentation pres(2);
  Word r1 = {lit(0), lit(1), lit(0, true), lit(1, true)};  // a b a^-1 b^-1

  GroupRingElement da = fox_derivative(r1, 0, 4);
  GroupRingElement expected_a;
  expected_a.add(Word{}, 1);
  expected_a.add(Word{lit(0), lit(1), lit(0, true)}, -1);
  CHECK(da == expected_a);

  GroupRingElement db = fox_derivative(r1, 1, 4);
  GroupRingElement expected_b;
  expected_b.add(Word{lit(0)}, 1);
  expected_b.add(r1, -1);
  CHECK(db == expected_b);

  CHECK_THROWS_AS(fox_derivative(r1, 9, 4), DomainError);
}

TEST_CASE("fox fundamental identity for genus up to 4") {
  for (std::size_t g = 2; g <= 4; ++g) {
    SurfacePresentation pres(g);
    GroupRingElement sum;
    for (std::size_t x = 0; x < pres.letters(); ++x) {
      GroupRingElement factor;
      factor.add(Word{lit(x)}, 1);
      factor.add(Word{}, -1);
      sum += pres.relator_fox(x) * factor;
    }
    GroupRingElement rhs;
    rhs.add(pres.relator(), 1);
    rhs.add(Word{}, -1);
    CHECK(sum == rhs);
  }
}

TEST_CASE("presentation sanity") {
  SurfacePresentation pres(2);
  CHECK(pres.letters() == 4);
  CHECK(pres.relator().size() == 8);
  CHECK(free_reduce(pres.relator()).size() == 8);
  CHECK(pres.letter_index("b2") == 3);
  CHECK_THROWS_AS(pres.letter_index("c1"), ParseError);
  CHECK_THROWS_AS(SurfacePresentation(1), DomainError);
}

TEST_CASE("quad fixture representation is exact and loxodromic on the word list") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  CHECK(rep.relator_defect() == 0.0);
  // |trace| > 2 marks a loxodromic SL(2) element; check the short word list
  Matrix<QuadExt> a = fixtures::sl2_gen_a();
  Matrix<QuadExt> b = fixtures::sl2_gen_b();
  for (const Word& w : fixtures::loxodromy_word_list()) {
    Matrix<QuadExt> m = Matrix<QuadExt>::identity(2);
    for (const Lit& l : w) {
      Matrix<QuadExt> gen = l.first == 0 ? a : b;
      m = m * (l.second ? inverse(gen) : gen);
    }
    QuadExt tr = m(0, 0) + m(1, 1);
    CHECK((tr * tr - QuadExt(Rational(4))).sign() > 0);
  }
}

TEST_CASE("twisted complex of the quad fixture") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  ChainComplex<QuadExt> chain = build_twisted_complex(rep);
  CHECK(chain.dims() == std::vector<std::size_t>({10, 40, 10}));
  CHECK(chain.euler_characteristic() == -20);
  CHECK(chain.homology_dim(0) == 0);
  CHECK(chain.homology_dim(2) == 0);
  CHECK(chain.homology_dim(1) == 20);  // (2g-2) dim g
  CHECK(has_isolated_middle_homology(chain));
}

TEST_CASE("twisted complex of the genus-3 fixture") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus3_quad_rep();
  ChainComplex<QuadExt> chain = build_twisted_complex(rep);
  CHECK(chain.dims() == std::vector<std::size_t>({10, 60, 10}));
  CHECK(chain.homology_dim(0) == 0);
  CHECK(chain.homology_dim(2) == 0);
  CHECK(chain.homology_dim(1) == 40);
}

TEST_CASE("trivial representation gives the untwisted counts") {
  SurfacePresentation pres(2);
  LieAlgebraSpec<Rational> spec = LieAlgebraSpec<Rational>::build(LieFamily::Sp, 2);
  std::vector<Matrix<Rational>> eyes(4, Matrix<Rational>::identity(4));
  SurfaceRepresentation<Rational> rep(pres, spec, eyes);
  ChainComplex<Rational> chain = build_twisted_complex(rep);
  CHECK(chain.boundary(1).is_zero());
  CHECK(chain.boundary(2).is_zero());
  CHECK(chain.homology_dim(1) == 40);  // 2g dim g
  CHECK(!has_isolated_middle_homology(chain));
}

TEST_CASE("relator violation is rejected") {
  SurfacePresentation pres(2);
  LieAlgebraSpec<QuadExt> spec = LieAlgebraSpec<QuadExt>::build(LieFamily::Sp, 2);
  Matrix<QuadExt> a = principal_sl2_embed(fixtures::sl2_gen_a(), 2);
  Matrix<QuadExt> b = principal_sl2_embed(fixtures::sl2_gen_b(), 2);
  // swapping one pair breaks [a1,b1][a2,b2] = 1
  CHECK_THROWS_AS(SurfaceRepresentation<QuadExt>(pres, spec, {a, b, a, b}), RelatorError);

  // the boundary-square identity genuinely consumes the relator: assembling
  // the same block formulas from the violating tuple leaves d1 d2 nonzero
  std::vector<Matrix<QuadExt>> imgs = {a, b, a, b};
  std::vector<Matrix<QuadExt>> ad, ad_inv;
  for (const auto& m : imgs) {
    ad.push_back(spec.ad_action(m));
    ad_inv.push_back(inverse(ad.back()));
  }
  auto ad_word = [&](const Word& w) {
    Matrix<QuadExt> m = Matrix<QuadExt>::identity(10);
    for (const Lit& l : w) m = m * (l.second ? ad_inv[l.first] : ad[l.first]);
    return m;
  };
  Matrix<QuadExt> d1(10, 40), d2(40, 10);
  for (std::size_t i = 0; i < 4; ++i) {
    d1.set_block(0, 10 * i, ad[i] - Matrix<QuadExt>::identity(10));
    Matrix<QuadExt> acc(10, 10);
    GroupRingElement fox = pres.relator_fox(i);
    for (const auto& [w, c] : fox.terms()) {
      acc = acc - QuadExt(Rational(c)) * ad_word(word_inverse(word_concat(w, Word{lit(i)})));
    }
    d2.set_block(10 * i, 0, acc);
  }
  CHECK(!(d1 * d2).is_zero());
}

TEST_CASE("cochain complex is adjoint to the chain complex under the Killing pairing") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  ChainComplex<QuadExt> chain = build_twisted_complex(rep);
  ChainComplex<QuadExt> cochain = build_twisted_cochain_complex(rep);
  CHECK(cochain.homology_dim(1) == 20);
  CHECK(cochain.homology_dim(0) == 0);
  CHECK(cochain.homology_dim(2) == 0);

  const Matrix<QuadExt>& gb = rep.algebra().killing_gram();
  auto block_pair = [&](const Matrix<QuadExt>& u, const Matrix<QuadExt>& v) {
    // sum over cells of B(u_cell, v_cell)
    QuadExt acc;
    std::size_t cells = u.rows() / 10;
    for (std::size_t c = 0; c < cells; ++c) {
      Matrix<QuadExt> ub = u.block(10 * c, 0, 10, 1);
      Matrix<QuadExt> vb = v.block(10 * c, 0, 10, 1);
      acc += (ub.transpose() * gb * vb)(0, 0);
    }
    return acc;
  };
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    // <delta theta, z> = <theta, dz> for random theta in C^1, z in C_2
    Matrix<QuadExt> theta = rng.matrix<QuadExt>(40, 1, 2, 2);
    Matrix<QuadExt> z = rng.matrix<QuadExt>(10, 1, 2, 2);
    QuadExt lhs = block_pair(cochain.boundary(1) * theta, z);
    QuadExt rhs = block_pair(theta, chain.boundary(2) * z);
    CHECK(lhs == rhs);
    // <delta t0, w> = <t0, d1 w>
    Matrix<QuadExt> t0 = rng.matrix<QuadExt>(10, 1, 2, 2);
    Matrix<QuadExt> w = rng.matrix<QuadExt>(40, 1, 2, 2);
    CHECK(block_pair(cochain.boundary(2) * t0, w) == block_pair(t0, chain.boundary(1) * w));
  }
}

TEST_CASE("well-definedness suite on the quad fixture") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  Rng rng(72);
  Matrix<QuadExt> conj = rep.algebra().random_group_element(rng, 1);
  InvarianceReport<QuadExt> report = invariance_suite(rep, conj);
  CHECK(report.entries.size() == 2 + 4 + 1);
  for (const auto& e : report.entries) {
    CAPTURE(e.label);
    CHECK(e.pass);
  }
  CHECK(report.all_pass);
}

TEST_CASE("general Lie basis changes rescale torsion by det^chi") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  Rng rng(73);
  SUBCASE("uniform scaling") {
    Matrix<QuadExt> t = QuadExt(Rational(2)) * Matrix<QuadExt>::identity(10);
    auto [moved, predicted] = lie_basis_change_pair(rep, t);
    CHECK(moved == predicted);
  }
  SUBCASE("random invertible change") {
    Matrix<QuadExt> t = rng.invertible<QuadExt>(10, 1, 1);
    auto [moved, predicted] = lie_basis_change_pair(rep, t);
    CHECK(moved == predicted);
  }
}

TEST_CASE("reducible representations are rejected by the suite") {
  SurfacePresentation pres(2);
  LieAlgebraSpec<Rational> spec = LieAlgebraSpec<Rational>::build(LieFamily::Sp, 2);
  std::vector<Matrix<Rational>> eyes(4, Matrix<Rational>::identity(4));
  SurfaceRepresentation<Rational> rep(pres, spec, eyes);
  CHECK_THROWS_AS(invariance_suite(rep, Matrix<Rational>::identity(4)), ReducibleError);
}

TEST_CASE("relator solver") {
  Approx::set_tolerance(1e-9);

  SUBCASE("commuting first pair accepts the identity completion") {
    Matrix<Approx> a1{{Approx(2.0), Approx(0.0)}, {Approx(0.0), Approx(0.5)}};
    Matrix<Approx> b1{{Approx(3.0), Approx(0.0)}, {Approx(0.0), Approx(1.0 / 3.0)}};
    Matrix<Approx> a2{{Approx(1.5), Approx(0.25)}, {Approx(1.0), Approx(5.0 / 6.0)}};
    auto sol = solve_relator_genus2(a1, b1, a2, Matrix<Approx>::identity(2));
    REQUIRE(sol.has_value());
    CHECK(sol->residual <= 1e-12);
    CHECK(sol->iterations == 0);  // already on the solution set
    CHECK(sol->b2 == Matrix<Approx>::identity(2));
  }

  SUBCASE("random loxodromic seeds converge to machine residual") {
    Rng rng(74);
    int solved = 0;
    for (int trial = 0; trial < 8; ++trial) {
      Matrix<Approx> a1 = random_sl2_loxodromic(rng);
      Matrix<Approx> b1 = random_sl2_loxodromic(rng);
      auto sol = solve_relator_genus2(a1, b1, random_sl2_loxodromic(rng),
                                      random_sl2_loxodromic(rng));
      if (!sol) continue;
      ++solved;
      CHECK(sol->residual <= 1e-12);
      Matrix<Approx> c = inverse(a1 * b1 * inverse(a1) * inverse(b1));
      Matrix<Approx> comm2 = sol->a2 * sol->b2 * inverse(sol->a2) * inverse(sol->b2);
      CHECK(comm2 == c);
    }
    CHECK(solved >= 6);
  }

  SUBCASE("solved tuples assemble into float representations") {
    Rng rng(75);
    std::optional<SurfaceRepresentation<Approx>> rep;
    for (int attempt = 0; attempt < 10 && !rep; ++attempt)
      rep = fixtures::genus2_float_rep(rng);
    REQUIRE(rep.has_value());
    CHECK(rep->relator_defect() <= 1e-9);
    ChainComplex<Approx> chain = build_twisted_complex(*rep);
    CHECK(chain.homology_dim(1) == 20);
    CHECK(has_isolated_middle_homology(chain));
  }
}

TEST_CASE("representation json round trip") {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  json j = representation_to_json(rep, "quad:2");
  FieldContext ctx{2};
  SurfaceRepresentation<QuadExt> back = representation_from_json<QuadExt>(j, ctx);
  for (std::size_t i = 0; i < 4; ++i) CHECK(back.image(i) == rep.image(i));
  CHECK_THROWS_AS(representation_from_json<QuadExt>(json{{"genus", 2}}, ctx), ParseError);
}
