// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// here.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "torsionlab/pairings.hpp"
#include "torsionlab/symplectic.hpp"
#include "torsionlab/train_track.hpp"

using namespace torsionlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s  criterion %2d  %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void run(int number, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = body();
    pass = p;
    detail = d;
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report(number, name, pass, detail, seconds);
}

std::pair<bool, std::string> criterion_symplectic_equivalence() {
  Rng rng(1001);
  auto start = Clock::now();
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 6, 3);
    HomologyBasis<Rational> h = homology_basis_default(s.base());
    if (!(torsion_via_symplectic(s, h).value == torsion(s.base(), h).value))
      return {false, "mismatch at trial " + std::to_string(trial)};
    ++checked;
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds >= 10.0) return {false, "runtime " + std::to_string(seconds) + "s exceeds 10s"};
  return {true, std::to_string(checked) + " complexes, exact equality"};
}

std::pair<bool, std::string> criterion_change_base() {
  Rng rng(1002);
  for (int trial = 0; trial < 100; ++trial) {
    ChainComplex<Rational> c = random_chain_complex<Rational>(rng, 3, 5, trial % 3 == 0);
    HomologyBasis<Rational> h = homology_basis_default(c);
    std::vector<Matrix<Rational>> nb, nh;
    for (std::size_t p = 0; p <= c.length(); ++p) {
      nb.push_back(c.chain_basis(p) * rng.invertible<Rational>(c.dim(p)));
      Matrix<Rational> shifted = h.cycles(p) * rng.invertible<Rational>(h.cycles(p).cols());
      Matrix<Rational> img = image_basis(c.boundary(p + 1));
      if (img.cols() > 0 && shifted.cols() > 0)
        shifted = shifted + img * rng.matrix<Rational>(img.cols(), shifted.cols(), 1, 1);
      nh.push_back(shifted);
    }
    Rational direct = apply_change_base(c, h, nb, nh).value;
    Rational predicted = torsion(c, h).value * change_base_ratio(c, h, nb, nh);
    if (!(direct == predicted)) return {false, "formula broke at trial " + std::to_string(trial)};
  }
  return {true, "100 base-change pairs, exact"};
}

std::pair<bool, std::string> criterion_multiplicativity() {
  Rng rng(1003);
  for (int trial = 0; trial < 50; ++trial) {
    ExactTriple<Rational> tr = random_exact_triple<Rational>(rng, 2, 3);
    HomologyBasis<Rational> ha = homology_basis_default(tr.sub);
    HomologyBasis<Rational> hb = homology_basis_default(tr.total);
    HomologyBasis<Rational> hd = homology_basis_default(tr.quotient);
    Rational th =
        les_torsion(tr.sub, tr.total, tr.quotient, tr.inclusions, tr.projections, ha, hb, hd)
            .value;
    Rational lhs = torsion(tr.total, hb).value;
    Rational rhs = torsion(tr.sub, ha).value * torsion(tr.quotient, hd).value * th;
    if (!(lhs == rhs)) return {false, "triple " + std::to_string(trial) + " broke"};
  }
  return {true, "50 short-exact triples, exact"};
}

std::pair<bool, std::string> criterion_adjoint_determinant() {
  Rng rng(1004);
  struct Case {
    LieFamily family;
    std::size_t n;
    const char* label;
  };
  std::vector<Case> cases = {{LieFamily::Sp, 2, "sp(4)"},
                             {LieFamily::SoNN, 3, "so(3,3)"},
                             {LieFamily::SoNN1, 2, "so(2,3)"},
                             {LieFamily::Sp, 3, "sp(6)"}};
  for (const Case& c : cases) {
    LieAlgebraSpec<Rational> spec = LieAlgebraSpec<Rational>::build(c.family, c.n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> lam = random_loxodromic_eigenvalues(rng, c.n);
      Matrix<Rational> d = loxodromic_diagonal(c.family, c.n, lam);
      Matrix<Rational> ad = spec.ad_action(d);
      if (!(det(ad) == Rational(1)))
        return {false, std::string(c.label) + " determinant broke at trial " + std::to_string(trial)};
      if (c.n <= 3) {
        std::vector<Rational> expected = expected_ad_diagonal(c.family, c.n, lam);
        for (std::size_t i = 0; i < spec.dim(); ++i)
          for (std::size_t j = 0; j < spec.dim(); ++j)
            if (!(ad(i, j) == (i == j ? expected[i] : Rational(0))))
              return {false, std::string(c.label) + " diagonal shape broke"};
      }
    }
  }
  return {true, "50 loxodromic conjugators per family, det 1, diagonals match"};
}

std::pair<bool, std::string> criterion_killing_constants() {
  struct Case {
    LieFamily family;
    std::size_t n;
    long scale;
  };
  std::vector<Case> cases = {{LieFamily::Sp, 2, 6},    {LieFamily::Sp, 3, 8},
                             {LieFamily::SoNN, 3, 4},  {LieFamily::SoNN1, 2, 3},
                             {LieFamily::SoNN1, 3, 5}};
  for (const Case& c : cases) {
    // build() already cross-checks trace(ad ad) on all pairs for n <= 3 and
    // throws on mismatch; re-derive the scale explicitly here
    LieAlgebraSpec<Rational> spec = LieAlgebraSpec<Rational>::build(c.family, c.n);
    if (spec.killing_scale() != c.scale) return {false, "unexpected scale"};
    std::vector<Matrix<Rational>> ads;
    for (const auto& b : spec.basis()) ads.push_back(spec.bracket_action(b));
    for (std::size_t i = 0; i < spec.dim(); ++i)
      for (std::size_t j = i; j < spec.dim(); ++j) {
        Matrix<Rational> prod = ads[i] * ads[j];
        Rational tr(0);
        for (std::size_t t = 0; t < spec.dim(); ++t) tr += prod(t, t);
        if (!(tr == spec.killing_gram()(i, j))) return {false, "trace(ad ad) mismatch"};
      }
  }
  return {true, "2n+2 / 2n-2 / 2n-1 validated on all basis pairs, n <= 3"};
}

std::pair<bool, std::string> criterion_invariance() {
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  Rng rng(1006);
  Matrix<QuadExt> conj = rep.algebra().random_group_element(rng, 1);
  InvarianceReport<QuadExt> report = invariance_suite(rep, conj);
  int checks = 0;
  for (const auto& e : report.entries) {
    if (!e.pass) return {false, e.label + " changed the value"};
    ++checks;
  }
  return {true, std::to_string(checks) + " transformations, bit-identical torsion"};
}

std::pair<bool, std::string> criterion_main_theorem() {
  auto start = Clock::now();
  SurfaceRepresentation<QuadExt> rep = fixtures::genus2_quad_rep();
  MainTheoremReport<QuadExt> exact = verify_main_theorem(rep);
  double exact_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!exact.pass || !(exact.lhs == exact.rhs)) return {false, "exact fixture mismatch"};
  if (exact_seconds >= 60.0) return {false, "exact fixture exceeded 60s"};

  Approx::set_tolerance(1e-9);
  Rng rng(1007);
  int done = 0;
  double worst_gap = 0.0;
  for (int attempt = 0; attempt < 60 && done < 5; ++attempt) {
    auto fstart = Clock::now();
    Matrix<Approx> a1 = random_sl2_loxodromic(rng);
    Matrix<Approx> b1 = random_sl2_loxodromic(rng);
    auto sol = solve_relator_genus2(a1, b1, random_sl2_loxodromic(rng), random_sl2_loxodromic(rng));
    if (!sol || sol->residual > 1e-12) continue;
    std::optional<SurfaceRepresentation<Approx>> frep;
    try {
      std::vector<Matrix<Approx>> images = {
          principal_sl2_embed(a1, std::size_t(2)), principal_sl2_embed(b1, std::size_t(2)),
          principal_sl2_embed(sol->a2, std::size_t(2)), principal_sl2_embed(sol->b2, std::size_t(2))};
      frep.emplace(SurfacePresentation(2), LieAlgebraSpec<Approx>::build(LieFamily::Sp, 2),
                   std::move(images));
      ChainComplex<Approx> chain = build_twisted_complex(*frep);
      if (!has_isolated_middle_homology(chain)) continue;
      homology_basis_default(chain).validate(chain);
      ChainComplex<Approx> cochain = build_twisted_cochain_complex(*frep);
      if (cochain.homology_dim(0) != 0 || cochain.homology_dim(2) != 0) continue;
      homology_basis_default(cochain).validate(cochain);
      MainTheoremReport<Approx> r = verify_main_theorem(*frep);
      if (r.relative_gap > 1e-6) return {false, "float gap " + std::to_string(r.relative_gap)};
      worst_gap = std::max(worst_gap, r.relative_gap);
      double fsec = std::chrono::duration<double>(Clock::now() - fstart).count();
      if (fsec >= 60.0) return {false, "float fixture exceeded 60s"};
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
  if (done < 5) return {false, "only " + std::to_string(done) + " float fixtures verified"};
  char buf[128];
  std::snprintf(buf, sizeof(buf), "exact equality; 5 solver representations, worst gap %.2e",
                worst_gap);
  return {true, buf};
}

std::pair<bool, std::string> criterion_dual_gram() {
  Rng rng(1008);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 * static_cast<std::size_t>(rng.uniform(1, 4));
    Matrix<Rational> g = rng.skew_nondegenerate<Rational>(n);
    Matrix<Rational> dual = dual_gram(g);
    if (!(dual * g.transpose() == Matrix<Rational>::identity(n)))
      return {false, "identity broke at trial " + std::to_string(trial)};
  }
  return {true, "50 random skew pairings up to 8x8, exact"};
}

std::pair<bool, std::string> criterion_twisted_sanity() {
  SurfaceRepresentation<QuadExt> g2 = fixtures::genus2_quad_rep();
  SurfaceRepresentation<QuadExt> g3 = fixtures::genus3_quad_rep();
  ChainComplex<QuadExt> c2 = build_twisted_complex(g2);  // constructor checks d1 d2 = 0
  ChainComplex<QuadExt> c3 = build_twisted_complex(g3);
  if (c2.homology_dim(1) != 20) return {false, "genus-2 middle homology is not 20"};
  if (c3.homology_dim(1) != 40) return {false, "genus-3 middle homology is not 40"};
  if (!has_isolated_middle_homology(c2) || !has_isolated_middle_homology(c3))
    return {false, "outer homology did not vanish"};
  // rational fixtures in the other families
  Rng rng(1009);
  for (LieFamily fam : {LieFamily::SoNN, LieFamily::SoNN1}) {
    LieAlgebraSpec<Rational> spec = LieAlgebraSpec<Rational>::build(fam, fam == LieFamily::SoNN ? 3 : 2);
    Matrix<Rational> a = spec.random_group_element(rng, 1);
    Matrix<Rational> b = spec.random_group_element(rng, 1);
    SurfaceRepresentation<Rational> rep(SurfacePresentation(2), spec, {a, b, b, a});
    ChainComplex<Rational> chain = build_twisted_complex(rep);
    if (chain.homology_dim(1) != 2 * spec.dim())
      return {false, std::string("middle homology mismatch in ") + family_name(fam)};
  }
  // negative: relator-violating input must be rejected
  try {
    Matrix<QuadExt> a = principal_sl2_embed(fixtures::sl2_gen_a(), std::size_t(2));
    Matrix<QuadExt> b = principal_sl2_embed(fixtures::sl2_gen_b(), std::size_t(2));
    SurfaceRepresentation<QuadExt> bad(SurfacePresentation(2),
                                       LieAlgebraSpec<QuadExt>::build(LieFamily::Sp, 2),
                                       {a, b, a, b});
    return {false, "relator violation was not rejected"};
  } catch (const RelatorError&) {
  }
  return {true, "d1 d2 = 0, H1 dimensions (2g-2) dim g, violation rejected"};
}

std::pair<bool, std::string> criterion_thurston() {
  Rng rng(1010);
  TrainTrack track;
  track.edges = {"p", "q", "r", "s"};
  track.switches.push_back({std::nullopt, "p", "q"});
  track.switches.push_back({std::nullopt, "r", "s"});
  track.switches.push_back({std::nullopt, "q", "r"});
  for (int trial = 0; trial < 25; ++trial) {
    EdgeWeights<Rational> w1, w2;
    for (const auto& e : track.edges) {
      w1[e] = rng.rational(4, 2);
      w2[e] = rng.rational(4, 2);
    }
    Rational t12 = thurston_form(track, w1, w2);
    if (!(t12 == -thurston_form(track, w2, w1))) return {false, "antisymmetry broke"};
    if (!(thurston_form(track, w1, w1) == Rational(0))) return {false, "equal cocycles broke"};
    // conversion chain: wp = -8 psl2 = -16 thurston on the same value
    Rational psl2 = form_conversion(t12, SurfaceForm::Thurston, SurfaceForm::PSL2);
    Rational wp = form_conversion(t12, SurfaceForm::Thurston, SurfaceForm::WeilPetersson);
    if (!(psl2 == Rational(2) * t12)) return {false, "thurston -> psl2 factor broke"};
    if (!(wp == Rational(-8) * psl2)) return {false, "psl2 -> wp factor broke"};
    if (!(form_conversion(wp, SurfaceForm::WeilPetersson, SurfaceForm::Thurston) == t12))
      return {false, "round trip broke"};
  }
  return {true, "antisymmetry, vanishing, conversion chain wp = -8 psl2 = -16 thurston"};
}

}  // namespace

int main() {
  run(1, "symplectic equivalence", criterion_symplectic_equivalence);
  run(2, "change-base formula", criterion_change_base);
  run(3, "milnor multiplicativity", criterion_multiplicativity);
  run(4, "adjoint determinant", criterion_adjoint_determinant);
  run(5, "killing constants", criterion_killing_constants);
  run(6, "well-definedness", criterion_invariance);
  run(7, "torsion formula", criterion_main_theorem);
  run(8, "dual gram lemma", criterion_dual_gram);
  run(9, "twisted-complex sanity", criterion_twisted_sanity);
  run(10, "thurston form", criterion_thurston);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
