#ifndef TORSIONLAB_SURFACE_HPP
#define TORSIONLAB_SURFACE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/chain_complex.hpp"
#include "torsionlab/fox.hpp"
#include "torsionlab/json_io.hpp"
#include "torsionlab/lie_algebra.hpp"

namespace torsionlab {

// ---------------------------------------------------------------------------
// One-vertex cell structure of the closed genus-g surface: generators
// a_1, b_1, ..., a_g, b_g (letters 2i, 2i+1) and the product-of-commutators
// relator attaching the single 2-cell.
// ---------------------------------------------------------------------------
class SurfacePresentation {
 public:
  explicit SurfacePresentation(std::size_t genus) : genus_(genus) {
    if (genus < 2) throw DomainError("surface presentation needs genus >= 2");
    for (std::size_t i = 0; i < genus; ++i) {
      std::size_t a = 2 * i, b = 2 * i + 1;
      relator_.push_back(lit(a));
      relator_.push_back(lit(b));
      relator_.push_back(lit(a, true));
      relator_.push_back(lit(b, true));
      names_.push_back("a" + std::to_string(i + 1));
      names_.push_back("b" + std::to_string(i + 1));
    }
  }

  std::size_t genus() const { return genus_; }
  std::size_t letters() const { return 2 * genus_; }
  const Word& relator() const { return relator_; }
  const std::vector<std::string>& letter_names() const { return names_; }

  std::size_t letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw ParseError("unknown generator '" + name + "'");
  }

  GroupRingElement relator_fox(std::size_t letter) const {
    return fox_derivative(relator_, letter, letters());
  }

 private:
  std::size_t genus_;
  Word relator_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Generator images in one of the split families, with cached adjoint images.
// The relator must evaluate to +-I (the center acts trivially through Ad).
// ---------------------------------------------------------------------------
template <class K>
class SurfaceRepresentation {
 public:
  SurfaceRepresentation(SurfacePresentation presentation, LieAlgebraSpec<K> spec,
                        std::vector<Matrix<K>> images)
      : pres_(std::move(presentation)), spec_(std::move(spec)), images_(std::move(images)) {
    if (images_.size() != pres_.letters())
      throw ContractError("expected " + std::to_string(pres_.letters()) + " generator images");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!spec_.preserves_form(images_[i]))
        throw RelatorError("image of " + pres_.letter_names()[i] +
                           " does not preserve the invariant form");
      inverses_.push_back(inverse(images_[i]));
    }
    Matrix<K> rel = group_element(pres_.relator());
    Matrix<K> eye = Matrix<K>::identity(spec_.ambient());
    Matrix<K> plus = rel - eye;
    Matrix<K> minus = rel + eye;
    relator_defect_ = 0.0;
    for (std::size_t i = 0; i < rel.rows(); ++i)
      for (std::size_t j = 0; j < rel.cols(); ++j) {
        double d = std::min(std::fabs(plus(i, j).to_double()), std::fabs(minus(i, j).to_double()));
        relator_defect_ = std::max(relator_defect_, d);
      }
    if (!plus.is_zero() && !minus.is_zero())
      throw RelatorError("relator image is not +-identity (defect " +
                         std::to_string(relator_defect_) + ")");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      ad_.push_back(spec_.ad_action(images_[i]));
      ad_inv_.push_back(inverse(ad_.back()));
    }
  }

  const SurfacePresentation& presentation() const { return pres_; }
  const LieAlgebraSpec<K>& algebra() const { return spec_; }
  std::size_t genus() const { return pres_.genus(); }
  std::size_t dim_coefficients() const { return spec_.dim(); }
  const Matrix<K>& image(std::size_t letter) const { return images_[letter]; }
  double relator_defect() const { return relator_defect_; }

  Matrix<K> group_element(const Word& w) const {
    Matrix<K> g = Matrix<K>::identity(spec_.ambient());
    for (const Lit& l : w) g = g * (l.second ? inverses_[l.first] : images_[l.first]);
    return g;
  }

  const Matrix<K>& ad_letter(std::size_t letter, bool inv = false) const {
    return inv ? ad_inv_[letter] : ad_[letter];
  }

  Matrix<K> ad_word(const Word& w) const {
    Matrix<K> m = Matrix<K>::identity(spec_.dim());
    for (const Lit& l : w) m = m * ad_letter(l.first, l.second);
    return m;
  }

 private:
  SurfacePresentation pres_;
  LieAlgebraSpec<K> spec_;
  std::vector<Matrix<K>> images_;
  std::vector<Matrix<K>> inverses_;
  std::vector<Matrix<K>> ad_;
  std::vector<Matrix<K>> ad_inv_;
  double relator_defect_ = 0.0;
};

namespace detail {

// Chain blocks of the twisted complex in the geometric bases.  Boundary 1 has
// edge blocks Ad(rho(x_i)) - I; the 2-cell blocks evaluate the Fox
// derivatives through the antipode, which is what makes the two boundaries
// compose to zero over the relator:
//     block2_i = - sum_w m_w Ad(rho(w x_i))^{-1},  dr/dx_i = sum_w m_w w.
template <class K>
struct TwistedBlocks {
  std::vector<Matrix<K>> edge;    // Ad(rho(x_i)) - I
  std::vector<Matrix<K>> cell;    // degree-2 blocks per edge
};

template <class K>
TwistedBlocks<K> twisted_blocks(const SurfaceRepresentation<K>& rep) {
  const std::size_t d = rep.dim_coefficients();
  const std::size_t letters = rep.presentation().letters();
  TwistedBlocks<K> blocks;
  Matrix<K> eye = Matrix<K>::identity(d);
  for (std::size_t i = 0; i < letters; ++i) blocks.edge.push_back(rep.ad_letter(i) - eye);
  for (std::size_t i = 0; i < letters; ++i) {
    Matrix<K> acc(d, d);
    GroupRingElement fox = rep.presentation().relator_fox(i);
    for (const auto& [w, c] : fox.terms()) {
      Word wxinv = word_inverse(word_concat(w, Word{lit(i)}));
      Matrix<K> term = rep.ad_word(wxinv);
      acc = acc - FieldTraits<K>::from_int(c) * term;
    }
    blocks.cell.push_back(std::move(acc));
  }
  return blocks;
}

template <class K>
ChainComplex<K> assemble_twisted(const std::vector<Matrix<K>>& edge,
                                 const std::vector<Matrix<K>>& cell, std::size_t d,
                                 std::size_t letters) {
  Matrix<K> d1(d, letters * d);
  Matrix<K> d2(letters * d, d);
  for (std::size_t i = 0; i < letters; ++i) {
    d1.set_block(0, i * d, edge[i]);
    d2.set_block(i * d, 0, cell[i]);
  }
  return ChainComplex<K>({d, letters * d, d}, {d1, d2});
}

}  // namespace detail

// C_2 -> C_1 -> C_0 with coefficients twisted by Ad(rho), in the geometric
// bases (cell lifts tensor the stored Lie basis).
template <class K>
ChainComplex<K> build_twisted_complex(const SurfaceRepresentation<K>& rep) {
  detail::TwistedBlocks<K> blocks = detail::twisted_blocks(rep);
  return detail::assemble_twisted(blocks.edge, blocks.cell, rep.dim_coefficients(),
                                  rep.presentation().letters());
}

// The cochain complex, re-indexed as a chain complex so degree 1 carries the
// twisted cohomology H^1: positions (C^2, C^1, C^0), coboundaries adjoint to
// the twisted boundaries under the blockwise Killing pairing.
template <class K>
ChainComplex<K> build_twisted_cochain_complex(const SurfaceRepresentation<K>& rep) {
  const std::size_t d = rep.dim_coefficients();
  const std::size_t letters = rep.presentation().letters();
  Matrix<K> eye = Matrix<K>::identity(d);
  Matrix<K> delta1(d, letters * d);   // C^1 -> C^2
  Matrix<K> delta0(letters * d, d);   // C^0 -> C^1
  for (std::size_t i = 0; i < letters; ++i) {
    Matrix<K> acc(d, d);
    GroupRingElement fox = rep.presentation().relator_fox(i);
    for (const auto& [w, c] : fox.terms()) {
      Matrix<K> term = rep.ad_word(word_concat(w, Word{lit(i)}));
      acc = acc - FieldTraits<K>::from_int(c) * term;
    }
    delta1.set_block(0, i * d, acc);
    delta0.set_block(i * d, 0, rep.ad_letter(i, true) - eye);
  }
  return ChainComplex<K>({d, letters * d, d}, {delta1, delta0});
}

// Whether the twisted homology vanishes in degrees 0 and 2, which is how
// irreducibility enters every pairing-level statement.
template <class K>
bool has_isolated_middle_homology(const ChainComplex<K>& twisted,
                                  PivotPolicy policy = PivotPolicy::Default) {
  return twisted.homology_dim(0, policy) == 0 && twisted.homology_dim(2, policy) == 0;
}

// ---------------------------------------------------------------------------
// Well-definedness suite: torsion of the twisted complex recomputed after a
// Lie-basis change, after sliding single edge lifts around the fundamental
// group, and after conjugating the whole representation.  All recomputed
// values must agree with the reference (a determinant-one change in each
// degree);   general basis changes scale by det(T)^{chi} and are exercised in
// the unit tests instead.
// ---------------------------------------------------------------------------
template <class K>
struct InvarianceEntry {
  std::string label;
  K value;
  bool pass;
};

template <class K>
struct InvarianceReport {
  K reference;
  std::vector<InvarianceEntry<K>> entries;
  bool all_pass = true;
};

template <class K>
InvarianceReport<K> invariance_suite(const SurfaceRepresentation<K>& rep,
                                     const Matrix<K>& conjugator,
                                     PivotPolicy policy = PivotPolicy::Default) {
  const std::size_t d = rep.dim_coefficients();
  const std::size_t letters = rep.presentation().letters();
  ChainComplex<K> chain = build_twisted_complex(rep);
  if (!has_isolated_middle_homology(chain, policy))
    throw ReducibleError("invariance suite needs vanishing outer twisted homology");
  HomologyBasis<K> h = homology_basis_default(chain, policy);
  InvarianceReport<K> report{torsion(chain, h, policy).value, {}, true};

  auto push = [&](const std::string& label, const K& value) {
    bool pass = value == report.reference;
    report.entries.push_back({label, value, pass});
    report.all_pass = report.all_pass && pass;
  };
  auto block_diag_h1 = [&](const std::vector<Matrix<K>>& per_edge, const Matrix<K>& h1) {
    Matrix<K> out(h1.rows(), h1.cols());
    for (std::size_t i = 0; i < letters; ++i)
      out.set_block(i * d, 0, per_edge[i] * h1.block(i * d, 0, d, h1.cols()));
    return out;
  };

  detail::TwistedBlocks<K> blocks = detail::twisted_blocks(rep);

  // (i) permutations of the Lie basis: determinant +-1, absorbed because the
  // Euler characteristic is even
  for (int variant = 0; variant < 2; ++variant) {
    Matrix<K> t(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t img = variant == 0 ? (k + 1) % d : d - 1 - k;
      t(img, k) = FieldTraits<K>::from_int(1);
    }
    Matrix<K> tinv = inverse(t);
    detail::TwistedBlocks<K> moved;
    for (std::size_t i = 0; i < letters; ++i) {
      moved.edge.push_back(tinv * blocks.edge[i] * t);
      moved.cell.push_back(tinv * blocks.cell[i] * t);
    }
    ChainComplex<K> c2 = detail::assemble_twisted(moved.edge, moved.cell, d, letters);
    std::vector<Matrix<K>> tinv_blocks(letters, tinv);
    HomologyBasis<K> h2({tinv * h.cycles(0), block_diag_h1(tinv_blocks, h.cycles(1)),
                         tinv * h.cycles(2)});
    push(variant == 0 ? "lie basis cycled" : "lie basis reversed",
         torsion(c2, h2, policy).value);
  }

  // (ii) one edge-lift translated by each generator
  for (std::size_t gen = 0; gen < letters; ++gen) {
    Matrix<K> s = rep.ad_letter(gen);
    Matrix<K> sinv = rep.ad_letter(gen, true);
    detail::TwistedBlocks<K> moved = blocks;
    std::size_t edge = gen;  // move the lift of the same-index edge
    moved.edge[edge] = blocks.edge[edge] * s;
    moved.cell[edge] = sinv * blocks.cell[edge];
    ChainComplex<K> c2 = detail::assemble_twisted(moved.edge, moved.cell, d, letters);
    std::vector<Matrix<K>> per_edge(letters, Matrix<K>::identity(d));
    per_edge[edge] = sinv;
    HomologyBasis<K> h2({h.cycles(0), block_diag_h1(per_edge, h.cycles(1)), h.cycles(2)});
    push("lift of edge " + rep.presentation().letter_names()[edge] + " translated",
         torsion(c2, h2, policy).value);
  }

  // (iii) conjugating the representation
  {
    if (!rep.algebra().preserves_form(conjugator))
      throw DomainError("conjugator must preserve the invariant form");
    Matrix<K> c = rep.algebra().ad_action(conjugator);
    Matrix<K> cinv = inverse(c);
    detail::TwistedBlocks<K> moved;
    for (std::size_t i = 0; i < letters; ++i) {
      moved.edge.push_back(c * blocks.edge[i] * cinv);
      moved.cell.push_back(c * blocks.cell[i] * cinv);
    }
    ChainComplex<K> c2 = detail::assemble_twisted(moved.edge, moved.cell, d, letters);
    std::vector<Matrix<K>> c_blocks(letters, c);
    HomologyBasis<K> h2({c * h.cycles(0), block_diag_h1(c_blocks, h.cycles(1)), c * h.cycles(2)});
    push("conjugated representation", torsion(c2, h2, policy).value);
  }
  return report;
}

// Torsion of the twisted complex at a general change of the Lie basis,
// together with the predicted det(T)^chi rescaling of the reference value.
template <class K>
std::pair<K, K> lie_basis_change_pair(const SurfaceRepresentation<K>& rep, const Matrix<K>& t,
                                      PivotPolicy policy = PivotPolicy::Default) {
  const std::size_t d = rep.dim_coefficients();
  const std::size_t letters = rep.presentation().letters();
  ChainComplex<K> chain = build_twisted_complex(rep);
  HomologyBasis<K> h = homology_basis_default(chain, policy);
  K reference = torsion(chain, h, policy).value;

  Matrix<K> tinv = inverse(t);
  detail::TwistedBlocks<K> blocks = detail::twisted_blocks(rep);
  detail::TwistedBlocks<K> moved;
  for (std::size_t i = 0; i < letters; ++i) {
    moved.edge.push_back(tinv * blocks.edge[i] * t);
    moved.cell.push_back(tinv * blocks.cell[i] * t);
  }
  ChainComplex<K> c2 = detail::assemble_twisted(moved.edge, moved.cell, d, letters);
  Matrix<K> h1 = h.cycles(1);
  Matrix<K> h1m(h1.rows(), h1.cols());
  for (std::size_t i = 0; i < letters; ++i)
    h1m.set_block(i * d, 0, tinv * h1.block(i * d, 0, d, h1.cols()));
  HomologyBasis<K> h2({tinv * h.cycles(0), h1m, tinv * h.cycles(2)});
  K moved_value = torsion(c2, h2, policy).value;

  long chi = 2 - 2 * static_cast<long>(rep.genus());
  K predicted = reference * scalar_pow(det(t), chi);
  return {moved_value, predicted};
}

// ---------------------------------------------------------------------------
// Representation files: {"genus":g,"family":...,"n":...,"field":...,
// "generators":{"a1":Matrix,...}}.
// ---------------------------------------------------------------------------
template <class K>
SurfaceRepresentation<K> representation_from_json(const json& j, const FieldContext& ctx) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("family") || !j.contains("n") ||
      !j.contains("generators"))
    throw ParseError("representation object needs genus, family, n, generators");
  SurfacePresentation pres(j.at("genus").get<std::size_t>());
  LieAlgebraSpec<K> spec =
      LieAlgebraSpec<K>::build(family_from_name(j.at("family").get<std::string>()),
                               j.at("n").get<std::size_t>());
  const json& gens = j.at("generators");
  std::vector<Matrix<K>> images;
  for (const std::string& name : pres.letter_names()) {
    if (!gens.contains(name)) throw ParseError("missing generator '" + name + "'");
    images.push_back(matrix_from_json<K>(gens.at(name), ctx));
  }
  return SurfaceRepresentation<K>(std::move(pres), std::move(spec), std::move(images));
}

template <class K>
json representation_to_json(const SurfaceRepresentation<K>& rep, const std::string& field_tag) {
  json gens = json::object();
  for (std::size_t i = 0; i < rep.presentation().letters(); ++i)
    gens[rep.presentation().letter_names()[i]] = matrix_to_json(rep.image(i));
  return json{{"genus", rep.genus()},
              {"family", family_name(rep.algebra().family())},
              {"n", rep.algebra().rank_n()},
              {"field", field_tag},
              {"generators", std::move(gens)}};
}

}  // namespace torsionlab

#endif  // TORSIONLAB_SURFACE_HPP
