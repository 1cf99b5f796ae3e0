#ifndef TORSIONLAB_JSON_IO_HPP
#define TORSIONLAB_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torsionlab/chain_complex.hpp"
#include "torsionlab/matrix.hpp"

namespace torsionlab {

using nlohmann::json;

// Ambient field parameters needed to interpret scalar literals.
struct FieldContext {
  long quad_d = 0;  // radicand of the quadratic extension, 0 when unused
};

inline json scalar_to_json(const Rational& x) { return x.to_string(); }
inline json scalar_to_json(const QuadExt& x) { return x.to_string(); }
inline json scalar_to_json(const Approx& x) { return x.value(); }

template <class K>
K scalar_from_json(const json& j, const FieldContext& ctx);

template <>
inline Rational scalar_from_json<Rational>(const json& j, const FieldContext&) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected rational literal, got " + j.dump());
}

template <>
inline QuadExt scalar_from_json<QuadExt>(const json& j, const FieldContext& ctx) {
  if (j.is_string()) return QuadExt::parse(j.get<std::string>(), ctx.quad_d);
  if (j.is_number_integer()) return QuadExt(Rational(j.get<long>()));
  throw ParseError("expected quadratic-field literal, got " + j.dump());
}

template <>
inline Approx scalar_from_json<Approx>(const json& j, const FieldContext&) {
  if (j.is_number()) return Approx(j.get<double>());
  if (j.is_string()) {
    try {
      return Approx(std::stod(j.get<std::string>()));
    } catch (const std::exception&) {
      throw ParseError("bad float literal " + j.dump());
    }
  }
  throw ParseError("expected float literal, got " + j.dump());
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <class K>
Matrix<K> matrix_from_json(const json& j, const FieldContext& ctx) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix object needs rows, cols, entries");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("matrix entries need " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(i) + " needs " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(row[c], ctx);
  }
  return m;
}

template <class K>
json chain_complex_to_json(const ChainComplex<K>& c) {
  json dims = json::array();
  for (std::size_t p = 0; p <= c.length(); ++p) dims.push_back(c.dim(p));
  json boundaries = json::array();
  for (std::size_t p = 1; p <= c.length(); ++p) boundaries.push_back(matrix_to_json(c.boundary(p)));
  json bases = json::array();
  for (std::size_t p = 0; p <= c.length(); ++p) {
    if (c.chain_basis(p) == Matrix<K>::identity(c.dim(p)))
      bases.push_back(nullptr);
    else
      bases.push_back(matrix_to_json(c.chain_basis(p)));
  }
  return json{{"dims", std::move(dims)},
              {"boundaries", std::move(boundaries)},
              {"chain_bases", std::move(bases)}};
}

template <class K>
ChainComplex<K> chain_complex_from_json(const json& j, const FieldContext& ctx) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("boundaries"))
    throw ParseError("chain complex object needs dims and boundaries");
  std::vector<std::size_t> dims = j.at("dims").get<std::vector<std::size_t>>();
  std::vector<Matrix<K>> boundaries;
  for (const json& b : j.at("boundaries")) boundaries.push_back(matrix_from_json<K>(b, ctx));
  std::vector<std::optional<Matrix<K>>> bases;
  if (j.contains("chain_bases") && !j.at("chain_bases").is_null()) {
    for (const json& b : j.at("chain_bases")) {
      if (b.is_null())
        bases.emplace_back(std::nullopt);
      else
        bases.emplace_back(matrix_from_json<K>(b, ctx));
    }
  }
  return ChainComplex<K>(std::move(dims), std::move(boundaries), std::move(bases));
}

template <class K>
json homology_basis_to_json(const HomologyBasis<K>& h) {
  json bases = json::array();
  for (std::size_t p = 0; p < h.degrees(); ++p) bases.push_back(matrix_to_json(h.cycles(p)));
  return json{{"bases", std::move(bases)}};
}

template <class K>
HomologyBasis<K> homology_basis_from_json(const json& j, const FieldContext& ctx,
                                          const ChainComplex<K>& c) {
  if (!j.is_object() || !j.contains("bases")) throw ParseError("homology basis object needs bases");
  std::vector<Matrix<K>> cycles;
  std::size_t p = 0;
  for (const json& b : j.at("bases")) {
    if (b.is_null())
      cycles.emplace_back(p <= c.length() ? c.dim(p) : 0, 0);
    else
      cycles.push_back(matrix_from_json<K>(b, ctx));
    ++p;
  }
  return HomologyBasis<K>(std::move(cycles));
}

}  // namespace torsionlab

#endif  // TORSIONLAB_JSON_IO_HPP
